#include "springer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace springer {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{
}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p <= 0)
            throw DomainError("partition parts must be positive, got " + std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_blocks(std::span<const Block> blocks)
{
    std::vector<int> parts;
    for (const auto& b : blocks) {
        if (b.count < 0)
            throw DomainError("negative block multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(b.count), b.size);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int size) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

int Partition::distinct_sizes() const noexcept
{
    int f = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i == 0 || parts_[i] != parts_[i - 1])
            ++f;
    }
    return f;
}

bool Partition::is_two_regular() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::all_even() const noexcept
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::vector<int> Partition::gaps() const
{
    std::vector<int> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out[i] = parts_[i] - part(i + 1);
    return out;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

// Appends every partition of `remaining` with parts <= `max_part` (and
// strictly decreasing when `distinct`), largest first.
void enumerate_into(int remaining, int max_part, bool distinct,
                    std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_into(remaining - p, distinct ? p - 1 : p, distinct, prefix, out);
        prefix.pop_back();
    }
}

void require_non_negative(int n, const char* what)
{
    if (n < 0)
        throw DomainError(std::string(what) + ": argument must be non-negative");
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    require_non_negative(n, "enumerate_partitions");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(n, n, false, prefix, out);
    return out;
}

std::vector<Partition> enumerate_two_regular(int n)
{
    require_non_negative(n, "enumerate_two_regular");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(n, n, true, prefix, out);
    return out;
}

Partition transpose(const Partition& lambda)
{
    const auto& p = lambda.parts();
    std::vector<int> t;
    if (p.empty())
        return {};
    t.reserve(static_cast<std::size_t>(p.front()));
    for (int i = 1; i <= p.front(); ++i) {
        // parts are descending, so the count of parts >= i is a prefix length
        auto it = std::find_if(p.begin(), p.end(), [i](int x) { return x < i; });
        t.push_back(static_cast<int>(it - p.begin()));
    }
    return Partition(std::move(t));
}

PartitionStats stats(const Partition& lambda)
{
    PartitionStats s;
    s.f = lambda.distinct_sizes();
    for (int gap : lambda.gaps()) {
        if (gap == 2)
            ++s.g;
    }
    return s;
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw DomainError("dominates: incomparable weights " + std::to_string(lambda.weight()) +
                          " and " + std::to_string(mu.weight()));
    const std::size_t len = std::max(lambda.length(), mu.length());
    int a = 0;
    int b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b)
            return false;
    }
    return true;
}

BigInt count_p(int n)
{
    require_non_negative(n, "count_p");
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (int s = 1; s <= n; ++s) {
        for (int t = s; t <= n; ++t)
            ways[t] += ways[t - s];
    }
    return ways[n];
}

BigInt count_q(int n)
{
    require_non_negative(n, "count_q");
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (int s = 1; s <= n; ++s) {
        for (int t = n; t >= s; --t)
            ways[t] += ways[t - s];
    }
    return ways[n];
}

BigInt count_plk(int l, int k)
{
    require_non_negative(l, "count_plk");
    require_non_negative(k, "count_plk");
    if (k > l + 1)
        return 0;
    // table[t][c]: partitions of t using c distinct sizes among 1..s. Updated in
    // place with t descending so each size contributes at most one block.
    const auto L = static_cast<std::size_t>(l) + 1;
    const auto K = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<BigInt>> table(L, std::vector<BigInt>(K));
    table[0][0] = 1;
    for (int s = 1; s <= l; ++s) {
        for (int t = l; t >= s; --t) {
            for (int c = k; c >= 1; --c) {
                for (int used = s; used <= t; used += s)
                    table[t][c] += table[t - used][c - 1];
            }
        }
    }
    return table[l][k];
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last)
            throw ParseError("bad partition literal '" + text + "': '" + token + "' is not an integer");
        if (value <= 0)
            throw ParseError("bad partition literal '" + text + "': parts must be positive");
        if (!parts.empty() && value > parts.back())
            throw ParseError("bad partition literal '" + text + "': parts must be descending");
        parts.push_back(value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace springer
