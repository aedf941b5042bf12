#include "springer/braid.hpp"

#include <algorithm>
#include <string>

namespace springer {

namespace {

void require_level(int m, int N)
{
    if (N < 1 || m < 0 || 2 * m > N)
        throw DomainError("need 0 <= m <= N/2, got m=" + std::to_string(m) + ", N=" +
                          std::to_string(N));
}

}  // namespace

CharacterLabel chi(int m, int N)
{
    require_level(m, N);
    CharacterLabel c{std::vector<int>(static_cast<std::size_t>(N - 1), 1)};
    if (m >= 1)
        c.values[static_cast<std::size_t>(m - 1)] = -1;
    return c;
}

std::vector<int> lift_to_signs(const CharacterLabel& c)
{
    std::vector<int> signs(c.values.size() + 1, 1);
    for (std::size_t i = 0; i < c.values.size(); ++i)
        signs[i + 1] = signs[i] * c.values[i];
    return signs;
}

CharacterLabel restrict_signs(const std::vector<int>& signs)
{
    CharacterLabel c;
    for (std::size_t i = 0; i + 1 < signs.size(); ++i)
        c.values.push_back(signs[i] * signs[i + 1]);
    return c;
}

int character_orbit_invariant(const CharacterLabel& c)
{
    const auto signs = lift_to_signs(c);
    const int N = static_cast<int>(signs.size());
    const int neg = static_cast<int>(std::count(signs.begin(), signs.end(), -1));
    return std::min(neg, N - neg);
}

int orbit_count_on_characters(int N)
{
    if (N < 2 || N > 24)
        throw DomainError("orbit_count_on_characters: need 2 <= N <= 24");
    // characters encoded as bitmasks over tau_1..tau_(N-1): bit set = value -1
    const auto total = std::uint32_t{1} << (N - 1);
    const auto encode = [N](const CharacterLabel& c) {
        std::uint32_t bits = 0;
        for (int i = 0; i < N - 1; ++i) {
            if (c.values[static_cast<std::size_t>(i)] == -1)
                bits |= std::uint32_t{1} << i;
        }
        return bits;
    };
    const auto decode = [N](std::uint32_t bits) {
        CharacterLabel c{std::vector<int>(static_cast<std::size_t>(N - 1), 1)};
        for (int i = 0; i < N - 1; ++i) {
            if ((bits >> i) & 1u)
                c.values[static_cast<std::size_t>(i)] = -1;
        }
        return c;
    };

    std::vector<bool> seen(total, false);
    std::vector<std::uint32_t> stack;
    int orbits = 0;
    for (std::uint32_t start = 0; start < total; ++start) {
        if (seen[start])
            continue;
        ++orbits;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const auto cur = stack.back();
            stack.pop_back();
            const auto signs = lift_to_signs(decode(cur));
            for (int s = 0; s + 1 < N; ++s) {
                auto moved = signs;
                std::swap(moved[static_cast<std::size_t>(s)], moved[static_cast<std::size_t>(s) + 1]);
                const auto next = encode(restrict_signs(moved));
                if (!seen[next]) {
                    seen[next] = true;
                    stack.push_back(next);
                }
            }
        }
    }
    return orbits;
}

StabilizerFlags stabilizer_flags(int m, int N)
{
    require_level(m, N);
    StabilizerFlags f;
    BigInt c = 1;
    for (int i = 0; i < m; ++i)
        c = c * (N - i) / (i + 1);
    f.index_in_BN = c;
    f.chi_stabilizer_equals_B_m_Nminusm = 2 * m != N;
    return f;
}

std::vector<FactorLabel> composition_factors(int m, int N)
{
    require_level(m, N);
    std::vector<FactorLabel> out;
    const auto firsts = enumerate_two_regular(m);
    const auto seconds = enumerate_two_regular(N - m);
    for (const auto& a : firsts) {
        for (const auto& b : seconds) {
            if (a == b) {
                out.push_back({a, b, Form::I});
                out.push_back({a, b, Form::II});
            } else {
                out.push_back({a, b, std::nullopt});
            }
        }
    }
    return out;
}

std::vector<Triple> composition_factor_triples(int N)
{
    std::vector<Triple> out;
    for (int m = 0; 2 * m <= N; ++m) {
        for (auto& f : composition_factors(m, N)) {
            Triple t({}, std::move(f.mu1), std::move(f.mu2), f.split);
            if (std::find(out.begin(), out.end(), t) == out.end())
                out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(), TripleOrder{});
    return out;
}

std::vector<Partition> jacobian_factors(int N, int i)
{
    if (N < 2 || N % 2 != 0)
        throw DomainError("jacobian_factors: N must be even and at least 2");
    const int n = (N - 2) / 2;
    if (i < 0 || i > n)
        throw DomainError("jacobian_factors: need 0 <= i <= " + std::to_string(n));
    std::vector<Partition> out;
    for (int k = i; k >= 0; k -= 2)
        out.push_back(k == 0 ? Partition{N} : Partition{N - k, k});
    return out;
}

}  // namespace springer
