#include "springer/match.hpp"

#include <algorithm>
#include <set>

namespace springer {

Partition TransposeDecomposition::reassemble() const
{
    std::vector<Partition::Block> blocks;
    for (const auto& b : even_block)
        blocks.push_back({b.size, 2 * b.half_multiplicity});
    for (const auto& b : odd_block)
        blocks.push_back({b.size, 2 * b.half_multiplicity - 1});
    return Partition::from_blocks(blocks);
}

TransposeDecomposition decompose(const Partition& lambda)
{
    if (lambda.empty())
        throw DomainError("decompose: partition must be non-empty");
    const auto t = transpose(lambda);
    TransposeDecomposition d;
    const auto& parts = t.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const int mult = static_cast<int>(j - i);
        if (mult % 2 == 0)
            d.even_block.push_back({parts[i], mult / 2});
        else
            d.odd_block.push_back({parts[i], (mult + 1) / 2});
        i = j;
    }
    return d;
}

namespace {

Partition nu_of(const TransposeDecomposition& d, const std::vector<int>& delta)
{
    std::vector<Partition::Block> blocks;
    for (std::size_t i = 0; i < d.even_block.size(); ++i)
        blocks.push_back({d.even_block[i].size, d.even_block[i].half_multiplicity - delta[i]});
    for (const auto& b : d.odd_block)
        blocks.push_back({b.size, b.half_multiplicity - 1});
    return Partition::from_blocks(blocks);
}

// Even-block sizes selected by delta, each once.
std::vector<int> shared_mu_parts(const TransposeDecomposition& d, const std::vector<int>& delta)
{
    std::vector<int> parts;
    for (std::size_t i = 0; i < d.even_block.size(); ++i) {
        if (delta[i])
            parts.push_back(d.even_block[i].size);
    }
    return parts;
}

std::vector<int> bits_of(unsigned mask, int count)
{
    std::vector<int> bits(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return bits;
}

bool opposite_parity(const Partition& a, const Partition& b)
{
    for (int p : {0, 1}) {
        const bool a_ok = std::all_of(a.parts().begin(), a.parts().end(),
                                      [p](int x) { return x % 2 == p; });
        const bool b_ok = std::all_of(b.parts().begin(), b.parts().end(),
                                      [p](int x) { return x % 2 == 1 - p; });
        if (a_ok && b_ok)
            return true;
    }
    return false;
}

}  // namespace

std::vector<MatchedTriple> sigma_lambda(const OrbitLabel& orbit)
{
    const int N = orbit.rank();
    const auto d = decompose(orbit.lambda());
    const int l = d.l();
    const int r = static_cast<int>(d.odd_block.size());
    if (l >= 31 || r >= 31)
        throw DomainError("sigma_lambda: too many distinct part sizes");

    std::vector<MatchedTriple> out;
    for (unsigned dmask = 0; dmask < (1u << l); ++dmask) {
        const auto delta = bits_of(dmask, l);
        const auto nu = nu_of(d, delta);
        const auto shared = shared_mu_parts(d, delta);

        if (orbit.form()) {
            Triple t(nu, Partition(shared), Partition(shared), orbit.form());
            const auto support = support_level(t, N);
            out.push_back({std::move(t), support, {delta, {}, false}});
            continue;
        }

        for (unsigned jmask = 0; jmask < (1u << r); ++jmask) {
            auto first = shared;
            auto second = shared;
            int sum_in = 0;
            int sum_out = 0;
            std::vector<int> J;
            for (int i = 0; i < r; ++i) {
                const int size = d.odd_block[static_cast<std::size_t>(i)].size;
                if ((jmask >> i) & 1u) {
                    first.push_back(size);
                    sum_in += size;
                    J.push_back(i);
                } else {
                    second.push_back(size);
                    sum_out += size;
                }
            }
            if (sum_in > sum_out)
                continue;
            const bool balanced = sum_in == sum_out;
            Partition a(std::move(first));
            Triple t(nu, a, Partition(std::move(second)));
            // a balanced split and its complement give the same class; keep the
            // one whose own J-side is the canonical mu1
            if (balanced && t.mu1() != a)
                continue;
            const auto support = support_level(t, N);
            out.push_back({std::move(t), support, {delta, std::move(J), balanced}});
        }
    }
    std::sort(out.begin(), out.end(), [](const MatchedTriple& x, const MatchedTriple& y) {
        return triple_order_less(x.triple, y.triple);
    });
    return out;
}

MatchedTriple distinguished_triple(const OrbitLabel& orbit)
{
    const auto all = sigma_lambda(orbit);
    std::vector<MatchedTriple> candidates;
    if (orbit.form()) {
        for (const auto& e : all) {
            if (2 * e.triple.nu().weight() == orbit.rank())
                candidates.push_back(e);
        }
    } else {
        int best = -1;
        for (const auto& e : all)
            best = std::max(best, e.triple.nu().weight());
        for (const auto& e : all) {
            if (e.triple.nu().weight() == best && opposite_parity(e.triple.mu1(), e.triple.mu2()))
                candidates.push_back(e);
        }
    }
    if (candidates.size() != 1) {
        std::vector<Triple> triples;
        for (const auto& c : candidates)
            triples.push_back(c.triple);
        throw ConjectureViolation("orbit " + orbit.to_string() + " has " +
                                      std::to_string(candidates.size()) +
                                      " distinguished-triple candidates",
                                  std::move(triples));
    }
    return candidates.front();
}

BigInt full_support_count(const OrbitLabel& orbit)
{
    const auto gaps = orbit.lambda().gaps();
    if (std::any_of(gaps.begin(), gaps.end(), [](int g) { return g >= 3; }))
        return 0;
    if (orbit.form())
        return 1;
    const auto s = stats(orbit.lambda());
    // an odd part forces some gap of 1, so f - g >= 1
    return BigInt(1) << (s.f - 1 - s.g);
}

BigInt full_support_total(int N)
{
    BigInt total = 0;
    for (const auto& rec : enumerate_orbits(N))
        total += full_support_count(rec.label);
    return total;
}

SigmaCoverReport verify_partition_of_sigma(int N)
{
    SigmaCoverReport report;
    report.N = N;
    const auto sigma = enumerate_sigma(N);
    report.sigma_size = sigma.size();
    const std::set<Triple, TripleOrder> sigma_set(sigma.begin(), sigma.end());
    if (sigma_set.size() != sigma.size())
        report.failures.push_back("enumerate_sigma(" + std::to_string(N) + ") repeats a class");

    std::map<Triple, std::string, TripleOrder> owner;
    for (const auto& rec : enumerate_orbits(N)) {
        const auto name = rec.label.to_string();
        OrbitMatchRow row{rec.label, rec.local_system_count, 0, full_support_count(rec.label), 0, 0, {}};
        const auto entries = sigma_lambda(rec.label);
        row.sigma_lambda_size = entries.size();
        if (BigInt(entries.size()) != rec.local_system_count)
            report.failures.push_back("size: |Sigma_" + name + "| = " + std::to_string(entries.size()) +
                                      " but the orbit carries " +
                                      rec.local_system_count.str() + " local systems");
        for (const auto& e : entries) {
            const auto tname = e.triple.to_string();
            if (e.triple.rank() != N)
                report.failures.push_back("rank: " + tname + " in Sigma_" + name + " has rank " +
                                          std::to_string(e.triple.rank()));
            if (!sigma_set.contains(e.triple))
                report.failures.push_back("membership: " + tname + " from Sigma_" + name +
                                          " is not in Sigma_" + std::to_string(N));
            auto [it, inserted] = owner.emplace(e.triple, name);
            if (!inserted)
                report.failures.push_back("disjointness: " + tname + " lies in Sigma_" + it->second +
                                          " and Sigma_" + name);
            if (e.triple.nu().empty())
                ++row.nu_empty;
            if (e.choice.balanced)
                ++row.balanced_classes;
        }
        if (BigInt(row.nu_empty) != row.full_support)
            report.failures.push_back("full support: Sigma_" + name + " has " +
                                      std::to_string(row.nu_empty) +
                                      " triples with empty nu but the gap criterion gives " +
                                      row.full_support.str());
        try {
            row.distinguished = distinguished_triple(rec.label).triple.to_string();
        } catch (const ConjectureViolation& ex) {
            std::string witnesses;
            for (const auto& c : ex.candidates())
                witnesses += " " + c.to_string();
            report.failures.push_back("distinguished: " + std::string(ex.what()) + ":" + witnesses);
        }
        if (row.balanced_classes > 0)
            report.used_balanced_split = true;
        report.rows.push_back(std::move(row));
    }
    report.union_size = owner.size();
    for (const auto& t : sigma) {
        if (!owner.contains(t))
            report.failures.push_back("cover: " + t.to_string() + " is in no Sigma_lambda");
    }
    return report;
}

namespace {

Partition pair_partition(int a, int b, const char* what)
{
    if (b < 0 || a <= b)
        throw DomainError(std::string(what) + ": need 0 <= j < " + std::to_string(a) +
                          " for the pair (" + std::to_string(a) + "," + std::to_string(b) +
                          ") to be 2-regular");
    return b == 0 ? Partition{a} : Partition{a, b};
}

}  // namespace

Triple e_label(int n, int i, int j)
{
    if (n < 0)
        throw DomainError("e_label: n must be non-negative");
    if (i > n)
        throw DomainError("e_label: need i <= n so that 2n+1-2i >= 1");
    auto first = pair_partition(2 * i - j, j, "e_label");
    return Triple({}, std::move(first), Partition{2 * n + 1 - 2 * i});
}

Triple tilde_e_label(int n, int i, int j)
{
    if (n < 0)
        throw DomainError("tilde_e_label: n must be non-negative");
    if (i > n + 1)
        throw DomainError("tilde_e_label: need i <= n+1 so that 2n+2-2i >= 0");
    auto first = pair_partition(2 * i - 1 - j, j, "tilde_e_label");
    const int last = 2 * n + 2 - 2 * i;
    return Triple({}, std::move(first), last == 0 ? Partition{} : Partition{last});
}

Partition tilde_e_support(int n, int i, int j)
{
    (void)tilde_e_label(n, i, j);
    int threes = 0;
    int twos = 0;
    int ones = 0;
    if (4 * i - j <= 2 * n + 3) {
        threes = j;
        twos = 2 * i - 2 * j - 1;
        ones = 2 * n + 3 - 4 * i + j;
    } else if (2 * i + j <= 2 * n + 2) {
        threes = j;
        twos = 2 * n + 2 - 2 * i - j;
        ones = 4 * i - j - 2 * n - 3;
    } else {
        threes = 2 * n - 2 * i + 2;
        twos = 2 * i + j - 2 * n - 2;
        ones = 2 * i - 2 * j - 1;
    }
    if (threes < 0 || twos < 0 || ones < 0)
        throw DomainError("tilde_e_support(" + std::to_string(n) + "," + std::to_string(i) + "," +
                          std::to_string(j) + "): negative exponent");
    const Partition::Block blocks[] = {{3, threes}, {2, twos}, {1, ones}};
    return Partition::from_blocks(blocks);
}

std::map<Partition, int> tilde_e_support_table(int n)
{
    if (n < 0)
        throw DomainError("tilde_e_support_table: n must be non-negative");
    std::map<Partition, int> table;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = 0; 2 * j < 2 * i - 1; ++j)
            ++table[tilde_e_support(n, i, j)];
    }
    return table;
}

}  // namespace springer
