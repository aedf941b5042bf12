#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "springer/match.hpp"

using namespace springer;

namespace {

Triple T(Partition nu, Partition a, Partition b, OptionalForm w = std::nullopt)
{
    return Triple(std::move(nu), std::move(a), std::move(b), w);
}

std::vector<Triple> triples_of(const OrbitLabel& o)
{
    std::vector<Triple> out;
    for (const auto& e : sigma_lambda(o))
        out.push_back(e.triple);
    return out;
}

// Oracle for the gap criterion, written from scratch on the part list.
long long full_support_oracle(const Partition& p, bool tagged)
{
    std::vector<int> parts = p.parts();
    parts.push_back(0);
    int g = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const int gap = parts[i] - parts[i + 1];
        if (gap >= 3)
            return 0;
        g += gap == 2 ? 1 : 0;
    }
    if (tagged)
        return 1;
    return 1LL << (p.distinct_sizes() - 1 - g);
}

}  // namespace

TEST_CASE("decompose examples")
{
    const auto a = decompose(Partition{2, 1, 1});
    CHECK(a.even_block.empty());
    CHECK(a.odd_block == std::vector<TransposeBlock>{{3, 1}, {1, 1}});
    const auto b = decompose(Partition{2, 2});
    CHECK(b.even_block == std::vector<TransposeBlock>{{2, 1}});
    CHECK(b.odd_block.empty());
    const auto c = decompose(Partition{3, 1});
    CHECK(c.even_block == std::vector<TransposeBlock>{{1, 1}});
    CHECK(c.odd_block == std::vector<TransposeBlock>{{2, 1}});
    CHECK_THROWS_AS((void)decompose(Partition{}), DomainError);
}

TEST_CASE("decompose reassembles the transpose")
{
    for (int n = 1; n <= 18; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            const auto d = decompose(p);
            REQUIRE(d.reassemble() == transpose(p));
            REQUIRE(d.k() == p.distinct_sizes());
        }
    }
}

TEST_CASE("sigma_lambda examples")
{
    CHECK(triples_of(OrbitLabel(Partition{2, 1, 1})) ==
          std::vector<Triple>{T({}, {}, {3, 1}), T({}, {1}, {3})});
    const auto tagged = sigma_lambda(OrbitLabel(Partition{2, 2}, Form::I));
    REQUIRE(tagged.size() == 2);
    CHECK(tagged[0].triple == T({}, {2}, {2}, Form::I));
    CHECK(tagged[0].support == SupportLevel{0, std::nullopt});
    CHECK(tagged[1].triple == T({2}, {}, {}, Form::I));
    CHECK(tagged[1].support == SupportLevel{2, Form::I});
    CHECK(triples_of(OrbitLabel(Partition{1, 1, 1})) == std::vector<Triple>{T({}, {}, {3})});
}

TEST_CASE("distinguished_triple examples")
{
    CHECK(distinguished_triple(OrbitLabel(Partition{2, 1, 1})).triple == T({}, {}, {3, 1}));
    const auto d = distinguished_triple(OrbitLabel(Partition{2, 2}, Form::I));
    CHECK(d.triple == T({2}, {}, {}, Form::I));
    CHECK(d.support == SupportLevel{2, Form::I});
    CHECK(distinguished_triple(OrbitLabel(Partition{1, 1, 1})).triple == T({}, {}, {3}));
}

TEST_CASE("full_support_count examples")
{
    CHECK(full_support_count(OrbitLabel(Partition{4, 1})) == 0);
    CHECK(full_support_count(OrbitLabel(Partition{2, 1, 1})) == 2);
    CHECK(full_support_count(OrbitLabel(Partition{2, 2}, Form::I)) == 1);
}

TEST_CASE("sigma_lambda sizes and ranks, weight <= 16")
{
    for (int N = 1; N <= 16; ++N) {
        for (const auto& rec : enumerate_orbits(N)) {
            const auto entries = sigma_lambda(rec.label);
            const auto d = decompose(rec.label.lambda());
            const long long expected = rec.label.form() ? (1LL << d.l()) : (1LL << (d.k() - 1));
            INFO(rec.label.to_string());
            REQUIRE(static_cast<long long>(entries.size()) == expected);
            for (const auto& e : entries) {
                REQUIRE(e.triple.rank() == N);
                REQUIRE(e.triple.mu1().is_two_regular());
                REQUIRE(e.triple.mu2().is_two_regular());
                REQUIRE(e.support == support_level(e.triple, N));
            }
            REQUIRE((full_support_count(rec.label) ==
                     full_support_oracle(rec.label.lambda(), rec.label.form().has_value())));
            REQUIRE_NOTHROW((void)distinguished_triple(rec.label));
        }
    }
}

TEST_CASE("balanced splits occur and are represented once")
{
    const auto entries = sigma_lambda(OrbitLabel(Partition{3, 2, 1}));
    CHECK(entries.size() == 4);
    int balanced = 0;
    for (const auto& e : entries)
        balanced += e.choice.balanced ? 1 : 0;
    CHECK(balanced == 1);
    CHECK(verify_partition_of_sigma(6).used_balanced_split);
}

TEST_CASE("verify_partition_of_sigma for N = 1..14")
{
    for (int N = 1; N <= 14; ++N) {
        const auto r = verify_partition_of_sigma(N);
        INFO("N = ", N);
        for (const auto& f : r.failures)
            INFO(f);
        REQUIRE(r.passed());
        REQUIRE(r.union_size == r.sigma_size);
        REQUIRE(BigInt(r.sigma_size) == census_count(N));
    }
}

TEST_CASE("N = 4 expansion 13 = 4+2+4+2+1")
{
    const auto r = verify_partition_of_sigma(4);
    REQUIRE(r.passed());
    std::map<Partition, std::size_t> per_lambda;
    for (const auto& row : r.rows)
        per_lambda[row.orbit.lambda()] += row.sigma_lambda_size;
    CHECK(per_lambda[Partition{4}] == 4);
    CHECK(per_lambda[Partition{3, 1}] == 2);
    CHECK(per_lambda[Partition{2, 2}] == 4);
    CHECK(per_lambda[Partition{2, 1, 1}] == 2);
    CHECK(per_lambda[Partition{1, 1, 1, 1}] == 1);
    CHECK(verify_partition_of_sigma(3).passed());
    CHECK(verify_partition_of_sigma(1).passed());
}

TEST_CASE("distinguished triple is unique up to N = 16")
{
    for (int N = 15; N <= 16; ++N) {
        for (const auto& rec : enumerate_orbits(N))
            REQUIRE_NOTHROW((void)distinguished_triple(rec.label));
    }
}

TEST_CASE("full-support totals equal d(n) and e(n), N <= 20")
{
    for (int N = 1; N <= 20; ++N) {
        const int n = N / 2;
        REQUIRE(full_support_total(N) == (N % 2 ? d_of(n) : e_of(n)));
    }
}

TEST_CASE("E labels")
{
    CHECK(e_label(2, 1, 0) == T({}, {2}, {3}));
    CHECK(tilde_e_label(1, 1, 0) == T({}, {1}, {2}));
    CHECK_THROWS_AS((void)e_label(1, 1, 1), DomainError);
    CHECK_THROWS_AS((void)e_label(1, 2, 0), DomainError);
    CHECK_THROWS_AS((void)tilde_e_label(1, 3, 0), DomainError);
    CHECK(tilde_e_label(1, 2, 0) == T({}, {}, {3}));
    for (int n = 0; n <= 8; ++n) {
        for (int i = 0; i <= n; ++i)
            for (int j = 0; 2 * j < 2 * i; ++j)
                REQUIRE(e_label(n, i, j).rank() == 2 * n + 1);
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 0; 2 * j < 2 * i - 1; ++j)
                REQUIRE(tilde_e_label(n, i, j).rank() == 2 * n + 1);
    }
}

TEST_CASE("tilde-E supports")
{
    CHECK(tilde_e_support(2, 1, 0) == Partition{2, 1, 1, 1});
    CHECK(tilde_e_support(2, 2, 1) == Partition{3, 2});
    CHECK(tilde_e_support(1, 1, 0) == Partition{2, 1});
    for (int n = 0; n <= 30; ++n) {
        int labels = 0;
        for (const auto& [lambda, count] : tilde_e_support_table(n)) {
            REQUIRE(lambda.weight() == 2 * n + 1);
            REQUIRE(lambda.part(0) <= 3);
            labels += count;
        }
        REQUIRE(labels == (n + 1) * (n + 2) / 2);
    }
}
