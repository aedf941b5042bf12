#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "springer/orbits.hpp"
#include "springer/partition.hpp"

using namespace springer;

namespace {

// Oracle values for d and e straight from the definitions, with q(n) counted
// by enumeration.
long long q_enum(int n)
{
    return static_cast<long long>(enumerate_two_regular(n).size());
}

long long d_oracle(int k)
{
    long long s = 0;
    for (int i = 0; i <= k; ++i)
        s += q_enum(i) * q_enum(2 * k + 1 - i);
    return s;
}

long long e_oracle(int k)
{
    long long s = 0;
    for (int i = 0; i < k; ++i)
        s += q_enum(i) * q_enum(2 * k - i);
    const long long qk = q_enum(k);
    return s + (qk * qk + 3 * qk) / 2;
}

// Oracle: local systems summed from the definition 2^(k-1), or 2 * 2^k for
// the two orbits of an all-even partition.
long long census_oracle(int N)
{
    long long total = 0;
    for (const auto& p : enumerate_partitions(N)) {
        const int k = p.distinct_sizes();
        total += p.all_even() ? 2 * (1LL << k) : (1LL << (k - 1));
    }
    return total;
}

}  // namespace

TEST_CASE("forms")
{
    CHECK(to_string(Form::I) == "I");
    CHECK(to_string(Form::II) == "II");
    CHECK(parse_form("II") == Form::II);
    CHECK_THROWS_AS((void)parse_form("III"), ParseError);
    CHECK_THROWS_AS((void)parse_form(""), ParseError);
}

TEST_CASE("orbit labels")
{
    CHECK(OrbitLabel(Partition{2, 2}, Form::I).to_string() == "(2,2)^I");
    CHECK(OrbitLabel(Partition{3, 1}).to_string() == "(3,1)");
    CHECK(OrbitLabel(Partition{3, 1}).rank() == 4);
    CHECK_THROWS_AS(OrbitLabel(Partition{2, 2}), DomainError);
    CHECK_THROWS_AS(OrbitLabel(Partition{3, 1}, Form::I), DomainError);
    CHECK_THROWS_AS(OrbitLabel(Partition{}), DomainError);
}

TEST_CASE("enumerate_orbits examples")
{
    const auto r3 = enumerate_orbits(3);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].label == OrbitLabel(Partition{3}));
    CHECK(r3[1].label == OrbitLabel(Partition{2, 1}));
    CHECK(r3[2].label == OrbitLabel(Partition{1, 1, 1}));
    for (const auto& r : r3)
        CHECK_FALSE(r.label.form().has_value());

    const auto r2 = enumerate_orbits(2);
    REQUIRE(r2.size() == 3);
    CHECK(r2[0].label == OrbitLabel(Partition{2}, Form::I));
    CHECK(r2[1].label == OrbitLabel(Partition{2}, Form::II));
    CHECK(r2[2].label == OrbitLabel(Partition{1, 1}));

    const auto r1 = enumerate_orbits(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].local_system_count == 1);
    CHECK_THROWS_AS((void)enumerate_orbits(0), DomainError);
}

TEST_CASE("census examples")
{
    CHECK(census_count(3) == 4);
    CHECK(census_count(2) == 5);
    CHECK(census_count(1) == 1);
    CHECK(census_count(4) == 13);
    CHECK(d_of(1) == 3);
    CHECK(e_of(0) == 2);
    CHECK(e_of(1) == 3);
    const auto r3 = verify_census(3);
    CHECK(r3.by_orbits == 4);
    CHECK(r3.by_d_e == 4);
    CHECK(r3.by_series == 4);
    CHECK(r3.passed());
    const auto r2 = verify_census(2);
    CHECK(r2.by_orbits == 5);
    CHECK(r2.by_d_e == 5);
    CHECK(r2.by_series == 5);
    CHECK(verify_census(1).passed());
}

TEST_CASE("d and e against the definition")
{
    for (int k = 0; k <= 20; ++k) {
        REQUIRE(d_of(k) == d_oracle(k));
        REQUIRE(e_of(k) == e_oracle(k));
    }
}

TEST_CASE("census identities for N = 1..24")
{
    for (int N = 1; N <= 24; ++N) {
        const auto r = verify_census(N);
        INFO("N = ", N);
        REQUIRE(r.passed());
        REQUIRE(r.by_orbits == census_oracle(N));
    }
}

TEST_CASE("orbit record invariants")
{
    for (int N = 1; N <= 20; ++N) {
        std::map<Partition, std::vector<OrbitRecord>> by_lambda;
        for (const auto& r : enumerate_orbits(N)) {
            REQUIRE(r.label.rank() == N);
            REQUIRE(r.distinct_sizes == r.label.lambda().distinct_sizes());
            REQUIRE(r.local_system_count ==
                    local_system_count(r.distinct_sizes, r.label.form().has_value()));
            by_lambda[r.label.lambda()].push_back(r);
        }
        REQUIRE(by_lambda.size() == enumerate_partitions(N).size());
        for (const auto& [lambda, recs] : by_lambda) {
            if (lambda.all_even()) {
                REQUIRE(recs.size() == 2);
                CHECK(recs[0].label.form() == Form::I);
                CHECK(recs[1].label.form() == Form::II);
                CHECK(recs[0].local_system_count == recs[1].local_system_count);
            } else {
                REQUIRE(recs.size() == 1);
            }
        }
    }
    CHECK(local_system_count(3, false) == 4);
    CHECK(local_system_count(3, true) == 8);
}
