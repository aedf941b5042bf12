#include "springer/suite.hpp"

#include <algorithm>

#include "springer/braid.hpp"
#include "springer/geometry.hpp"
#include "springer/match.hpp"
#include "springer/orbits.hpp"
#include "springer/series.hpp"
#include "springer/sigma.hpp"

namespace springer {

SuiteBounds SuiteBounds::capped(int cap) const
{
    if (cap < 1)
        return *this;
    SuiteBounds b = *this;
    for (int* v : {&b.counting_max_n, &b.structural_max_n, &b.full_support_max_n,
                   &b.smallness_max_n, &b.character_max_n, &b.series_degree})
        *v = std::min(*v, cap);
    return b;
}

namespace {

std::string range(int lo, int hi)
{
    return std::to_string(lo) + ".." + std::to_string(hi);
}

SuiteCheck finish(std::string name, std::string detail, std::vector<std::string> failures)
{
    SuiteCheck c{std::move(name), failures.empty(), std::move(detail), std::move(failures)};
    return c;
}

SuiteCheck census_check(int lo, int hi)
{
    std::vector<std::string> failures;
    for (int N = lo; N <= hi; ++N) {
        const auto r = verify_census(N);
        if (!r.passed())
            failures.push_back("N=" + std::to_string(N) + ": orbits " + r.by_orbits.str() +
                               ", d/e sum " + r.by_d_e.str() + ", series " + r.by_series.str());
    }
    return finish("census", "three census computations agree, N=" + range(lo, hi), std::move(failures));
}

SuiteCheck sigma_count_check(int lo, int hi)
{
    std::vector<std::string> failures;
    for (int N = lo; N <= hi; ++N) {
        const auto s = sigma_count(N);
        const auto c = census_count(N);
        if (s != c)
            failures.push_back("N=" + std::to_string(N) + ": |Sigma_N|=" + s.str() +
                               " census=" + c.str());
    }
    return finish("sigma_count", "|Sigma_N| equals the census, N=" + range(lo, hi),
                  std::move(failures));
}

SuiteCheck cover_check(int lo, int hi)
{
    std::vector<std::string> failures;
    for (int N = lo; N <= hi; ++N) {
        const auto r = verify_partition_of_sigma(N);
        for (const auto& f : r.failures)
            failures.push_back("N=" + std::to_string(N) + ": " + f);
    }
    return finish("sigma_lambda_cover",
                  "Sigma_lambda sizes, disjointness, cover and distinguished triples, N=" + range(lo, hi),
                  std::move(failures));
}

SuiteCheck full_support_check(int lo, int hi)
{
    std::vector<std::string> failures;
    for (int N = lo; N <= hi; ++N) {
        for (const auto& rec : enumerate_orbits(N)) {
            std::size_t nu_empty = 0;
            for (const auto& e : sigma_lambda(rec.label))
                nu_empty += e.triple.nu().empty() ? 1 : 0;
            const auto expected = full_support_count(rec.label);
            if (BigInt(nu_empty) != expected)
                failures.push_back(rec.label.to_string() + ": " + std::to_string(nu_empty) +
                                   " empty-nu triples vs " + expected.str());
        }
        const int n = N / 2;
        const auto total = full_support_total(N);
        const auto target = N % 2 ? d_of(n) : e_of(n);
        if (total != target)
            failures.push_back("N=" + std::to_string(N) + ": full-support total " + total.str() +
                               " vs " + target.str());
    }
    return finish("full_support", "gap criterion vs empty-nu triples and d(n)/e(n) totals, N=" +
                                      range(lo, hi),
                  std::move(failures));
}

SuiteCheck smallness_check(int hi)
{
    std::vector<std::string> failures;
    int strata = 0;
    for (int N = 2; N <= hi; ++N) {
        for (int m = 1; 2 * m <= N; ++m) {
            try {
                const auto r = smallness_report(m, N);
                strata += static_cast<int>(r.rows.size());
                for (int j : r.violations)
                    failures.push_back("(m,N)=(" + std::to_string(m) + "," + std::to_string(N) +
                                       "): stratum j=" + std::to_string(j) + " not small");
            } catch (const ConsistencyError& e) {
                failures.push_back(e.what());
            }
        }
    }
    return finish("smallness", "fiber_dim < a/2 on " + std::to_string(strata) + " strata, N=" +
                                   range(2, hi),
                  std::move(failures));
}

SuiteCheck character_check(int hi)
{
    std::vector<std::string> failures;
    for (int N = 2; N <= hi; ++N) {
        const int got = orbit_count_on_characters(N);
        if (got != N / 2 + 1)
            failures.push_back("N=" + std::to_string(N) + ": " + std::to_string(got) + " orbits");
    }
    return finish("character_orbits", "[N/2]+1 orbits on characters, N=" + range(2, hi),
                  std::move(failures));
}

SuiteCheck composition_check(int lo, int hi)
{
    std::vector<std::string> failures;
    for (int N = lo; N <= hi; ++N) {
        std::vector<Triple> slice;
        for (auto& t : enumerate_sigma(N)) {
            if (t.nu().empty())
                slice.push_back(t);
        }
        if (composition_factor_triples(N) != slice)
            failures.push_back("N=" + std::to_string(N) + ": composition factors differ from the empty-nu slice");
    }
    return finish("composition_slice", "composition factors = empty-nu slice of Sigma_N, N=" +
                                           range(lo, hi),
                  std::move(failures));
}

SuiteCheck series_check(int deg)
{
    std::vector<std::string> failures;
    const auto r = verify_series_identities(deg);
    if (!r.passed())
        failures.push_back("degree " + std::to_string(deg) + ": some identity fails");
    return finish("series", "generating-function identities through degree " + std::to_string(deg),
                  std::move(failures));
}

}  // namespace

std::vector<SuiteCheck> run_checks_for(int N)
{
    return {census_check(N, N), sigma_count_check(N, N), cover_check(N, N)};
}

std::vector<SuiteCheck> run_default_suite(const SuiteBounds& bounds)
{
    return {
        census_check(1, bounds.counting_max_n),
        sigma_count_check(1, bounds.counting_max_n),
        cover_check(1, bounds.structural_max_n),
        full_support_check(1, bounds.full_support_max_n),
        smallness_check(bounds.smallness_max_n),
        character_check(bounds.character_max_n),
        composition_check(1, bounds.structural_max_n),
        series_check(bounds.series_degree),
    };
}

}  // namespace springer
