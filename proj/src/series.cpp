#include "springer/series.hpp"

#include "springer/partition.hpp"

namespace springer {

BivariateSeries::BivariateSeries(int truncation_degree)
{
    if (truncation_degree < 0)
        throw DomainError("truncation degree must be non-negative");
    rows_.resize(static_cast<std::size_t>(truncation_degree) + 1);
    for (std::size_t l = 0; l < rows_.size(); ++l)
        rows_[l].assign(l + 1, BigInt(0));
}

BivariateSeries BivariateSeries::one(int truncation_degree)
{
    BivariateSeries s(truncation_degree);
    s.rows_[0][0] = 1;
    return s;
}

BigInt BivariateSeries::coefficient(int l, int k) const
{
    if (l < 0 || l > truncation_degree())
        throw DomainError("x-degree " + std::to_string(l) + " outside truncation");
    if (k < 0)
        throw DomainError("negative y-degree");
    if (k > l)
        return 0;
    return rows_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
}

void BivariateSeries::set_coefficient(int l, int k, BigInt value)
{
    if (l < 0 || l > truncation_degree() || k < 0 || k > l)
        throw DomainError("bivariate coefficient (" + std::to_string(l) + "," + std::to_string(k) +
                          ") outside the allowed triangle");
    rows_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = std::move(value);
}

std::span<const BigInt> BivariateSeries::row(int l) const
{
    if (l < 0 || l > truncation_degree())
        throw DomainError("x-degree outside truncation");
    return rows_[static_cast<std::size_t>(l)];
}

FormalSeries<BigInt> BivariateSeries::at_y_equals_one() const
{
    std::vector<BigInt> out(rows_.size());
    for (std::size_t l = 0; l < rows_.size(); ++l) {
        for (const auto& c : rows_[l])
            out[l] += c;
    }
    return FormalSeries<BigInt>(std::move(out));
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b)
{
    const int d = std::min(a.truncation_degree(), b.truncation_degree());
    BivariateSeries out(d);
    for (int la = 0; la <= d; ++la) {
        for (int lb = 0; la + lb <= d; ++lb) {
            const auto& ra = a.rows_[static_cast<std::size_t>(la)];
            const auto& rb = b.rows_[static_cast<std::size_t>(lb)];
            auto& ro = out.rows_[static_cast<std::size_t>(la + lb)];
            for (std::size_t ka = 0; ka < ra.size(); ++ka) {
                if (ra[ka] == 0)
                    continue;
                for (std::size_t kb = 0; kb < rb.size(); ++kb)
                    ro[ka + kb] += ra[ka] * rb[kb];
            }
        }
    }
    return out;
}

BivariateSeries& BivariateSeries::times_one_plus_y_geometric(int s)
{
    if (s < 1)
        throw DomainError("times_one_plus_y_geometric needs s >= 1");
    // g = f * y x^s/(1 - x^s) obeys g = x^s (y f + g)
    const int d = truncation_degree();
    std::vector<std::vector<BigInt>> g(rows_.size());
    for (int l = 0; l <= d; ++l) {
        auto& gl = g[static_cast<std::size_t>(l)];
        gl.assign(static_cast<std::size_t>(l) + 1, BigInt(0));
        if (l < s)
            continue;
        const auto& f = rows_[static_cast<std::size_t>(l - s)];
        const auto& prev = g[static_cast<std::size_t>(l - s)];
        for (std::size_t k = 0; k < f.size(); ++k) {
            gl[k + 1] += f[k];
            gl[k] += prev[k];
        }
    }
    for (std::size_t l = 0; l < rows_.size(); ++l)
        for (std::size_t k = 0; k <= l; ++k)
            rows_[l][k] += g[l][k];
    return *this;
}

namespace {

void require_degree(int deg)
{
    if (deg < 0)
        throw DomainError("series degree must be non-negative");
}

// Factors with s > deg are 1 modulo x^(deg+1), so every product stops at s = deg.

FormalSeries<BigInt> series_from_counts(int deg, BigInt (*count)(int), int stride)
{
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k * stride <= deg; ++k)
        c[static_cast<std::size_t>(k * stride)] = count(k);
    return FormalSeries<BigInt>(std::move(c));
}

}  // namespace

FormalSeries<BigInt> product_one_plus(int deg)
{
    require_degree(deg);
    auto acc = FormalSeries<BigInt>::one(deg);
    for (int s = 1; s <= deg; ++s)
        acc.times_one_plus_power(s);
    return acc;
}

FormalSeries<BigInt> product_inv_one_minus(int deg)
{
    require_degree(deg);
    auto acc = FormalSeries<BigInt>::one(deg);
    for (int s = 1; s <= deg; ++s)
        acc.divide_by_one_minus_power(s);
    return acc;
}

FormalSeries<BigInt> product_ratio(int deg)
{
    require_degree(deg);
    auto acc = FormalSeries<BigInt>::one(deg);
    for (int s = 1; s <= deg; ++s)
        acc.times_one_plus_power(s).divide_by_one_minus_power(s);
    return acc;
}

BivariateSeries bivariate_plk(int deg)
{
    require_degree(deg);
    auto acc = BivariateSeries::one(deg);
    for (int s = 1; s <= deg; ++s)
        acc.times_one_plus_y_geometric(s);
    return acc;
}

SeriesIdentityReport verify_series_identities(int deg)
{
    require_degree(deg);
    SeriesIdentityReport r;
    r.degree = deg;

    const auto p_series = series_from_counts(deg, &count_p, 1);
    const auto q_series = series_from_counts(deg, &count_q, 1);
    const auto p_even = series_from_counts(deg, &count_p, 2);
    const auto ratio = product_ratio(deg);

    r.ratio_equals_p_even_times_q_squared = ratio == p_even * q_series * q_series;
    r.ratio_equals_p_times_q = ratio == p_series * q_series;
    r.one_plus_matches_q = product_one_plus(deg) == q_series;
    r.inv_one_minus_matches_p = product_inv_one_minus(deg) == p_series;

    const auto biv = bivariate_plk(deg);
    r.bivariate_matches_plk = true;
    for (int l = 0; l <= deg && r.bivariate_matches_plk; ++l) {
        for (int k = 0; k <= l; ++k) {
            if (biv.coefficient(l, k) != count_plk(l, k)) {
                r.bivariate_matches_plk = false;
                break;
            }
        }
    }

    r.ratio_coefficients_even = true;
    for (int k = 1; k <= deg; ++k) {
        if (ratio[k] % 2 != 0)
            r.ratio_coefficients_even = false;
    }
    return r;
}

bool verify_identity_eq_partition_eq2(int deg)
{
    const auto r = verify_series_identities(deg);
    return r.ratio_equals_p_even_times_q_squared && r.ratio_equals_p_times_q;
}

}  // namespace springer
