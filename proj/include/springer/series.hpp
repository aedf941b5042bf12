#ifndef SPRINGER_SERIES_HPP
#define SPRINGER_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "springer/bigint.hpp"
#include "springer/error.hpp"

namespace springer {

/// A power series in x known modulo x^(truncation_degree + 1).
///
/// Binary operations on series with different truncation degrees truncate to
/// the smaller one. Arithmetic is exact for exact `Scalar` types.
template <typename Scalar = BigInt>
class FormalSeries {
public:
    explicit FormalSeries(int truncation_degree = 0)
        : coeffs_(checked_size(truncation_degree))
    {
    }

    /// Coefficients 0..coeffs.size()-1; the truncation degree is size() - 1.
    explicit FormalSeries(std::vector<Scalar> coeffs)
        : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw DomainError("FormalSeries needs at least one coefficient");
    }

    static FormalSeries one(int truncation_degree)
    {
        FormalSeries s(truncation_degree);
        s.coeffs_[0] = 1;
        return s;
    }

    /// c * x^power, truncated.
    static FormalSeries monomial(int truncation_degree, int power, Scalar c = Scalar(1))
    {
        FormalSeries s(truncation_degree);
        if (power < 0)
            throw DomainError("negative monomial power");
        if (power <= truncation_degree)
            s.coeffs_[static_cast<std::size_t>(power)] = std::move(c);
        return s;
    }

    [[nodiscard]] int truncation_degree() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }

    [[nodiscard]] std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

    /// Coefficient of x^k; throws when k is beyond the truncation.
    [[nodiscard]] const Scalar& coefficient(int k) const
    {
        if (k < 0 || k > truncation_degree())
            throw DomainError("coefficient index " + std::to_string(k) + " outside 0.." +
                              std::to_string(truncation_degree()));
        return coeffs_[static_cast<std::size_t>(k)];
    }
    const Scalar& operator[](int k) const { return coefficient(k); }

    [[nodiscard]] FormalSeries truncated(int degree) const
    {
        degree = std::min(degree, truncation_degree());
        return FormalSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + degree + 1));
    }

    /// f(x) -> f(x^r), keeping the truncation degree.
    [[nodiscard]] FormalSeries substitute_power(int r) const
    {
        if (r < 1)
            throw DomainError("substitute_power needs r >= 1");
        FormalSeries out(truncation_degree());
        for (int k = 0; static_cast<long long>(k) * r <= truncation_degree(); ++k)
            out.coeffs_[static_cast<std::size_t>(k * r)] = coeffs_[static_cast<std::size_t>(k)];
        return out;
    }

    /// Multiply in place by (1 + x^s).
    FormalSeries& times_one_plus_power(int s)
    {
        if (s < 1)
            throw DomainError("times_one_plus_power needs s >= 1");
        for (int k = truncation_degree(); k >= s; --k)
            at(k) += at(k - s);
        return *this;
    }

    /// Multiply in place by 1/(1 - x^s) = 1 + x^s + x^2s + ...
    FormalSeries& divide_by_one_minus_power(int s)
    {
        if (s < 1)
            throw DomainError("divide_by_one_minus_power needs s >= 1");
        for (int k = s; k <= truncation_degree(); ++k)
            at(k) += at(k - s);
        return *this;
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b)
    {
        const int d = std::min(a.truncation_degree(), b.truncation_degree());
        FormalSeries out(d);
        for (int k = 0; k <= d; ++k)
            out.at(k) = a.at(k) + b.at(k);
        return out;
    }

    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b)
    {
        const int d = std::min(a.truncation_degree(), b.truncation_degree());
        FormalSeries out(d);
        for (int k = 0; k <= d; ++k)
            out.at(k) = a.at(k) - b.at(k);
        return out;
    }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
    {
        const int d = std::min(a.truncation_degree(), b.truncation_degree());
        FormalSeries out(d);
        for (int i = 0; i <= d; ++i) {
            if (a.at(i) == 0)
                continue;
            for (int j = 0; i + j <= d; ++j)
                out.at(i + j) += a.at(i) * b.at(j);
        }
        return out;
    }

    friend FormalSeries operator*(const Scalar& c, const FormalSeries& a)
    {
        FormalSeries out = a;
        for (auto& x : out.coeffs_)
            x *= c;
        return out;
    }

    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

private:
    static std::size_t checked_size(int truncation_degree)
    {
        if (truncation_degree < 0)
            throw DomainError("truncation degree must be non-negative");
        return static_cast<std::size_t>(truncation_degree) + 1;
    }

    Scalar& at(int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const Scalar& at(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    std::vector<Scalar> coeffs_;
};

/// Power series in x whose coefficients are polynomials in y.
/// The y-degree at x-degree l is at most l.
class BivariateSeries {
public:
    explicit BivariateSeries(int truncation_degree = 0);

    static BivariateSeries one(int truncation_degree);

    [[nodiscard]] int truncation_degree() const noexcept
    {
        return static_cast<int>(rows_.size()) - 1;
    }

    /// Coefficient of x^l y^k (zero when k > l).
    [[nodiscard]] BigInt coefficient(int l, int k) const;

    void set_coefficient(int l, int k, BigInt value);

    /// The polynomial in y attached to x^l, as coefficients 0..l.
    [[nodiscard]] std::span<const BigInt> row(int l) const;

    [[nodiscard]] FormalSeries<BigInt> at_y_equals_one() const;

    /// Multiply in place by 1 + y x^s/(1 - x^s).
    BivariateSeries& times_one_plus_y_geometric(int s);

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

private:
    std::vector<std::vector<BigInt>> rows_;  // rows_[l] has l + 1 entries
};

/// prod_{s>=1} (1 + x^s): coefficients q(k).
[[nodiscard]] FormalSeries<BigInt> product_one_plus(int deg);

/// prod_{s>=1} 1/(1 - x^s): coefficients p(k).
[[nodiscard]] FormalSeries<BigInt> product_inv_one_minus(int deg);

/// prod_{s>=1} (1 + x^s)/(1 - x^s), built factor by factor.
[[nodiscard]] FormalSeries<BigInt> product_ratio(int deg);

/// prod_{s>=1} (1 + y x^s/(1 - x^s)): coefficient of x^l y^k is p(l, k).
[[nodiscard]] BivariateSeries bivariate_plk(int deg);

/// Outcome of checking the product identities.
struct SeriesIdentityReport {
    int degree = 0;
    bool ratio_equals_p_even_times_q_squared = false;  ///< prod = (sum p(k)x^2k)(sum q(k)x^k)^2
    bool ratio_equals_p_times_q = false;               ///< prod = (sum p(k)x^k)(sum q(k)x^k)
    bool one_plus_matches_q = false;                   ///< prod(1+x^s) has coefficients q(k)
    bool inv_one_minus_matches_p = false;              ///< prod 1/(1-x^s) has coefficients p(k)
    bool bivariate_matches_plk = false;                ///< coefficient x^l y^k is p(l,k)
    bool ratio_coefficients_even = false;              ///< every coefficient past x^0 is even
    [[nodiscard]] bool passed() const noexcept
    {
        return ratio_equals_p_even_times_q_squared && ratio_equals_p_times_q &&
               one_plus_matches_q && inv_one_minus_matches_p && bivariate_matches_plk &&
               ratio_coefficients_even;
    }
};

/// Verify the generating-function identities coefficientwise through `deg`.
/// The right-hand sides are assembled from the partition-core counting
/// functions, not from the products themselves.
[[nodiscard]] SeriesIdentityReport verify_series_identities(int deg);

/// Shorthand for verify_series_identities(deg) restricted to the two
/// factorizations of prod (1+x^s)/(1-x^s).
[[nodiscard]] bool verify_identity_eq_partition_eq2(int deg);

}  // namespace springer

#endif  // SPRINGER_SERIES_HPP
