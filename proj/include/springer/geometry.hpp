#ifndef SPRINGER_GEOMETRY_HPP
#define SPRINGER_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

// Dimension bookkeeping for the resolution tau_m^N whose image is the closure
// of a nilpotent orbit, its fibers over the strata O_{2^j 1^(N-2j)}, and the
// induced-orbit formula.

/// Partition labelling the dense orbit of Im tau_m^N:
/// 3^m 1^(N-3m) if N >= 3m, else 3^(N-2m) 2^(3m-N). Needs 1 <= m <= N/2.
[[nodiscard]] Partition image_of_tau(int m, int N);

/// 2^j 1^(N-2j)
[[nodiscard]] Partition two_stratum(int j, int N);

/// True when O_{2^j 1^(N-2j)} lies in Im tau_m^N (dominance).
[[nodiscard]] bool stratum_in_image(int m, int j, int N);

/// Codimension a = m(2N-3m) - j(N-j) of the stratum in the image.
/// Throws DomainError when the stratum is not contained in the image.
[[nodiscard]] int codim_a(int m, int j, int N);

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct KRange {
    int lo = 0;
    int hi = -1;
    [[nodiscard]] bool empty() const noexcept { return lo > hi; }
    [[nodiscard]] bool contains(int k) const noexcept { return lo <= k && k <= hi; }
    friend bool operator==(const KRange&, const KRange&) = default;
};

/// Values of k = dim(V_m cap zeta_j V) for which the fiber stratum is
/// non-empty: ceil(max(m+j-N/2, j/2)) <= k <= min(j, m).
[[nodiscard]] KRange omega_k_range(int m, int j, int N);

/// -2k^2 + (-N+3j+2m+1)k + mN - mj - (j^2+3m^2+j+m)/2, for k in range.
[[nodiscard]] int omega_dim(int m, int j, int N, int k);

struct FiberDim {
    int value = 0;       ///< max over k of omega_dim
    int maximizing_k = 0;  ///< smallest k attaining the max
    int twice_closed_form = 0;  ///< 2 * piecewise closed form
};

/// Fiber dimension over zeta_j, by brute force over k and by the piecewise
/// closed form. Throws ConsistencyError if the two disagree and DomainError
/// when the stratum is outside the image or the k-range is empty.
[[nodiscard]] FiberDim fiber_dim(int m, int j, int N);

struct SmallnessRow {
    int j = 0;
    int fiber_dim = 0;
    int codim = 0;  ///< a; the bound is a/2
    [[nodiscard]] bool passes() const noexcept { return 2 * fiber_dim < codim; }
};

struct SmallnessReport {
    int m = 0;
    int N = 0;
    std::vector<SmallnessRow> rows;
    std::vector<int> violations;  ///< j values failing the strict bound
    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// Strict bound fiber_dim < a/2 over every stratum 2^j 1^(N-2j) in the image
/// other than the open one, with a non-empty k-range and m + j < N.
[[nodiscard]] SmallnessReport smallness_report(int m, int N);

/// lambda_i = beta_i + 2 alpha_i (zero padded). Throws DomainError on weight
/// mismatch or when the result is not weakly decreasing.
[[nodiscard]] Partition induce_orbit(const Partition& alpha, const Partition& beta, int N);

}  // namespace springer

#endif  // SPRINGER_GEOMETRY_HPP
