#ifndef SPRINGER_SIGMA_HPP
#define SPRINGER_SIGMA_HPP

#include <string>
#include <vector>

#include "springer/orbits.hpp"
#include "springer/partition.hpp"

namespace springer {

/// An element (nu; mu1, mu2) of the parameter set Sigma_N, always held in
/// canonical form:
///   - mu1 and mu2 are 2-regular,
///   - weight(mu1) <= weight(mu2), ties broken so that mu1 comes first in
///     reverse-lexicographic order (the pair is only defined up to swap then),
///   - omega is present exactly when mu1 == mu2 (this includes mu1 = mu2 = empty).
class Triple {
public:
    /// Canonicalizes the (a, b) order. Throws DomainError if a or b is not
    /// 2-regular or if the tag does not match the diagonal condition.
    Triple(Partition nu, Partition a, Partition b, OptionalForm omega = std::nullopt);

    [[nodiscard]] const Partition& nu() const noexcept { return nu_; }
    [[nodiscard]] const Partition& mu1() const noexcept { return mu1_; }
    [[nodiscard]] const Partition& mu2() const noexcept { return mu2_; }
    [[nodiscard]] OptionalForm omega() const noexcept { return omega_; }

    /// 2|nu| + |mu1| + |mu2|
    [[nodiscard]] int rank() const noexcept
    {
        return 2 * nu_.weight() + mu1_.weight() + mu2_.weight();
    }
    [[nodiscard]] bool is_diagonal() const noexcept { return mu1_ == mu2_; }

    /// "((1);(),(2))", "((2);(),())^I"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Triple&, const Triple&) = default;

private:
    Partition nu_;
    Partition mu1_;
    Partition mu2_;
    OptionalForm omega_;
};

/// Canonical output order: ascending |nu|, then ascending |mu1|, then
/// nu, mu1, mu2 in reverse-lexicographic order, then untagged < I < II.
[[nodiscard]] bool triple_order_less(const Triple& a, const Triple& b);

struct TripleOrder {
    bool operator()(const Triple& a, const Triple& b) const { return triple_order_less(a, b); }
};

/// Stratum g_1^m carrying the IC sheaf matched with a triple. The tag is only
/// present at m = N/2.
struct SupportLevel {
    int m = 0;
    OptionalForm omega;
    friend bool operator==(const SupportLevel&, const SupportLevel&) = default;
};

/// Every identification class of Sigma_N exactly once, in canonical order.
[[nodiscard]] std::vector<Triple> enumerate_sigma(int N);

[[nodiscard]] BigInt sigma_count(int N);

/// Throws DomainError when t does not have rank N.
[[nodiscard]] SupportLevel support_level(const Triple& t, int N);

}  // namespace springer

#endif  // SPRINGER_SIGMA_HPP
