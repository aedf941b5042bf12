#ifndef SPRINGER_ORBITS_HPP
#define SPRINGER_ORBITS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/bigint.hpp"
#include "springer/partition.hpp"

namespace springer {

/// Formal I/II tag carried by orbits with all parts even, by diagonal triples
/// and by split composition factors. Absent means "no tag".
enum class Form { I, II };

using OptionalForm = std::optional<Form>;

[[nodiscard]] std::string_view to_string(Form f) noexcept;
/// "I"/"II"; anything else throws ParseError.
[[nodiscard]] Form parse_form(std::string_view text);

/// A nilpotent K-orbit: a partition of N plus a form tag exactly when every
/// part is even.
class OrbitLabel {
public:
    /// Throws DomainError when the tag is present/absent inconsistently with
    /// the parity of the parts, or when lambda is empty.
    explicit OrbitLabel(Partition lambda, OptionalForm form = std::nullopt);

    [[nodiscard]] const Partition& lambda() const noexcept { return lambda_; }
    [[nodiscard]] OptionalForm form() const noexcept { return form_; }
    [[nodiscard]] int rank() const noexcept { return lambda_.weight(); }

    /// "(2,2)^I", "(3,1)"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;

private:
    Partition lambda_;
    OptionalForm form_;
};

struct OrbitRecord {
    OrbitLabel label;
    int distinct_sizes = 0;    ///< k
    BigInt local_system_count; ///< 2^(k-1) untagged, 2^k tagged
};

/// Local systems on one orbit, determined by (k, tag) alone.
[[nodiscard]] BigInt local_system_count(int distinct_sizes, bool tagged);

/// One record per K-orbit in partition order; all-even partitions appear
/// twice, I before II.
[[nodiscard]] std::vector<OrbitRecord> enumerate_orbits(int N);

/// Sum of local-system counts over enumerate_orbits(N).
[[nodiscard]] BigInt census_count(int N);

/// d(k) = sum_{s=0}^{k} q(s) q(2k+1-s)
[[nodiscard]] BigInt d_of(int k);
/// e(k) = sum_{s=0}^{k-1} q(s) q(2k-s) + (q(k)^2 + 3 q(k))/2
[[nodiscard]] BigInt e_of(int k);

struct CensusReport {
    int N = 0;
    BigInt by_orbits;      ///< orbit-by-orbit local-system sum
    BigInt by_d_e;         ///< sum_k p(n-k) d(k) or sum_k p(n-k) e(k)
    BigInt by_series;      ///< halved product coefficient (+ 3/2 of x^(N/2) for even N)
    [[nodiscard]] bool passed() const { return by_orbits == by_d_e && by_d_e == by_series; }
};

[[nodiscard]] CensusReport verify_census(int N);

}  // namespace springer

#endif  // SPRINGER_ORBITS_HPP
