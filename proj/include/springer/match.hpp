#ifndef SPRINGER_MATCH_HPP
#define SPRINGER_MATCH_HPP

#include <map>
#include <string>
#include <vector>

#include "springer/orbits.hpp"
#include "springer/sigma.hpp"

namespace springer {

/// One distinct part size of the transpose partition with its multiplicity
/// written as 2m (even block) or 2m - 1 (odd block).
struct TransposeBlock {
    int size = 0;
    int half_multiplicity = 0;  ///< m
    friend bool operator==(const TransposeBlock&, const TransposeBlock&) = default;
};

/// lambda' = prod even_block size^(2m) * prod odd_block size^(2m-1), each block
/// listed with sizes strictly decreasing.
struct TransposeDecomposition {
    std::vector<TransposeBlock> even_block;
    std::vector<TransposeBlock> odd_block;

    [[nodiscard]] int l() const noexcept { return static_cast<int>(even_block.size()); }
    [[nodiscard]] int k() const noexcept
    {
        return static_cast<int>(even_block.size() + odd_block.size());
    }
    /// Reassemble lambda' from the blocks.
    [[nodiscard]] Partition reassemble() const;
};

[[nodiscard]] TransposeDecomposition decompose(const Partition& lambda);

/// The (delta, J) choice that produced one element of Sigma_lambda.
struct MatchChoice {
    std::vector<int> delta;  ///< one 0/1 entry per even-block size
    std::vector<int> J;      ///< indices into odd_block sent to mu1
    /// The two sides of the split have equal sums; the pair {J, complement}
    /// was represented once.
    bool balanced = false;
};

struct MatchedTriple {
    Triple triple;
    SupportLevel support;
    MatchChoice choice;
};

/// The subset Sigma_lambda (or Sigma_lambda^omega) attached to an orbit, in
/// canonical triple order. Its size equals the number of local systems on the
/// orbit.
[[nodiscard]] std::vector<MatchedTriple> sigma_lambda(const OrbitLabel& orbit);

/// Raised when the distinguished-triple criteria do not single out exactly one
/// element; carries every candidate.
class ConjectureViolation : public Error {
public:
    ConjectureViolation(const std::string& what, std::vector<Triple> candidates)
        : Error(what)
        , candidates_(std::move(candidates))
    {
    }
    [[nodiscard]] const std::vector<Triple>& candidates() const noexcept { return candidates_; }

private:
    std::vector<Triple> candidates_;
};

/// Triple predicted for the trivial local system: maximal |nu| with mu1 and
/// mu2 of opposite part parity (untagged orbits); |nu| = N/2 (tagged orbits).
[[nodiscard]] MatchedTriple distinguished_triple(const OrbitLabel& orbit);

/// Number of local systems whose Fourier transform has full support, from the
/// gap criteria: 0 if some gap (including the last part against 0) is >= 3,
/// else 2^(f-1-g) untagged and 1 tagged.
[[nodiscard]] BigInt full_support_count(const OrbitLabel& orbit);

/// Sum of full_support_count over every orbit of rank N.
[[nodiscard]] BigInt full_support_total(int N);

struct OrbitMatchRow {
    OrbitLabel orbit;
    BigInt local_systems;
    std::size_t sigma_lambda_size = 0;
    BigInt full_support;
    std::size_t nu_empty = 0;
    std::size_t balanced_classes = 0;
    std::string distinguished;  ///< empty when not determined
};

struct SigmaCoverReport {
    int N = 0;
    std::vector<OrbitMatchRow> rows;
    std::size_t sigma_size = 0;
    std::size_t union_size = 0;
    bool used_balanced_split = false;
    std::vector<std::string> failures;  ///< one line per failed check, with witnesses
    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

/// Check that the Sigma_lambda have the right sizes, are pairwise disjoint,
/// cover Sigma_N, agree with full_support_count on their nu = empty part and
/// each have a unique distinguished triple.
[[nodiscard]] SigmaCoverReport verify_partition_of_sigma(int N);

/// T(empty; (2i-j, j), (2n+1-2i)). Requires 0 <= j < 2i-j and i <= n.
[[nodiscard]] Triple e_label(int n, int i, int j);
/// T(empty; (2i-1-j, j), (2n+2-2i)). Requires 0 <= j < 2i-1-j and i <= n+1
/// (the second partition is empty at i = n+1).
[[nodiscard]] Triple tilde_e_label(int n, int i, int j);

/// Predicted support orbit for the Fourier transform of the tilde-E local
/// system (i, j); a partition of 2n+1.
[[nodiscard]] Partition tilde_e_support(int n, int i, int j);

/// How often each orbit occurs as tilde_e_support over all valid (i, j).
[[nodiscard]] std::map<Partition, int> tilde_e_support_table(int n);

}  // namespace springer

#endif  // SPRINGER_MATCH_HPP
