#ifndef SPRINGER_BRAID_HPP
#define SPRINGER_BRAID_HPP

#include <cstdint>
#include <vector>

#include "springer/orbits.hpp"
#include "springer/partition.hpp"
#include "springer/sigma.hpp"

namespace springer {

/// A character of I_N = (Z/2)^(N-1), given by its values (+1/-1) on the
/// generators tau_i = e_i + e_(i+1), i = 1..N-1 (stored 0-based).
struct CharacterLabel {
    std::vector<int> values;
    friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
};

/// chi_m: -1 on tau_m only; chi_0 is trivial. Needs 0 <= m <= N/2.
[[nodiscard]] CharacterLabel chi(int m, int N);

/// Lift a character of I_N to a sign vector on (Z/2)^N with first entry +1.
/// The lift is unique up to the global flip, which is trivial on I_N.
[[nodiscard]] std::vector<int> lift_to_signs(const CharacterLabel& c);

/// Inverse of lift_to_signs: values on tau_i are eps_i * eps_(i+1).
[[nodiscard]] CharacterLabel restrict_signs(const std::vector<int>& signs);

/// Orbits of B_N on the 2^(N-1) characters of I_N, counted by closing each
/// character under the adjacent transpositions s_1..s_(N-1) (B_N acts through
/// S_N). Needs 2 <= N <= 24.
[[nodiscard]] int orbit_count_on_characters(int N);

/// Orbit invariant of a character: the number of -1 entries of its sign
/// lift, folded to min(c, N - c).
[[nodiscard]] int character_orbit_invariant(const CharacterLabel& c);

struct StabilizerFlags {
    BigInt index_in_BN;  ///< [S_N : S_m x S_(N-m)] = C(N, m)
    bool chi_stabilizer_equals_B_m_Nminusm = true;  ///< false exactly when 2m = N
};

[[nodiscard]] StabilizerFlags stabilizer_flags(int m, int N);

/// Label V_{mu1,mu2} of a composition factor of L_{chi_m}; split is set on the
/// diagonal factors V_{mu,mu}^I and V_{mu,mu}^II.
struct FactorLabel {
    Partition mu1;
    Partition mu2;
    OptionalForm split;
    friend bool operator==(const FactorLabel&, const FactorLabel&) = default;
};

/// Pairs (mu1 in P_2(m), mu2 in P_2(N-m)) with mu1 != mu2, plus both splits of
/// every diagonal pair when N = 2m. Each label listed once, mu1 outer loop.
[[nodiscard]] std::vector<FactorLabel> composition_factors(int m, int N);

/// Union over m of composition_factors(m, N), read as triples (empty; mu1, mu2)
/// with splits carried as the form tag; canonical order, no repeats.
[[nodiscard]] std::vector<Triple> composition_factor_triples(int N);

/// [mu_i, mu_(i-2), ...] with mu_k = (N-k, k), for the degree-i cohomology of
/// the hyperelliptic Jacobian. Needs N = 2n+2 even and 0 <= i <= n.
[[nodiscard]] std::vector<Partition> jacobian_factors(int N, int i);

}  // namespace springer

#endif  // SPRINGER_BRAID_HPP
