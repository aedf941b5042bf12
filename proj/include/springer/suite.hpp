#ifndef SPRINGER_SUITE_HPP
#define SPRINGER_SUITE_HPP

#include <string>
#include <vector>

namespace springer {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;                 ///< short summary of what was checked
    std::vector<std::string> failures;  ///< witnesses, empty on pass
};

/// Upper ends of the scan ranges used by the default regression suite.
struct SuiteBounds {
    int counting_max_n = 24;    ///< census and |Sigma_N| identities
    int structural_max_n = 14;  ///< Sigma_lambda cover and composition slice
    int full_support_max_n = 16;
    int smallness_max_n = 40;
    int character_max_n = 12;
    int series_degree = 40;

    /// Clamp every range to at most `cap` (a cap below 1 leaves them as is).
    [[nodiscard]] SuiteBounds capped(int cap) const;
};

/// Checks for a single N: census identity and Sigma_lambda cover.
[[nodiscard]] std::vector<SuiteCheck> run_checks_for(int N);

/// The whole regression suite over the bounded ranges.
[[nodiscard]] std::vector<SuiteCheck> run_default_suite(const SuiteBounds& bounds);

}  // namespace springer

#endif  // SPRINGER_SUITE_HPP
