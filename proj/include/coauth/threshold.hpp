#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "coauth/corpus.hpp"

namespace coauth {

/// Outcome of the cutoff-detection procedure: the dispersion-based bound
/// (empirical rule or Chebyshev, depending on normality), the
/// cumulative-frequency bound, and the reconciled recommendation.
struct ThresholdReport {
    bool is_normal = false;
    std::optional<double> empirical_cutoff;  // set iff method_used == "empirical"
    std::optional<double> chebyshev_cutoff;  // set iff method_used == "chebyshev"
    std::uint32_t cumulative_cutoff = 0;
    double cumulative_coverage = 0.0;
    double coverage_target = 0.0;
    std::uint32_t recommended_cutoff = 0;
    std::string method_used; // "empirical" | "chebyshev"

    double dispersion_cutoff() const {
        return empirical_cutoff ? *empirical_cutoff : *chebyshev_cutoff;
    }
};

/// True iff |sample skewness| <= 0.5. A cheap deterministic stand-in for a
/// normality test; all it has to decide is which outlier rule applies.
/// Throws std::invalid_argument when n < 3.
bool normality_check(const AuthorCountDistribution& d);

/// Upper bound of the 68-95-99.7 rule: mean + 2*sd. With sd = 0 this
/// degenerates to the mean.
double empirical_rule_cutoff(const AuthorCountDistribution& d);

/// One-sided Chebyshev bound mean + k*sd. Hyperauthorship is a right-tail
/// phenomenon, so only the upper bound is of interest.
/// Throws std::invalid_argument when k <= 1.
double chebyshev_cutoff(const AuthorCountDistribution& d, double k = 3.0);

struct CumulativeCutoff {
    std::uint32_t cutoff = 0; // smallest a with P(N_p <= a) >= coverage
    double achieved = 0.0;    // that fraction
};

/// Cumulative-frequency cutoff: rank author counts, scan cumulative
/// fractions, stop at the first count covering the target.
/// Throws std::invalid_argument unless 0 < coverage < 1.
CumulativeCutoff cumulative_cutoff(const AuthorCountDistribution& d, double coverage = 0.90);

/// Full procedure: normality check picks the dispersion rule, the cumulative
/// method is always computed as cross-validation, and the recommendation
/// reconciles the two -- the cumulative value when they differ by at most 2,
/// otherwise the smaller. A paper is then hyperauthored iff
/// N_p > recommended_cutoff.
ThresholdReport select_threshold(const AuthorCountDistribution& d, double coverage = 0.90);

/// Flat JSON object per the report's serialization contract.
std::string to_json_string(const ThresholdReport& report);

} // namespace coauth
