#include "coauth/threshold.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace coauth {

bool normality_check(const AuthorCountDistribution& d) {
    if (d.n < 3)
        throw std::invalid_argument("normality_check: need at least 3 observations");
    return std::abs(d.skewness) <= 0.5;
}

double empirical_rule_cutoff(const AuthorCountDistribution& d) {
    return d.mean + 2.0 * d.sd;
}

double chebyshev_cutoff(const AuthorCountDistribution& d, double k) {
    if (!(k > 1.0)) throw std::invalid_argument("chebyshev_cutoff: k must be > 1");
    return d.mean + k * d.sd;
}

CumulativeCutoff cumulative_cutoff(const AuthorCountDistribution& d, double coverage) {
    if (!(coverage > 0.0 && coverage < 1.0))
        throw std::invalid_argument("cumulative_cutoff: coverage must be in (0, 1)");
    CumulativeCutoff result;
    std::size_t seen = 0;
    for (const auto& [value, count] : d.histogram) {
        seen += count;
        double fraction = double(seen) / double(d.n);
        if (fraction >= coverage) {
            result.cutoff = value;
            result.achieved = fraction;
            return result;
        }
    }
    // coverage < 1 and the full scan reaches fraction 1, so we never get here
    // with a well-formed histogram.
    throw std::logic_error("cumulative_cutoff: histogram inconsistent with n");
}

ThresholdReport select_threshold(const AuthorCountDistribution& d, double coverage) {
    ThresholdReport report;
    report.coverage_target = coverage;
    report.is_normal = normality_check(d);
    if (report.is_normal) {
        report.empirical_cutoff = empirical_rule_cutoff(d);
        report.method_used = "empirical";
    } else {
        report.chebyshev_cutoff = chebyshev_cutoff(d);
        report.method_used = "chebyshev";
    }
    auto cumulative = cumulative_cutoff(d, coverage);
    report.cumulative_cutoff = cumulative.cutoff;
    report.cumulative_coverage = cumulative.achieved;

    auto dispersion = static_cast<std::int64_t>(std::floor(report.dispersion_cutoff()));
    if (dispersion < 1) dispersion = 1;
    const std::int64_t cum = cumulative.cutoff;
    if (std::abs(dispersion - cum) <= 2)
        report.recommended_cutoff = static_cast<std::uint32_t>(cum);
    else
        report.recommended_cutoff = static_cast<std::uint32_t>(std::min(dispersion, cum));
    return report;
}

std::string to_json_string(const ThresholdReport& report) {
    nlohmann::json j;
    j["is_normal"] = report.is_normal;
    j["method_used"] = report.method_used;
    if (report.empirical_cutoff)
        j["empirical_cutoff"] = *report.empirical_cutoff;
    else
        j["empirical_cutoff"] = nullptr;
    if (report.chebyshev_cutoff)
        j["chebyshev_cutoff"] = *report.chebyshev_cutoff;
    else
        j["chebyshev_cutoff"] = nullptr;
    j["cumulative_cutoff"] = report.cumulative_cutoff;
    j["cumulative_coverage"] = report.cumulative_coverage;
    j["coverage_target"] = report.coverage_target;
    j["recommended_cutoff"] = report.recommended_cutoff;
    return j.dump(2);
}

} // namespace coauth
