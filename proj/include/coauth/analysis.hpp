#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coauth/graph.hpp"
#include "coauth/metrics.hpp"
#include "coauth/topology.hpp"

namespace coauth {

/// (v2 - v1) / |v1| * 100. Returns NaN (the undefined-change marker) when
/// v1 == 0.
double percent_change(double v1, double v2);

struct ComparisonRow {
    std::string metric;
    std::optional<double> without; // network without hyperauthored papers
    std::optional<double> with;    // network with them
    double change = 0.0;           // percent change; NaN when undefined

    bool change_defined() const;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    std::uint32_t cutoff = 0;
    std::vector<WeightScheme> schemes;
    std::uint64_t seed = 0;
};

/// `metric,without,with,percent_change` with 3-decimal rounding applied only
/// here, at serialization.
void write_comparison_csv(const ComparisonReport& report, std::ostream& out);
std::string to_json_string(const ComparisonReport& report);

/// Average centrality for one (measure, scheme) cell.
struct CentralityAverage {
    Measure measure;
    WeightScheme scheme;
    double average = 0.0;
};

/// Parameters a metric suite was computed under; both sides of a comparison
/// must match exactly.
struct MetricParams {
    std::uint32_t cutoff = 0;
    std::uint64_t seed = 0;
    std::size_t betweenness_sample = 1000;
    int omega_niter = 5;
    int omega_nrand = 5;
    std::vector<WeightScheme> schemes;
    PathSampleParams path;

    bool operator==(const MetricParams&) const;
};

/// Everything measured on one network, ready for the side-by-side report.
struct NetworkMetrics {
    std::size_t n_papers = 0;
    CohesionReport cohesion;
    std::optional<TopologyReport> topology;
    std::vector<CentralityAverage> centralities;
    MetricParams params;
};

/// Pairs up the two suites row by row and computes percent changes.
/// Throws ConfigError when the suites were computed under different
/// parameters.
ComparisonReport compare_networks(const NetworkMetrics& without, const NetworkMetrics& with);

/// Induced subgraph on an ego and its direct co-authors.
struct EgoNetwork {
    std::string ego;
    CoauthorGraph graph;
    std::string provenance; // which parent network this came from
};

/// Throws NotFoundError when the ego is not in g.
EgoNetwork extract_ego(const CoauthorGraph& g, const std::string& ego,
                       const std::string& provenance = "");

/// Authors by descending raw degree, ties by ascending author id. Ranks are
/// 1-based positions in `ordered`.
struct Ranking {
    std::vector<std::string> ordered;

    /// 1-based rank, or 0 when absent.
    std::size_t rank_of(const std::string& id) const;
    std::size_t size() const { return ordered.size(); }
};

Ranking rank_by_degree(const CoauthorGraph& g);

/// 2x2 grid of authors by high/low degree rank in the two networks. An
/// author is High in a network iff its rank <= quantile * n there; authors
/// absent from a ranking count as Low.
struct CaseStudyGrid {
    std::vector<std::string> hh, hl, lh, ll; // without-then-with initials
    double quantile = 0.1;
};

CaseStudyGrid select_case_studies(const Ranking& rank_without, const Ranking& rank_with,
                                  double quantile = 0.1);

std::string to_json_string(const CaseStudyGrid& grid);

/// One parent network per weighting scheme.
using GraphsByScheme = std::map<WeightScheme, CoauthorGraph>;

struct EgoSuiteParams {
    std::size_t betweenness_sample = 1000;
    std::uint64_t seed = 0;
};

/// Average centrality of each (measure, scheme) cell computed inside the
/// ego's egonetwork, extracted per scheme from the corresponding parent, for
/// both networks, with percent changes. Sides where the ego is absent are
/// left empty; cells whose metric is undefined for the egonetwork's size
/// (e.g. betweenness of a 2-node egonet) are likewise left empty.
ComparisonReport ego_centrality_suite(const GraphsByScheme& parents_without,
                                      const GraphsByScheme& parents_with, const std::string& ego,
                                      const EgoSuiteParams& params = {});

} // namespace coauth
