#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coauth/graph.hpp"

namespace coauth {

enum class Measure { Degree, Betweenness, Closeness, Eigenvector };

std::string_view measure_name(Measure m);

/// Per-author scores for one (measure, scheme) pair. Scores are indexed by
/// the node order of the graph they were computed on; the ranking lists node
/// indices by descending score, ties broken by ascending author id (which is
/// ascending node index).
struct CentralityVector {
    Measure measure;
    WeightScheme scheme;
    std::vector<double> scores;
    double average = 0.0;
    std::vector<CoauthorGraph::NodeId> ranking;
};

/// Fills average and ranking from scores.
void finalize_centrality(CentralityVector& cv);

/// `author_id,score` rows in node order.
void write_centrality_csv(const CoauthorGraph& g, const CentralityVector& cv, std::ostream& out);

// ---------------------------------------------------------------------------
// Whole-network cohesion
// ---------------------------------------------------------------------------

/// 2m / (n (n - 1)). Throws MetricError when n < 2.
double density(const CoauthorGraph& g);

/// Mean over all nodes of the local clustering coefficient
/// triangles(v) / (deg(v) choose 2), taking 0 when deg(v) < 2.
/// Ignores weights.
double average_clustering(const CoauthorGraph& g);

/// Maximal connected node sets, largest first; among equal sizes, the
/// component containing the lexicographically smallest author id first.
std::vector<std::vector<CoauthorGraph::NodeId>> connected_components(const CoauthorGraph& g);

/// Induced subgraph on the largest component (tie rule as above).
CoauthorGraph giant_component(const CoauthorGraph& g);

struct PathSampleParams {
    std::size_t exact_threshold = 5000; // all-sources up to this node count
    std::size_t sample_size = 1000;     // sources when estimating
    std::uint64_t seed = 0;
};

struct PathLengthStats {
    double value = 0.0;
    bool exact = true;
    std::size_t n_sources = 0;
    std::uint64_t seed = 0;
};

/// Mean shortest-path distance over ordered node pairs of a connected graph.
/// With use_weights, edge weights are the Dijkstra distances directly (the
/// convention the reported numbers imply, even though co-authorship weights
/// are similarities). Exact up to exact_threshold nodes, otherwise estimated
/// from a seeded uniform sample of source nodes.
/// Throws MetricError on disconnected input (extract the giant component
/// first).
PathLengthStats average_path_length(const CoauthorGraph& g, bool use_weights,
                                    const PathSampleParams& params = {});

struct CohesionReport {
    std::size_t n_nodes = 0;
    std::size_t n_edges = 0;
    double density = 0.0;
    double avg_clustering = 0.0;
    double avg_path_length = 0.0; // unweighted, computed on the giant component
    std::size_t n_components = 0;
    std::size_t giant_component_nodes = 0;
    std::size_t giant_component_edges = 0;
    PathLengthStats path_stats;
};

/// Bundles the cohesion measures; avg_path_length is computed on the giant
/// component, matching how a disconnected co-authorship network has to be
/// summarized.
CohesionReport cohesion_report(const CoauthorGraph& g, const PathSampleParams& params = {});

std::string to_json_string(const CohesionReport& report);

// ---------------------------------------------------------------------------
// Centrality
// ---------------------------------------------------------------------------

/// Degree count on an unweighted graph, node strength (sum of incident
/// weights) otherwise. normalized divides by n - 1 (requires n >= 2);
/// reported tables use the raw variant.
CentralityVector degree_centrality(const CoauthorGraph& g, bool normalized = false);

struct BetweennessParams {
    bool use_weights = false;
    std::size_t sample_size = 1000; // pivot sources; >= n means exact
    std::uint64_t seed = 0;
    bool normalized = true;
    // The reported normalization constant is the directed-network one,
    // 1/((n-1)(n-2)); flip this to use 2/((n-1)(n-2)) instead.
    bool undirected_constant = false;
};

/// Brandes accumulation from min(sample_size, n) pivot sources drawn
/// uniformly without replacement, rescaled by n/pivots. Raw scores count
/// unordered pairs. Per-pivot partials are reduced in a fixed order, so the
/// output is bit-identical for any worker count.
/// Throws MetricError when n < 3.
CentralityVector betweenness_centrality(const CoauthorGraph& g, const BetweennessParams& params);

/// For node v in a component of size k: (k-1)/sum of distances, scaled by
/// (k-1)/(n-1) so scores remain comparable across components. Isolated nodes
/// (and degenerate all-zero-distance components) score 0.
/// Throws MetricError when n < 2.
CentralityVector closeness_centrality(const CoauthorGraph& g, bool use_weights);

/// Power iteration for the dominant eigenvector of the (weighted) adjacency:
/// uniform positive start, L2 normalization each step, converged when
/// successive iterates differ by less than tol*n in L1. Iterates on A + I,
/// which has the same dominant eigenvector but also converges on bipartite
/// topologies. A graph with no edges yields all-zero scores.
/// Throws ConvergenceError (with the residual) after max_iter steps.
CentralityVector eigenvector_centrality(const CoauthorGraph& g, bool use_weights,
                                        double tol = 1e-6, int max_iter = 1000);

/// Rayleigh-quotient estimate of the dominant eigenvalue for a given score
/// vector (used to audit convergence: ||Ax - lambda x|| should be small).
double rayleigh_quotient(const CoauthorGraph& g, bool use_weights,
                         const std::vector<double>& x);

// Shortest-path building blocks, exposed for reuse and for oracle checks.
std::vector<double> sssp_distances(const CoauthorGraph& g, CoauthorGraph::NodeId source,
                                   bool use_weights);

} // namespace coauth
