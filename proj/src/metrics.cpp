#include "coauth/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "coauth/errors.hpp"
#include "coauth/parallel.hpp"
#include "coauth/rng.hpp"

#include <json.hpp>

namespace coauth {

using NodeId = CoauthorGraph::NodeId;

std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::Degree: return "degree";
        case Measure::Betweenness: return "betweenness";
        case Measure::Closeness: return "closeness";
        case Measure::Eigenvector: return "eigenvector";
    }
    return "unknown";
}

void finalize_centrality(CentralityVector& cv) {
    double sum = 0.0;
    for (double s : cv.scores) sum += s;
    cv.average = cv.scores.empty() ? 0.0 : sum / double(cv.scores.size());
    cv.ranking.resize(cv.scores.size());
    for (NodeId i = 0; i < cv.scores.size(); ++i) cv.ranking[i] = i;
    std::sort(cv.ranking.begin(), cv.ranking.end(), [&](NodeId a, NodeId b) {
        if (cv.scores[a] != cv.scores[b]) return cv.scores[a] > cv.scores[b];
        return a < b;
    });
}

void write_centrality_csv(const CoauthorGraph& g, const CentralityVector& cv, std::ostream& out) {
    out << "author_id,score\n";
    char buf[40];
    for (NodeId v = 0; v < g.n_nodes(); ++v) {
        std::snprintf(buf, sizeof buf, "%.17g", cv.scores[v]);
        out << g.node_id(v) << ',' << buf << '\n';
    }
}

double density(const CoauthorGraph& g) {
    const double n = double(g.n_nodes());
    if (g.n_nodes() < 2) throw MetricError("density: undefined for fewer than 2 nodes");
    return 2.0 * double(g.n_edges()) / (n * (n - 1.0));
}

double average_clustering(const CoauthorGraph& g) {
    const std::size_t n = g.n_nodes();
    if (n == 0) return 0.0;
    std::vector<std::size_t> tri(n, 0);
    g.for_each_edge([&](NodeId u, NodeId v, double) {
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] == nv[j]) {
                ++tri[u];
                ++tri[v];
                ++tri[nu[i]];
                ++i;
                ++j;
            } else if (nu[i] < nv[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    });
    double sum = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const std::size_t deg = g.degree(v);
        if (deg < 2) continue;
        // Every triangle through v was found once from each of its 3 edges.
        const double triangles = double(tri[v]) / 3.0;
        sum += triangles / (double(deg) * double(deg - 1) / 2.0);
    }
    return sum / double(n);
}

std::vector<std::vector<NodeId>> connected_components(const CoauthorGraph& g) {
    const std::size_t n = g.n_nodes();
    std::vector<std::vector<NodeId>> components;
    std::vector<bool> seen(n, false);
    std::vector<NodeId> queue;
    for (NodeId start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<NodeId> comp;
        queue.clear();
        queue.push_back(start);
        seen[start] = true;
        while (!queue.empty()) {
            NodeId v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    // Largest first; ties go to the component holding the smallest node
    // index, which is the lexicographically smallest author id.
    std::sort(components.begin(), components.end(),
              [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    return components;
}

CoauthorGraph giant_component(const CoauthorGraph& g) {
    if (g.n_nodes() == 0) throw MetricError("giant_component: empty graph");
    auto components = connected_components(g);
    return g.induced_subgraph(components.front());
}

std::vector<double> sssp_distances(const CoauthorGraph& g, NodeId source, bool use_weights) {
    const std::size_t n = g.n_nodes();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    if (!use_weights) {
        std::vector<NodeId> frontier{source};
        dist[source] = 0.0;
        std::vector<NodeId> next;
        double level = 0.0;
        while (!frontier.empty()) {
            next.clear();
            ++level;
            for (NodeId v : frontier)
                for (NodeId w : g.neighbors(v))
                    if (std::isinf(dist[w])) {
                        dist[w] = level;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        return dist;
    }
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[source] = 0.0;
    pq.push({0.0, source});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        auto nbrs = g.neighbors(v);
        auto ws = g.weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            double nd = d + ws[i];
            if (nd < dist[nbrs[i]]) {
                dist[nbrs[i]] = nd;
                pq.push({nd, nbrs[i]});
            }
        }
    }
    return dist;
}

PathLengthStats average_path_length(const CoauthorGraph& g, bool use_weights,
                                    const PathSampleParams& params) {
    const std::size_t n = g.n_nodes();
    PathLengthStats stats;
    stats.seed = params.seed;
    if (n < 2) {
        stats.exact = true;
        stats.n_sources = n;
        return stats;
    }
    {
        auto reach = sssp_distances(g, 0, false);
        for (double d : reach)
            if (std::isinf(d))
                throw MetricError(
                    "average_path_length: graph is disconnected; compute on the giant component");
    }
    std::vector<NodeId> sources;
    if (n <= params.exact_threshold) {
        stats.exact = true;
        sources.resize(n);
        for (NodeId v = 0; v < n; ++v) sources[v] = v;
    } else {
        stats.exact = false;
        std::mt19937_64 rng(params.seed);
        std::size_t k = std::min(params.sample_size, n);
        sources = sample_without_replacement(n, k, rng);
    }
    stats.n_sources = sources.size();

    std::vector<double> per_source(sources.size(), 0.0);
    parallel_for(sources.size(), [&](std::size_t i) {
        auto dist = sssp_distances(g, sources[i], use_weights);
        double sum = 0.0;
        for (NodeId v = 0; v < n; ++v)
            if (v != sources[i]) sum += dist[v];
        per_source[i] = sum;
    });
    double total = 0.0;
    for (double s : per_source) total += s; // fixed order: bit-stable under threading
    stats.value = total / (double(sources.size()) * double(n - 1));
    return stats;
}

CohesionReport cohesion_report(const CoauthorGraph& g, const PathSampleParams& params) {
    CohesionReport r;
    r.n_nodes = g.n_nodes();
    r.n_edges = g.n_edges();
    r.density = density(g);
    r.avg_clustering = average_clustering(g);
    auto components = connected_components(g);
    r.n_components = components.size();
    auto giant = g.induced_subgraph(components.front());
    r.giant_component_nodes = giant.n_nodes();
    r.giant_component_edges = giant.n_edges();
    r.path_stats = average_path_length(giant, /*use_weights=*/false, params);
    r.avg_path_length = r.path_stats.value;
    return r;
}

std::string to_json_string(const CohesionReport& r) {
    nlohmann::json j;
    j["n_nodes"] = r.n_nodes;
    j["n_edges"] = r.n_edges;
    j["density"] = r.density;
    j["avg_clustering"] = r.avg_clustering;
    j["avg_path_length"] = r.avg_path_length;
    j["n_components"] = r.n_components;
    j["giant_component_nodes"] = r.giant_component_nodes;
    j["giant_component_edges"] = r.giant_component_edges;
    j["path_length_exact"] = r.path_stats.exact;
    j["path_length_sources"] = r.path_stats.n_sources;
    j["path_length_seed"] = r.path_stats.seed;
    return j.dump(2);
}

} // namespace coauth
