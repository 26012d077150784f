#include "coauth/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coauth/errors.hpp"
#include "coauth/parallel.hpp"
#include "coauth/projection.hpp"
#include "coauth/rng.hpp"

#include <json.hpp>

namespace coauth {

using NodeId = CoauthorGraph::NodeId;

namespace {

/// Mutable adjacency for edge swapping: sorted neighbor vectors plus an edge
/// array addressed by swap candidates.
struct SwapGraph {
    std::vector<std::vector<NodeId>> adj;
    std::vector<std::pair<NodeId, NodeId>> edges; // u < v

    explicit SwapGraph(const CoauthorGraph& g) : adj(g.n_nodes()) {
        edges.reserve(g.n_edges());
        for (NodeId v = 0; v < g.n_nodes(); ++v) {
            auto nbrs = g.neighbors(v);
            adj[v].assign(nbrs.begin(), nbrs.end());
        }
        g.for_each_edge([&](NodeId u, NodeId v, double) { edges.emplace_back(u, v); });
    }

    bool has(NodeId u, NodeId v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
    void add(NodeId u, NodeId v) {
        adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    }
    void remove(NodeId u, NodeId v) {
        adj[u].erase(std::lower_bound(adj[u].begin(), adj[u].end(), v));
        adj[v].erase(std::lower_bound(adj[v].begin(), adj[v].end(), u));
    }

    /// After removing two edges and re-adding two, every component of the
    /// intermediate graph contains one of the four endpoints; the rewired
    /// graph is connected iff the four are mutually reachable.
    bool connects(NodeId a, NodeId b, NodeId c, NodeId d,
                  std::vector<NodeId>& stack, std::vector<bool>& seen) const {
        std::fill(seen.begin(), seen.end(), false);
        stack.clear();
        stack.push_back(a);
        seen[a] = true;
        std::size_t found = 0;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            if (v == b || v == c || v == d) {
                if (++found == 3) return true;
            }
            for (NodeId w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        return false;
    }

    CoauthorGraph to_graph(const CoauthorGraph& like) const {
        std::vector<CoauthorGraph::Edge> es;
        es.reserve(edges.size());
        for (auto [u, v] : edges) es.push_back({u, v, 1.0});
        return CoauthorGraph::build(like.node_ids(), std::move(es), WeightScheme::Unweighted);
    }
};

bool is_connected(const CoauthorGraph& g) {
    if (g.n_nodes() == 0) return true;
    auto dist = sssp_distances(g, 0, false);
    for (double d : dist)
        if (std::isinf(d)) return false;
    return true;
}

/// Circular distance between node positions under the fixed index ordering.
inline std::size_t ring_distance(NodeId a, NodeId b, std::size_t n) {
    std::size_t d = a > b ? a - b : b - a;
    return std::min(d, n - d);
}

RewireResult rewire(const CoauthorGraph& g, int niter, std::uint64_t seed, bool latticize) {
    if (!is_connected(g))
        throw MetricError("reference rewiring requires a connected graph");
    RewireResult result{strip_weights(g)};
    const std::size_t m = g.n_edges();
    const std::size_t n = g.n_nodes();
    if (m < 2) {
        result.degenerate = true;
        return result;
    }

    SwapGraph sg(g);
    std::mt19937_64 rng(seed);
    std::vector<NodeId> stack;
    std::vector<bool> seen(n, false);
    const std::size_t attempts = std::size_t(niter) * m;

    for (std::size_t t = 0; t < attempts; ++t) {
        const std::size_t i1 = uniform_index(rng, m);
        const std::size_t i2 = uniform_index(rng, m);
        if (i1 == i2) continue;
        auto [u, v] = sg.edges[i1];
        auto [x, y] = sg.edges[i2];
        if (rng() & 1u) std::swap(x, y);
        // rewire to u-x, v-y
        if (u == x || u == y || v == x || v == y) continue;
        if (sg.has(u, x) || sg.has(v, y)) continue;
        if (latticize) {
            const std::size_t before = ring_distance(u, v, n) + ring_distance(x, y, n);
            const std::size_t after = ring_distance(u, x, n) + ring_distance(v, y, n);
            if (after >= before) continue; // experiment: strict
        }
        sg.remove(u, v);
        sg.remove(x, y);
        sg.add(u, x);
        sg.add(v, y);
        if (!sg.connects(u, v, x, y, stack, seen)) {
            sg.remove(u, x);
            sg.remove(v, y);
            sg.add(u, v);
            sg.add(x, y);
            continue;
        }
        sg.edges[i1] = std::minmax(u, x);
        sg.edges[i2] = std::minmax(v, y);
        ++result.accepted;
    }
    result.graph = sg.to_graph(g);
    return result;
}

} // namespace

RewireResult random_reference(const CoauthorGraph& g, int niter, std::uint64_t seed) {
    return rewire(g, niter, seed, /*latticize=*/false);
}

RewireResult lattice_reference(const CoauthorGraph& g, int niter, std::uint64_t seed) {
    return rewire(g, niter, seed, /*latticize=*/true);
}

OmegaResult compute_omega(const CoauthorGraph& g, const OmegaParams& params) {
    if (!is_connected(g))
        throw MetricError("omega requires a connected graph; pass the giant component");
    if (params.nrand < 1) throw std::invalid_argument("omega: nrand must be >= 1");

    OmegaResult result;
    result.clustering = average_clustering(g);
    {
        PathSampleParams p = params.path;
        p.seed = derive_seed(params.seed, "omega-path-input");
        result.path_length = average_path_length(g, /*use_weights=*/false, p).value;
    }
    result.random_path_lengths.resize(params.nrand);
    result.lattice_clusterings.resize(params.nrand);
    // Replicates are independent; results land in indexed slots, so the
    // aggregation below is order-stable no matter how many workers run.
    parallel_for(std::size_t(params.nrand) * 2, [&](std::size_t task) {
        const int i = int(task % std::size_t(params.nrand));
        if (task < std::size_t(params.nrand)) {
            auto ref = random_reference(g, params.niter, params.seed + std::uint64_t(i));
            PathSampleParams p = params.path;
            p.seed = derive_seed(params.seed, "omega-path-random-" + std::to_string(i));
            result.random_path_lengths[i] =
                average_path_length(ref.graph, /*use_weights=*/false, p).value;
        } else {
            auto ref = lattice_reference(g, params.niter,
                                         params.seed + std::uint64_t(params.nrand + i));
            result.lattice_clusterings[i] = average_clustering(ref.graph);
        }
    });
    double lr = 0.0, cl = 0.0;
    for (double v : result.random_path_lengths) lr += v;
    for (double v : result.lattice_clusterings) cl += v;
    lr /= double(params.nrand);
    cl /= double(params.nrand);
    if (cl <= 0.0)
        throw MetricError("omega: lattice reference clustering is 0 (degenerate reference)");
    result.omega = lr / result.path_length - result.clustering / cl;
    return result;
}

double omega(const CoauthorGraph& g, int niter, int nrand, std::uint64_t seed) {
    OmegaParams params;
    params.niter = niter;
    params.nrand = nrand;
    params.seed = seed;
    return compute_omega(g, params).omega;
}

// ---------------------------------------------------------------------------
// Power-law fitting
// ---------------------------------------------------------------------------

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta: s must be > 1");
    if (!(q >= 1.0)) throw std::invalid_argument("hurwitz_zeta: q must be >= 1");
    // Sum directly until the argument is large, then Euler-Maclaurin.
    const double pivot = 32.0;
    double sum = 0.0;
    double a = q;
    while (a < pivot) {
        sum += std::pow(a, -s);
        a += 1.0;
    }
    const double as = std::pow(a, -s);
    sum += a * as / (s - 1.0); // integral term a^(1-s)/(s-1)
    sum += 0.5 * as;
    const double a1 = s * as / a;                      // s * a^(-s-1)
    sum += a1 / 12.0;                                  // B2/2! term
    sum -= s * (s + 1.0) * (s + 2.0) * as / (a * a * a) / 720.0; // B4/4! term
    return sum;
}

namespace {

struct Tail {
    std::vector<std::uint32_t> values; // sorted ascending, all >= xmin
    double log_sum = 0.0;              // sum of ln(x)
};

Tail tail_at(const std::vector<std::uint32_t>& sorted, std::uint32_t xmin) {
    Tail t;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), xmin);
    t.values.assign(it, sorted.end());
    for (auto x : t.values) t.log_sum += std::log(double(x));
    return t;
}

double log_likelihood(double alpha, std::uint32_t xmin, const Tail& t) {
    return -double(t.values.size()) * std::log(hurwitz_zeta(alpha, double(xmin))) -
           alpha * t.log_sum;
}

double maximize_alpha(std::uint32_t xmin, const Tail& t) {
    // Golden-section search; the discrete power-law log-likelihood is
    // strictly concave in alpha.
    double lo = 1.0 + 1e-6, hi = 25.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = log_likelihood(x1, xmin, t);
    double f2 = log_likelihood(x2, xmin, t);
    while (hi - lo > 1e-7) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = log_likelihood(x2, xmin, t);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = log_likelihood(x1, xmin, t);
        }
    }
    return 0.5 * (lo + hi);
}

double ks_distance(double alpha, std::uint32_t xmin, const Tail& t) {
    const double z = hurwitz_zeta(alpha, double(xmin));
    const std::size_t n = t.values.size();
    double ks = 0.0;
    double partial = 0.0; // sum of k^-alpha for k in [xmin, x]
    std::uint32_t k = xmin;
    std::size_t i = 0;
    while (i < n) {
        const std::uint32_t x = t.values[i];
        while (k <= x) {
            partial += std::pow(double(k), -alpha);
            ++k;
        }
        std::size_t j = i;
        while (j < n && t.values[j] == x) ++j;
        const double emp = double(j) / double(n);
        const double fit = partial / z; // P(X <= x | X >= xmin)
        ks = std::max(ks, std::abs(emp - fit));
        i = j;
    }
    return ks;
}

} // namespace

double powerlaw_mle_alpha(const std::vector<std::uint32_t>& degrees, std::uint32_t xmin) {
    std::vector<std::uint32_t> sorted(degrees);
    std::sort(sorted.begin(), sorted.end());
    Tail t = tail_at(sorted, xmin);
    if (t.values.size() < 2 || t.values.front() == t.values.back())
        throw std::invalid_argument("powerlaw_mle_alpha: tail needs at least 2 distinct values");
    return maximize_alpha(xmin, t);
}

PowerlawFit powerlaw_alpha(const std::vector<std::uint32_t>& degrees) {
    if (degrees.size() < 10)
        throw std::invalid_argument("powerlaw_alpha: need at least 10 observations");
    std::vector<std::uint32_t> sorted(degrees);
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1)
        throw std::invalid_argument("powerlaw_alpha: observations must be >= 1");
    if (sorted.front() == sorted.back())
        throw MetricError("powerlaw_alpha: all observations identical, nothing to fit");

    // Candidate xmins: unique observed values up to the 90th percentile, so
    // the fitted tail keeps enough mass.
    const std::uint32_t cap = sorted[(sorted.size() * 9) / 10];
    std::vector<std::uint32_t> candidates;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] <= cap && (i == 0 || sorted[i] != sorted[i - 1]))
            candidates.push_back(sorted[i]);

    PowerlawFit best;
    bool found = false;
    for (std::uint32_t xmin : candidates) {
        Tail t = tail_at(sorted, xmin);
        if (t.values.size() < 10 || t.values.front() == t.values.back()) continue;
        const double alpha = maximize_alpha(xmin, t);
        const double ks = ks_distance(alpha, xmin, t);
        if (!found || ks < best.ks) {
            best = {alpha, xmin, ks};
            found = true;
        }
    }
    if (!found) throw MetricError("powerlaw_alpha: no viable tail to fit");
    return best;
}

TopologyReport compute_topology_report(const CoauthorGraph& giant, const CoauthorGraph& full,
                                       const OmegaParams& params) {
    TopologyReport report;
    report.omega = compute_omega(giant, params);
    report.omega_niter = params.niter;
    report.omega_nrand = params.nrand;
    report.omega_seed = params.seed;
    std::vector<std::uint32_t> degrees;
    degrees.reserve(full.n_nodes());
    for (NodeId v = 0; v < full.n_nodes(); ++v)
        if (full.degree(v) > 0) degrees.push_back(static_cast<std::uint32_t>(full.degree(v)));
    report.powerlaw = powerlaw_alpha(degrees);
    return report;
}

std::string to_json_string(const TopologyReport& r) {
    nlohmann::json j;
    j["omega"] = r.omega.omega;
    j["omega_clustering"] = r.omega.clustering;
    j["omega_path_length"] = r.omega.path_length;
    j["omega_random_path_lengths"] = r.omega.random_path_lengths;
    j["omega_lattice_clusterings"] = r.omega.lattice_clusterings;
    j["omega_niter"] = r.omega_niter;
    j["omega_nrand"] = r.omega_nrand;
    j["omega_seed"] = r.omega_seed;
    j["alpha"] = r.powerlaw.alpha;
    j["xmin"] = r.powerlaw.xmin;
    j["ks_distance"] = r.powerlaw.ks;
    return j.dump(2);
}

} // namespace coauth
