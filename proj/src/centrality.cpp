#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "coauth/errors.hpp"
#include "coauth/metrics.hpp"
#include "coauth/parallel.hpp"
#include "coauth/rng.hpp"

namespace coauth {

using NodeId = CoauthorGraph::NodeId;

CentralityVector degree_centrality(const CoauthorGraph& g, bool normalized) {
    const std::size_t n = g.n_nodes();
    if (normalized && n < 2)
        throw MetricError("degree_centrality: normalization needs at least 2 nodes");
    CentralityVector cv;
    cv.measure = Measure::Degree;
    cv.scheme = g.scheme();
    cv.scores.resize(n);
    const bool weighted = g.scheme() != WeightScheme::Unweighted;
    for (NodeId v = 0; v < n; ++v)
        cv.scores[v] = weighted ? g.strength(v) : double(g.degree(v));
    if (normalized)
        for (auto& s : cv.scores) s /= double(n - 1);
    finalize_centrality(cv);
    return cv;
}

namespace {

/// Per-source scratch for Brandes' algorithm, reused across pivots.
struct BrandesBuffers {
    std::vector<double> dist;
    std::vector<double> sigma;
    std::vector<std::vector<NodeId>> preds;
    std::vector<NodeId> order; // finalization order
    std::vector<double> delta;

    explicit BrandesBuffers(std::size_t n)
        : dist(n), sigma(n), preds(n), delta(n) {
        order.reserve(n);
    }
};

/// Single-source shortest-path DAG + dependency accumulation into `into`.
void brandes_from(const CoauthorGraph& g, NodeId s, bool use_weights, BrandesBuffers& b,
                  std::vector<double>& into) {
    const std::size_t n = g.n_nodes();
    const double inf = std::numeric_limits<double>::infinity();
    std::fill(b.dist.begin(), b.dist.end(), inf);
    std::fill(b.sigma.begin(), b.sigma.end(), 0.0);
    for (auto& p : b.preds) p.clear();
    b.order.clear();

    b.dist[s] = 0.0;
    b.sigma[s] = 1.0;
    if (!use_weights) {
        std::vector<NodeId> frontier{s};
        std::vector<NodeId> next;
        double level = 0.0;
        while (!frontier.empty()) {
            for (NodeId v : frontier) b.order.push_back(v);
            next.clear();
            ++level;
            for (NodeId v : frontier) {
                for (NodeId w : g.neighbors(v)) {
                    if (b.dist[w] == inf) {
                        b.dist[w] = level;
                        next.push_back(w);
                    }
                    if (b.dist[w] == level) {
                        b.sigma[w] += b.sigma[v];
                        b.preds[w].push_back(v);
                    }
                }
            }
            frontier.swap(next);
        }
    } else {
        using Item = std::pair<double, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        std::vector<bool> done(n, false);
        pq.push({0.0, s});
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (done[v] || d > b.dist[v]) continue;
            done[v] = true;
            b.order.push_back(v);
            auto nbrs = g.neighbors(v);
            auto ws = g.weights(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                NodeId w = nbrs[i];
                const double nd = d + ws[i];
                if (nd < b.dist[w]) {
                    b.dist[w] = nd;
                    b.sigma[w] = b.sigma[v];
                    b.preds[w].clear();
                    b.preds[w].push_back(v);
                    pq.push({nd, w});
                } else if (!done[w] && nd == b.dist[w]) {
                    b.sigma[w] += b.sigma[v];
                    b.preds[w].push_back(v);
                }
            }
        }
    }
    std::fill(b.delta.begin(), b.delta.end(), 0.0);
    for (auto it = b.order.rbegin(); it != b.order.rend(); ++it) {
        NodeId w = *it;
        for (NodeId p : b.preds[w])
            b.delta[p] += b.sigma[p] / b.sigma[w] * (1.0 + b.delta[w]);
        if (w != s) into[w] += b.delta[w];
    }
}

} // namespace

CentralityVector betweenness_centrality(const CoauthorGraph& g, const BetweennessParams& params) {
    const std::size_t n = g.n_nodes();
    if (n < 3) throw MetricError("betweenness_centrality: undefined for fewer than 3 nodes");
    if (params.sample_size < 1)
        throw std::invalid_argument("betweenness_centrality: sample_size must be >= 1");

    std::vector<NodeId> pivots;
    if (params.sample_size >= n) {
        pivots.resize(n);
        for (NodeId v = 0; v < n; ++v) pivots[v] = v;
    } else {
        std::mt19937_64 rng(params.seed);
        pivots = sample_without_replacement(n, params.sample_size, rng);
    }

    std::vector<double> acc(n, 0.0);
    // Fixed chunking + in-order reduction keeps the sum order independent of
    // the worker count.
    chunked_reduce(
        pivots.size(), 16,
        [&](std::size_t lo, std::size_t hi) {
            std::vector<double> partial(n, 0.0);
            BrandesBuffers buffers(n);
            for (std::size_t i = lo; i < hi; ++i)
                brandes_from(g, pivots[i], params.use_weights, buffers, partial);
            return partial;
        },
        [&](const std::vector<double>& partial) {
            for (std::size_t v = 0; v < n; ++v) acc[v] += partial[v];
        });

    // acc sums ordered-pair dependencies over the pivots; rescale to the full
    // source set and convert to unordered-pair counting.
    const double rescale = double(n) / double(pivots.size()) * 0.5;
    double norm = 1.0;
    if (params.normalized) {
        norm = 1.0 / (double(n - 1) * double(n - 2));
        if (params.undirected_constant) norm *= 2.0;
    }
    CentralityVector cv;
    cv.measure = Measure::Betweenness;
    cv.scheme = g.scheme();
    cv.scores.resize(n);
    for (std::size_t v = 0; v < n; ++v) cv.scores[v] = acc[v] * rescale * norm;
    finalize_centrality(cv);
    return cv;
}

CentralityVector closeness_centrality(const CoauthorGraph& g, bool use_weights) {
    const std::size_t n = g.n_nodes();
    if (n < 2) throw MetricError("closeness_centrality: undefined for fewer than 2 nodes");

    auto components = connected_components(g);
    std::vector<std::size_t> comp_size(n, 0);
    for (const auto& comp : components)
        for (NodeId v : comp) comp_size[v] = comp.size();

    CentralityVector cv;
    cv.measure = Measure::Closeness;
    cv.scheme = g.scheme();
    cv.scores.assign(n, 0.0);
    parallel_for(n, [&](std::size_t v) {
        const std::size_t k = comp_size[v];
        if (k < 2) return; // isolated node scores 0
        auto dist = sssp_distances(g, static_cast<NodeId>(v), use_weights);
        double sum = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && !std::isinf(dist[u])) sum += dist[u];
        if (sum <= 0.0) return; // all-zero distances: degenerate, score 0
        const double within = double(k - 1) / sum;
        cv.scores[v] = within * (double(k - 1) / double(n - 1));
    });
    finalize_centrality(cv);
    return cv;
}

CentralityVector eigenvector_centrality(const CoauthorGraph& g, bool use_weights, double tol,
                                        int max_iter) {
    const std::size_t n = g.n_nodes();
    if (n == 0) throw MetricError("eigenvector_centrality: empty graph");
    CentralityVector cv;
    cv.measure = Measure::Eigenvector;
    cv.scheme = g.scheme();
    if (g.n_edges() == 0) {
        cv.scores.assign(n, 0.0);
        finalize_centrality(cv);
        return cv;
    }

    std::vector<double> x(n, 1.0 / std::sqrt(double(n)));
    std::vector<double> y(n);
    double err = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iter; ++iter) {
        // One step of (A + I) x: same dominant eigenvector as A, but immune
        // to the sign-flipping that plain power iteration hits on bipartite
        // topologies.
        parallel_for(n, [&](std::size_t v) {
            double s = x[v];
            auto nbrs = g.neighbors(static_cast<NodeId>(v));
            auto ws = g.weights(static_cast<NodeId>(v));
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                s += (use_weights ? ws[i] : 1.0) * x[nbrs[i]];
            y[v] = s;
        });
        double norm = 0.0;
        for (double s : y) norm += s * s;
        norm = std::sqrt(norm);
        err = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            y[v] /= norm;
            err += std::abs(y[v] - x[v]);
        }
        x.swap(y);
        if (err < tol * double(n)) {
            cv.scores = std::move(x);
            finalize_centrality(cv);
            return cv;
        }
    }
    throw ConvergenceError("eigenvector_centrality: no convergence after " +
                               std::to_string(max_iter) + " iterations (L1 residual " +
                               std::to_string(err) + ")",
                           err);
}

double rayleigh_quotient(const CoauthorGraph& g, bool use_weights, const std::vector<double>& x) {
    double num = 0.0, den = 0.0;
    for (NodeId v = 0; v < g.n_nodes(); ++v) {
        double av = 0.0;
        auto nbrs = g.neighbors(v);
        auto ws = g.weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            av += (use_weights ? ws[i] : 1.0) * x[nbrs[i]];
        num += x[v] * av;
        den += x[v] * x[v];
    }
    return den > 0.0 ? num / den : 0.0;
}

} // namespace coauth
