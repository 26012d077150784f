#pragma once

// Shared test utilities: small-graph builders, random generators, and the
// brute-force oracles the implementation is checked against. Everything here
// stays deliberately naive and independent of the library's algorithms.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coauth/corpus.hpp"
#include "coauth/graph.hpp"
#include "coauth/rng.hpp"

namespace testutil {

using coauth::CoauthorGraph;
using coauth::Corpus;
using coauth::PaperRecord;
using coauth::WeightScheme;
using NodeId = CoauthorGraph::NodeId;

inline std::string node_name(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "n%04zu", i);
    return buf;
}

/// Graph over nodes n0000..n(n-1) with the given (u, v, w) edges.
inline CoauthorGraph make_graph(std::size_t n,
                                const std::vector<std::tuple<NodeId, NodeId, double>>& edges,
                                WeightScheme scheme = WeightScheme::Unweighted) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(node_name(i));
    std::vector<CoauthorGraph::Edge> es;
    for (auto [u, v, w] : edges) es.push_back({u, v, w});
    return CoauthorGraph::build(std::move(ids), std::move(es), scheme);
}

inline CoauthorGraph make_named_graph(std::vector<std::string> ids,
                                      const std::vector<std::tuple<NodeId, NodeId, double>>& edges,
                                      WeightScheme scheme = WeightScheme::Unweighted) {
    std::sort(ids.begin(), ids.end());
    std::vector<CoauthorGraph::Edge> es;
    for (auto [u, v, w] : edges) es.push_back({u, v, w});
    return CoauthorGraph::build(std::move(ids), std::move(es), scheme);
}

inline Corpus corpus_from(const std::vector<std::vector<std::string>>& papers) {
    std::vector<PaperRecord> records;
    for (std::size_t i = 0; i < papers.size(); ++i) {
        PaperRecord rec;
        rec.paper_id = "p" + std::to_string(100 + i);
        rec.author_ids = papers[i];
        records.push_back(std::move(rec));
    }
    return Corpus::from_records(std::move(records));
}

/// Random corpus with up to max_papers papers over up to max_authors authors.
inline Corpus random_corpus(std::mt19937_64& rng, std::size_t max_papers = 30,
                            std::size_t max_authors = 15) {
    const std::size_t n_papers = 1 + coauth::uniform_index(rng, max_papers);
    const std::size_t n_authors = 2 + coauth::uniform_index(rng, max_authors - 1);
    std::vector<PaperRecord> records;
    for (std::size_t p = 0; p < n_papers; ++p) {
        PaperRecord rec;
        rec.paper_id = "p" + std::to_string(1000 + p);
        const std::size_t k = 1 + coauth::uniform_index(rng, std::min<std::size_t>(n_authors, 8));
        std::set<std::string> chosen;
        while (chosen.size() < k)
            chosen.insert(node_name(coauth::uniform_index(rng, n_authors)));
        rec.author_ids.assign(chosen.begin(), chosen.end());
        records.push_back(std::move(rec));
    }
    return Corpus::from_records(std::move(records));
}

// --- corpus oracles --------------------------------------------------------

inline std::size_t shared_paper_count(const Corpus& c, const std::string& a,
                                      const std::string& b) {
    std::size_t count = 0;
    for (const auto& rec : c.papers()) {
        bool has_a = std::find(rec.author_ids.begin(), rec.author_ids.end(), a) !=
                     rec.author_ids.end();
        bool has_b = std::find(rec.author_ids.begin(), rec.author_ids.end(), b) !=
                     rec.author_ids.end();
        if (has_a && has_b) ++count;
    }
    return count;
}

inline std::size_t multi_authored_paper_count(const Corpus& c, const std::string& a) {
    std::size_t count = 0;
    for (const auto& rec : c.papers())
        if (rec.author_ids.size() >= 2 &&
            std::find(rec.author_ids.begin(), rec.author_ids.end(), a) != rec.author_ids.end())
            ++count;
    return count;
}

/// Jaccard weight recomputed from explicit neighbor sets of the projection.
inline double jaccard_oracle(const CoauthorGraph& g, NodeId u, NodeId v) {
    std::set<NodeId> nu(g.neighbors(u).begin(), g.neighbors(u).end());
    std::set<NodeId> nv(g.neighbors(v).begin(), g.neighbors(v).end());
    std::set<NodeId> shared, combined;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::inserter(shared, shared.end()));
    std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(),
                   std::inserter(combined, combined.end()));
    return combined.empty() ? 0.0 : double(shared.size()) / double(combined.size());
}

// --- graph oracles ---------------------------------------------------------

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<double>> floyd_warshall(const CoauthorGraph& g, bool use_weights) {
    const std::size_t n = g.n_nodes();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0.0;
    g.for_each_edge([&](NodeId u, NodeId v, double w) {
        const double len = use_weights ? w : 1.0;
        d[u][v] = std::min(d[u][v], len);
        d[v][u] = std::min(d[v][u], len);
    });
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// Shortest-path counts derived from a distance matrix: sigma[s][t] by
/// dynamic programming over nodes in distance order from s.
inline std::vector<std::vector<double>> path_counts(const CoauthorGraph& g,
                                                    const std::vector<std::vector<double>>& d,
                                                    bool use_weights) {
    const std::size_t n = g.n_nodes();
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<NodeId> order(n);
        for (std::size_t v = 0; v < n; ++v) order[v] = NodeId(v);
        std::sort(order.begin(), order.end(),
                  [&](NodeId a, NodeId b) { return d[s][a] < d[s][b]; });
        sigma[s][s] = 1.0;
        for (NodeId t : order) {
            if (t == s || std::isinf(d[s][t])) continue;
            auto nbrs = g.neighbors(t);
            auto ws = g.weights(t);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const double len = use_weights ? ws[i] : 1.0;
                if (d[s][nbrs[i]] + len == d[s][t]) sigma[s][t] += sigma[s][nbrs[i]];
            }
        }
    }
    return sigma;
}

/// Raw betweenness over unordered pairs: for every pair (s, t) and interior
/// node v, add sigma(s,v)*sigma(v,t)/sigma(s,t) when v lies on a shortest
/// path.
inline std::vector<double> betweenness_oracle(const CoauthorGraph& g, bool use_weights) {
    const std::size_t n = g.n_nodes();
    auto d = floyd_warshall(g, use_weights);
    auto sigma = path_counts(g, d, use_weights);
    std::vector<double> bc(n, 0.0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            if (std::isinf(d[s][t]) || sigma[s][t] == 0.0) continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                if (d[s][v] + d[v][t] == d[s][t])
                    bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    return bc;
}

// --- random graph builders -------------------------------------------------

/// Connected random graph: random spanning tree plus extra random edges.
/// Random weights are dyadic rationals (multiples of 1/64), so path-length
/// sums are exact in double arithmetic no matter the association order --
/// the oracles below can then compare distances with plain equality.
inline CoauthorGraph connected_random_graph(std::size_t n, std::size_t extra_edges,
                                            std::mt19937_64& rng, bool random_weights = false) {
    std::set<std::pair<NodeId, NodeId>> edge_set;
    for (std::size_t v = 1; v < n; ++v) {
        NodeId u = NodeId(coauth::uniform_index(rng, v));
        edge_set.insert({u, NodeId(v)});
    }
    std::size_t attempts = 0;
    while (edge_set.size() < n - 1 + extra_edges && attempts < 50 * (extra_edges + 1)) {
        ++attempts;
        NodeId u = NodeId(coauth::uniform_index(rng, n));
        NodeId v = NodeId(coauth::uniform_index(rng, n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        edge_set.insert({u, v});
    }
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (auto [u, v] : edge_set) {
        double w = random_weights ? double(7 + coauth::uniform_index(rng, 122)) / 64.0 : 1.0;
        edges.emplace_back(u, v, w);
    }
    return make_graph(n, edges,
                      random_weights ? WeightScheme::Full : WeightScheme::Unweighted);
}

/// Ring lattice: each node joined to its k/2 nearest neighbors per side.
inline CoauthorGraph ring_lattice(std::size_t n, std::size_t k) {
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t d = 1; d <= k / 2; ++d)
            edges.emplace_back(NodeId(i), NodeId((i + d) % n), 1.0);
    for (auto& e : edges)
        if (std::get<0>(e) > std::get<1>(e)) std::swap(std::get<0>(e), std::get<1>(e));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return make_graph(n, edges);
}

/// Watts-Strogatz: ring lattice with each edge's far endpoint rewired with
/// probability p (self-loops and duplicates rejected).
inline CoauthorGraph watts_strogatz(std::size_t n, std::size_t k, double p,
                                    std::mt19937_64& rng) {
    std::set<std::pair<NodeId, NodeId>> edge_set;
    auto norm_pair = [](NodeId a, NodeId b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t d = 1; d <= k / 2; ++d)
            edge_set.insert(norm_pair(NodeId(i), NodeId((i + d) % n)));
    std::vector<std::pair<NodeId, NodeId>> edges(edge_set.begin(), edge_set.end());
    for (auto& e : edges) {
        if (double(rng() >> 11) * 0x1p-53 >= p) continue;
        for (int attempt = 0; attempt < 50; ++attempt) {
            NodeId w = NodeId(coauth::uniform_index(rng, n));
            if (w == e.first || w == e.second) continue;
            auto candidate = norm_pair(e.first, w);
            if (edge_set.count(candidate)) continue;
            edge_set.erase(e);
            edge_set.insert(candidate);
            e = candidate;
            break;
        }
    }
    std::vector<std::tuple<NodeId, NodeId, double>> out;
    for (auto [u, v] : edge_set) out.emplace_back(u, v, 1.0);
    return make_graph(n, out);
}

/// Exact discrete power-law sampler via inverse CDF on a truncated support
/// (the truncation mass at alpha >= 2 is far below one draw in 10^8).
class DiscretePowerlawSampler {
public:
    DiscretePowerlawSampler(double alpha, std::uint32_t xmin, std::uint32_t cap = 1000000) {
        cdf_.reserve(cap - xmin + 1);
        long double total = 0.0L;
        for (std::uint32_t k = xmin; k <= cap; ++k)
            total += std::pow((long double)k, (long double)-alpha);
        long double acc = 0.0L;
        for (std::uint32_t k = xmin; k <= cap; ++k) {
            acc += std::pow((long double)k, (long double)-alpha) / total;
            cdf_.push_back(double(acc));
        }
        xmin_ = xmin;
    }

    std::uint32_t operator()(std::mt19937_64& rng) const {
        const double u = double(rng() >> 11) * 0x1p-53;
        auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
        return xmin_ + std::uint32_t(it - cdf_.begin());
    }

private:
    std::vector<double> cdf_;
    std::uint32_t xmin_;
};

} // namespace testutil
