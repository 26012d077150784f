#include "coauth/projection.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace coauth {

namespace {

using NodeId = CoauthorGraph::NodeId;

std::uint64_t pair_key(NodeId u, NodeId v) {
    return (std::uint64_t(u) << 32) | v;
}

/// Clique-expands every paper and accumulates per-pair weights in paper
/// order (papers are sorted by id, so the float accumulation order is fixed).
template <class PaperWeight>
CoauthorGraph project(const BipartiteGraph& b, WeightScheme scheme, PaperWeight&& weight_of) {
    std::size_t pair_instances = 0;
    for (std::size_t p = 0; p < b.n_papers(); ++p) {
        const std::size_t k = b.paper_authors(p).size();
        pair_instances += k * (k - 1) / 2;
    }
    std::unordered_map<std::uint64_t, double> acc;
    acc.reserve(pair_instances);
    for (std::size_t p = 0; p < b.n_papers(); ++p) {
        const auto& authors = b.paper_authors(p);
        if (authors.size() < 2) continue;
        const double w = weight_of(authors.size());
        for (std::size_t i = 0; i < authors.size(); ++i)
            for (std::size_t j = i + 1; j < authors.size(); ++j)
                acc[pair_key(authors[i], authors[j])] += w;
    }
    std::vector<CoauthorGraph::Edge> edges;
    edges.reserve(acc.size());
    for (const auto& [key, w] : acc)
        edges.push_back({static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu), w});
    return CoauthorGraph::build(b.author_ids(), std::move(edges), scheme);
}

} // namespace

CoauthorGraph project_full(const BipartiteGraph& b) {
    return project(b, WeightScheme::Full, [](std::size_t) { return 1.0; });
}

CoauthorGraph project_newman(const BipartiteGraph& b) {
    return project(b, WeightScheme::Newman,
                   [](std::size_t n_p) { return 1.0 / double(n_p - 1); });
}

CoauthorGraph reweight_jaccard(const CoauthorGraph& g) {
    if (g.scheme() != WeightScheme::Full && g.scheme() != WeightScheme::Unweighted)
        throw std::invalid_argument(
            "reweight_jaccard: expects a full-counting or unweighted projection");
    auto edges = g.edges();
    std::vector<double> weights;
    weights.reserve(edges.size());
    for (const auto& e : edges) {
        auto nu = g.neighbors(e.u);
        auto nv = g.neighbors(e.v);
        // Shared neighbors; endpoints are in each other's neighborhood but
        // never in their own, so they can't land in the intersection.
        std::size_t shared = 0;
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] == nv[j]) {
                ++shared;
                ++i;
                ++j;
            } else if (nu[i] < nv[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        const std::size_t combined = nu.size() + nv.size() - shared;
        weights.push_back(double(shared) / double(combined));
    }
    return g.with_weights(weights, WeightScheme::Jaccard);
}

CoauthorGraph strip_weights(const CoauthorGraph& g) {
    auto edges = g.edges();
    for (auto& e : edges) e.weight = 1.0;
    return CoauthorGraph::build(g.node_ids(), std::move(edges), WeightScheme::Unweighted);
}

} // namespace coauth
