#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coauth {

enum class WeightScheme { Unweighted, Full, Newman, Jaccard };

std::string_view scheme_name(WeightScheme scheme);
WeightScheme scheme_from_name(std::string_view name);

/// Undirected weighted author-author graph. Nodes are author ids held in
/// lexicographic order, so node index order and id order coincide; adjacency
/// is CSR with neighbor lists sorted by index. No self-loops or parallel
/// edges. Immutable once built.
class CoauthorGraph {
public:
    using NodeId = std::uint32_t;

    struct Edge {
        NodeId u, v; // u < v
        double weight;
    };

    CoauthorGraph() = default;

    /// node_ids must be sorted and unique; edges must reference valid indices
    /// with u != v and appear at most once per unordered pair.
    static CoauthorGraph build(std::vector<std::string> node_ids, std::vector<Edge> edges,
                               WeightScheme scheme);

    std::size_t n_nodes() const { return ids_.size(); }
    std::size_t n_edges() const { return m_; }
    WeightScheme scheme() const { return scheme_; }

    const std::vector<std::string>& node_ids() const { return ids_; }
    const std::string& node_id(NodeId v) const { return ids_[v]; }

    /// Index of an author id, or npos when absent.
    static constexpr NodeId npos = static_cast<NodeId>(-1);
    NodeId index_of(std::string_view id) const;

    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    double strength(NodeId v) const;

    std::span<const NodeId> neighbors(NodeId v) const {
        return {nbr_.data() + offsets_[v], nbr_.data() + offsets_[v + 1]};
    }
    std::span<const double> weights(NodeId v) const {
        return {w_.data() + offsets_[v], w_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    /// Visits every edge once with u < v, ascending (u, v).
    template <class Fn>
    void for_each_edge(Fn&& fn) const {
        for (NodeId u = 0; u < ids_.size(); ++u) {
            auto nbrs = neighbors(u);
            auto ws = weights(u);
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                if (nbrs[i] > u) fn(u, nbrs[i], ws[i]);
        }
    }

    /// Edge list with u < v, ascending.
    std::vector<Edge> edges() const;

    /// Same topology and ids, new per-edge weights keyed as edges() order.
    CoauthorGraph with_weights(const std::vector<double>& edge_weights, WeightScheme scheme) const;

    /// Induced subgraph on the given node indices (need not be sorted;
    /// duplicates ignored). Keeps edge weights.
    CoauthorGraph induced_subgraph(const std::vector<NodeId>& nodes) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::size_t> offsets_; // size n+1
    std::vector<NodeId> nbr_;
    std::vector<double> w_;
    WeightScheme scheme_ = WeightScheme::Unweighted;
    std::size_t m_ = 0;
};

/// Writes `author_i,author_j,weight` rows (i < j lexicographically) with
/// round-trip-exact weight formatting.
void write_edge_csv(const CoauthorGraph& g, std::ostream& out);

/// JSON sidecar carrying the scheme, node count, and node ids (isolated
/// nodes are not recoverable from the edge list alone).
void write_graph_sidecar(const CoauthorGraph& g, std::ostream& out);

/// Rebuilds a graph from write_edge_csv + write_graph_sidecar output.
CoauthorGraph load_graph(std::istream& edge_csv, std::istream& sidecar_json);

} // namespace coauth
