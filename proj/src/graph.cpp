#include "coauth/graph.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "coauth/errors.hpp"

#include <json.hpp>

namespace coauth {

std::string_view scheme_name(WeightScheme scheme) {
    switch (scheme) {
        case WeightScheme::Unweighted: return "unweighted";
        case WeightScheme::Full: return "full";
        case WeightScheme::Newman: return "newman";
        case WeightScheme::Jaccard: return "jaccard";
    }
    return "unknown";
}

WeightScheme scheme_from_name(std::string_view name) {
    if (name == "unweighted") return WeightScheme::Unweighted;
    if (name == "full") return WeightScheme::Full;
    if (name == "newman") return WeightScheme::Newman;
    if (name == "jaccard") return WeightScheme::Jaccard;
    throw std::invalid_argument("unknown weight scheme: " + std::string(name));
}

CoauthorGraph CoauthorGraph::build(std::vector<std::string> node_ids, std::vector<Edge> edges,
                                   WeightScheme scheme) {
    CoauthorGraph g;
    g.ids_ = std::move(node_ids);
    g.scheme_ = scheme;
    g.m_ = edges.size();
    const std::size_t n = g.ids_.size();
    g.index_.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
        if (i > 0 && !(g.ids_[i - 1] < g.ids_[i]))
            throw std::invalid_argument("CoauthorGraph: node ids must be sorted and unique");
        g.index_[g.ids_[i]] = i;
    }

    std::vector<std::size_t> deg(n, 0);
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("CoauthorGraph: self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.v >= n) throw std::invalid_argument("CoauthorGraph: node index out of range");
        if (e.weight < 0.0) throw std::invalid_argument("CoauthorGraph: negative weight");
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.nbr_.resize(2 * edges.size());
    g.w_.resize(2 * edges.size());

    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Insert in (u, v) sorted order so each adjacency list ends up sorted.
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw std::invalid_argument("CoauthorGraph: duplicate edge");
    for (const auto& e : edges) {
        g.nbr_[cursor[e.u]] = e.v;
        g.w_[cursor[e.u]++] = e.weight;
    }
    // Reverse direction: iterate by v; for fixed v the u's arrive ascending.
    for (const auto& e : edges) {
        g.nbr_[cursor[e.v]] = e.u;
        g.w_[cursor[e.v]++] = e.weight;
    }
    // Each list is now two sorted runs (v > u run placed first only for
    // low-index nodes); merge by a final per-node sort keyed on neighbor.
    for (std::size_t v = 0; v < n; ++v) {
        auto lo = g.offsets_[v], hi = g.offsets_[v + 1];
        std::vector<std::pair<NodeId, double>> row;
        row.reserve(hi - lo);
        for (auto i = lo; i < hi; ++i) row.emplace_back(g.nbr_[i], g.w_[i]);
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < row.size(); ++i) {
            g.nbr_[lo + i] = row[i].first;
            g.w_[lo + i] = row[i].second;
        }
    }
    return g;
}

CoauthorGraph::NodeId CoauthorGraph::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? npos : it->second;
}

double CoauthorGraph::strength(NodeId v) const {
    double s = 0.0;
    for (double w : weights(v)) s += w;
    return s;
}

bool CoauthorGraph::has_edge(NodeId u, NodeId v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<CoauthorGraph::Edge> CoauthorGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for_each_edge([&](NodeId u, NodeId v, double w) { out.push_back({u, v, w}); });
    return out;
}

CoauthorGraph CoauthorGraph::with_weights(const std::vector<double>& edge_weights,
                                          WeightScheme scheme) const {
    auto es = edges();
    if (edge_weights.size() != es.size())
        throw std::invalid_argument("with_weights: weight count mismatch");
    for (std::size_t i = 0; i < es.size(); ++i) es[i].weight = edge_weights[i];
    return build(ids_, std::move(es), scheme);
}

CoauthorGraph CoauthorGraph::induced_subgraph(const std::vector<NodeId>& nodes) const {
    std::vector<NodeId> members(nodes);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<NodeId> remap(n_nodes(), npos);
    std::vector<std::string> sub_ids;
    sub_ids.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        remap[members[i]] = static_cast<NodeId>(i);
        sub_ids.push_back(ids_[members[i]]);
    }
    std::vector<Edge> sub_edges;
    for (NodeId u : members) {
        auto nbrs = neighbors(u);
        auto ws = weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            NodeId v = nbrs[i];
            if (v > u && remap[v] != npos) sub_edges.push_back({remap[u], remap[v], ws[i]});
        }
    }
    return build(std::move(sub_ids), std::move(sub_edges), scheme_);
}

namespace {

std::string format_weight(double w) {
    char buf[40];
    // %.17g survives a text round trip bit-exactly.
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

} // namespace

void write_edge_csv(const CoauthorGraph& g, std::ostream& out) {
    out << "author_i,author_j,weight\n";
    g.for_each_edge([&](CoauthorGraph::NodeId u, CoauthorGraph::NodeId v, double w) {
        out << g.node_id(u) << ',' << g.node_id(v) << ',' << format_weight(w) << '\n';
    });
}

void write_graph_sidecar(const CoauthorGraph& g, std::ostream& out) {
    nlohmann::json j;
    j["scheme"] = std::string(scheme_name(g.scheme()));
    j["n_nodes"] = g.n_nodes();
    j["n_edges"] = g.n_edges();
    j["nodes"] = g.node_ids();
    out << j.dump(2) << '\n';
}

CoauthorGraph load_graph(std::istream& edge_csv, std::istream& sidecar_json) {
    nlohmann::json meta;
    try {
        sidecar_json >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("invalid sidecar JSON: ") + e.what());
    }
    auto scheme = scheme_from_name(meta.at("scheme").get<std::string>());
    auto ids = meta.at("nodes").get<std::vector<std::string>>();
    std::unordered_map<std::string, CoauthorGraph::NodeId> pos;
    pos.reserve(ids.size());
    for (CoauthorGraph::NodeId i = 0; i < ids.size(); ++i) pos[ids[i]] = i;

    std::vector<CoauthorGraph::Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(edge_csv, line)) throw ParseError(1, "missing edge CSV header");
    ++lineno;
    while (std::getline(edge_csv, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw ParseError(lineno, "expected 3 fields");
        auto a = line.substr(0, c1);
        auto b = line.substr(c1 + 1, c2 - c1 - 1);
        auto ita = pos.find(a);
        auto itb = pos.find(b);
        if (ita == pos.end() || itb == pos.end())
            throw ParseError(lineno, "edge endpoint not in sidecar node list");
        double w;
        try {
            w = std::stod(line.substr(c2 + 1));
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad weight");
        }
        edges.push_back({ita->second, itb->second, w});
    }
    return CoauthorGraph::build(std::move(ids), std::move(edges), scheme);
}

} // namespace coauth
