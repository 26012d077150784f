#include "coauth/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "coauth/errors.hpp"

#include <json.hpp>

namespace coauth {

using NodeId = CoauthorGraph::NodeId;

double percent_change(double v1, double v2) {
    if (v1 == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (v2 - v1) / std::abs(v1) * 100.0;
}

bool ComparisonRow::change_defined() const { return !std::isnan(change); }

bool MetricParams::operator==(const MetricParams& o) const {
    return cutoff == o.cutoff && seed == o.seed && betweenness_sample == o.betweenness_sample &&
           omega_niter == o.omega_niter && omega_nrand == o.omega_nrand && schemes == o.schemes &&
           path.exact_threshold == o.path.exact_threshold && path.sample_size == o.path.sample_size;
}

namespace {

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string centrality_row_name(Measure m, WeightScheme s) {
    return "avg_" + std::string(measure_name(m)) + "_centrality_" + std::string(scheme_name(s));
}

ComparisonRow make_row(std::string name, std::optional<double> a, std::optional<double> b) {
    ComparisonRow row;
    row.metric = std::move(name);
    row.without = a;
    row.with = b;
    row.change = (a && b) ? percent_change(*a, *b) : std::numeric_limits<double>::quiet_NaN();
    return row;
}

} // namespace

void write_comparison_csv(const ComparisonReport& report, std::ostream& out) {
    out << "metric,without_hyperauthors,with_hyperauthors,percent_change\n";
    for (const auto& row : report.rows) {
        out << row.metric << ',';
        if (row.without) out << fmt3(*row.without);
        out << ',';
        if (row.with) out << fmt3(*row.with);
        out << ',';
        if (row.change_defined()) out << fmt3(row.change);
        out << '\n';
    }
}

std::string to_json_string(const ComparisonReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json j;
        j["metric"] = row.metric;
        j["without"] = row.without ? nlohmann::json(*row.without) : nlohmann::json(nullptr);
        j["with"] = row.with ? nlohmann::json(*row.with) : nlohmann::json(nullptr);
        j["percent_change"] =
            row.change_defined() ? nlohmann::json(row.change) : nlohmann::json(nullptr);
        rows.push_back(std::move(j));
    }
    nlohmann::json j;
    j["rows"] = std::move(rows);
    j["cutoff"] = report.cutoff;
    j["seed"] = report.seed;
    std::vector<std::string> names;
    for (auto s : report.schemes) names.emplace_back(scheme_name(s));
    j["schemes"] = names;
    return j.dump(2);
}

ComparisonReport compare_networks(const NetworkMetrics& without, const NetworkMetrics& with) {
    if (!(without.params == with.params))
        throw ConfigError("compare_networks: suites were computed under different parameters");

    ComparisonReport report;
    report.cutoff = without.params.cutoff;
    report.schemes = without.params.schemes;
    report.seed = without.params.seed;

    auto add = [&](const std::string& name, double a, double b) {
        report.rows.push_back(make_row(name, a, b));
    };
    add("unique_papers", double(without.n_papers), double(with.n_papers));
    add("nodes", double(without.cohesion.n_nodes), double(with.cohesion.n_nodes));
    add("edges", double(without.cohesion.n_edges), double(with.cohesion.n_edges));
    add("density", without.cohesion.density, with.cohesion.density);
    add("avg_clustering", without.cohesion.avg_clustering, with.cohesion.avg_clustering);
    add("avg_path_length", without.cohesion.avg_path_length, with.cohesion.avg_path_length);
    add("giant_component_edges", double(without.cohesion.giant_component_edges),
        double(with.cohesion.giant_component_edges));
    add("n_components", double(without.cohesion.n_components),
        double(with.cohesion.n_components));
    if (without.topology && with.topology) {
        add("omega", without.topology->omega.omega, with.topology->omega.omega);
        add("alpha", without.topology->powerlaw.alpha, with.topology->powerlaw.alpha);
    }
    for (const auto& a : without.centralities) {
        auto match = std::find_if(with.centralities.begin(), with.centralities.end(),
                                  [&](const CentralityAverage& b) {
                                      return a.measure == b.measure && a.scheme == b.scheme;
                                  });
        if (match == with.centralities.end())
            throw ConfigError("compare_networks: centrality cells do not line up");
        add(centrality_row_name(a.measure, a.scheme), a.average, match->average);
    }
    return report;
}

EgoNetwork extract_ego(const CoauthorGraph& g, const std::string& ego,
                       const std::string& provenance) {
    NodeId e = g.index_of(ego);
    if (e == CoauthorGraph::npos)
        throw NotFoundError("extract_ego: author '" + ego + "' not in graph");
    std::vector<NodeId> members{e};
    auto nbrs = g.neighbors(e);
    members.insert(members.end(), nbrs.begin(), nbrs.end());
    EgoNetwork net;
    net.ego = ego;
    net.graph = g.induced_subgraph(members);
    net.provenance = provenance;
    return net;
}

std::size_t Ranking::rank_of(const std::string& id) const {
    for (std::size_t i = 0; i < ordered.size(); ++i)
        if (ordered[i] == id) return i + 1;
    return 0;
}

Ranking rank_by_degree(const CoauthorGraph& g) {
    if (g.n_nodes() == 0) throw std::invalid_argument("rank_by_degree: empty graph");
    std::vector<NodeId> order(g.n_nodes());
    for (NodeId v = 0; v < g.n_nodes(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b; // index order is author-id order
    });
    Ranking r;
    r.ordered.reserve(order.size());
    for (NodeId v : order) r.ordered.push_back(g.node_id(v));
    return r;
}

CaseStudyGrid select_case_studies(const Ranking& rank_without, const Ranking& rank_with,
                                  double quantile) {
    if (!(quantile > 0.0 && quantile <= 1.0))
        throw std::invalid_argument("select_case_studies: quantile must be in (0, 1]");
    CaseStudyGrid grid;
    grid.quantile = quantile;

    std::unordered_map<std::string, std::size_t> pos_without, pos_with;
    for (std::size_t i = 0; i < rank_without.ordered.size(); ++i)
        pos_without[rank_without.ordered[i]] = i + 1;
    for (std::size_t i = 0; i < rank_with.ordered.size(); ++i)
        pos_with[rank_with.ordered[i]] = i + 1;

    const double bar_without = quantile * double(rank_without.size());
    const double bar_with = quantile * double(rank_with.size());

    struct Entry {
        std::string id;
        std::size_t combined;
    };
    std::vector<Entry> cells[4]; // HH, HL, LH, LL
    auto classify = [&](const std::string& id) {
        auto itw = pos_without.find(id);
        auto ith = pos_with.find(id);
        const std::size_t rw = itw == pos_without.end() ? rank_without.size() + 1 : itw->second;
        const std::size_t rh = ith == pos_with.end() ? rank_with.size() + 1 : ith->second;
        const bool high_without = itw != pos_without.end() && double(rw) <= bar_without;
        const bool high_with = ith != pos_with.end() && double(rh) <= bar_with;
        const int cell = (high_without ? 0 : 2) + (high_with ? 0 : 1);
        cells[cell].push_back({id, rw + rh});
    };
    for (const auto& id : rank_without.ordered) classify(id);
    for (const auto& id : rank_with.ordered)
        if (!pos_without.count(id)) classify(id);

    auto emit = [](std::vector<Entry>& cell) {
        std::sort(cell.begin(), cell.end(), [](const Entry& a, const Entry& b) {
            if (a.combined != b.combined) return a.combined < b.combined;
            return a.id < b.id;
        });
        std::vector<std::string> out;
        out.reserve(cell.size());
        for (auto& e : cell) out.push_back(std::move(e.id));
        return out;
    };
    grid.hh = emit(cells[0]);
    grid.hl = emit(cells[1]);
    grid.lh = emit(cells[2]);
    grid.ll = emit(cells[3]);
    return grid;
}

std::string to_json_string(const CaseStudyGrid& grid) {
    nlohmann::json j;
    j["HH"] = grid.hh;
    j["HL"] = grid.hl;
    j["LH"] = grid.lh;
    j["LL"] = grid.ll;
    j["quantile"] = grid.quantile;
    return j.dump(2);
}

namespace {

std::optional<double> ego_cell_average(const CoauthorGraph& egonet, Measure measure,
                                       WeightScheme scheme, const EgoSuiteParams& params) {
    const bool weighted = scheme != WeightScheme::Unweighted;
    try {
        switch (measure) {
            case Measure::Degree: return degree_centrality(egonet, false).average;
            case Measure::Betweenness: {
                BetweennessParams bp;
                bp.use_weights = weighted;
                bp.sample_size = std::max(params.betweenness_sample, egonet.n_nodes());
                bp.seed = params.seed;
                return betweenness_centrality(egonet, bp).average;
            }
            case Measure::Closeness: return closeness_centrality(egonet, weighted).average;
            case Measure::Eigenvector:
                return eigenvector_centrality(egonet, weighted).average;
        }
    } catch (const MetricError&) {
        return std::nullopt; // undefined for this egonetwork's size
    }
    return std::nullopt;
}

} // namespace

ComparisonReport ego_centrality_suite(const GraphsByScheme& parents_without,
                                      const GraphsByScheme& parents_with, const std::string& ego,
                                      const EgoSuiteParams& params) {
    static constexpr Measure measures[] = {Measure::Degree, Measure::Betweenness,
                                           Measure::Closeness, Measure::Eigenvector};
    static constexpr WeightScheme scheme_order[] = {WeightScheme::Unweighted, WeightScheme::Full,
                                                    WeightScheme::Newman, WeightScheme::Jaccard};

    // Extract each side's egonetwork once per scheme.
    std::map<WeightScheme, CoauthorGraph> ego_without, ego_with;
    bool present_anywhere = false;
    for (const auto& [scheme, parent] : parents_without) {
        if (parent.index_of(ego) == CoauthorGraph::npos) continue;
        ego_without.emplace(scheme, extract_ego(parent, ego, "without").graph);
        present_anywhere = true;
    }
    for (const auto& [scheme, parent] : parents_with) {
        if (parent.index_of(ego) == CoauthorGraph::npos) continue;
        ego_with.emplace(scheme, extract_ego(parent, ego, "with").graph);
        present_anywhere = true;
    }
    if (!present_anywhere)
        throw NotFoundError("ego_centrality_suite: author '" + ego + "' in neither network");

    ComparisonReport report;
    report.seed = params.seed;
    for (Measure m : measures) {
        for (WeightScheme s : scheme_order) {
            const bool requested = parents_without.count(s) || parents_with.count(s);
            if (!requested) continue;
            report.schemes.push_back(s);
            std::optional<double> a, b;
            if (auto it = ego_without.find(s); it != ego_without.end())
                a = ego_cell_average(it->second, m, s, params);
            if (auto it = ego_with.find(s); it != ego_with.end())
                b = ego_cell_average(it->second, m, s, params);
            report.rows.push_back(make_row(centrality_row_name(m, s), a, b));
        }
    }
    // De-duplicate the scheme list accumulated above.
    std::sort(report.schemes.begin(), report.schemes.end());
    report.schemes.erase(std::unique(report.schemes.begin(), report.schemes.end()),
                         report.schemes.end());
    return report;
}

} // namespace coauth
