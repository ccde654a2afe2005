#include "chaincycle/io.hpp"

#include <algorithm>
#include <sstream>

namespace chaincycle {

std::string ChainSpec::text() const {
    std::string out;
    switch (kind) {
        case Kind::EvenChain: out = "even:"; break;
        case Kind::OddChain: out = "odd:"; break;
        case Kind::Cycle: out = "cycle:"; break;
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lengths[i]);
    }
    return out;
}

ChainSpec parse_chain_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidInput("bad chain spec \"" + text + "\": expected kind:lengths");
    const std::string kind = text.substr(0, colon);
    ChainSpec spec;
    if (kind == "even")
        spec.kind = ChainSpec::Kind::EvenChain;
    else if (kind == "odd")
        spec.kind = ChainSpec::Kind::OddChain;
    else if (kind == "cycle")
        spec.kind = ChainSpec::Kind::Cycle;
    else
        throw InvalidInput("bad chain spec \"" + text + "\": unknown kind \"" + kind + "\"");

    std::string rest = text.substr(colon + 1);
    if (rest.empty()) throw InvalidInput("bad chain spec \"" + text + "\": no lengths");
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            spec.lengths.push_back(n);
        } catch (const std::exception&) {
            throw InvalidInput("bad chain spec \"" + text + "\": not a length: \"" + tok + "\"");
        }
    }
    if (spec.kind == ChainSpec::Kind::Cycle && spec.lengths.size() != 1)
        throw InvalidInput("bad chain spec \"" + text + "\": cycle takes exactly one length");
    return spec;
}

BuiltGraph build_from_spec(const ChainSpec& spec) {
    BuiltGraph out;
    switch (spec.kind) {
        case ChainSpec::Kind::Cycle:
            out.lg = build_cycle(spec.lengths.at(0));
            break;
        case ChainSpec::Kind::EvenChain: {
            ChainCycle cc = build_even_chain_cycle(spec.lengths);
            out.lg = cc.lg;
            out.chain = std::move(cc);
            break;
        }
        case ChainSpec::Kind::OddChain: {
            ChainCycle cc = build_odd_chain_cycle(spec.lengths);
            out.lg = cc.lg;
            out.chain = std::move(cc);
            break;
        }
    }
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = -1, m = -1;
    if (!(in >> n >> m)) throw InvalidInput("bad edge list: missing \"n m\" header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::max(0, m)));
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    if (static_cast<int>(edges.size()) != m)
        throw InvalidInput("bad edge list: header promises " + std::to_string(m) + " edges, got " +
                           std::to_string(edges.size()));
    return build_graph(n, edges);
}

namespace {

std::string dot_body(const Graph& g, const std::vector<std::string>& labels) {
    std::string out = "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + labels[static_cast<std::size_t>(v)] + "\"]\n";
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + "\n";
    out += "}\n";
    return out;
}

} // namespace

std::string to_dot(const LabeledGraph& lg) { return dot_body(lg.graph, lg.labels); }

std::string to_dot(const ChainCycle& cc) {
    std::vector<std::string> labels = cc.lg.labels;
    for (int i = 2; i <= cc.m(); ++i) {
        const int v = resolve_label(cc, i, 1);
        labels[static_cast<std::size_t>(v)] += "=v" + std::to_string(i) + "_1";
    }
    return dot_body(cc.lg.graph, labels);
}

std::string partition_to_text(const LabeledGraph& lg, const Partition& p) {
    std::string out;
    for (const auto& block : p.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += lg.label_of(block[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<TableRow> representation_table(const ChainCycle& cc, const Partition& p) {
    const DistanceMatrix dm = distance_matrix(cc.lg.graph);
    std::vector<TableRow> rows;
    for (int i = 1; i <= cc.m(); ++i) {
        for (int j = 1; j <= cc.cycle_lengths[static_cast<std::size_t>(i - 1)]; ++j) {
            if (i > 1 && j == 1) continue;
            const int v = resolve_label(cc, i, j);
            rows.push_back({cc.lg.label_of(v), partition_representation(dm, p, v)});
        }
    }
    return rows;
}

std::string table_to_tsv(const std::vector<TableRow>& rows) {
    std::string out;
    for (const auto& row : rows) {
        out += row.label;
        for (int c : row.coords) out += '\t' + std::to_string(c);
        out += '\n';
    }
    return out;
}

Json table_to_json(const std::vector<TableRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows)
        arr.push_back(Json{{"label", row.label}, {"coords", row.coords}});
    return arr;
}

std::vector<std::string> labels_of(const LabeledGraph& lg, const std::vector<int>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(lg.label_of(v));
    return out;
}

namespace {

Json edge_labels(const LabeledGraph& lg, const std::vector<Edge>& edges) {
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        std::string a = lg.label_of(u), b = lg.label_of(v);
        if (b < a) std::swap(a, b);
        named.emplace_back(std::move(a), std::move(b));
    }
    std::sort(named.begin(), named.end());
    Json arr = Json::array();
    for (auto& [a, b] : named) arr.push_back(Json::array({a, b}));
    return arr;
}

Json sorted_labels(const LabeledGraph& lg, std::vector<int> vs) {
    auto names = labels_of(lg, vs);
    std::sort(names.begin(), names.end());
    return Json(names);
}

} // namespace

Json srg_report_to_json(const LabeledGraph& lg, const SrgReport& rep, const CoverResult* cover) {
    Json out;
    out["computed_edges"] = edge_labels(lg, rep.computed_edges);
    if (rep.predicted_edges) out["predicted_edges"] = edge_labels(lg, *rep.predicted_edges);
    out["diff"] = Json{{"missing", edge_labels(lg, rep.diff_missing)},
                       {"extra", edge_labels(lg, rep.diff_extra)}};
    out["isolated_vertices"] = sorted_labels(lg, rep.isolated_vertices);
    if (cover) {
        out["cover"] = sorted_labels(lg, cover->cover);
        out["alpha"] = cover->size;
    }
    return out;
}

Json claim_report_to_json(const LabeledGraph& lg, const ClaimReport& rep) {
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json claims = Json::array();
        for (const auto& c : e.claims)
            claims.push_back(Json{{"formula", c.formula},
                                  {"cycle", c.cycle},
                                  {"pos", c.pos},
                                  {"value", c.value}});
        entries.push_back(Json{{"label", e.label},
                               {"computed", e.computed},
                               {"claims", std::move(claims)},
                               {"status", !e.covered()    ? "uncovered"
                                          : e.mismatched() ? "mismatch"
                                                           : "match"},
                               {"conflicting", e.conflicting()}});
    }
    return Json{{"entries", std::move(entries)},
                {"matched", labels_of(lg, rep.matched)},
                {"mismatched", labels_of(lg, rep.mismatched)},
                {"uncovered", labels_of(lg, rep.uncovered)},
                {"conflicting", labels_of(lg, rep.conflicting)}};
}

} // namespace chaincycle
