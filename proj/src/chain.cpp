#include "chaincycle/chain.hpp"

#include <algorithm>
#include <string>

namespace chaincycle {

const std::string& LabeledGraph::label_of(int v) const {
    if (v < 0 || v >= graph.vertex_count())
        throw InvalidInput("vertex out of range: " + std::to_string(v));
    return labels[static_cast<std::size_t>(v)];
}

int LabeledGraph::id_of(const std::string& label) const {
    const auto it = ids.find(label);
    if (it == ids.end()) throw InvalidInput("unknown label: " + label);
    return it->second;
}

int ChainCycle::attachment_pos(int i) const {
    const int n = cycle_lengths[static_cast<std::size_t>(i - 1)];
    return parity == Parity::Even ? n / 2 + 1 : (n + 1) / 2 + 1;
}

bool ChainCycle::is_cut(int v) const {
    return std::find(cut_vertices.begin(), cut_vertices.end(), v) != cut_vertices.end();
}

LabeledGraph build_cycle(int n) {
    if (n < 3) throw InvalidInput("cycle length must be at least 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) edges.emplace_back(j, (j + 1) % n);
    LabeledGraph lg;
    lg.graph = build_graph(n, edges);
    lg.labels.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        lg.labels.push_back("v_" + std::to_string(j));
        lg.ids.emplace(lg.labels.back(), j - 1);
    }
    return lg;
}

LabeledGraph prefix_labels(const LabeledGraph& lg, const std::string& prefix) {
    LabeledGraph out;
    out.graph = lg.graph;
    out.labels.reserve(lg.labels.size());
    for (int v = 0; v < lg.graph.vertex_count(); ++v) {
        out.labels.push_back(prefix + lg.labels[static_cast<std::size_t>(v)]);
        out.ids.emplace(out.labels.back(), v);
    }
    return out;
}

LabeledGraph build_chain(const std::vector<LabeledGraph>& parts,
                         const std::vector<std::pair<std::string, std::string>>& attachments) {
    const int m = static_cast<int>(parts.size());
    if (m < 1) throw InvalidInput("chain needs at least one part");
    if (attachments.size() != parts.size())
        throw InvalidInput("one (x_i, w_i) attachment pair required per part");
    for (int i = 0; i < m; ++i) {
        const auto& [x, w] = attachments[static_cast<std::size_t>(i)];
        parts[static_cast<std::size_t>(i)].id_of(x);
        parts[static_cast<std::size_t>(i)].id_of(w);
        if (x == w && parts[static_cast<std::size_t>(i)].graph.vertex_count() == 1)
            throw InvalidInput("single-vertex part cannot serve as both attachment ends");
    }
    if (m == 1) return parts[0];

    LabeledGraph out;
    std::vector<std::vector<int>> map(static_cast<std::size_t>(m));
    int next = 0;
    for (int i = 0; i < m; ++i) {
        const auto& part = parts[static_cast<std::size_t>(i)];
        map[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(part.graph.vertex_count()), -1);
        if (i > 0) {
            const auto& prev = parts[static_cast<std::size_t>(i - 1)];
            const int w_prev = prev.id_of(attachments[static_cast<std::size_t>(i - 1)].second);
            const int x_here = part.id_of(attachments[static_cast<std::size_t>(i)].first);
            map[static_cast<std::size_t>(i)][static_cast<std::size_t>(x_here)] =
                map[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(w_prev)];
        }
        for (int v = 0; v < part.graph.vertex_count(); ++v) {
            if (map[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] >= 0) continue;
            map[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = next++;
            const auto& label = part.labels[static_cast<std::size_t>(v)];
            if (!out.ids.emplace(label, next - 1).second)
                throw InvalidInput("parts are not label-disjoint: " + label);
            out.labels.push_back(label);
        }
    }

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (const auto& [u, v] : parts[static_cast<std::size_t>(i)].graph.edges())
            edges.emplace_back(map[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)],
                               map[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]);
    }
    out.graph = build_graph(next, edges);
    return out;
}

namespace {

ChainCycle build_chain_cycle(Parity parity, const std::vector<int>& ns) {
    const int m = static_cast<int>(ns.size());
    if (m < 2) throw InvalidInput("chain cycle needs at least two cycles");
    for (int n : ns) {
        if (parity == Parity::Even) {
            if (n % 2 != 0 || n < 4)
                throw InvalidInput("parity: even chain requires even cycle lengths >= 4, got " +
                                   std::to_string(n));
        } else {
            if (n % 2 == 0)
                throw InvalidInput("parity: odd chain requires odd cycle lengths, got " +
                                   std::to_string(n));
            if (n < 3)
                throw InvalidInput("cycle length must be at least 3, got " + std::to_string(n));
        }
    }

    ChainCycle cc;
    cc.cycle_lengths = ns;
    cc.parity = parity;
    cc.position_ids.assign(static_cast<std::size_t>(m), {});

    int next = 0;
    for (int i = 0; i < m; ++i) {
        const int n = ns[static_cast<std::size_t>(i)];
        auto& pos = cc.position_ids[static_cast<std::size_t>(i)];
        pos.assign(static_cast<std::size_t>(n), -1);
        for (int j = 0; j < n; ++j) {
            if (i > 0 && j == 0) {
                const int a_prev = (parity == Parity::Even ? ns[static_cast<std::size_t>(i - 1)] / 2 + 1
                                                           : (ns[static_cast<std::size_t>(i - 1)] + 1) / 2 + 1);
                pos[0] = cc.position_ids[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a_prev - 1)];
                continue;
            }
            pos[static_cast<std::size_t>(j)] = next++;
            cc.lg.labels.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            cc.lg.ids.emplace(cc.lg.labels.back(), next - 1);
        }
    }

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        const int n = ns[static_cast<std::size_t>(i)];
        const auto& pos = cc.position_ids[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            edges.emplace_back(pos[static_cast<std::size_t>(j)], pos[static_cast<std::size_t>((j + 1) % n)]);
    }
    cc.lg.graph = build_graph(next, edges);

    for (int i = 1; i < m; ++i)
        cc.cut_vertices.push_back(cc.position_ids[static_cast<std::size_t>(i)][0]);
    return cc;
}

} // namespace

ChainCycle build_even_chain_cycle(const std::vector<int>& ns) {
    return build_chain_cycle(Parity::Even, ns);
}

ChainCycle build_odd_chain_cycle(const std::vector<int>& ns) {
    return build_chain_cycle(Parity::Odd, ns);
}

int resolve_label(const ChainCycle& cc, int i, int j) {
    if (i < 1 || i > cc.m())
        throw InvalidInput("cycle index out of range: " + std::to_string(i));
    const int n = cc.cycle_lengths[static_cast<std::size_t>(i - 1)];
    if (j < 1 || j > n)
        throw InvalidInput("position out of range: (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    return cc.position_ids[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

std::pair<std::vector<int>, std::vector<int>> halves(const ChainCycle& cc, int i) {
    if (cc.parity != Parity::Even)
        throw InvalidInput("halves are defined for even chains only");
    if (i < 1 || i > cc.m())
        throw InvalidInput("cycle index out of range: " + std::to_string(i));
    const int n = cc.cycle_lengths[static_cast<std::size_t>(i - 1)];
    std::vector<int> u1, u2;
    for (int j = 1; j <= n / 2; ++j) u1.push_back(resolve_label(cc, i, j));
    for (int j = n / 2 + 1; j <= n; ++j) u2.push_back(resolve_label(cc, i, j));
    return {u1, u2};
}

} // namespace chaincycle
