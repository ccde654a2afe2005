#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chaincycle/graph.hpp"

namespace chaincycle {

/// Graph plus a bijective vertex-id <-> display-label mapping.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;             // id -> label
    std::unordered_map<std::string, int> ids;    // label -> id

    const std::string& label_of(int v) const;
    int id_of(const std::string& label) const;
};

enum class Parity { Even, Odd };

/// Cycles C_{n_1},...,C_{n_m} glued in sequence: the attachment vertex of
/// cycle i (position n_i/2+1 for even lengths, (n_i+1)/2+1 for odd) is
/// identified with position 1 of cycle i+1. The identified vertex keeps the
/// earlier cycle's label "v{i}_{j}"; position (i+1, 1) resolves to it as an
/// alias. Vertex ids run i = 1..m, j = 1..n_i, skipping aliased positions.
struct ChainCycle {
    LabeledGraph lg;
    std::vector<int> cycle_lengths;
    Parity parity = Parity::Even;
    std::vector<std::vector<int>> position_ids;  // [cycle-1][pos-1] -> vertex id
    std::vector<int> cut_vertices;               // the m-1 identified vertices, in chain order

    int m() const { return static_cast<int>(cycle_lengths.size()); }
    int vertex_count() const { return lg.graph.vertex_count(); }

    /// Attachment position a_i of cycle i (1-based), the vertex identified
    /// with position 1 of cycle i+1.
    int attachment_pos(int i) const;

    bool is_cut(int v) const;
};

/// C_n labeled v_1..v_n.
LabeledGraph build_cycle(int n);

/// Copy with every label prefixed; used to make parts label-disjoint.
LabeledGraph prefix_labels(const LabeledGraph& lg, const std::string& prefix);

/// Chain graph of the parts: for i = 1..m-1, vertex w_i of part i is
/// identified with vertex x_{i+1} of part i+1. attachments[i] = (x_i, w_i).
/// The identified vertex keeps the earlier part's label.
LabeledGraph build_chain(const std::vector<LabeledGraph>& parts,
                         const std::vector<std::pair<std::string, std::string>>& attachments);

ChainCycle build_even_chain_cycle(const std::vector<int>& ns);
ChainCycle build_odd_chain_cycle(const std::vector<int>& ns);

/// Canonical vertex id of position (i, j), 1-based; resolves aliases, so
/// resolve_label(cc, i+1, 1) == resolve_label(cc, i, a_i).
int resolve_label(const ChainCycle& cc, int i, int j);

/// The two halves U1 = {v^i_1..v^i_{n_i/2}}, U2 = {v^i_{n_i/2+1}..v^i_{n_i}}
/// of cycle i, as canonical ids. Defined for even chains only.
std::pair<std::vector<int>, std::vector<int>> halves(const ChainCycle& cc, int i);

} // namespace chaincycle
