#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chaincycle/chain.hpp"
#include "chaincycle/resolving.hpp"
#include "chaincycle/strong_resolving.hpp"

namespace chaincycle {

using Json = nlohmann::ordered_json;

/// Instance description of the form "even:8,10,8", "odd:5,7,5" or "cycle:6".
struct ChainSpec {
    enum class Kind { EvenChain, OddChain, Cycle };
    Kind kind = Kind::Cycle;
    std::vector<int> lengths;

    std::string text() const;
};

ChainSpec parse_chain_spec(const std::string& text);

struct BuiltGraph {
    LabeledGraph lg;
    std::optional<ChainCycle> chain;  // present for the two chain families
};

BuiltGraph build_from_spec(const ChainSpec& spec);

/// First line "n m", then one "u v" line per edge, 0-based ids, LF endings.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

std::string to_dot(const LabeledGraph& lg);

/// DOT with identified vertices carrying both names, e.g. "v1_5=v2_1".
std::string to_dot(const ChainCycle& cc);

/// One line per block, comma-separated labels; block order is significant.
std::string partition_to_text(const LabeledGraph& lg, const Partition& p);

struct TableRow {
    std::string label;
    Representation coords;
};

/// Every vertex's representation under the partition, in canonical (i,j)
/// order.
std::vector<TableRow> representation_table(const ChainCycle& cc, const Partition& p);

std::string table_to_tsv(const std::vector<TableRow>& rows);
Json table_to_json(const std::vector<TableRow>& rows);

/// {"computed_edges": [[lbl,lbl],...], "predicted_edges": [...],
///  "diff": {"missing": [...], "extra": [...]}, "cover": [lbl,...],
///  "alpha": int}; edge pairs and lists sorted lexicographically by label.
Json srg_report_to_json(const LabeledGraph& lg, const SrgReport& rep, const CoverResult* cover);

Json claim_report_to_json(const LabeledGraph& lg, const ClaimReport& rep);

std::vector<std::string> labels_of(const LabeledGraph& lg, const std::vector<int>& vs);

} // namespace chaincycle
