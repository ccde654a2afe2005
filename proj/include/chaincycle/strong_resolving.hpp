#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chaincycle/chain.hpp"
#include "chaincycle/graph.hpp"

namespace chaincycle {

/// u is maximally distant from v: no neighbor of u is farther from v than u.
bool is_maximally_distant(const DistanceMatrix& dm, const Graph& g, int u, int v);

/// All unordered pairs that are maximally distant in both directions.
std::vector<Edge> mmd_pairs(const Graph& g, const DistanceMatrix& dm);

/// Strong resolving graph: same vertex set, edges between MMD pairs. For
/// chain cycles the report also carries the closed-form predicted edge set
/// and its diff against the computed one.
struct SrgReport {
    int vertex_count = 0;
    std::vector<Edge> computed_edges;
    std::optional<std::vector<Edge>> predicted_edges;
    std::vector<Edge> diff_missing;  // computed but not predicted
    std::vector<Edge> diff_extra;    // predicted but not computed
    std::vector<int> isolated_vertices;

    bool diff_empty() const { return diff_missing.empty() && diff_extra.empty(); }
    Graph srg() const { return build_graph(vertex_count, computed_edges); }
};

SrgReport strong_resolving_graph(const Graph& g);

/// Closed-form SRG edge sets for the two chain families. Index sets are
/// expanded literally over their stated ranges (indices modulo the owning
/// cycle length) and deduplicated; pairs touching an identified cut vertex
/// are dropped, since the characterization is stated for V_2 vertices and
/// cut vertices are never mutually maximally distant.
std::vector<Edge> predicted_srg_even(const ChainCycle& cc);
std::vector<Edge> predicted_srg_odd(const ChainCycle& cc);

/// Computed and predicted SRG edge sets for a chain instance, with diff.
SrgReport chain_srg_report(const ChainCycle& cc);

enum class CoverMethod { BranchBound, PaperConstruction };

struct CoverResult {
    std::vector<int> cover;
    int size = 0;
    CoverMethod method = CoverMethod::BranchBound;
    int independence_check = 0;  // n - size, the independence number via alpha + beta = n
};

/// Exact minimum vertex cover by branch and bound: branch on a max-degree
/// vertex (take it, or take all its neighbors), with degree-1 vertices
/// resolved by taking their neighbor. Ties break toward the lowest id.
CoverResult min_vertex_cover(const Graph& g);

/// w strongly resolves u,v when one of them lies on a shortest path between
/// the other and w.
bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v);

bool is_strong_resolving_set(const DistanceMatrix& dm, std::span<const int> w);

enum class SdimRoute { CoverOfSrg, BruteForce, ClosedForm };

struct SdimResult {
    int value = 0;
    SdimRoute route = SdimRoute::CoverOfSrg;
    std::optional<std::vector<int>> strong_resolving_set;  // BruteForce witness
    std::optional<CoverResult> cover;                      // CoverOfSrg certificate
};

/// Strong metric dimension, by vertex cover of the SRG or by brute-force
/// subset search (the latter gated to n <= 12).
SdimResult strong_metric_dimension(const Graph& g, SdimRoute method);

/// Closed-form sdim for the chain families: even chains (n_i even, >= 4)
/// give 1 + sum (n_i-2)/2; odd chains (n_i odd, >= 5) give
/// m-1 + floor(n_1/2) + floor(n_m/2) + sum over interior floor((n_i-2)/2).
int sdim_formula(Parity parity, const std::vector<int>& ns);

/// The explicitly constructed minimum vertex cover of the chain SRG,
/// verified to cover every computed and predicted edge before return.
std::vector<int> paper_cover(const ChainCycle& cc);

} // namespace chaincycle
