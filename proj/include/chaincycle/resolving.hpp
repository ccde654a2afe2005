#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chaincycle/chain.hpp"
#include "chaincycle/graph.hpp"

namespace chaincycle {

/// Ordered partition of V(G) into disjoint non-empty blocks. Block order is
/// significant: representations are read off in block order.
struct Partition {
    std::vector<std::vector<int>> blocks;  // members sorted ascending

    int k() const { return static_cast<int>(blocks.size()); }
};

using Representation = std::vector<int>;

/// Validates disjointness, coverage and non-emptiness; sorts block members.
Partition make_partition(int vertex_count, std::vector<std::vector<int>> blocks);

/// r(v | Pi): coordinate j is the minimum distance from v to block j.
Representation partition_representation(const DistanceMatrix& dm, const Partition& p, int v);

struct ResolvingCheck {
    bool resolving = false;
    std::optional<Edge> collision;  // a vertex pair with identical representations
};

ResolvingCheck is_resolving_partition(const DistanceMatrix& dm, const Partition& p);

/// The explicit 3-block resolving partitions used to certify pd = 3:
/// Q1 is cycle 1 minus its two "middle" positions, Q2 collects the tail
/// positions of the interior cycles plus the last cycle's final vertex,
/// Q3 is the rest.
Partition paper_partition_even(const ChainCycle& cc);
Partition paper_partition_odd(const ChainCycle& cc);
Partition paper_partition(const ChainCycle& cc);

/// One closed-form claim about r(v^i_j | Pi) at a specific position. The
/// position may be an alias of the canonical vertex it refers to.
struct FormulaClaim {
    std::string formula;
    int cycle = 0;
    int pos = 0;
    Representation value;
};

struct VertexClaims {
    int vertex = -1;  // canonical id
    std::string label;
    std::vector<FormulaClaim> claims;
    Representation computed;

    bool covered() const { return !claims.empty(); }
    bool conflicting() const;  // at least two distinct claimed values
    bool mismatched() const;   // some claim differs from the computed value
};

/// Evaluation of every piecewise representation formula against the BFS
/// ground truth. Mismatches and gaps are data, not errors.
struct ClaimReport {
    std::vector<VertexClaims> entries;  // canonical (i,j) order
    std::vector<int> matched, mismatched, uncovered, conflicting;
};

ClaimReport claimed_representations(const ChainCycle& cc);

enum class PdLowerBound { NotAPath, ExhaustiveNoK };

struct PdCertificate {
    int value = 0;
    PdLowerBound lower_bound_reason = PdLowerBound::ExhaustiveNoK;
    Partition witness;
};

/// Smallest k <= k_max admitting a resolving k-partition, by enumerating
/// restricted growth strings with exactly k blocks in lexicographic order.
/// Returns the first witness; std::nullopt when no k <= k_max works.
/// Gated to n <= 16.
std::optional<PdCertificate> partition_dimension_exact(const Graph& g, const DistanceMatrix& dm,
                                                       int k_max);

/// pd of a chain cycle at any size: lower bound 3 because the graph is not
/// a path, upper bound by the verified explicit partition.
PdCertificate partition_dimension_chain(const ChainCycle& cc);

/// True iff the |W|-vectors of distances to W separate all vertices.
bool is_resolving_set(const DistanceMatrix& dm, std::span<const int> w);

/// Minimum resolving-set size by ascending-cardinality subset search in
/// lexicographic order. Gated to n <= 16.
int metric_dimension_exact(const Graph& g, const DistanceMatrix& dm);

} // namespace chaincycle
