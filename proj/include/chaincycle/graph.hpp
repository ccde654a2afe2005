#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace chaincycle {

/// Input or gate violation: the caller broke an operation's contract.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A verified construction failed the property it certifies. Raising this
/// means the instance at hand falsifies the claim the construction encodes.
struct ClaimViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph with dense vertex ids 0..n-1 and
/// sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Normalized edge set: u < v, sorted ascending, duplicates removed.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor list (unchecked index; see neighbors() for the
    /// validated variant).
    const std::vector<int>& adjacent(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(adjacent(v).size()); }

    bool has_edge(int u, int v) const;

private:
    friend Graph build_graph(int vertex_count, const std::vector<Edge>& edges);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// All-pairs hop distances. Entries equal kUnreachable only when the graph
/// is disconnected.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;

    int size() const { return n_; }

    int operator()(int u, int v) const {
        return dist_[static_cast<std::size_t>(u) * n_ + v];
    }

    bool all_reachable() const;

private:
    friend DistanceMatrix distance_matrix(const Graph& g);

    int n_ = 0;
    std::vector<int> dist_;
};

/// Validates endpoints, rejects self-loops, dedupes and normalizes edges.
Graph build_graph(int vertex_count, const std::vector<Edge>& edges);

/// N(v), sorted ascending. Throws on an out-of-range vertex.
std::vector<int> neighbors(const Graph& g, int v);

/// BFS from every vertex.
DistanceMatrix distance_matrix(const Graph& g);

/// Maximum pairwise distance. Requires a connected graph.
int diameter(const Graph& g);

bool is_connected(const Graph& g);

/// True iff the graph is a path: exactly two vertices of degree 1, every
/// other of degree 2. Requires a connected graph with n >= 2.
bool is_path_graph(const Graph& g);

} // namespace chaincycle
