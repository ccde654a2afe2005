#include "chaincycle/graph.hpp"

#include <algorithm>
#include <string>

namespace chaincycle {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adjacent(u);
    return std::binary_search(a.begin(), a.end(), v);
}

Graph build_graph(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count < 0) throw InvalidInput("vertex count must be non-negative");
    Graph g;
    g.n_ = vertex_count;
    g.edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw InvalidInput("edge endpoint out of range: " + pair);
        if (u == v) throw InvalidInput("self-loop: " + pair);
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.adj_.assign(static_cast<std::size_t>(vertex_count), {});
    for (const auto& [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

std::vector<int> neighbors(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw InvalidInput("vertex out of range: " + std::to_string(v));
    return g.adjacent(v);
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm;
    dm.n_ = n;
    dm.dist_.assign(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        int* row = dm.dist_.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        int head = 0;
        int tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            const int u = queue[head++];
            for (int w : g.adjacent(u)) {
                if (row[w] == DistanceMatrix::kUnreachable) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    return dm;
}

bool DistanceMatrix::all_reachable() const {
    return std::none_of(dist_.begin(), dist_.end(),
                        [](int d) { return d == kUnreachable; });
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g.adjacent(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw InvalidInput("diameter requires a connected graph");
    const DistanceMatrix dm = distance_matrix(g);
    int best = 0;
    for (int u = 0; u < dm.size(); ++u)
        for (int v = u + 1; v < dm.size(); ++v) best = std::max(best, dm(u, v));
    return best;
}

bool is_path_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw InvalidInput("is_path_graph requires n >= 2");
    if (!is_connected(g)) throw InvalidInput("is_path_graph requires a connected graph");
    int leaves = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 1)
            ++leaves;
        else if (d != 2)
            return false;
    }
    return leaves == 2;
}

} // namespace chaincycle
