#include "chaincycle/strong_resolving.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace chaincycle {

bool is_maximally_distant(const DistanceMatrix& dm, const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw InvalidInput("vertex out of range");
    const int d = dm(u, v);
    for (int w : g.adjacent(u))
        if (dm(v, w) > d) return false;
    return true;
}

std::vector<Edge> mmd_pairs(const Graph& g, const DistanceMatrix& dm) {
    if (!is_connected(g)) throw InvalidInput("mmd_pairs requires a connected graph");
    std::vector<Edge> out;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (is_maximally_distant(dm, g, u, v) && is_maximally_distant(dm, g, v, u))
                out.emplace_back(u, v);
    return out;
}

namespace {

std::vector<int> isolated_in(int n, const std::vector<Edge>& edges) {
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        touched[static_cast<std::size_t>(u)] = 1;
        touched[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!touched[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

} // namespace

SrgReport strong_resolving_graph(const Graph& g) {
    const DistanceMatrix dm = distance_matrix(g);
    SrgReport rep;
    rep.vertex_count = g.vertex_count();
    rep.computed_edges = mmd_pairs(g, dm);
    rep.isolated_vertices = isolated_in(g.vertex_count(), rep.computed_edges);
    return rep;
}

namespace {

// Insert the unordered pair for positions (i,j1)-(i2,j2) unless an endpoint
// is an identified cut vertex (the characterization is stated on V_2).
struct PredictedEdges {
    const ChainCycle& cc;
    std::set<Edge> edges;

    void add(int i1, int j1, int i2, int j2) {
        const int a = resolve_label(cc, i1, j1);
        const int b = resolve_label(cc, i2, j2);
        if (a == b) return;
        if (cc.is_cut(a) || cc.is_cut(b)) return;
        edges.insert({std::min(a, b), std::max(a, b)});
    }

    // position j + off on cycle i, wrapped into 1..n_i
    int wrap(int i, int j, int off) const {
        const int n = cc.cycle_lengths[static_cast<std::size_t>(i - 1)];
        return (j - 1 + off) % n + 1;
    }
};

} // namespace

std::vector<Edge> predicted_srg_even(const ChainCycle& cc) {
    if (cc.parity != Parity::Even) throw InvalidInput("parity: expected an even chain cycle");
    PredictedEdges p{cc, {}};
    const int m = cc.m();
    for (int i = 1; i <= m; ++i) {
        const int n = cc.cycle_lengths[static_cast<std::size_t>(i - 1)];
        const int h = n / 2;
        for (int j = 2; j <= n; ++j) {
            if (j == h + 1) continue;  // stated range skips the attachment position
            p.add(i, j, i, p.wrap(i, j, h));
        }
    }
    p.add(1, 1, m, cc.cycle_lengths[static_cast<std::size_t>(m - 1)] / 2 + 1);
    return {p.edges.begin(), p.edges.end()};
}

std::vector<Edge> predicted_srg_odd(const ChainCycle& cc) {
    if (cc.parity != Parity::Odd) throw InvalidInput("parity: expected an odd chain cycle");
    const int m = cc.m();
    for (int n : cc.cycle_lengths)
        if (n < 5)
            throw InvalidInput("odd SRG characterization requires every cycle length >= 5, got " +
                               std::to_string(n));
    PredictedEdges p{cc, {}};
    auto nlen = [&](int i) { return cc.cycle_lengths[static_cast<std::size_t>(i - 1)]; };

    // A1: first cycle, j over 1..(n+1)/2 and (n+1)/2+2..n, partner j + (n-1)/2
    {
        const int n = nlen(1);
        for (int j = 1; j <= n; ++j) {
            if (j == (n + 1) / 2 + 1) continue;
            p.add(1, j, 1, p.wrap(1, j, (n - 1) / 2));
        }
    }
    // A2: last cycle, j over 2..n
    {
        const int n = nlen(m);
        for (int j = 2; j <= n; ++j) p.add(m, j, m, p.wrap(m, j, (n - 1) / 2));
    }
    // A3: interior cycles, j over 2..(n+1)/2 and (n+1)/2+2..n
    for (int i = 2; i <= m - 1; ++i) {
        const int n = nlen(i);
        for (int j = 2; j <= n; ++j) {
            if (j == (n + 1) / 2 + 1) continue;
            p.add(i, j, i, p.wrap(i, j, (n - 1) / 2));
        }
    }
    // B1: chain ends
    for (int j : {1, 2})
        for (int l : {(nlen(m) + 1) / 2, (nlen(m) + 1) / 2 + 1}) p.add(1, j, m, l);
    // B2: first cycle against interior midpoints
    for (int k = 2; k <= m - 1; ++k)
        for (int j : {1, 2}) p.add(1, j, k, (nlen(k) + 1) / 2);
    // B3: interior second vertices against the last cycle
    for (int i = 2; i <= m - 1; ++i)
        for (int l : {(nlen(m) + 1) / 2, (nlen(m) + 1) / 2 + 1}) p.add(i, 2, m, l);
    // B4: interior-to-interior, earlier cycle's second vertex to later midpoint
    for (int i = 2; i <= m - 1; ++i)
        for (int k = i + 1; k <= m - 1; ++k) p.add(i, 2, k, (nlen(k) + 1) / 2);

    return {p.edges.begin(), p.edges.end()};
}

SrgReport chain_srg_report(const ChainCycle& cc) {
    SrgReport rep = strong_resolving_graph(cc.lg.graph);
    rep.predicted_edges =
        cc.parity == Parity::Even ? predicted_srg_even(cc) : predicted_srg_odd(cc);
    const auto& pred = *rep.predicted_edges;
    std::set_difference(rep.computed_edges.begin(), rep.computed_edges.end(), pred.begin(),
                        pred.end(), std::back_inserter(rep.diff_missing));
    std::set_difference(pred.begin(), pred.end(), rep.computed_edges.begin(),
                        rep.computed_edges.end(), std::back_inserter(rep.diff_extra));
    return rep;
}

namespace {

struct CoverSearch {
    std::vector<std::vector<char>> adj;  // adjacency matrix of the live graph
    std::vector<int> deg;
    int n;
    int best;
    std::vector<int> best_cover;

    explicit CoverSearch(const Graph& g)
        : adj(static_cast<std::size_t>(g.vertex_count()),
              std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0)),
          deg(static_cast<std::size_t>(g.vertex_count()), 0),
          n(g.vertex_count()) {
        for (const auto& [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        best_cover.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] > 0) best_cover.push_back(v);
        best = static_cast<int>(best_cover.size());
    }

    std::vector<int> take(int v, std::vector<int>& cover) {
        std::vector<int> removed;
        for (int w = 0; w < n; ++w) {
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
                adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 0;
                adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] = 0;
                --deg[static_cast<std::size_t>(v)];
                --deg[static_cast<std::size_t>(w)];
                removed.push_back(w);
            }
        }
        cover.push_back(v);
        return removed;
    }

    void untake(int v, const std::vector<int>& removed, std::vector<int>& cover) {
        cover.pop_back();
        for (int w : removed) {
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 1;
            adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] = 1;
            ++deg[static_cast<std::size_t>(v)];
            ++deg[static_cast<std::size_t>(w)];
        }
    }

    // greedy matching size: each matched edge needs one cover vertex
    int lower_bound() const {
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        int lb = 0;
        for (int u = 0; u < n; ++u) {
            if (used[static_cast<std::size_t>(u)] || deg[static_cast<std::size_t>(u)] == 0)
                continue;
            for (int w = 0; w < n; ++w) {
                if (!used[static_cast<std::size_t>(w)] &&
                    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) {
                    used[static_cast<std::size_t>(u)] = 1;
                    used[static_cast<std::size_t>(w)] = 1;
                    ++lb;
                    break;
                }
            }
        }
        return lb;
    }

    void search(std::vector<int>& cover) {
        // forced choices: a degree-1 vertex is covered through its neighbor
        std::vector<std::pair<int, std::vector<int>>> undo;
        while (true) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (deg[static_cast<std::size_t>(v)] == 1) {
                    leaf = v;
                    break;
                }
            if (leaf < 0) break;
            int nb = -1;
            for (int w = 0; w < n; ++w)
                if (adj[static_cast<std::size_t>(leaf)][static_cast<std::size_t>(w)]) {
                    nb = w;
                    break;
                }
            undo.emplace_back(nb, take(nb, cover));
        }

        int pivot = -1;
        for (int v = 0; v < n; ++v) {
            if (deg[static_cast<std::size_t>(v)] == 0) continue;
            if (pivot < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pivot)])
                pivot = v;
        }
        if (pivot < 0) {
            if (static_cast<int>(cover.size()) < best) {
                best = static_cast<int>(cover.size());
                best_cover = cover;
            }
        } else if (static_cast<int>(cover.size()) + lower_bound() < best) {
            auto removed = take(pivot, cover);
            search(cover);
            untake(pivot, removed, cover);

            std::vector<int> nbs;
            for (int w = 0; w < n; ++w)
                if (adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(w)])
                    nbs.push_back(w);
            std::vector<std::pair<int, std::vector<int>>> undo2;
            for (int w : nbs) undo2.emplace_back(w, take(w, cover));
            search(cover);
            for (auto it = undo2.rbegin(); it != undo2.rend(); ++it)
                untake(it->first, it->second, cover);
        }

        for (auto it = undo.rbegin(); it != undo.rend(); ++it)
            untake(it->first, it->second, cover);
    }
};

} // namespace

CoverResult min_vertex_cover(const Graph& g) {
    CoverSearch s(g);
    std::vector<int> cover;
    s.search(cover);
    std::sort(s.best_cover.begin(), s.best_cover.end());
    CoverResult out;
    out.cover = std::move(s.best_cover);
    out.size = static_cast<int>(out.cover.size());
    out.method = CoverMethod::BranchBound;
    out.independence_check = g.vertex_count() - out.size;
    return out;
}

bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v) {
    if (u == v) throw InvalidInput("strongly_resolves needs distinct u, v");
    if (w < 0 || w >= dm.size() || u < 0 || u >= dm.size() || v < 0 || v >= dm.size())
        throw InvalidInput("vertex out of range");
    return dm(w, u) == dm(w, v) + dm(v, u) || dm(w, v) == dm(w, u) + dm(u, v);
}

bool is_strong_resolving_set(const DistanceMatrix& dm, std::span<const int> w) {
    if (w.empty()) throw InvalidInput("strong resolving set must be non-empty");
    for (int x : w)
        if (x < 0 || x >= dm.size())
            throw InvalidInput("vertex out of range: " + std::to_string(x));
    const int n = dm.size();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool witnessed = false;
            for (int x : w) {
                if (strongly_resolves(dm, x, u, v)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        }
    }
    return true;
}

SdimResult strong_metric_dimension(const Graph& g, SdimRoute method) {
    if (!is_connected(g)) throw InvalidInput("strong_metric_dimension requires a connected graph");
    if (method == SdimRoute::CoverOfSrg) {
        const SrgReport rep = strong_resolving_graph(g);
        CoverResult cov = min_vertex_cover(rep.srg());
        SdimResult out;
        out.value = cov.size;
        out.route = method;
        out.cover = std::move(cov);
        return out;
    }
    if (method == SdimRoute::BruteForce) {
        const int n = g.vertex_count();
        if (n > 12)
            throw InvalidInput("size gate: brute-force sdim is limited to n <= 12, got " +
                               std::to_string(n));
        if (n == 1) return {0, method, std::vector<int>{}, std::nullopt};
        const DistanceMatrix dm = distance_matrix(g);
        std::vector<int> comb;
        for (int t = 1; t <= n; ++t) {
            comb.resize(static_cast<std::size_t>(t));
            std::iota(comb.begin(), comb.end(), 0);
            while (true) {
                if (is_strong_resolving_set(dm, comb))
                    return {t, method, comb, std::nullopt};
                int i = t - 1;
                while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - t + i) --i;
                if (i < 0) break;
                ++comb[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < t; ++j)
                    comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return {n, method, std::nullopt, std::nullopt};  // W = V; not reached
    }
    throw InvalidInput("the closed-form route applies to chain families only; use sdim_formula");
}

int sdim_formula(Parity parity, const std::vector<int>& ns) {
    const int m = static_cast<int>(ns.size());
    if (m < 2) throw InvalidInput("sdim formula requires at least two cycles");
    if (parity == Parity::Even) {
        int s = 1;
        for (int n : ns) {
            if (n % 2 != 0 || n < 4)
                throw InvalidInput("parity: even sdim formula requires even lengths >= 4, got " +
                                   std::to_string(n));
            s += (n - 2) / 2;
        }
        return s;
    }
    for (int n : ns)
        if (n % 2 == 0 || n < 5)
            throw InvalidInput("parity: odd sdim formula requires odd lengths >= 5, got " +
                               std::to_string(n));
    int s = m - 1 + ns.front() / 2 + ns.back() / 2;
    for (int i = 2; i <= m - 1; ++i) s += (ns[static_cast<std::size_t>(i - 1)] - 2) / 2;
    return s;
}

std::vector<int> paper_cover(const ChainCycle& cc) {
    const int m = cc.m();
    auto nlen = [&](int i) { return cc.cycle_lengths[static_cast<std::size_t>(i - 1)]; };
    std::set<int> s;
    if (cc.parity == Parity::Even) {
        // one endpoint from each antipodal K_2, plus v^1_1 for the cross edge
        for (int i = 1; i <= m; ++i)
            for (int j = 2; j <= nlen(i) / 2; ++j) s.insert(resolve_label(cc, i, j));
        s.insert(resolve_label(cc, 1, 1));
    } else {
        for (int n : cc.cycle_lengths)
            if (n < 5)
                throw InvalidInput("odd cover construction requires cycle lengths >= 5, got " +
                                   std::to_string(n));
        auto stride_pos = [&](int i, int start, int stride, int t) {
            return (start - 1 + stride * t) % nlen(i) + 1;
        };
        s.insert(resolve_label(cc, 1, 1));
        s.insert(resolve_label(cc, 1, 2));
        for (int i = 2; i <= m - 1; ++i) s.insert(resolve_label(cc, i, 2));
        // alternate vertices along the stride path of the first cycle
        for (int t = 2; t <= nlen(1) - 3; t += 2)
            s.insert(resolve_label(cc, 1, stride_pos(1, 1, nlen(1) / 2, t)));
        // the last cycle's path, starting at its midpoint
        for (int t = 0; t <= nlen(m) - 3; t += 2)
            s.insert(resolve_label(cc, m, stride_pos(m, (nlen(m) + 1) / 2, nlen(m) / 2, t)));
        // interior paths, on top of the v^i_2 already taken
        for (int i = 2; i <= m - 1; ++i)
            for (int t = 2; t <= nlen(i) - 3; t += 2)
                s.insert(resolve_label(cc, i, stride_pos(i, 2, (nlen(i) + 1) / 2, t)));
    }

    const SrgReport rep = chain_srg_report(cc);
    auto check_covered = [&](const std::vector<Edge>& edges) {
        for (const auto& [u, v] : edges)
            if (!s.count(u) && !s.count(v))
                throw ClaimViolation("constructed cover misses edge {" + cc.lg.label_of(u) +
                                     "," + cc.lg.label_of(v) + "}");
    };
    check_covered(rep.computed_edges);
    if (rep.predicted_edges) check_covered(*rep.predicted_edges);
    return {s.begin(), s.end()};
}

} // namespace chaincycle
