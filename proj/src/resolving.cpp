#include "chaincycle/resolving.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <tuple>

namespace chaincycle {

Partition make_partition(int vertex_count, std::vector<std::vector<int>> blocks) {
    if (blocks.empty()) throw InvalidInput("partition needs at least one block");
    std::vector<int> owner(static_cast<std::size_t>(vertex_count), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InvalidInput("empty block in partition");
        for (int v : blocks[b]) {
            if (v < 0 || v >= vertex_count)
                throw InvalidInput("partition member out of range: " + std::to_string(v));
            if (owner[static_cast<std::size_t>(v)] != -1)
                throw InvalidInput("blocks are not disjoint at vertex " + std::to_string(v));
            owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
        std::sort(blocks[b].begin(), blocks[b].end());
    }
    for (int v = 0; v < vertex_count; ++v)
        if (owner[static_cast<std::size_t>(v)] == -1)
            throw InvalidInput("partition does not cover vertex " + std::to_string(v));
    return Partition{std::move(blocks)};
}

Representation partition_representation(const DistanceMatrix& dm, const Partition& p, int v) {
    if (v < 0 || v >= dm.size()) throw InvalidInput("vertex out of range: " + std::to_string(v));
    Representation coords(static_cast<std::size_t>(p.k()), -1);
    for (int b = 0; b < p.k(); ++b) {
        int best = -1;
        for (int q : p.blocks[static_cast<std::size_t>(b)]) {
            const int d = dm(v, q);
            if (best == -1 || (d != DistanceMatrix::kUnreachable && d < best)) best = d;
        }
        coords[static_cast<std::size_t>(b)] = best;
    }
    return coords;
}

ResolvingCheck is_resolving_partition(const DistanceMatrix& dm, const Partition& p) {
    const int n = dm.size();
    std::vector<std::pair<Representation, int>> reps;
    reps.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) reps.emplace_back(partition_representation(dm, p, v), v);
    std::sort(reps.begin(), reps.end());
    for (int i = 1; i < n; ++i) {
        if (reps[static_cast<std::size_t>(i)].first == reps[static_cast<std::size_t>(i - 1)].first) {
            const int a = reps[static_cast<std::size_t>(i - 1)].second;
            const int b = reps[static_cast<std::size_t>(i)].second;
            return {false, Edge{std::min(a, b), std::max(a, b)}};
        }
    }
    return {true, std::nullopt};
}

namespace {

// Half-point of cycle i: n_i/2 for even chains, ceil(n_i/2) for odd ones.
int half_pos(const ChainCycle& cc, int i) {
    const int n = cc.cycle_lengths[static_cast<std::size_t>(i - 1)];
    return cc.parity == Parity::Even ? n / 2 : (n + 1) / 2;
}

Partition paper_partition_impl(const ChainCycle& cc) {
    const int m = cc.m();
    std::vector<int> q1, q2;
    const int n1 = cc.cycle_lengths[0];
    const int h1 = half_pos(cc, 1);
    for (int j = 1; j <= n1; ++j)
        if (j != h1 && j != h1 + 1) q1.push_back(resolve_label(cc, 1, j));
    for (int i = 2; i <= m - 1; ++i) {
        const int n = cc.cycle_lengths[static_cast<std::size_t>(i - 1)];
        for (int j = half_pos(cc, i) + 3; j <= n; ++j) q2.push_back(resolve_label(cc, i, j));
    }
    q2.push_back(resolve_label(cc, m, cc.cycle_lengths[static_cast<std::size_t>(m - 1)]));
    std::vector<char> taken(static_cast<std::size_t>(cc.vertex_count()), 0);
    for (int v : q1) taken[static_cast<std::size_t>(v)] = 1;
    for (int v : q2) taken[static_cast<std::size_t>(v)] = 1;
    std::vector<int> q3;
    for (int v = 0; v < cc.vertex_count(); ++v)
        if (!taken[static_cast<std::size_t>(v)]) q3.push_back(v);
    return make_partition(cc.vertex_count(), {q1, q2, q3});
}

} // namespace

Partition paper_partition_even(const ChainCycle& cc) {
    if (cc.parity != Parity::Even) throw InvalidInput("parity: expected an even chain cycle");
    return paper_partition_impl(cc);
}

Partition paper_partition_odd(const ChainCycle& cc) {
    if (cc.parity != Parity::Odd) throw InvalidInput("parity: expected an odd chain cycle");
    return paper_partition_impl(cc);
}

Partition paper_partition(const ChainCycle& cc) {
    return cc.parity == Parity::Even ? paper_partition_even(cc) : paper_partition_odd(cc);
}

bool VertexClaims::conflicting() const {
    for (std::size_t a = 1; a < claims.size(); ++a)
        if (claims[a].value != claims[0].value) return true;
    return false;
}

bool VertexClaims::mismatched() const {
    return std::any_of(claims.begin(), claims.end(),
                       [&](const FormulaClaim& c) { return c.value != computed; });
}

namespace {

struct FormulaCase {
    std::string name;
    std::vector<std::tuple<int, int, Representation>> claims;  // (cycle, pos, value)
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// The piecewise representation formulas from the pd = 3 argument, expanded
// literally over their stated index ranges. Blocks written with a generic
// superscript but second-cycle constants are evaluated at i = 2 only. The
// block whose subscript offset n_i/2 + j exceeds n_i for its whole stated
// j-range covers no valid position and is omitted; the positions it was
// presumably meant for surface as coverage gaps.
std::vector<FormulaCase> even_formula_cases(const ChainCycle& cc) {
    const auto& ns = cc.cycle_lengths;
    const int m = cc.m();
    auto n = [&](int i) { return ns[static_cast<std::size_t>(i - 1)]; };
    auto half_sum = [&](int from, int to) {
        int s = 0;
        for (int k = from; k <= to; ++k) s += n(k) / 2;
        return s;
    };
    const int n1 = n(1);
    std::vector<FormulaCase> cases;

    cases.push_back({"r(v1_{n1/2})", {{1, n1 / 2, {1, 2, 0}}}});
    cases.push_back({"r(v1_{n1/2+1})", {{1, n1 / 2 + 1, {1, 1, 0}}}});
    cases.push_back({"r(vm_{nm})", {{m, n(m), {half_sum(2, m) + 2, 0, 1}}}});

    FormulaCase c1lo{"r(v1_j), 1<=j<=n1/2-1", {}};
    for (int j = 1; j <= n1 / 2 - 1; ++j)
        c1lo.claims.push_back({1, j, {0, n1 - j - 1, n1 - j - 3}});
    cases.push_back(std::move(c1lo));

    FormulaCase c1hi{"r(v1_j), n1/2+2<=j<=n1", {}};
    for (int j = n1 / 2 + 2; j <= n1; ++j)
        c1hi.claims.push_back({1, j, {0, j - n1 / 2, j - n1 / 2 - 1}});
    cases.push_back(std::move(c1hi));

    const int n2 = n(2);
    FormulaCase c2lo{"r(v2_j), 1<=j<=ceil(n2/4)", {}};
    for (int j = 1; j <= ceil_div(n2, 4); ++j) c2lo.claims.push_back({2, j, {j, j, 0}});
    cases.push_back(std::move(c2lo));

    FormulaCase c2hi{"r(v2_j), ceil(n2/4)+1<=j<=n2/2", {}};
    for (int j = ceil_div(n2, 4) + 1; j <= n2 / 2; ++j)
        c2hi.claims.push_back({2, j, {j, n2 / 2 - j + 2, 0}});
    cases.push_back(std::move(c2hi));

    FormulaCase cilo{"r(vi_j), 1<=j<=ceil(ni/4), 3<=i<=m", {}};
    FormulaCase cihi{"r(vi_j), ceil(ni/4)+1<=j<=ni/2, 3<=i<=m", {}};
    for (int i = 3; i <= m; ++i) {
        const int ni = n(i);
        for (int j = 1; j <= ceil_div(ni, 4); ++j)
            cilo.claims.push_back({i, j, {half_sum(3, m) + j, j, 0}});
        for (int j = ceil_div(ni, 4) + 1; j <= ni / 2; ++j)
            cihi.claims.push_back({i, j, {half_sum(3, m) + j, ni / 2 - j + 2, 0}});
    }
    cases.push_back(std::move(cilo));
    cases.push_back(std::move(cihi));

    FormulaCase mid{"r(vi_{ni/2+2}), 2<=i<=m-1", {}};
    for (int i = 2; i <= m - 1; ++i)
        mid.claims.push_back({i, n(i) / 2 + 2, {half_sum(2, m - 1), 1, 0}});
    cases.push_back(std::move(mid));

    FormulaCase c2q{"r(v2_j), n2/2+3<=j<=ceil(3n2/4)+1", {}};
    for (int j = n2 / 2 + 3; j <= ceil_div(3 * n2, 4) + 1; ++j)
        c2q.claims.push_back({2, j, {n2 + 2 - j, 0, j - n2 / 2 - 2}});
    cases.push_back(std::move(c2q));

    FormulaCase c2t{"r(v2_j), ceil(3n2/4)+2<=j<=n2", {}};
    for (int j = ceil_div(3 * n2, 4) + 2; j <= n2; ++j)
        c2t.claims.push_back({2, j, {n2 + 2 - j, 0, n2 + 1 - j}});
    cases.push_back(std::move(c2t));

    FormulaCase ciq{"r(vi_j), ni/2+3<=j<=ceil(3ni/4)+1, 3<=i<=m", {}};
    FormulaCase cit{"r(vi_j), ceil(3ni/4)+2<=j<=ni, 3<=i<=m", {}};
    for (int i = 3; i <= m; ++i) {
        const int ni = n(i);
        for (int j = ni / 2 + 3; j <= ceil_div(3 * ni, 4) + 1; ++j)
            ciq.claims.push_back({i, j, {half_sum(3, m) + ni - j, 0, j - ni / 2 - 2}});
        for (int j = ceil_div(3 * ni, 4) + 2; j <= ni; ++j)
            cit.claims.push_back({i, j, {half_sum(3, m) + ni - j, 0, ni + 1 - j}});
    }
    cases.push_back(std::move(ciq));
    cases.push_back(std::move(cit));
    return cases;
}

// Odd analogs. The middle-cycle offset block's subscript n_i/2 + 2 is
// fractional for odd n_i; it is evaluated at ceil(n_i/2) + 2, one past the
// attachment position, matching the even construction.
std::vector<FormulaCase> odd_formula_cases(const ChainCycle& cc) {
    const auto& ns = cc.cycle_lengths;
    const int m = cc.m();
    auto n = [&](int i) { return ns[static_cast<std::size_t>(i - 1)]; };
    auto floor_sum = [&](int from, int to) {
        int s = 0;
        for (int k = from; k <= to; ++k) s += n(k) / 2;
        return s;
    };
    auto ceil_sum = [&](int from, int to) {
        int s = 0;
        for (int k = from; k <= to; ++k) s += (n(k) + 1) / 2;
        return s;
    };
    const int n1 = n(1);
    const int h1 = (n1 + 1) / 2;
    std::vector<FormulaCase> cases;

    cases.push_back({"r(v1_{ceil(n1/2)})", {{1, h1, {1, 2, 0}}}});
    cases.push_back({"r(v1_{ceil(n1/2)+1})", {{1, h1 + 1, {1, 1, 0}}}});
    cases.push_back({"r(vm_{nm})", {{m, n(m), {floor_sum(2, m) + 2, 0, 1}}}});
    cases.push_back({"r(v1_1)", {{1, 1, {0, n1 - n1 / 2, n1 - n1 / 2 - 1}}}});

    FormulaCase c1lo{"r(v1_j), 2<=j<=ceil(n1/2)-1", {}};
    for (int j = 2; j <= h1 - 1; ++j) c1lo.claims.push_back({1, j, {0, n1 - j - 1, n1 - j - 3}});
    cases.push_back(std::move(c1lo));

    FormulaCase c1hi{"r(v1_j), ceil(n1/2)+2<=j<=n1", {}};
    for (int j = h1 + 2; j <= n1; ++j) c1hi.claims.push_back({1, j, {0, j - h1, j - h1 - 1}});
    cases.push_back(std::move(c1hi));

    const int n2 = n(2);
    const int h2 = (n2 + 1) / 2;
    FormulaCase c2lo{"r(v2_j), 1<=j<=ceil(n2/4)+1", {}};
    for (int j = 1; j <= ceil_div(n2, 4) + 1; ++j) c2lo.claims.push_back({2, j, {j, j, 0}});
    cases.push_back(std::move(c2lo));

    FormulaCase c2hi{"r(v2_j), ceil(n2/4)+2<=j<=ceil(n2/2)+1", {}};
    for (int j = ceil_div(n2, 4) + 2; j <= h2 + 1; ++j)
        c2hi.claims.push_back({2, j, {j, h2 - j + 3, 0}});
    cases.push_back(std::move(c2hi));

    FormulaCase cilo{"r(vi_j), 1<=j<=ceil(ni/4)+1, 3<=i<=m", {}};
    FormulaCase cihi{"r(vi_j), ceil(ni/4)+2<=j<=ceil(ni/2)+1, 3<=i<=m", {}};
    for (int i = 3; i <= m; ++i) {
        const int ni = n(i);
        const int hi = (ni + 1) / 2;
        for (int j = 1; j <= ceil_div(ni, 4) + 1; ++j)
            cilo.claims.push_back({i, j, {floor_sum(3, m) + j, j, 0}});
        for (int j = ceil_div(ni, 4) + 2; j <= hi + 1; ++j)
            cihi.claims.push_back({i, j, {floor_sum(3, m) + j, hi - j + 3, 0}});
    }
    cases.push_back(std::move(cilo));
    cases.push_back(std::move(cihi));

    FormulaCase mid{"r(vi_{ceil(ni/2)+2}), 2<=i<=m-1", {}};
    for (int i = 2; i <= m - 1; ++i)
        mid.claims.push_back({i, (n(i) + 1) / 2 + 2, {floor_sum(2, m - 1), 1, 0}});
    cases.push_back(std::move(mid));

    FormulaCase c2q{"r(v2_j), ceil(n2/2)+3<=j<=ceil(3n2/4)+1", {}};
    for (int j = h2 + 3; j <= ceil_div(3 * n2, 4) + 1; ++j)
        c2q.claims.push_back({2, j, {n2 + 2 - j, 0, j - h2 - 2}});
    cases.push_back(std::move(c2q));

    FormulaCase c2t{"r(v2_j), ceil(3n2/4)+2<=j<=n2", {}};
    for (int j = ceil_div(3 * n2, 4) + 2; j <= n2; ++j)
        c2t.claims.push_back({2, j, {n2 + 2 - j, 0, n2 + 1 - j}});
    cases.push_back(std::move(c2t));

    FormulaCase ciq{"r(vi_j), ceil(ni/2)+3<=j<=ceil(3ni/4)+1, 3<=i<=m", {}};
    FormulaCase cit{"r(vi_j), ceil(3ni/4)+2<=j<=ni, 3<=i<=m", {}};
    for (int i = 3; i <= m; ++i) {
        const int ni = n(i);
        const int hi = (ni + 1) / 2;
        for (int j = hi + 3; j <= ceil_div(3 * ni, 4) + 1; ++j)
            ciq.claims.push_back({i, j, {ceil_sum(3, m) + ni - j, 0, j - hi - 2}});
        for (int j = ceil_div(3 * ni, 4) + 2; j <= ni; ++j)
            cit.claims.push_back({i, j, {ceil_sum(3, m) + ni - j, 0, ni + 1 - j}});
    }
    cases.push_back(std::move(ciq));
    cases.push_back(std::move(cit));
    return cases;
}

} // namespace

ClaimReport claimed_representations(const ChainCycle& cc) {
    const DistanceMatrix dm = distance_matrix(cc.lg.graph);
    const Partition pi = paper_partition(cc);
    const auto cases =
        cc.parity == Parity::Even ? even_formula_cases(cc) : odd_formula_cases(cc);

    ClaimReport report;
    std::vector<int> index_of(static_cast<std::size_t>(cc.vertex_count()), -1);
    for (int i = 1; i <= cc.m(); ++i) {
        for (int j = 1; j <= cc.cycle_lengths[static_cast<std::size_t>(i - 1)]; ++j) {
            if (i > 1 && j == 1) continue;  // alias of the previous attachment
            const int v = resolve_label(cc, i, j);
            index_of[static_cast<std::size_t>(v)] = static_cast<int>(report.entries.size());
            VertexClaims e;
            e.vertex = v;
            e.label = cc.lg.label_of(v);
            e.computed = partition_representation(dm, pi, v);
            report.entries.push_back(std::move(e));
        }
    }
    for (const auto& fc : cases) {
        for (const auto& [i, j, value] : fc.claims) {
            const int v = resolve_label(cc, i, j);
            report.entries[static_cast<std::size_t>(index_of[static_cast<std::size_t>(v)])]
                .claims.push_back({fc.name, i, j, value});
        }
    }
    for (const auto& e : report.entries) {
        if (!e.covered()) {
            report.uncovered.push_back(e.vertex);
        } else {
            if (e.conflicting()) report.conflicting.push_back(e.vertex);
            if (e.mismatched())
                report.mismatched.push_back(e.vertex);
            else
                report.matched.push_back(e.vertex);
        }
    }
    return report;
}

namespace {

// Lexicographic restricted-growth-string enumeration over set partitions
// with exactly k blocks. f runs on complete assignments only; prefix states
// are never judged (growing a block can shrink block distances, so partial
// collisions are not final). Returning true from f stops the scan.
template <class F>
bool enumerate_k_partitions(int n, int k, F&& f) {
    if (n < 1 || k < 1 || k > n) return false;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int mx) -> bool {
        if (i == n) return mx == k - 1 && f(a);
        const int hi = std::min(mx + 1, k - 1);
        for (int c = 0; c <= hi; ++c) {
            const int nm = std::max(mx, c);
            if (k - 1 - nm > n - 1 - i) continue;  // cannot still open enough blocks
            a[static_cast<std::size_t>(i)] = c;
            if (self(self, i + 1, nm)) return true;
        }
        return false;
    };
    if (n == 1) return k == 1 && f(a);
    return rec(rec, 1, 0);
}

bool assignment_resolving(const DistanceMatrix& dm, const std::vector<int>& assign, int k,
                          std::vector<std::uint64_t>& keys) {
    const int n = dm.size();
    if (k <= 8) {  // n <= 16 keeps every distance under 255: pack rows into one word
        keys.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            std::array<int, 8> c;
            c.fill(255);
            for (int u = 0; u < n; ++u) {
                const int b = assign[static_cast<std::size_t>(u)];
                const int d = dm(v, u);
                if (d < c[static_cast<std::size_t>(b)]) c[static_cast<std::size_t>(b)] = d;
            }
            std::uint64_t key = 0;
            for (int b = 0; b < k; ++b)
                key = key << 8 | static_cast<std::uint64_t>(c[static_cast<std::size_t>(b)]);
            keys[static_cast<std::size_t>(v)] = key;
        }
        std::sort(keys.begin(), keys.end());
        for (int v = 1; v < n; ++v)
            if (keys[static_cast<std::size_t>(v)] == keys[static_cast<std::size_t>(v - 1)])
                return false;
        return true;
    }
    std::vector<Representation> reps(static_cast<std::size_t>(n),
                                     Representation(static_cast<std::size_t>(k), 1 << 20));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
            auto& slot = reps[static_cast<std::size_t>(v)][static_cast<std::size_t>(
                assign[static_cast<std::size_t>(u)])];
            slot = std::min(slot, dm(v, u));
        }
    std::sort(reps.begin(), reps.end());
    return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

} // namespace

std::optional<PdCertificate> partition_dimension_exact(const Graph& g, const DistanceMatrix& dm,
                                                       int k_max) {
    const int n = g.vertex_count();
    if (n < 2) throw InvalidInput("partition_dimension_exact requires n >= 2");
    if (!is_connected(g)) throw InvalidInput("partition_dimension_exact requires a connected graph");
    if (n > 16)
        throw InvalidInput("size gate: exact partition dimension is limited to n <= 16, got " +
                           std::to_string(n));
    if (k_max < 1) throw InvalidInput("k_max must be at least 1");

    std::vector<std::uint64_t> keys;
    for (int k = 1; k <= std::min(k_max, n); ++k) {
        std::vector<int> witness;
        const bool found = enumerate_k_partitions(n, k, [&](const std::vector<int>& a) {
            if (!assignment_resolving(dm, a, k, keys)) return false;
            witness = a;
            return true;
        });
        if (found) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
            for (int v = 0; v < n; ++v)
                blocks[static_cast<std::size_t>(witness[static_cast<std::size_t>(v)])].push_back(v);
            return PdCertificate{k, PdLowerBound::ExhaustiveNoK,
                                 make_partition(n, std::move(blocks))};
        }
    }
    return std::nullopt;
}

PdCertificate partition_dimension_chain(const ChainCycle& cc) {
    const DistanceMatrix dm = distance_matrix(cc.lg.graph);
    Partition pi = paper_partition(cc);
    const ResolvingCheck check = is_resolving_partition(dm, pi);
    if (!check.resolving) {
        const auto& [u, v] = *check.collision;
        throw ClaimViolation("explicit partition fails to resolve " + cc.lg.label_of(u) +
                             " and " + cc.lg.label_of(v));
    }
    if (is_path_graph(cc.lg.graph))
        throw ClaimViolation("chain cycle is a path; the pd >= 3 lower bound does not apply");
    return PdCertificate{pi.k(), PdLowerBound::NotAPath, std::move(pi)};
}

bool is_resolving_set(const DistanceMatrix& dm, std::span<const int> w) {
    if (w.empty()) throw InvalidInput("resolving set must be non-empty");
    for (int x : w)
        if (x < 0 || x >= dm.size())
            throw InvalidInput("vertex out of range: " + std::to_string(x));
    const int n = dm.size();
    std::vector<std::vector<int>> vecs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& row = vecs[static_cast<std::size_t>(v)];
        row.reserve(w.size());
        for (int x : w) row.push_back(dm(v, x));
    }
    std::sort(vecs.begin(), vecs.end());
    return std::adjacent_find(vecs.begin(), vecs.end()) == vecs.end();
}

int metric_dimension_exact(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw InvalidInput("metric_dimension_exact requires a connected graph");
    if (n > 16)
        throw InvalidInput("size gate: exact metric dimension is limited to n <= 16, got " +
                           std::to_string(n));
    if (n == 1) return 0;
    std::vector<int> comb;
    for (int t = 1; t <= n; ++t) {
        comb.resize(static_cast<std::size_t>(t));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            if (is_resolving_set(dm, comb)) return t;
            // next t-combination of {0..n-1} in lexicographic order
            int i = t - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - t + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < t; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return n;  // W = V always resolves; not reached
}

} // namespace chaincycle
