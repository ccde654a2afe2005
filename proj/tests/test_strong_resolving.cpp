#include <doctest.h>

#include <algorithm>
#include <set>

#include "chaincycle/strong_resolving.hpp"
#include "support/oracles.hpp"

using namespace chaincycle;

namespace {

std::set<std::pair<std::string, std::string>> edge_names(const ChainCycle& cc,
                                                         const std::vector<Edge>& edges) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [u, v] : edges) {
        std::string a = cc.lg.label_of(u), b = cc.lg.label_of(v);
        if (b < a) std::swap(a, b);
        out.emplace(a, b);
    }
    return out;
}

} // namespace

TEST_CASE("is_maximally_distant") {
    const Graph c6 = build_cycle(6).graph;
    const auto dm = distance_matrix(c6);
    CHECK(is_maximally_distant(dm, c6, 0, 3));
    CHECK(is_maximally_distant(dm, c6, 3, 0));
    CHECK_FALSE(is_maximally_distant(dm, c6, 0, 1));
    CHECK_THROWS_AS(is_maximally_distant(dm, c6, 0, 9), InvalidInput);
}

TEST_CASE("cut vertices are never mutually maximally distant") {
    for (const auto& cc : {build_even_chain_cycle({4, 6, 8}), build_even_chain_cycle({8, 10, 8})}) {
        const auto dm = distance_matrix(cc.lg.graph);
        const auto pairs = mmd_pairs(cc.lg.graph, dm);
        for (int x : cc.cut_vertices) {
            bool md_both_ways_somewhere = false;
            for (const auto& [u, v] : pairs)
                if (u == x || v == x) md_both_ways_somewhere = true;
            CHECK_FALSE(md_both_ways_somewhere);
            // at least one direction of the MD test fails against every partner
            for (int y = 0; y < cc.vertex_count(); ++y) {
                if (y == x) continue;
                const bool mmd = is_maximally_distant(dm, cc.lg.graph, x, y) &&
                                 is_maximally_distant(dm, cc.lg.graph, y, x);
                CHECK_FALSE(mmd);
            }
        }
    }
}

TEST_CASE("mmd_pairs on cycles") {
    for (int n = 3; n <= 12; ++n) {
        const Graph c = build_cycle(n).graph;
        const auto dm = distance_matrix(c);
        const auto pairs = mmd_pairs(c, dm);
        std::set<Edge> expected;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (dm(u, v) == n / 2) expected.emplace(u, v);
        CHECK(std::set<Edge>(pairs.begin(), pairs.end()) == expected);
    }
    CHECK(mmd_pairs(build_cycle(5).graph, distance_matrix(build_cycle(5).graph)).size() == 5);
}

TEST_CASE("mmd_pairs agrees with the definition oracle on random graphs") {
    std::uint64_t state = 2024;
    for (int t = 0; t < 15; ++t) {
        const Graph g = oracle::random_connected_graph(state, oracle::rand_int(state, 2, 9));
        CHECK(mmd_pairs(g, distance_matrix(g)) == oracle::brute_mmd_pairs(g));
    }
}

TEST_CASE("strong_resolving_graph") {
    const SrgReport rep = strong_resolving_graph(build_cycle(8).graph);
    CHECK(rep.computed_edges.size() == 4);  // antipodal perfect matching
    CHECK(rep.isolated_vertices.empty());
    std::set<int> touched;
    for (const auto& [u, v] : rep.computed_edges) {
        touched.insert(u);
        touched.insert(v);
    }
    CHECK(touched.size() == 8);

    const ChainCycle cc = build_even_chain_cycle({4, 4});
    const SrgReport chain_rep = strong_resolving_graph(cc.lg.graph);
    CHECK(chain_rep.isolated_vertices == cc.cut_vertices);
}

TEST_CASE("predicted SRG, even family") {
    const ChainCycle small = build_even_chain_cycle({4, 4});
    const auto predicted = predicted_srg_even(small);
    CHECK(predicted.size() == 3);
    CHECK(edge_names(small, predicted) ==
          std::set<std::pair<std::string, std::string>>{
              {"v1_2", "v1_4"}, {"v2_2", "v2_4"}, {"v1_1", "v2_3"}});

    for (const auto& cc : {build_even_chain_cycle({8, 10, 8}), build_even_chain_cycle({4, 6, 8, 10})}) {
        const SrgReport rep = chain_srg_report(cc);
        CHECK(rep.diff_empty());
        // the cross edge never touches a cut vertex
        for (const auto& [u, v] : *rep.predicted_edges) {
            CHECK_FALSE(cc.is_cut(u));
            CHECK_FALSE(cc.is_cut(v));
        }
    }
    CHECK_THROWS_AS(predicted_srg_even(build_odd_chain_cycle({5, 5})), InvalidInput);
}

TEST_CASE("predicted SRG, odd family") {
    const ChainCycle two = build_odd_chain_cycle({5, 5});
    const SrgReport rep2 = chain_srg_report(two);
    CHECK(rep2.diff_empty());

    const ChainCycle cc = build_odd_chain_cycle({5, 7, 5});
    const SrgReport rep = chain_srg_report(cc);
    CHECK(rep.diff_empty());
    const auto names = edge_names(cc, *rep.predicted_edges);
    // B2 pairs the chain's first two vertices with the interior midpoint
    CHECK(names.count({"v1_1", "v2_4"}) == 1);
    CHECK(names.count({"v1_2", "v2_4"}) == 1);
    // B4 needs two distinct interior cycles; empty at m = 3
    CHECK(names.count({"v2_2", "v2_4"}) == 0);

    const ChainCycle four = build_odd_chain_cycle({5, 5, 5, 5});
    CHECK(chain_srg_report(four).diff_empty());

    CHECK_THROWS_AS(predicted_srg_odd(build_even_chain_cycle({4, 4})), InvalidInput);
    CHECK_THROWS_AS(predicted_srg_odd(build_odd_chain_cycle({3, 5})), InvalidInput);
}

TEST_CASE("min_vertex_cover") {
    CHECK(min_vertex_cover(build_graph(2, {{0, 1}})).size == 1);

    const Graph p5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const CoverResult p5cov = min_vertex_cover(p5);
    CHECK(p5cov.size == 2);
    CHECK(p5cov.size == oracle::brute_min_vertex_cover(p5));
    CHECK(p5cov.independence_check == 3);
    for (const auto& [u, v] : p5.edges())
        CHECK((std::binary_search(p5cov.cover.begin(), p5cov.cover.end(), u) ||
               std::binary_search(p5cov.cover.begin(), p5cov.cover.end(), v)));

    const ChainCycle cc = build_even_chain_cycle({4, 4});
    CHECK(min_vertex_cover(strong_resolving_graph(cc.lg.graph).srg()).size == 3);

    CHECK(min_vertex_cover(build_graph(4, {})).size == 0);
}

TEST_CASE("min_vertex_cover matches the subset-scan oracle on random graphs") {
    std::uint64_t state = 31337;
    for (int t = 0; t < 15; ++t) {
        const Graph g = oracle::random_connected_graph(state, oracle::rand_int(state, 2, 9));
        const CoverResult cov = min_vertex_cover(g);
        CHECK(cov.size == oracle::brute_min_vertex_cover(g));
        for (const auto& [u, v] : g.edges())
            CHECK((std::binary_search(cov.cover.begin(), cov.cover.end(), u) ||
                   std::binary_search(cov.cover.begin(), cov.cover.end(), v)));
    }
}

TEST_CASE("cover and independence numbers sum to n") {
    std::uint64_t state = 555;
    for (int t = 0; t < 15; ++t) {
        const Graph g = oracle::random_connected_graph(state, oracle::rand_int(state, 2, 9));
        CHECK(min_vertex_cover(g).size + oracle::brute_max_independent_set(g) ==
              g.vertex_count());
        const Graph srg = strong_resolving_graph(g).srg();
        CHECK(min_vertex_cover(srg).size + oracle::brute_max_independent_set(srg) ==
              srg.vertex_count());
    }
}

TEST_CASE("strongly_resolves") {
    const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto dmp = distance_matrix(p4);
    CHECK(strongly_resolves(dmp, 0, 1, 2));  // both lie on the 0-3 geodesic

    const Graph c4 = build_cycle(4).graph;
    const auto dmc = distance_matrix(c4);
    CHECK_FALSE(strongly_resolves(dmc, 1, 0, 2));  // w adjacent to both ends of an antipodal pair
    CHECK(strongly_resolves(dmc, 0, 0, 2));        // w = u

    CHECK_THROWS_AS(strongly_resolves(dmc, 0, 1, 1), InvalidInput);
}

TEST_CASE("is_strong_resolving_set") {
    const Graph c6 = build_cycle(6).graph;
    const auto dm = distance_matrix(c6);
    std::vector<int> all = {0, 1, 2, 3, 4, 5};
    CHECK(is_strong_resolving_set(dm, all));
    const std::vector<int> antipodal = {0, 3};
    CHECK_FALSE(is_strong_resolving_set(dm, antipodal));  // sdim(C_6) = 3
    CHECK_THROWS_AS(is_strong_resolving_set(dm, std::vector<int>{}), InvalidInput);
}

TEST_CASE("strong_metric_dimension routes") {
    const Graph c6 = build_cycle(6).graph;
    CHECK(strong_metric_dimension(c6, SdimRoute::CoverOfSrg).value == 3);
    CHECK(strong_metric_dimension(c6, SdimRoute::BruteForce).value == 3);

    const ChainCycle even = build_even_chain_cycle({4, 4});
    CHECK(strong_metric_dimension(even.lg.graph, SdimRoute::CoverOfSrg).value == 3);
    CHECK(strong_metric_dimension(even.lg.graph, SdimRoute::BruteForce).value == 3);

    const ChainCycle odd = build_odd_chain_cycle({5, 5});
    const SdimResult brute = strong_metric_dimension(odd.lg.graph, SdimRoute::BruteForce);
    CHECK(brute.value == 5);
    CHECK(strong_metric_dimension(odd.lg.graph, SdimRoute::CoverOfSrg).value == 5);
    CHECK(sdim_formula(Parity::Odd, {5, 5}) == 5);
    REQUIRE(brute.strong_resolving_set.has_value());
    CHECK(is_strong_resolving_set(distance_matrix(odd.lg.graph), *brute.strong_resolving_set));

    const ChainCycle big = build_even_chain_cycle({8, 10, 8});
    CHECK_THROWS_WITH_AS(strong_metric_dimension(big.lg.graph, SdimRoute::BruteForce),
                         doctest::Contains("size gate"), InvalidInput);
    CHECK_THROWS_AS(strong_metric_dimension(c6, SdimRoute::ClosedForm), InvalidInput);
    CHECK_THROWS_AS(strong_metric_dimension(build_graph(4, {{0, 1}, {2, 3}}),
                                            SdimRoute::CoverOfSrg),
                    InvalidInput);
}

TEST_CASE("sdim_formula") {
    CHECK(sdim_formula(Parity::Even, {8, 10, 8}) == 11);
    CHECK(sdim_formula(Parity::Odd, {5, 7, 5}) == 8);
    CHECK(sdim_formula(Parity::Even, {4, 4}) == 3);
    CHECK_THROWS_WITH_AS(sdim_formula(Parity::Odd, {3, 5}), doctest::Contains("parity"),
                         InvalidInput);
    CHECK_THROWS_AS(sdim_formula(Parity::Even, {4, 5}), InvalidInput);
    CHECK_THROWS_AS(sdim_formula(Parity::Even, {4}), InvalidInput);
}

TEST_CASE("paper_cover") {
    const ChainCycle even = build_even_chain_cycle({4, 4});
    const auto cov = paper_cover(even);
    std::set<std::string> names;
    for (int v : cov) names.insert(even.lg.label_of(v));
    CHECK(names == std::set<std::string>{"v1_1", "v1_2", "v2_2"});

    CHECK(paper_cover(build_odd_chain_cycle({5, 5})).size() == 5);
    CHECK_THROWS_AS(paper_cover(build_odd_chain_cycle({3, 3})), InvalidInput);

    for (const auto& cc :
         {build_even_chain_cycle({6, 8}), build_even_chain_cycle({4, 6, 8}),
          build_odd_chain_cycle({7, 9}), build_odd_chain_cycle({5, 7, 9, 5})}) {
        const auto s = paper_cover(cc);
        CHECK(static_cast<int>(s.size()) == sdim_formula(cc.parity, cc.cycle_lengths));
        CHECK(static_cast<int>(s.size()) ==
              min_vertex_cover(strong_resolving_graph(cc.lg.graph).srg()).size);
    }
}

TEST_CASE("brute-force sdim equals the SRG cover number on random graphs") {
    std::uint64_t state = 808;
    for (int t = 0; t < 12; ++t) {
        const Graph g = oracle::random_connected_graph(state, oracle::rand_int(state, 2, 8));
        CHECK(strong_metric_dimension(g, SdimRoute::BruteForce).value ==
              strong_metric_dimension(g, SdimRoute::CoverOfSrg).value);
    }
}
