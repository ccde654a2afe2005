#include "chaincycle/verify.hpp"

#include <algorithm>

namespace chaincycle {

bool InstanceCheck::pass() const {
    if (!partition_resolving || path_graph || pd_chain != 3) return false;
    if (pd_exact && *pd_exact != 3) return false;
    if (!srg_diff_empty || !cuts_isolated) return false;
    if (sdim_closed_form != alpha_srg || paper_cover_size != sdim_closed_form) return false;
    if (sdim_brute && *sdim_brute != sdim_closed_form) return false;
    return true;
}

InstanceCheck check_instance(const ChainCycle& cc) {
    InstanceCheck c;
    ChainSpec spec;
    spec.kind = cc.parity == Parity::Even ? ChainSpec::Kind::EvenChain : ChainSpec::Kind::OddChain;
    spec.lengths = cc.cycle_lengths;
    c.spec = spec.text();
    c.ns = cc.cycle_lengths;
    c.vertices = cc.vertex_count();
    c.edges = cc.lg.graph.edge_count();

    const DistanceMatrix dm = distance_matrix(cc.lg.graph);
    const Partition pi = paper_partition(cc);
    c.partition_resolving = is_resolving_partition(dm, pi).resolving;
    c.path_graph = is_path_graph(cc.lg.graph);
    c.pd_chain = (c.partition_resolving && !c.path_graph) ? pi.k() : 0;
    if (c.vertices <= 16) {
        const auto pd = partition_dimension_exact(cc.lg.graph, dm, 4);
        c.pd_exact = pd ? pd->value : -1;
    }

    const SrgReport srg = chain_srg_report(cc);
    c.srg_diff_empty = srg.diff_empty();
    c.diff_missing = srg.diff_missing.size();
    c.diff_extra = srg.diff_extra.size();
    c.cuts_isolated = true;
    for (const auto& [u, v] : srg.computed_edges)
        if (cc.is_cut(u) || cc.is_cut(v)) c.cuts_isolated = false;

    c.sdim_closed_form = sdim_formula(cc.parity, cc.cycle_lengths);
    c.alpha_srg = min_vertex_cover(srg.srg()).size;
    try {
        c.paper_cover_size = static_cast<int>(paper_cover(cc).size());
    } catch (const ClaimViolation&) {
        c.paper_cover_size = -1;
    }
    if (c.vertices <= 12)
        c.sdim_brute = strong_metric_dimension(cc.lg.graph, SdimRoute::BruteForce).value;

    const ClaimReport claims = claimed_representations(cc);
    c.claims_matched = claims.matched.size();
    c.claims_mismatched = claims.mismatched.size();
    c.claims_uncovered = claims.uncovered.size();
    c.claims_conflicting = claims.conflicting.size();
    return c;
}

VerificationRun run_verification(Parity family, const std::vector<int>& ns_range,
                                 const std::vector<int>& ms_range, std::uint64_t seed) {
    if (ns_range.empty() || ms_range.empty())
        throw InvalidInput("verification needs non-empty length and cycle-count ranges");
    for (int n : ns_range) {
        if (family == Parity::Even) {
            if (n % 2 != 0 || n < 4)
                throw InvalidInput("range: even sweep requires even lengths >= 4, got " +
                                   std::to_string(n));
        } else if (n % 2 == 0 || n < 5) {
            throw InvalidInput("range: odd sweep requires odd lengths >= 5, got " +
                               std::to_string(n));
        }
    }
    for (int m : ms_range)
        if (m < 2) throw InvalidInput("range: cycle counts must be >= 2, got " + std::to_string(m));

    VerificationRun run;
    run.family = family;
    run.ns_range = ns_range;
    run.ms_range = ms_range;
    run.seed = seed;
    for (int m : ms_range) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<int> ns;
            ns.reserve(static_cast<std::size_t>(m));
            for (std::size_t i : idx) ns.push_back(ns_range[i]);
            const ChainCycle cc = family == Parity::Even ? build_even_chain_cycle(ns)
                                                         : build_odd_chain_cycle(ns);
            run.instances.push_back(check_instance(cc));

            int pos = m - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == ns_range.size()) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    for (const auto& inst : run.instances)
        inst.pass() ? ++run.passed : ++run.failed;
    return run;
}

namespace {

Json instance_to_json(const InstanceCheck& c) {
    Json j;
    j["spec"] = c.spec;
    j["vertices"] = c.vertices;
    j["edges"] = c.edges;
    j["pd"] = Json{{"partition_resolving", c.partition_resolving},
                   {"path_graph", c.path_graph},
                   {"chain", c.pd_chain}};
    if (c.pd_exact) j["pd"]["exact"] = *c.pd_exact;
    j["srg"] = Json{{"diff_empty", c.srg_diff_empty},
                    {"diff_missing", c.diff_missing},
                    {"diff_extra", c.diff_extra},
                    {"cuts_isolated", c.cuts_isolated}};
    j["sdim"] = Json{{"formula", c.sdim_closed_form},
                     {"alpha", c.alpha_srg},
                     {"cover_size", c.paper_cover_size}};
    if (c.sdim_brute) j["sdim"]["brute"] = *c.sdim_brute;
    j["claims"] = Json{{"matched", c.claims_matched},
                       {"mismatched", c.claims_mismatched},
                       {"uncovered", c.claims_uncovered},
                       {"conflicting", c.claims_conflicting}};
    j["pass"] = c.pass();
    return j;
}

} // namespace

Json verification_to_json(const VerificationRun& run) {
    Json j;
    j["family"] = run.family == Parity::Even ? "even" : "odd";
    j["ns"] = run.ns_range;
    j["ms"] = run.ms_range;
    j["seed"] = run.seed;
    Json arr = Json::array();
    for (const auto& inst : run.instances) arr.push_back(instance_to_json(inst));
    j["instances"] = std::move(arr);
    j["summary"] = Json{{"total", run.instances.size()},
                        {"passed", run.passed},
                        {"failed", run.failed}};
    return j;
}

std::string verification_summary(const VerificationRun& run) {
    std::string out;
    for (const auto& c : run.instances) {
        out += c.spec;
        out += "  V=" + std::to_string(c.vertices);
        out += "  pd=" + std::to_string(c.pd_chain);
        if (c.pd_exact) out += "(exact " + std::to_string(*c.pd_exact) + ")";
        out += "  srg-diff=" + std::to_string(c.diff_missing + c.diff_extra);
        out += "  sdim " + std::to_string(c.sdim_closed_form) + "=" +
               std::to_string(c.alpha_srg) + "=" + std::to_string(c.paper_cover_size);
        if (c.sdim_brute) out += "=" + std::to_string(*c.sdim_brute);
        out += "  claims " + std::to_string(c.claims_matched) + "/" +
               std::to_string(c.claims_mismatched) + "/" + std::to_string(c.claims_uncovered) +
               "/" + std::to_string(c.claims_conflicting);
        out += c.pass() ? "  PASS\n" : "  FAIL\n";
    }
    out += std::to_string(run.instances.size()) + " instances: " + std::to_string(run.passed) +
           " passed, " + std::to_string(run.failed) + " failed\n";
    return out;
}

Json invariant_report(const BuiltGraph& built, const InvariantOptions& opts) {
    const LabeledGraph& lg = built.lg;
    const Graph& g = lg.graph;
    Json out;
    ChainSpec spec;
    if (built.chain) {
        spec.kind = built.chain->parity == Parity::Even ? ChainSpec::Kind::EvenChain
                                                        : ChainSpec::Kind::OddChain;
        spec.lengths = built.chain->cycle_lengths;
    } else {
        spec.kind = ChainSpec::Kind::Cycle;
        spec.lengths = {g.vertex_count()};
    }
    out["spec"] = spec.text();
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["diameter"] = diameter(g);

    const DistanceMatrix dm = distance_matrix(g);

    Json pd;
    if (opts.pd_method == "chain") {
        if (!built.chain) throw InvalidInput("pd method 'chain' needs a chain instance");
        const PdCertificate cert = partition_dimension_chain(*built.chain);
        pd["value"] = cert.value;
        pd["method"] = "chain";
        pd["lower_bound"] = "not_a_path";
        Json blocks = Json::array();
        for (const auto& b : cert.witness.blocks) blocks.push_back(labels_of(lg, b));
        pd["witness"] = std::move(blocks);
        pd["witness_resolving"] = true;
    } else if (opts.pd_method == "exact") {
        const auto cert = partition_dimension_exact(g, dm, g.vertex_count());
        pd["value"] = cert ? cert->value : -1;
        pd["method"] = "exact";
        pd["lower_bound"] = "exhaustive_no_smaller_k";
        if (cert) {
            Json blocks = Json::array();
            for (const auto& b : cert->witness.blocks) blocks.push_back(labels_of(lg, b));
            pd["witness"] = std::move(blocks);
        }
    } else {
        throw InvalidInput("unknown pd method: " + opts.pd_method);
    }
    out["pd"] = std::move(pd);

    const SrgReport srg = built.chain ? chain_srg_report(*built.chain)
                                      : strong_resolving_graph(g);
    const CoverResult cover = min_vertex_cover(srg.srg());

    Json sd;
    sd["method"] = opts.sdim_method;
    if (opts.sdim_method == "cover") {
        sd["value"] = cover.size;
    } else if (opts.sdim_method == "brute") {
        const SdimResult brute = strong_metric_dimension(g, SdimRoute::BruteForce);
        sd["value"] = brute.value;
        sd["witness"] = labels_of(lg, *brute.strong_resolving_set);
        sd["agrees_with_cover"] = brute.value == cover.size;
    } else if (opts.sdim_method == "formula") {
        if (!built.chain) throw InvalidInput("sdim method 'formula' needs a chain instance");
        const int f = sdim_formula(built.chain->parity, built.chain->cycle_lengths);
        sd["value"] = f;
        sd["agrees_with_cover"] = f == cover.size;
        sd["paper_cover_size"] = static_cast<int>(paper_cover(*built.chain).size());
    } else {
        throw InvalidInput("unknown sdim method: " + opts.sdim_method);
    }
    sd["alpha"] = cover.size;
    sd["independence_check"] = cover.independence_check;
    out["sdim"] = std::move(sd);

    out["srg"] = srg_report_to_json(lg, srg, &cover);
    if (built.chain) out["claims"] = claim_report_to_json(lg, claimed_representations(*built.chain));
    return out;
}

} // namespace chaincycle
