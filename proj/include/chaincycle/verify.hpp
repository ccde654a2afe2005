#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincycle/io.hpp"

namespace chaincycle {

/// Outcome of every per-instance check the sweep runs. Formula-vs-computed
/// representation mismatches are recorded but are not failures; everything
/// else is theorem-level.
struct InstanceCheck {
    std::string spec;
    std::vector<int> ns;
    int vertices = 0;
    int edges = 0;

    bool partition_resolving = false;
    bool path_graph = false;
    int pd_chain = 0;
    std::optional<int> pd_exact;  // present when n <= 16; -1 when nothing <= k_max resolves

    bool srg_diff_empty = false;
    std::size_t diff_missing = 0;
    std::size_t diff_extra = 0;
    bool cuts_isolated = false;

    int sdim_closed_form = 0;
    int alpha_srg = 0;
    int paper_cover_size = 0;  // -1 when the construction failed to cover
    std::optional<int> sdim_brute;  // present when n <= 12

    std::size_t claims_matched = 0;
    std::size_t claims_mismatched = 0;
    std::size_t claims_uncovered = 0;
    std::size_t claims_conflicting = 0;

    bool pass() const;
};

struct VerificationRun {
    Parity family = Parity::Even;
    std::vector<int> ns_range;
    std::vector<int> ms_range;
    std::uint64_t seed = 0;  // recorded for reproducibility of randomized sub-suites
    std::vector<InstanceCheck> instances;
    int passed = 0;
    int failed = 0;
};

InstanceCheck check_instance(const ChainCycle& cc);

/// Runs every instance in the cartesian product ns_range^m for each m in
/// ms_range, in range order. Validates the ranges against the family's
/// hypotheses (even: even lengths >= 4; odd: odd lengths >= 5; m >= 2).
VerificationRun run_verification(Parity family, const std::vector<int>& ns_range,
                                 const std::vector<int>& ms_range, std::uint64_t seed);

Json verification_to_json(const VerificationRun& run);
std::string verification_summary(const VerificationRun& run);

struct InvariantOptions {
    std::string pd_method;    // "chain" | "exact"
    std::string sdim_method;  // "cover" | "brute" | "formula"
};

/// Per-instance report: pd and sdim with certificates, SRG report with
/// cover, and (for chains) the formula claim ledger.
Json invariant_report(const BuiltGraph& built, const InvariantOptions& opts);

} // namespace chaincycle
