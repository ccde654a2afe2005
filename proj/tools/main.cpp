#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chaincycle/io.hpp"
#include "chaincycle/verify.hpp"

namespace {

using namespace chaincycle;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open output file: " + path);
    out << content;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidInput("bad " + what + " list: \"" + text + "\"");
        }
    }
    if (out.empty()) throw InvalidInput("empty " + what + " list");
    return out;
}

int cmd_build(const std::string& spec_text, const std::string& format, const std::string& out) {
    const BuiltGraph built = build_from_spec(parse_chain_spec(spec_text));
    if (format == "edgelist") {
        write_output(out, to_edge_list(built.lg.graph));
    } else if (format == "dot") {
        write_output(out, built.chain ? to_dot(*built.chain) : to_dot(built.lg));
    } else {
        throw InvalidInput("unknown format: " + format);
    }
    return 0;
}

int cmd_tables(int which, bool as_json, const std::string& out) {
    const ChainCycle cc = which == 1 ? build_even_chain_cycle({8, 10, 8})
                                     : build_odd_chain_cycle({5, 7, 5});
    const auto rows = representation_table(cc, paper_partition(cc));
    write_output(out, as_json ? table_to_json(rows).dump(2) + "\n" : table_to_tsv(rows));
    return 0;
}

int cmd_invariants(const std::string& spec_text, std::string pd_method, std::string sdim_method,
                   const std::string& out) {
    const BuiltGraph built = build_from_spec(parse_chain_spec(spec_text));
    if (pd_method.empty()) pd_method = built.chain ? "chain" : "exact";
    const Json report = invariant_report(built, InvariantOptions{pd_method, sdim_method});
    write_output(out, report.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& family, const std::string& ns, const std::string& ms,
               std::uint64_t seed, const std::string& out) {
    Parity parity;
    if (family == "even")
        parity = Parity::Even;
    else if (family == "odd")
        parity = Parity::Odd;
    else
        throw InvalidInput("family must be even or odd, got \"" + family + "\"");
    const VerificationRun run = run_verification(parity, parse_int_list(ns, "length"),
                                                 parse_int_list(ms, "cycle-count"), seed);
    write_output(out, verification_to_json(run).dump(2) + "\n");
    std::cerr << verification_summary(run);
    return run.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain-cycle graph invariants: builders, pd/sdim solvers and theorem sweeps"};
    app.require_subcommand(1);

    std::string build_spec, build_format = "edgelist", build_out;
    auto* build = app.add_subcommand("build", "build a graph and export it");
    build->add_option("spec", build_spec, "instance, e.g. even:8,10,8 / odd:5,7,5 / cycle:6")
        ->required();
    build->add_option("--format", build_format, "edgelist or dot")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    build->add_option("--out", build_out, "output file (default: stdout)");

    int tables_which = 1;
    bool tables_json = false;
    std::string tables_out;
    auto* tables = app.add_subcommand("tables", "print the representation table of a reference instance");
    tables->add_option("which", tables_which, "1 = even:8,10,8, 2 = odd:5,7,5")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    tables->add_flag("--json", tables_json, "emit JSON instead of TSV");
    tables->add_option("--out", tables_out, "output file (default: stdout)");

    std::string inv_spec, inv_pd, inv_sdim = "cover", inv_out;
    auto* inv = app.add_subcommand("invariants", "compute pd, sdim and the SRG report for one instance");
    inv->add_option("spec", inv_spec, "instance, e.g. even:8,10,8")->required();
    inv->add_option("--pd-method", inv_pd, "chain or exact (default: chain for chains)")
        ->check(CLI::IsMember({"chain", "exact"}));
    inv->add_option("--sdim-method", inv_sdim, "cover, brute or formula")
        ->check(CLI::IsMember({"cover", "brute", "formula"}));
    inv->add_option("--out", inv_out, "output file (default: stdout)");

    std::string ver_family, ver_ns, ver_ms, ver_out;
    std::uint64_t ver_seed = 0;
    auto* ver = app.add_subcommand("verify", "run the theorem sweep over a family grid");
    ver->add_option("--family", ver_family, "even or odd")->required();
    ver->add_option("--ns", ver_ns, "cycle lengths, e.g. 4,6,8,10")->required();
    ver->add_option("--ms", ver_ms, "cycle counts, e.g. 2,3,4")->required();
    ver->add_option("--seed", ver_seed, "recorded in the run report");
    ver->add_option("--out", ver_out, "JSON output file (default: stdout; summary goes to stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(build_spec, build_format, build_out);
        if (tables->parsed()) return cmd_tables(tables_which, tables_json, tables_out);
        if (inv->parsed()) return cmd_invariants(inv_spec, inv_pd, inv_sdim, inv_out);
        if (ver->parsed()) return cmd_verify(ver_family, ver_ns, ver_ms, ver_seed, ver_out);
    } catch (const chaincycle::ClaimViolation& e) {
        std::cerr << "claim violation: " << e.what() << "\n";
        return 1;
    } catch (const chaincycle::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
