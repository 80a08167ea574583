#include "scc/generators.hpp"
#include "scc/io.hpp"
#include "scc/lll_solver.hpp"
#include "scc/oracle.hpp"
#include "scc/reductions.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadData = 65;

scc::Variant parse_variant(const std::string& name) {
    if (name == "auto")
        return scc::Variant::automatic;
    if (name == "greedy")
        return scc::Variant::greedy;
    if (name == "unique")
        return scc::Variant::unique;
    return scc::Variant::general;
}

std::string arc_line(const scc::ConflictInstance& inst, scc::EdgeId e) {
    const auto a = inst.arc(e);
    const auto c = inst.conflict(e);
    return "arc " + std::to_string(a.tail) + " " + std::to_string(a.head) + " " +
           std::to_string(c.at_tail) + " " + std::to_string(c.at_head);
}

int run_solve(const std::string& input, const std::string& output, std::uint64_t seed,
              std::optional<std::uint64_t> max_rounds, const std::string& variant,
              std::optional<double> p) {
    const auto inst = scc::parse_instance(scc::read_file(input));
    scc::SolverConfig config;
    config.variant = parse_variant(variant);
    config.seed = seed;
    config.max_rounds = max_rounds;
    config.probability_override = p;
    const auto report = scc::moser_tardos_solve(inst, config);
    std::cout << "outcome=" << scc::to_string(report.outcome) << "\n";
    std::cout << "rounds=" << report.rounds << "\n";
    std::cout << "resamples=" << report.resampled_vertices << "\n";
    std::cout << "p_used=" << std::setprecision(17) << report.p_used << "\n";
    std::cout << "variant_used=" << scc::to_string(report.variant_used) << "\n";
    if (report.coloring)
        scc::write_file(output, scc::emit_coloring(*report.coloring));
    switch (report.outcome) {
    case scc::Outcome::solved: return 0;
    case scc::Outcome::exhausted_rounds: return kExitExhausted;
    case scc::Outcome::infeasible_detected: return kExitVerifyFailure;
    }
    return kExitBadData;
}

int run_verify(const std::string& input, const std::string& coloring_path) {
    const auto inst = scc::parse_instance(scc::read_file(input));
    const auto col = scc::parse_coloring(scc::read_file(coloring_path), inst.vertex_count());
    std::vector<scc::EdgeId> violated;
    try {
        violated = scc::verify(inst, col);
    } catch (const std::invalid_argument& e) {
        // well-formed file, colors outside the instance palette
        std::cerr << "invalid coloring: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    for (const auto e : violated)
        std::cout << arc_line(inst, e) << "\n";
    return violated.empty() ? 0 : kExitVerifyFailure;
}

int run_chicon(const std::string& input, std::uint32_t max_k) {
    const auto raw = scc::parse_raw_instance(scc::read_file(input));
    const auto result = scc::adversarial_chi_con(raw.graph, max_k);
    if (!result) {
        std::cout << "none <= " << max_k << "\n";
        return kExitVerifyFailure;
    }
    std::cout << *result << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-conflict coloring toolkit"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    std::string solve_input, solve_output;
    std::uint64_t solve_seed = 0;
    std::optional<std::uint64_t> solve_rounds;
    std::string solve_variant = "auto";
    std::optional<double> solve_p;
    solve->add_option("--input", solve_input, "instance file")->required();
    solve->add_option("--output", solve_output, "coloring file to write")->required();
    solve->add_option("--seed", solve_seed, "RNG seed");
    solve->add_option("--max-rounds", solve_rounds, "resampling round budget (default 1000*n)");
    solve->add_option("--variant", solve_variant, "auto|greedy|unique|general")
        ->check(CLI::IsMember({"auto", "greedy", "unique", "general"}));
    solve->add_option("--p", solve_p, "override the inventory inclusion probability");

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against an instance");
    std::string verify_input, verify_coloring;
    verify_cmd->add_option("--input", verify_input, "instance file")->required();
    verify_cmd->add_option("--coloring", verify_coloring, "coloring file")->required();

    auto* bounds = app.add_subcommand("bounds", "evaluate a sufficient color count");
    std::string bounds_mode;
    std::uint32_t bounds_d = 0, bounds_delta = 0, bounds_mu = 0, bounds_r = 0;
    bounds->add_option("--mode", bounds_mode,
                       "max-degree|degenerate|multiplicity|restrictiveness|cooperative")
        ->required();
    bounds->add_option("--d", bounds_d, "degeneracy / max out-degree")->required();
    bounds->add_option("--delta", bounds_delta, "maximum degree")->required();
    bounds->add_option("--mu", bounds_mu, "edge multiplicity");
    bounds->add_option("--r", bounds_r, "restrictiveness");

    auto* oracle = app.add_subcommand("oracle", "exact desk-scale solvers");
    oracle->require_subcommand(1);
    auto* chicon = oracle->add_subcommand("chicon", "adversarial single-conflict chromatic number");
    std::string chicon_input;
    std::uint32_t chicon_max_k = 0;
    chicon->add_option("--input", chicon_input, "instance file (conflicts ignored)")->required();
    chicon->add_option("--max-k", chicon_max_k, "largest color count to try")->required();

    auto* gen = app.add_subcommand("gen", "random generators (instance file on stdout)");
    gen->require_subcommand(1);

    auto* gen_deg = gen->add_subcommand("degenerate", "random graph of bounded degeneracy");
    std::uint32_t deg_n = 0, deg_d = 0;
    std::uint64_t deg_seed = 0;
    gen_deg->add_option("--n", deg_n, "vertex count")->required();
    gen_deg->add_option("--d", deg_d, "degeneracy target")->required();
    gen_deg->add_option("--seed", deg_seed, "RNG seed");

    auto* gen_con = gen->add_subcommand("conflicts", "random conflicts on an existing graph");
    std::string con_input;
    std::uint32_t con_k = 0, con_mu = 0;
    std::uint64_t con_seed = 0;
    gen_con->add_option("--input", con_input, "instance file supplying the graph")->required();
    gen_con->add_option("--k", con_k, "color count")->required();
    gen_con->add_option("--seed", con_seed, "RNG seed");
    gen_con->add_option("--mu", con_mu, "duplicate each edge up to this multiplicity");

    auto* gen_for = gen->add_subcommand("forests", "forest family as one adapted instance");
    std::uint32_t for_count = 0, for_n = 0, for_degree = 0;
    std::uint64_t for_seed = 0;
    gen_for->add_option("--count", for_count, "number of forests")->required();
    gen_for->add_option("--n", for_n, "shared vertex count")->required();
    gen_for->add_option("--max-degree", for_degree, "per-forest degree cap")->required();
    gen_for->add_option("--seed", for_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(solve))
            return run_solve(solve_input, solve_output, solve_seed, solve_rounds, solve_variant,
                             solve_p);
        if (app.got_subcommand(verify_cmd))
            return run_verify(verify_input, verify_coloring);
        if (app.got_subcommand(bounds)) {
            const auto mode = scc::bound_mode_from_string(bounds_mode);
            if (!mode) {
                std::cerr << "unknown bound mode `" << bounds_mode << "`\n";
                return kExitUsage;
            }
            std::cout << scc::min_colors_bound(*mode, bounds_d, bounds_delta, bounds_mu, bounds_r)
                      << "\n";
            return 0;
        }
        if (app.got_subcommand(oracle))
            return run_chicon(chicon_input, chicon_max_k);
        if (app.got_subcommand(gen)) {
            if (gen->got_subcommand(gen_deg)) {
                const auto g = scc::gen_degenerate(deg_n, deg_d, deg_seed);
                std::vector<scc::ArcSpec> arcs;
                for (const auto& e : g.edges())
                    arcs.push_back({e.u, e.v, 0, 0});
                std::cout << scc::emit_instance(
                    scc::make_normalized_instance(g.vertex_count(), 1, arcs));
                return 0;
            }
            if (gen->got_subcommand(gen_con)) {
                const auto raw = scc::parse_raw_instance(scc::read_file(con_input));
                std::cout << scc::emit_instance(
                    scc::gen_conflicts(raw.graph, con_k, con_mu, con_seed));
                return 0;
            }
            const auto fam = scc::gen_forest_family(for_count, for_n, for_degree, for_seed);
            std::cout << scc::emit_instance(scc::adapted_to_scc(scc::coop_to_adapted(fam)));
            return 0;
        }
    } catch (const scc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadData;
    }
    return kExitUsage;
}
