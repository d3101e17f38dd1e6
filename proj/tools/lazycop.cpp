#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lazycop/bounds.hpp"
#include "lazycop/canonical.hpp"
#include "lazycop/enumerate.hpp"
#include "lazycop/graph6.hpp"
#include "lazycop/graphspec.hpp"
#include "lazycop/play.hpp"
#include "lazycop/scan.hpp"
#include "lazycop/strategy.hpp"
#include "lazycop/verify.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

using namespace lazycop;

namespace {

std::string placement_text(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

nlohmann::json outcome_json(const SolveOutcome& sv) {
    nlohmann::json j;
    j["cop_number"] = sv.cop_number;
    j["lazy_cop_number"] = sv.lazy_cop_number;
    j["domination_number"] = sv.domination_number;
    j["dismantlable"] = sv.dismantlable;
    nlohmann::json ct = nlohmann::json::object();
    for (const auto& [km, rounds] : sv.capture_times)
        ct[std::to_string(km.first) + "," + std::to_string(km.second)] = rounds;
    j["capture_times"] = ct;
    nlohmann::json wp = nlohmann::json::object();
    for (const auto& [km, placement] : sv.witness_placements)
        wp[std::to_string(km.first) + "," + std::to_string(km.second)] = placement;
    j["witness_placements"] = wp;
    nlohmann::json filters = nlohmann::json::array();
    for (const auto& v : sv.verdicts) filters.push_back(v.provenance);
    j["filters"] = filters;
    return j;
}

void print_outcome(const SolveOutcome& sv, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << outcome_json(sv).dump(2) << "\n";
        return;
    }
    out << "cop number         " << sv.cop_number << "\n";
    out << "lazy cop number    " << sv.lazy_cop_number << "\n";
    out << "domination number  " << sv.domination_number << "\n";
    out << "dismantlable       " << (sv.dismantlable ? "yes" : "no") << "\n";
    for (const auto& [km, rounds] : sv.capture_times)
        out << "capture time       k=" << km.first << " m=" << km.second << ": " << rounds
            << " cop turn(s)\n";
    for (const auto& [km, placement] : sv.witness_placements)
        out << "winning placement  k=" << km.first << " m=" << km.second << ": "
            << placement_text(placement) << "\n";
    for (const auto& v : sv.verdicts) out << "applied            " << v.provenance << "\n";
}

int cmd_solve(const std::string& spec, bool no_filters, const std::string& format,
              std::uint64_t budget) {
    const Graph g = parse_graph_spec(spec);
    if (!is_connected(g)) {
        std::cout << "warning: graph is disconnected; reporting per component\n";
        int idx = 0;
        for (const VertexSet& comp : components(g)) {
            auto [sub, old_ids] = induced_subgraph(g, comp);
            std::cout << "component " << idx++ << " (vertices " << placement_text(old_ids)
                      << "):\n";
            print_outcome(classify(sub, !no_filters, budget), format, std::cout);
        }
        return 0;
    }
    print_outcome(classify(g, !no_filters, budget), format, std::cout);
    return 0;
}

int cmd_strategy(const std::string& spec, int k, int m, const std::string& format,
                 const std::string& out_path, std::uint64_t budget) {
    const Graph g = parse_graph_spec(spec);
    const Rules rules{k, m};
    rules.validate();
    const WinTable wt = solve_attractor(g, rules, budget);
    const StrategyTable st = extract_strategies(g, rules, wt);
    auto [win, witness] = cops_can_win(wt);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error("cannot open output file: " + out_path);
        out = &file;
    }

    const int n = g.n();
    int cops[16];
    auto decode = [&](std::uint32_t idx) {
        const std::uint64_t pr = idx >> 1;
        return std::pair<std::uint64_t, int>{pr / static_cast<std::uint64_t>(n),
                                             static_cast<int>(pr % static_cast<std::uint64_t>(n))};
    };
    auto placement_of = [&](std::uint64_t p) {
        wt.unrank_placement(p, cops);
        return std::vector<int>(cops, cops + k);
    };

    nlohmann::json j;
    j["cops_win"] = win;
    if (win) {
        j["winning_placement"] = *witness;
        j["capture_time"] = capture_time(wt);
    }
    nlohmann::json moves = nlohmann::json::array();

    if (format == "text") {
        if (win)
            *out << "cops win; placement: " << placement_text(*witness) << "; capture time "
                 << capture_time(wt) << " cop turn(s)\n"
                 << "cop move table (cops | robber -> cops):\n";
        else
            *out << "cops lose; robber evasion table (cops | robber -> robber):\n";
    }
    for (std::uint64_t p = 0; p < wt.placement_count(); ++p) {
        const std::vector<int> from = placement_of(p);
        for (int r = 0; r < n; ++r) {
            if (win) {
                const std::uint32_t succ = st.at(wt.index(p, r, Turn::CopMove));
                if (succ == StrategyTable::kNone) continue;
                const std::vector<int> to = placement_of(decode(succ).first);
                if (format == "text")
                    *out << "  " << placement_text(from) << " | " << r << " -> "
                         << placement_text(to) << "\n";
                else
                    moves.push_back({{"cops", from}, {"robber", r}, {"cops_to", to}});
            } else {
                const std::uint32_t succ = st.at(wt.index(p, r, Turn::RobberMove));
                if (succ == StrategyTable::kNone) continue;
                const int to = decode(succ).second;
                if (format == "text")
                    *out << "  " << placement_text(from) << " | " << r << " -> " << to << "\n";
                else
                    moves.push_back({{"cops", from}, {"robber", r}, {"robber_to", to}});
            }
        }
    }
    if (format != "text") {
        j["moves"] = moves;
        *out << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cops-and-robbers solver and exhaustive verifier for small graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::uint64_t budget = default_state_budget();
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", budget, "state budget per solve")->envname("LAZYCOP_BUDGET");

    // solve
    auto* solve = app.add_subcommand("solve", "solve a single graph");
    std::vector<std::string> spec_tokens;
    bool no_filters = false;
    solve->add_option("spec", spec_tokens, "graph spec, e.g. 'rook 3' or a graph6 literal")
        ->required();
    solve->add_flag("--no-filters", no_filters, "skip reductions, run the exact solver only");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification");
    std::string verify_name;
    VerifyOptions vopt;
    verify->add_option("name", verify_name, "eight-vertices | main | rooks | counts")->required();
    verify->add_option("--out", vopt.checkpoint_path, "checkpoint path (JSONL)");
    verify->add_flag("--resume", vopt.resume, "resume from the checkpoint");
    verify->add_option("--workers", vopt.workers, "parallel classification workers");
    bool verify_no_filters = false;
    verify->add_flag("--no-filters", verify_no_filters, "classify without reductions");

    // scan / count
    auto add_constraint_flags = [](CLI::App* cmd, Constraints& c) {
        cmd->add_option("--n", c.n, "vertex count")->required();
        cmd->add_option("--min-deg", c.min_deg, "minimum degree");
        cmd->add_option("--max-deg", c.max_deg, "maximum degree");
        cmd->add_option("--min-edges", c.min_edges, "minimum edge count");
        cmd->add_option("--max-edges", c.max_edges, "maximum edge count");
    };
    auto* scan = app.add_subcommand("scan", "classify a whole graph family");
    ScanOptions sopt;
    add_constraint_flags(scan, sopt.constraints);
    bool scan_no_filters = false;
    long long random_count = 0;
    std::uint64_t seed = 1;
    std::string report_path, csv_path, g6_out;
    scan->add_option("--out", sopt.checkpoint_path, "checkpoint path (JSONL)");
    scan->add_flag("--resume", sopt.resume, "skip keys already in the checkpoint");
    scan->add_option("--workers", sopt.workers, "parallel classification workers");
    scan->add_flag("--no-filters", scan_no_filters, "classify without reductions");
    scan->add_option("--graph6-in", sopt.graph6_input, "classify graphs from a graph6 line file");
    scan->add_option("--random", random_count, "classify this many seeded random connected graphs");
    scan->add_option("--seed", seed, "seed for --random");
    scan->add_option("--report", report_path, "write the JSON report here");
    scan->add_option("--csv", csv_path, "write the histogram CSV here");

    auto* count = app.add_subcommand("count", "count isomorphism classes only");
    Constraints count_constraints;
    add_constraint_flags(count, count_constraints);
    count->add_option("--g6-out", g6_out, "write one graph6 line per class");

    // strategy
    auto* strategy = app.add_subcommand("strategy", "dump the optimal policy");
    std::vector<std::string> strat_spec;
    int strat_k = 1, strat_m = -1;
    std::string strat_out;
    strategy->add_option("spec", strat_spec, "graph spec")->required();
    strategy->add_option("-k,--cops", strat_k, "number of cops")->required();
    strategy->add_option("-m,--movers", strat_m, "max movers per turn (default k)");
    strategy->add_option("--out", strat_out, "write the dump here");

    // play
    auto* play = app.add_subcommand("play", "play against the engine in the terminal");
    std::vector<std::string> play_spec;
    int play_k = 1, play_m = -1, max_rounds = 100;
    std::string side = "robber", moves_file;
    play->add_option("spec", play_spec, "graph spec")->required();
    play->add_option("-k,--cops", play_k, "number of cops")->required();
    play->add_option("-m,--movers", play_m, "max movers per turn (default k)");
    play->add_option("--side", side, "human side: robber or cops")
        ->check(CLI::IsMember({"robber", "cops"}));
    play->add_option("--moves", moves_file, "scripted moves, one per line");
    play->add_option("--max-rounds", max_rounds, "round cap");

    CLI11_PARSE(app, argc, argv);

    auto join_spec = [](const std::vector<std::string>& toks) {
        std::string s;
        for (const auto& t : toks) {
            if (!s.empty()) s += ' ';
            s += t;
        }
        return s;
    };

    try {
        if (*solve) return cmd_solve(join_spec(spec_tokens), no_filters, format, budget);

        if (*verify) {
            vopt.use_filters = !verify_no_filters;
            vopt.state_budget = budget;
            const VerifyReport rep = run_verify(verify_name, vopt);
            std::cout << rep.render();
            return rep.ok() ? 0 : 2;
        }

        if (*scan) {
            sopt.use_filters = !scan_no_filters;
            sopt.state_budget = budget;
            if (sopt.constraints.n >= 10 && sopt.graph6_input.empty() && random_count == 0)
                std::cerr << "note: the exhaustive 10-vertex scan takes a long while\n";
            if (random_count > 0) {
                std::mt19937_64 rng(seed);
                for (long long i = 0; i < random_count; ++i)
                    sopt.explicit_graphs.push_back(random_connected_graph(sopt.constraints.n, rng));
            }
            const ScanReport rep = run_scan(sopt);
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                f << rep.to_json() << "\n";
            }
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                f << rep.histogram_csv();
            }
            std::cout << rep.to_json() << "\n";
            return rep.complete ? 0 : 2;
        }

        if (*count) {
            std::ofstream g6file;
            if (!g6_out.empty()) {
                g6file.open(g6_out);
                if (!g6file) throw Error("cannot open --g6-out file: " + g6_out);
            }
            long long total = 0;
            enumerate_connected(count_constraints, [&](const Graph& g) {
                ++total;
                if (g6file.is_open()) g6file << to_graph6(g) << "\n";
            });
            std::cout << total << "\n";
            return 0;
        }

        if (*strategy)
            return cmd_strategy(join_spec(strat_spec), strat_k, strat_m < 0 ? strat_k : strat_m,
                                format, strat_out, budget);

        if (*play) {
            PlayOptions popt;
            popt.human_is_robber = side == "robber";
            popt.max_rounds = max_rounds;
            popt.state_budget = budget;
            const Graph g = parse_graph_spec(join_spec(play_spec));
            const Rules rules{play_k, play_m < 0 ? play_k : play_m};
            if (!moves_file.empty()) {
                std::ifstream moves(moves_file);
                if (!moves) throw Error("cannot open moves file: " + moves_file);
                return run_play(g, rules, popt, moves, std::cout);
            }
#if defined(__unix__) || defined(__APPLE__)
            if (!isatty(fileno(stdin)))
                throw Error("stdin is not a terminal; pass a scripted --moves file");
#endif
            return run_play(g, rules, popt, std::cin, std::cout);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
