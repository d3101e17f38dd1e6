#include "lazycop/play.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lazycop/detail/cop_moves.hpp"
#include "lazycop/strategy.hpp"

namespace lazycop {

namespace {

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[static_cast<std::size_t>(s)];
        d[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int w : g.neighbors(queue[i]))
                if (d[static_cast<std::size_t>(w)] < 0) {
                    d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(queue[i])] + 1;
                    queue.push_back(w);
                }
    }
    return dist;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

struct Session {
    const Graph& g;
    Rules rules;
    const PlayOptions& opt;
    std::istream& in;
    std::ostream& out;
    WinTable wt;
    StrategyTable st;
    std::vector<std::vector<int>> dist;

    std::vector<int> cops;
    int robber = -1;

    Session(const Graph& graph, Rules r, const PlayOptions& o, std::istream& i, std::ostream& os)
        : g(graph),
          rules(r),
          opt(o),
          in(i),
          out(os),
          wt(solve_attractor(graph, r, o.state_budget)),
          st(extract_strategies(graph, r, wt)),
          dist(all_pairs_distances(graph)) {}

    bool robber_caught() const {
        return std::find(cops.begin(), cops.end(), robber) != cops.end();
    }

    std::uint32_t state(Turn t) const { return wt.index(cops, robber, t); }

    bool read_tokens(const std::string& prompt, std::vector<std::string>& toks) {
        out << prompt;
        std::string line;
        if (!std::getline(in, line)) return false;
        out << line << '\n';  // echo, so scripted replays print a full transcript
        toks.clear();
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) toks.push_back(t);
        return true;
    }

    // ---- engine policies ---------------------------------------------------

    std::vector<int> engine_cop_placement() {
        auto [win, witness] = cops_can_win(wt);
        if (win) return *witness;
        int buf[16];
        wt.unrank_placement(0, buf);
        return {buf, buf + rules.cops};
    }

    int engine_robber_placement() const {
        int best = 0;
        std::uint32_t best_rank = 0;
        for (int r = 0; r < g.n(); ++r) {
            const std::uint32_t rk = wt.rank(wt.index(cops, r, Turn::CopMove));
            if (rk == WinTable::kInfinity) return r;  // safe forever
            if (rk > best_rank) {
                best_rank = rk;
                best = r;
            }
        }
        return best;
    }

    void engine_cop_move() {
        const std::uint32_t idx = state(Turn::CopMove);
        if (wt.copwin(idx)) {
            const std::uint32_t succ = st.at(idx);
            const std::uint64_t pr = succ >> 1;
            const std::uint64_t p = pr / static_cast<std::uint64_t>(g.n());
            int buf[16];
            wt.unrank_placement(p, buf);
            cops.assign(buf, buf + rules.cops);
            return;
        }
        // lost position: deterministic greedy chase
        std::vector<int> best = cops;
        long long best_score = -1;
        for_each_cop_move(g, cops, rules.max_movers, [&](std::span<const int> c) {
            long long score = 0;
            for (int v : c) score += dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(robber)];
            std::vector<int> cand(c.begin(), c.end());
            if (best_score < 0 || score < best_score ||
                (score == best_score && cand < best)) {
                best_score = score;
                best = std::move(cand);
            }
        });
        cops = best;
    }

    void engine_robber_move() {
        const std::uint32_t idx = state(Turn::RobberMove);
        const std::uint32_t succ = st.at(idx);
        if (succ != StrategyTable::kNone) {
            robber = static_cast<int>((succ >> 1) % static_cast<std::uint64_t>(g.n()));
            return;
        }
        // cornered: maximally delaying option
        int best = robber;
        std::uint32_t best_rank = 0;
        bool first = true;
        for (int r2 : g.closed_neighbors(robber)) {
            const std::uint32_t rk = wt.rank(wt.index(cops, r2, Turn::CopMove));
            if (first || rk > best_rank) {
                best_rank = rk;
                best = r2;
                first = false;
            }
        }
        robber = best;
    }

    // ---- human input -------------------------------------------------------

    std::vector<std::vector<int>> legal_cop_moves() {
        std::vector<std::vector<int>> moves;
        for_each_cop_move(g, cops, rules.max_movers, [&](std::span<const int> c) {
            std::vector<int> v(c.begin(), c.end());
            if (std::find(moves.begin(), moves.end(), v) == moves.end()) moves.push_back(std::move(v));
        });
        std::sort(moves.begin(), moves.end());
        return moves;
    }

    bool human_cop_placement() {
        for (;;) {
            std::vector<std::string> toks;
            if (!read_tokens("cops, choose " + std::to_string(rules.cops) + " start vertices: ", toks))
                return false;
            std::vector<int> v;
            bool ok = toks.size() == static_cast<std::size_t>(rules.cops);
            for (const auto& t : toks) {
                try {
                    const int x = std::stoi(t);
                    ok = ok && x >= 0 && x < g.n();
                    v.push_back(x);
                } catch (...) {
                    ok = false;
                }
            }
            if (ok) {
                std::sort(v.begin(), v.end());
                cops = v;
                return true;
            }
            out << "enter " << rules.cops << " vertex ids in 0.." << g.n() - 1 << "\n";
        }
    }

    bool human_cop_move() {
        for (;;) {
            std::vector<std::string> toks;
            if (!read_tokens("cops, new placement (or 'pass'): ", toks)) return false;
            if (toks.size() == 1 && toks[0] == "pass") return true;
            std::vector<int> v;
            bool numeric = toks.size() == static_cast<std::size_t>(rules.cops);
            for (const auto& t : toks) {
                try {
                    v.push_back(std::stoi(t));
                } catch (...) {
                    numeric = false;
                }
            }
            if (numeric) {
                std::sort(v.begin(), v.end());
                const auto legal = legal_cop_moves();
                if (std::find(legal.begin(), legal.end(), v) != legal.end()) {
                    cops = v;
                    return true;
                }
            }
            out << "illegal move; legal placements:\n";
            for (const auto& mv : legal_cop_moves()) out << "  " << join(mv) << "\n";
        }
    }

    bool human_robber_placement() {
        for (;;) {
            std::vector<std::string> toks;
            if (!read_tokens("robber, choose a start vertex: ", toks)) return false;
            if (toks.size() == 1) {
                try {
                    const int r = std::stoi(toks[0]);
                    if (r >= 0 && r < g.n()) {
                        robber = r;
                        return true;
                    }
                } catch (...) {
                }
            }
            out << "enter one vertex id in 0.." << g.n() - 1 << "\n";
        }
    }

    bool human_robber_move() {
        for (;;) {
            print_robber_hint();
            std::vector<std::string> toks;
            if (!read_tokens("robber, move (neighbor id or 'stay'): ", toks)) return false;
            if (toks.size() == 1) {
                if (toks[0] == "stay") return true;
                try {
                    const int r = std::stoi(toks[0]);
                    if (r >= 0 && r < g.n() && (r == robber || g.adjacent(robber, r))) {
                        robber = r;
                        return true;
                    }
                } catch (...) {
                }
            }
            out << "legal: stay or one of " << join(g.neighbors(robber).to_vector()) << "\n";
        }
    }

    void print_robber_hint() {
        std::vector<int> safe;
        for (int r2 : g.closed_neighbors(robber))
            if (!wt.copwin(wt.index(cops, r2, Turn::CopMove))) safe.push_back(r2);
        if (!safe.empty()) out << "hint, safe moves: " << join(safe) << "\n";
    }

    void print_positions(int round) {
        out << "round " << round << " | cops: " << join(cops) << " | robber: " << robber << "\n";
    }

    int run() {
        out << "graph on " << g.n() << " vertices, " << rules.cops << " cop(s), at most "
            << rules.max_movers << " may move per turn\n";
        const bool winning = cops_can_win(wt).first;
        out << "engine analysis: the cops " << (winning ? "can" : "cannot")
            << " force a capture from the best placement\n";

        if (opt.human_is_robber) {
            cops = engine_cop_placement();
            out << "cops start at: " << join(cops) << "\n";
            if (!human_robber_placement()) return 1;
        } else {
            if (!human_cop_placement()) return 1;
            robber = engine_robber_placement();
            out << "robber starts at: " << robber << "\n";
        }
        if (robber_caught()) {
            out << "robber placed onto a cop: captured before the first move\n";
            return 0;
        }

        for (int round = 1; round <= opt.max_rounds; ++round) {
            print_positions(round);
            if (opt.human_is_robber)
                engine_cop_move();
            else if (!human_cop_move())
                return 1;
            out << "cops move to: " << join(cops) << "\n";
            if (robber_caught()) {
                out << "captured after " << round << " cop turn(s)\n";
                return 0;
            }
            if (opt.human_is_robber) {
                if (!human_robber_move()) return 1;
            } else {
                engine_robber_move();
            }
            out << "robber moves to: " << robber << "\n";
            if (robber_caught()) {
                out << "robber walked into a cop after " << round << " round(s)\n";
                return 0;
            }
        }
        out << "round cap " << opt.max_rounds << " reached without capture\n";
        return 0;
    }
};

}  // namespace

int run_play(const Graph& g, Rules rules, const PlayOptions& opt, std::istream& in,
             std::ostream& out) {
    rules.validate();
    Session s(g, rules, opt, in, out);
    return s.run();
}

}  // namespace lazycop
