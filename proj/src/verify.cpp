#include "lazycop/verify.hpp"

#include <sstream>

#include "lazycop/graph6.hpp"

namespace lazycop {

namespace {

// connected graph classes on 1..9 vertices
constexpr long long kConnectedCounts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};

VerifyLine check(const std::string& name, bool ok, const std::string& detail) {
    return {name, ok, detail};
}

ScanReport scan_order(int n, const VerifyOptions& opt, const std::string& ckpt) {
    ScanOptions s;
    s.constraints.n = n;
    s.use_filters = opt.use_filters;
    s.workers = opt.workers;
    s.checkpoint_path = ckpt;
    s.resume = opt.resume;
    s.state_budget = opt.state_budget;
    return run_scan(s);
}

}  // namespace

std::string VerifyReport::render() const {
    std::ostringstream out;
    for (const auto& l : lines)
        out << (l.ok ? "[pass] " : "[FAIL] ") << l.name << ": " << l.detail << '\n';
    out << (ok() ? "all checks passed" : "CHECKS FAILED") << '\n';
    return out.str();
}

VerifyReport verify_rooks(const VerifyOptions& opt) {
    VerifyReport rep;
    for (int n = 2; n <= 5; ++n) {
        const Graph r = rooks(n);
        const SolveOutcome sv = classify(r, opt.use_filters, opt.state_budget);
        std::ostringstream detail;
        detail << "c=" << sv.cop_number << " c_L=" << sv.lazy_cop_number
               << " gamma=" << sv.domination_number;
        rep.lines.push_back(check("rooks " + std::to_string(n),
                                  sv.cop_number == 2 && sv.lazy_cop_number == n &&
                                      sv.domination_number == n,
                                  detail.str()));
    }
    return rep;
}

VerifyReport verify_eight_vertices(const VerifyOptions& opt) {
    VerifyReport rep;
    for (int n = 2; n <= 8; ++n) {
        std::string ckpt;
        if (!opt.checkpoint_path.empty())
            ckpt = opt.checkpoint_path + ".n" + std::to_string(n) + ".jsonl";
        const ScanReport r = scan_order(n, opt, ckpt);
        std::ostringstream detail;
        detail << r.total << " graphs, max c_L=" << r.max_lazy();
        rep.lines.push_back(check("order " + std::to_string(n),
                                  r.total == kConnectedCounts[n] && r.max_lazy() <= 2,
                                  detail.str()));
    }
    return rep;
}

VerifyReport verify_main(const VerifyOptions& opt) {
    VerifyReport rep;
    const ScanReport r = scan_order(9, opt, opt.checkpoint_path);
    {
        std::ostringstream detail;
        detail << r.total << " graphs";
        rep.lines.push_back(check("census size", r.total == kConnectedCounts[9], detail.str()));
    }
    const long long three = r.count_with_lazy(3);
    rep.lines.push_back(
        check("c_L=3 count", three == 1, std::to_string(three) + " graph(s) with c_L=3"));
    rep.lines.push_back(check("no c_L>3", r.max_lazy() <= 3,
                              "max c_L=" + std::to_string(r.max_lazy())));
    if (auto witness = r.witness_with_lazy(3)) {
        const bool is_rooks = are_isomorphic(parse_graph6(*witness), rooks(3));
        rep.lines.push_back(check("witness is the 3x3 rooks graph", is_rooks, *witness));
    } else {
        rep.lines.push_back(check("witness is the 3x3 rooks graph", false, "no witness found"));
    }
    return rep;
}

VerifyReport verify_counts(const VerifyOptions& opt) {
    VerifyReport rep;
    ScanOptions s;
    s.constraints.n = 9;
    s.constraints.min_deg = 2;
    s.constraints.max_deg = 3;
    s.constraints.min_edges = 10;
    s.constraints.max_edges = 13;
    s.use_filters = opt.use_filters;
    s.workers = opt.workers;
    s.checkpoint_path = opt.checkpoint_path;
    s.resume = opt.resume;
    s.state_budget = opt.state_budget;
    const ScanReport r = run_scan(s);
    rep.lines.push_back(check("census size", r.total == 147, std::to_string(r.total) + " graphs"));
    rep.lines.push_back(check("all c_L <= 2", r.max_lazy() <= 2,
                              "max c_L=" + std::to_string(r.max_lazy())));
    return rep;
}

VerifyReport run_verify(const std::string& name, const VerifyOptions& opt) {
    if (name == "rooks") return verify_rooks(opt);
    if (name == "eight-vertices") return verify_eight_vertices(opt);
    if (name == "main") return verify_main(opt);
    if (name == "counts") return verify_counts(opt);
    throw Error("unknown verification '" + name +
                "' (expected eight-vertices, main, rooks, or counts)");
}

}  // namespace lazycop
