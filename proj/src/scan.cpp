#include "lazycop/scan.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lazycop/canonical.hpp"
#include "lazycop/graph6.hpp"

namespace lazycop {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string ct_key(int k, int m) {
    return std::to_string(k) + "," + std::to_string(m);
}

}  // namespace

std::string CheckpointRecord::to_json_line() const {
    nlohmann::json j;
    j["g6"] = g6;
    j["c"] = c;
    j["cl"] = cl;
    j["gamma"] = gamma;
    j["ct"] = ct;
    j["ts"] = ts;
    return j.dump();
}

std::optional<CheckpointRecord> CheckpointRecord::parse_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("g6") || !j["g6"].is_string() || !j.contains("c") || !j.contains("cl") ||
        !j.contains("gamma"))
        return std::nullopt;
    try {
        CheckpointRecord r;
        r.g6 = j["g6"].get<std::string>();
        r.c = j["c"].get<int>();
        r.cl = j["cl"].get<int>();
        r.gamma = j["gamma"].get<int>();
        if (j.contains("ct")) r.ct = j["ct"].get<std::map<std::string, int>>();
        if (j.contains("ts")) r.ts = j["ts"].get<std::string>();
        return r;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

long long ScanReport::count_with_lazy(int cl) const {
    long long total_cl = 0;
    for (const auto& [key, cell] : histogram)
        if (key.second == cl) total_cl += cell.count;
    return total_cl;
}

std::optional<std::string> ScanReport::witness_with_lazy(int cl) const {
    std::optional<std::string> best;
    for (const auto& [key, cell] : histogram)
        if (key.second == cl && (!best || cell.witness_g6 < *best)) best = cell.witness_g6;
    return best;
}

int ScanReport::max_lazy() const {
    int best = 0;
    for (const auto& [key, cell] : histogram) best = std::max(best, key.second);
    return best;
}

std::string ScanReport::to_json() const {
    nlohmann::json j;
    j["constraints"] = {{"n", constraints.n},
                        {"min_deg", constraints.min_deg},
                        {"max_deg", constraints.effective_max_deg()},
                        {"min_edges", constraints.min_edges},
                        {"max_edges", constraints.effective_max_edges()},
                        {"connected_only", constraints.connected_only}};
    j["total"] = total;
    j["solved"] = solved;
    j["skipped"] = skipped;
    j["wall_seconds"] = wall_seconds;
    j["complete"] = complete;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [key, cell] : histogram)
        hist.push_back({{"c", key.first},
                        {"cl", key.second},
                        {"count", cell.count},
                        {"witness", cell.witness_g6}});
    j["histogram"] = hist;
    j["filter_hits"] = filter_hits;
    return j.dump(2);
}

std::string ScanReport::histogram_csv() const {
    std::ostringstream out;
    out << "c,cl,count,witness\n";
    for (const auto& [key, cell] : histogram)
        out << key.first << ',' << key.second << ',' << cell.count << ',' << cell.witness_g6 << '\n';
    return out.str();
}

bool ScanReport::same_results(const ScanReport& other) const {
    if (total != other.total || complete != other.complete) return false;
    if (histogram.size() != other.histogram.size()) return false;
    for (const auto& [key, cell] : histogram) {
        auto it = other.histogram.find(key);
        if (it == other.histogram.end()) return false;
        if (it->second.count != cell.count || it->second.witness_g6 != cell.witness_g6) return false;
    }
    return true;
}

std::map<std::string, CheckpointRecord> load_checkpoint(const std::string& path,
                                                        std::ostream* errlog) {
    std::map<std::string, CheckpointRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (auto rec = CheckpointRecord::parse_json_line(line)) {
            out[rec->g6] = std::move(*rec);
        } else if (errlog) {
            *errlog << "checkpoint line " << lineno << ": corrupt, skipped\n";
        }
    }
    return out;
}

ScanReport run_scan(const ScanOptions& opt) {
    const auto started = std::chrono::steady_clock::now();

    ScanReport report;
    report.constraints = opt.constraints;

    std::map<std::string, CheckpointRecord> done;
    if (opt.resume && !opt.checkpoint_path.empty()) done = load_checkpoint(opt.checkpoint_path);

    // Work list of canonical representatives, keyed by canonical graph6.
    std::vector<Graph> graphs;
    if (!opt.explicit_graphs.empty() || !opt.graph6_input.empty()) {
        std::map<std::string, Graph> dedup;
        auto take = [&](const Graph& g) {
            Graph rep = canonical_representative(g);
            dedup.emplace(to_graph6(rep), std::move(rep));
        };
        for (const Graph& g : opt.explicit_graphs) take(g);
        if (!opt.graph6_input.empty()) {
            std::ifstream in(opt.graph6_input);
            if (!in) throw Error("cannot open graph6 input: " + opt.graph6_input);
            read_graph6_stream(in, take);
        }
        for (auto& [key, g] : dedup) graphs.push_back(std::move(g));
    } else {
        graphs = enumerate_connected(opt.constraints);
    }

    std::ofstream ckpt;
    if (!opt.checkpoint_path.empty()) {
        bool torn_tail = false;
        if (opt.resume) {
            std::ifstream probe(opt.checkpoint_path, std::ios::binary | std::ios::ate);
            if (probe && probe.tellg() > 0) {
                probe.seekg(-1, std::ios::end);
                char last = '\n';
                probe.get(last);
                torn_tail = last != '\n';
            }
        }
        ckpt.open(opt.checkpoint_path, opt.resume ? std::ios::app : std::ios::trunc);
        if (!ckpt) throw Error("cannot open checkpoint for writing: " + opt.checkpoint_path);
        if (torn_tail) ckpt << '\n';  // keep a killed run's partial line isolated
    }

    std::mutex merge_mutex;
    std::atomic<std::size_t> cursor{0};
    std::atomic<long long> fresh_budget{opt.max_new_records < 0
                                            ? static_cast<long long>(graphs.size())
                                            : opt.max_new_records};
    bool stopped_early = false;

    auto merge_record = [&](const CheckpointRecord& rec, bool fresh,
                            const std::vector<BoundVerdict>& verdicts) {
        std::lock_guard<std::mutex> lock(merge_mutex);
        report.total += 1;
        (fresh ? report.solved : report.skipped) += 1;
        ScanCell& cell = report.histogram[{rec.c, rec.cl}];
        cell.count += 1;
        if (cell.witness_g6.empty() || rec.g6 < cell.witness_g6) cell.witness_g6 = rec.g6;
        for (const BoundVerdict& v : verdicts) report.filter_hits[v.provenance] += 1;
        if (fresh && ckpt.is_open()) {
            ckpt << rec.to_json_line() << '\n';
            ckpt.flush();
        }
    };

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) return;
            const Graph& g = graphs[i];
            const std::string key = to_graph6(g);
            if (auto it = done.find(key); it != done.end()) {
                merge_record(it->second, false, {});
                continue;
            }
            if (fresh_budget.fetch_sub(1) <= 0) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                stopped_early = true;
                continue;
            }
            const SolveOutcome sv = classify(g, opt.use_filters, opt.state_budget);
            CheckpointRecord rec;
            rec.g6 = key;
            rec.c = sv.cop_number;
            rec.cl = sv.lazy_cop_number;
            rec.gamma = sv.domination_number;
            for (const auto& [km, rounds] : sv.capture_times) rec.ct[ct_key(km.first, km.second)] = rounds;
            rec.ts = utc_timestamp();
            merge_record(rec, true, sv.verdicts);
        }
    };

    const int workers = std::max(1, opt.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    report.complete = !stopped_early;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace lazycop
