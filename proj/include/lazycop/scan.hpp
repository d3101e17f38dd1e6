#ifndef LAZYCOP_SCAN_HPP
#define LAZYCOP_SCAN_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lazycop/bounds.hpp"
#include "lazycop/enumerate.hpp"

namespace lazycop {

/// One classified graph, one JSON object per checkpoint line:
/// {"g6":..., "c":..., "cl":..., "gamma":..., "ct":{"k,m":rounds}, "ts":...}
struct CheckpointRecord {
    std::string g6;  // canonical graph6 text, the dedup/resume key
    int c = 0;
    int cl = 0;
    int gamma = 0;
    std::map<std::string, int> ct;
    std::string ts;

    std::string to_json_line() const;
    static std::optional<CheckpointRecord> parse_json_line(const std::string& line);
};

struct ScanCell {
    long long count = 0;
    std::string witness_g6;  // canonically least graph in the cell
};

struct ScanReport {
    Constraints constraints;
    long long total = 0;
    std::map<std::pair<int, int>, ScanCell> histogram;  // (c, cl) -> cell
    long long solved = 0;                               // fresh solver classifications
    long long skipped = 0;                              // records taken from the checkpoint
    std::map<std::string, long long> filter_hits;       // verdict provenance -> count
    double wall_seconds = 0;
    bool complete = true;

    long long count_with_lazy(int cl) const;
    std::optional<std::string> witness_with_lazy(int cl) const;
    int max_lazy() const;
    std::string to_json() const;
    std::string histogram_csv() const;

    /// Equality of everything a rerun must reproduce (wall time excluded).
    bool same_results(const ScanReport& other) const;
};

struct ScanOptions {
    Constraints constraints;
    bool use_filters = true;
    int workers = 1;
    std::string checkpoint_path;  // empty: no checkpointing
    bool resume = false;
    std::uint64_t state_budget = default_state_budget();
    std::string graph6_input;        // classify a graph6 stream instead of enumerating
    std::vector<Graph> explicit_graphs;  // classify these instead of enumerating
    long long max_new_records = -1;  // test hook: stop after this many fresh records
};

/// Classifies every enumerated (or streamed) graph, appending one checkpoint
/// line per graph; resume skips keys already recorded. The report is
/// independent of the worker count.
ScanReport run_scan(const ScanOptions& opt);

/// Permissive JSONL load: corrupt lines are reported and skipped.
std::map<std::string, CheckpointRecord> load_checkpoint(const std::string& path,
                                                        std::ostream* errlog = nullptr);

}  // namespace lazycop

#endif
