#ifndef LAZYCOP_VERIFY_HPP
#define LAZYCOP_VERIFY_HPP

#include <string>
#include <vector>

#include "lazycop/scan.hpp"

namespace lazycop {

struct VerifyLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
    std::string render() const;
};

struct VerifyOptions {
    bool use_filters = true;
    int workers = 1;
    std::string checkpoint_path;  // used by the big scans when nonempty
    bool resume = false;
    std::uint64_t state_budget = default_state_budget();
};

/// Rooks boards n = 2..5: cop number 2, lazy cop number and domination number n.
VerifyReport verify_rooks(const VerifyOptions& opt);

/// Every connected graph on 2..8 vertices needs at most 2 lazy cops; class
/// counts per order are checked against their pinned values.
VerifyReport verify_eight_vertices(const VerifyOptions& opt);

/// Among all connected 9-vertex graphs exactly one has lazy cop number 3, it
/// is the 3x3 rooks graph, and none needs more.
VerifyReport verify_main(const VerifyOptions& opt);

/// The 9-vertex census with degrees in [2,3] and 10..13 edges has exactly 147
/// classes, all with lazy cop number at most 2.
VerifyReport verify_counts(const VerifyOptions& opt);

VerifyReport run_verify(const std::string& name, const VerifyOptions& opt);

}  // namespace lazycop

#endif
