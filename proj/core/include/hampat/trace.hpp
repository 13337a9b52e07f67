#pragma once

// Solve traces: per-stage attempt counts and statistics, the colour ranges
// each part of the cycle consumed, and the audit that re-checks them.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hampat/core.hpp"

namespace hampat {

struct StageRecord {
    std::string name;
    int attempts = 0;
    bool ok = false;
    std::vector<std::pair<std::string, double>> stats;
    std::string detail;

    void set(const std::string& key, double value);
    [[nodiscard]] std::optional<double> get(std::string_view key) const;
};

// Colours [first, first + count) went to one piece of the cycle.
struct ColourSegment {
    std::string what;
    std::size_t first = 0;
    std::size_t count = 0;

    friend bool operator==(const ColourSegment&, const ColourSegment&) = default;
};

struct Trace {
    std::size_t n = 0;
    std::vector<StageRecord> stages;
    std::vector<ColourSegment> colour_segments;
    std::optional<ColouredWalk> cycle;

    // Existing record with this name, or a new one appended.
    StageRecord& stage(std::string_view name);
    [[nodiscard]] const StageRecord* find(std::string_view name) const;
};

// {"n", "stages": [{name, attempts, ok, stats, detail}], "colours_used",
//  "colour_segments", "cycle"?}
[[nodiscard]] std::string trace_to_json(const Trace& trace);
[[nodiscard]] Trace trace_from_json(std::string_view text);

struct AuditReport {
    bool solved = false;
    // Segments cover 0..n-1 exactly once (false when there are none).
    bool colours_tiled = false;
    std::vector<std::string> findings;
    std::string text;
    std::string json;
};

[[nodiscard]] AuditReport audit_run(const Trace& trace);

}  // namespace hampat
