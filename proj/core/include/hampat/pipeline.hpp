#pragma once

// End-to-end solver. Reduce the pattern to the identity, set aside a
// reservoir Z, build an absorber over the first t colours, cover the rest
// with random greedy paths, join everything through Z in the remaining
// colours, and let the absorber swallow whatever part of Z is left.

#include <cstdint>
#include <optional>
#include <string>

#include "hampat/core.hpp"
#include "hampat/path_cover.hpp"
#include "hampat/rmbg.hpp"
#include "hampat/trace.hpp"

namespace hampat {

struct SolveOptions {
    SolverParams params;
    // Instances with n at most this go to the exact oracle.
    std::size_t small_threshold = 14;
    std::uint64_t oracle_budget = 50'000'000;
    AbortRule abort_rule = AbortRule::hall;
    // Resample partitions until every interface passes this margin in its
    // path colours; unset means audit only.
    std::optional<double> partition_margin;
    // Share of Z each vertex must see is 1/2 + this, in every colour.
    double reservoir_margin = -0.1;
    // Spare reservoir steps at the end of the connecting walk.
    std::size_t min_z_walk = 2;
    RmbgOptions rmbg;
};

enum class SolveStatus : std::uint8_t { solved, refused, failed };

[[nodiscard]] std::string_view to_string(SolveStatus s) noexcept;

struct SolveResult {
    SolveStatus status = SolveStatus::failed;
    std::optional<ColouredWalk> cycle;  // verified against (g, chi) when set
    Trace trace;
    std::string message;
    std::string failed_stage;
};

// Sizes of one pipeline run. Rounding is fixed here and only here.
struct SolvePlan {
    std::size_t n = 0;
    std::size_t k = 0;
    double epsilon = 0.0;
    std::size_t kept = 0;         // b: reservoir vertices the absorber takes back
    std::size_t covered = 0;      // g: reservoir vertices the connections use
    std::size_t template_edges = 0;
    std::size_t t = 0;            // absorber colours, 4 e(B) + 2
    std::size_t a = 0;            // absorber vertices, 4 e(B) - b + 1
    std::size_t reservoir = 0;    // b + g + 2
    std::size_t rest = 0;         // n' = n - a - |Z|
    std::size_t part = 0;         // floor(n' / K)
    std::size_t paths = 0;        // s = floor((1 - eps) part)
    std::size_t leftover = 0;     // c = n' - s K
    std::size_t z_walk = 0;       // w = g - s - c - 1

    // Colours t .. n-1 split as 2 + s(K-1) + 2(s-1) + 2c + w + 2.
    [[nodiscard]] bool consistent() const noexcept;
};

// Fill in everything derived from (n, K, epsilon, b, g, e(B)); std::nullopt
// when the pieces do not fit (n' < K, s = 0 or w < 0).
[[nodiscard]] std::optional<SolvePlan> make_plan(std::size_t n, std::size_t k, double epsilon, std::size_t kept,
                                                 std::size_t covered, std::size_t template_edges);

// Never returns an unverified cycle. Refuses (status refused) when the
// minimum degree is not above n/2 or below the requested alpha.
[[nodiscard]] SolveResult solve(const GraphCollection& g, const ColourPattern& chi, const SolveOptions& opts = {});

}  // namespace hampat
