#pragma once

// Random greedy path cover. Each step matches consecutive parts perfectly in
// the step's colours, follows the union of matchings from every vertex of
// the first part, and keeps one of the resulting K-vertex paths at random.

#include <cstdint>
#include <optional>
#include <vector>

#include "hampat/core.hpp"
#include "hampat/errors.hpp"

namespace hampat {

enum class AbortRule : std::uint8_t {
    // Abort when some interface has a vertex with fewer than n_i/2
    // neighbours on the other side in the step's colour.
    min_degree,
    // Abort only when some interface has no perfect matching.
    hall,
};

struct PathBuilderOptions {
    AbortRule rule = AbortRule::min_degree;
    // Re-derive the path factor from the matchings and check it at every
    // step (cheap; off only for benchmarking).
    bool check_union = true;
};

struct StepStats {
    std::size_t part_size = 0;           // n_i
    std::size_t min_interface_degree = 0;  // over the step's K-1 interfaces
    bool union_ok = true;                 // matchings formed n_i disjoint K-paths
};

struct PathCover {
    std::vector<ColouredWalk> paths;
    std::vector<StepStats> steps;
    // Vertices dropped to balance the parts.
    std::vector<Vertex> trimmed;
};

class PathBuilderAbort : public StageFailure {
  public:
    PathBuilderAbort(std::size_t step, std::size_t interface, std::vector<Vertex> witness,
                     std::vector<StepStats> trajectory)
        : StageFailure("path_cover", "abort at step " + std::to_string(step) + ", interface " +
                                         std::to_string(interface) +
                                         (witness.empty() ? std::string{}
                                                          : ", Hall witness of size " + std::to_string(witness.size()))),
          step_(step),
          interface_(interface),
          witness_(std::move(witness)),
          trajectory_(std::move(trajectory)) {}

    [[nodiscard]] std::size_t step() const noexcept { return step_; }
    [[nodiscard]] std::size_t interface() const noexcept { return interface_; }
    // Host vertices of V_j forming a Hall violator, when one exists.
    [[nodiscard]] const std::vector<Vertex>& witness() const noexcept { return witness_; }
    [[nodiscard]] const std::vector<StepStats>& trajectory() const noexcept { return trajectory_; }

  private:
    std::size_t step_;
    std::size_t interface_;
    std::vector<Vertex> witness_;
    std::vector<StepStats> trajectory_;
};

// parts: V_1..V_K (K >= 2); the larger parts are trimmed to the smallest
// size, dropping their highest ids. patterns[i][j] is the colour of edge j
// of path i (K-1 entries each). Path i runs V_1 -> V_K. Throws
// std::invalid_argument for malformed input or more paths than part size,
// PathBuilderAbort per the abort rule.
[[nodiscard]] PathCover path_builder(const GraphCollection& g, std::vector<std::vector<Vertex>> parts,
                                     const std::vector<std::vector<Colour>>& patterns, std::uint64_t seed,
                                     const PathBuilderOptions& opts = {});

}  // namespace hampat
