#pragma once

// Robustly matchable bipartite templates. B has parts X (3m), Y (2m) and
// Z (m + r) with r = ceil(beta m); for every r-subset Z' of Z the graph
// B[X, Y + (Z \ Z')] has a perfect matching. Templates are produced by
// generate-and-verify and can be cached on disk.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hampat/matching.hpp"

namespace hampat {

struct RmbgTemplate {
    std::size_t m = 0;
    double beta = 0.0;
    std::uint64_t seed = 0;
    // x_adj[x] lists right ids sorted: Y is [0, 2m), Z is [2m, 2m + |Z|).
    std::vector<std::vector<std::uint32_t>> x_adj;

    [[nodiscard]] std::size_t x_count() const noexcept { return 3 * m; }
    [[nodiscard]] std::size_t y_count() const noexcept { return 2 * m; }
    [[nodiscard]] std::size_t z_count() const noexcept { return m + removed(); }
    [[nodiscard]] std::size_t right_count() const noexcept { return y_count() + z_count(); }
    // r = ceil(beta m), the number of Z vertices a robustness query deletes.
    [[nodiscard]] std::size_t removed() const noexcept;
    [[nodiscard]] std::size_t edge_count() const noexcept;
    [[nodiscard]] std::size_t min_degree() const;
    [[nodiscard]] std::size_t max_degree() const;
    [[nodiscard]] std::vector<std::size_t> right_degrees() const;

    // B[X, Y + kept] for a set of kept Z indices (0-based within Z), with
    // right ids renumbered: Y first, then `kept` in the given order.
    [[nodiscard]] BipartiteGraph restricted(const std::vector<std::uint32_t>& kept_z) const;

    friend bool operator==(const RmbgTemplate&, const RmbgTemplate&) = default;
};

[[nodiscard]] std::size_t rmbg_removed_count(std::size_t m, double beta);

struct RmbgOptions {
    // X-neighbours per Y vertex; 0 means min(3m, 12).
    std::size_t y_degree = 0;
    std::size_t z_degree = 2;
    std::size_t max_degree = 40;
    int max_retries = 20;
    // Exhaustive robustness check when C(|Z|, r) is at most this.
    std::uint64_t exhaustive_budget = 200000;
    std::size_t samples = 10000;
};

struct RobustnessReport {
    bool ok = false;
    bool exhaustive = false;
    std::uint64_t checked = 0;
    // First deleted set (Z indices) without a perfect matching.
    std::vector<std::uint32_t> counterexample;
};

// Exhaustive over every r-subset when the count fits the budget, otherwise
// `samples` uniform subsets plus extremal probes that delete around the
// lowest-degree Z vertices and around each X neighbourhood.
[[nodiscard]] RobustnessReport verify_robustness(const RmbgTemplate& tpl, std::uint64_t exhaustive_budget,
                                                 std::size_t samples, std::uint64_t seed);

// Perfect matching of X into Y + (Z \ deleted); left_to_right uses the
// template's right ids. std::nullopt when none exists.
[[nodiscard]] std::optional<std::vector<std::uint32_t>> match_after_deletion(
    const RmbgTemplate& tpl, const std::vector<std::uint32_t>& deleted_z);

// Raise every vertex of degree below two by adjoining edges to
// lowest-degree vertices of the other side. Returns the number of edges
// added.
std::size_t repair_min_degree(RmbgTemplate& tpl, std::uint64_t seed);

struct RmbgBuild {
    RmbgTemplate tpl;
    RobustnessReport report;
    int attempts = 0;
};

// Generate-and-verify. Throws std::invalid_argument for m < 1 or beta <= 0,
// RetriesExhausted when no candidate passes within max_retries.
[[nodiscard]] RmbgBuild build_rmbg(std::size_t m, double beta, std::uint64_t seed, const RmbgOptions& opts = {});

// Cache file: {"m", "beta", "seed", "edges": [[x, right], ...]}.
[[nodiscard]] std::string rmbg_to_json(const RmbgTemplate& tpl);
// Parses and re-verifies degree bounds and robustness; throws ParseError on
// malformed input and StageFailure("rmbg") if the stored template fails.
[[nodiscard]] RmbgTemplate rmbg_from_json(std::string_view text, const RmbgOptions& opts = {});

// Build through a directory cache keyed by (m, beta, seed).
[[nodiscard]] RmbgTemplate cached_rmbg(const std::filesystem::path& dir, std::size_t m, double beta,
                                       std::uint64_t seed, const RmbgOptions& opts = {});

}  // namespace hampat
