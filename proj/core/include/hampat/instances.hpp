#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hampat/core.hpp"
#include "hampat/graph.hpp"

namespace hampat {

struct Instance {
    GraphCollection graphs;
    std::optional<ColourPattern> pattern;

    friend bool operator==(const Instance&, const Instance&) = default;
};

// Edge probability offset above 1/2 + alpha used by gen_random_dirac.
inline constexpr double kDiracDensityMargin = 0.1;

// min(n-1, ceil((1/2 + alpha) n)), the per-colour degree gen_random_dirac
// guarantees.
[[nodiscard]] std::size_t dirac_degree_target(std::size_t n, double alpha);

// m independent G(n, p) graphs with p = 1/2 + alpha + density_margin, each
// repaired until every vertex reaches dirac_degree_target(n, alpha).
// Repairs visit the lowest-degree vertex first (ties by id) and join it to a
// uniformly random non-neighbour. Throws std::invalid_argument if n < 3,
// m < 1 or alpha is outside (0, 1/2].
[[nodiscard]] GraphCollection gen_random_dirac(std::size_t n, std::size_t m, double alpha, std::uint64_t seed,
                                               double density_margin = kDiracDensityMargin);

// Two colours on an even number n >= 6 of vertices. Colour 0: cliques on
// {0..n/2-1} and {n/2..n-1} plus the matching i -- i+n/2. Colour 1: the
// complete bipartite graph between those halves. The returned pattern puts
// colour 0 on the first two cycle edges and colour 1 on the remaining n-2.
[[nodiscard]] Instance gen_counterexample(std::size_t n);

// m colours all referring to one shared copy of `base`.
[[nodiscard]] GraphCollection gen_identical(const Graph& base, std::size_t m);

enum class PatternKind : std::uint8_t {
    identity,     // position i gets colour i mod m
    random,       // independent uniform colours
    alternating,  // 0, 1, 0, 1, ...
    block,        // colour 0 on the first half, colour 1 on the second
    constant,     // colour 0 everywhere
};

// Throws std::invalid_argument when the kind needs two colours and m < 2.
[[nodiscard]] ColourPattern gen_pattern(PatternKind kind, std::size_t n, std::size_t m, std::uint64_t seed = 0);
[[nodiscard]] std::optional<PatternKind> parse_pattern_kind(std::string_view name);
[[nodiscard]] std::string_view to_string(PatternKind kind) noexcept;

// Single-line JSON object {"n","m","graphs","pattern"} with sorted u<v edge
// lists, followed by a newline.
[[nodiscard]] std::string instance_to_json(const Instance& inst);

// Throws ParseError (line, field) on malformed or inconsistent input.
[[nodiscard]] Instance instance_from_json(std::string_view text);

void save_instance(const std::filesystem::path& path, const Instance& inst);
[[nodiscard]] Instance load_instance(const std::filesystem::path& path);

// Walk files share the instance conventions: {"vertices","colours","closed"}.
[[nodiscard]] std::string walk_to_json(const ColouredWalk& w);
[[nodiscard]] ColouredWalk walk_from_json(std::string_view text);

}  // namespace hampat
