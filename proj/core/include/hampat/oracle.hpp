#pragma once

// Exact backtracking search for pattern Hamilton cycles on small vertex
// sets (n <= 64; practical up to about 16).

#include <cstdint>
#include <optional>

#include "hampat/core.hpp"

namespace hampat {

enum class OracleStatus : std::uint8_t { found, no_solution, budget_exhausted };

[[nodiscard]] std::string_view to_string(OracleStatus s) noexcept;

struct OracleOptions {
    std::uint64_t budget = 50'000'000;  // search nodes
    // Accept a cycle whose colour sequence is any rotation of chi; the
    // returned walk then starts at vertex 0 and `rotation` says which.
    bool any_rotation = false;
};

struct OracleResult {
    OracleStatus status = OracleStatus::no_solution;
    std::optional<ColouredWalk> cycle;
    std::size_t rotation = 0;
    std::uint64_t nodes = 0;
};

// Throws std::invalid_argument if |chi| != n, n < 3 or n > 64.
[[nodiscard]] OracleResult exact_solve(const GraphCollection& g, const ColourPattern& chi,
                                       const OracleOptions& opts = {});

struct CountResult {
    OracleStatus status = OracleStatus::no_solution;  // found / no_solution when complete
    // Pattern cycles up to the dihedral symmetries that fix chi.
    std::uint64_t count = 0;
    // Sequences (v_0..v_{n-1}) with edge i in G_chi[i], before quotienting.
    std::uint64_t sequences = 0;
    std::size_t symmetries = 1;
    std::uint64_t nodes = 0;
};

[[nodiscard]] CountResult count_solutions(const GraphCollection& g, const ColourPattern& chi,
                                          std::uint64_t budget = 50'000'000);

// Rotations r with chi(i) = chi(i+r) plus reflections with chi(i) = chi(r-1-i).
[[nodiscard]] std::size_t pattern_symmetry_count(const ColourPattern& chi);

}  // namespace hampat
