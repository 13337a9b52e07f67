#pragma once

// The absorbing gadget F_l: an edge-coloured graph on roles
//   A = a_1..a_{l+1},  B = b_0..b_{3l+1},  C = c_1..c_l
// with 8l+2 edges in relative colours 0..4l+1. For every a_i there is a
// b_0 -> b_{3l+1} path through B, C and a_i alone whose k-th edge has
// relative colour k; that is what lets a gadget swallow any one vertex of A.

#include <cstddef>
#include <vector>

#include "hampat/core.hpp"
#include "hampat/embed.hpp"

namespace hampat {

enum class GadgetRole : std::uint8_t { a, b, c };

class GadgetTemplate {
  public:
    // Throws std::invalid_argument for ell < 1.
    explicit GadgetTemplate(std::size_t ell);

    [[nodiscard]] std::size_t ell() const noexcept { return ell_; }
    [[nodiscard]] std::size_t order() const noexcept { return 5 * ell_ + 3; }
    [[nodiscard]] std::size_t colour_count() const noexcept { return 4 * ell_ + 2; }
    // Edges with relative colours in [0, colour_count()).
    [[nodiscard]] const PatternGraph& pattern() const noexcept { return pattern_; }

    // Template vertex ids by role index: a(1..l+1), b(0..3l+1), c(1..l).
    [[nodiscard]] Vertex a(std::size_t i) const;
    [[nodiscard]] Vertex b(std::size_t j) const;
    [[nodiscard]] Vertex c(std::size_t i) const;

    [[nodiscard]] GadgetRole role(Vertex v) const;
    // Role index of v, matching the accessor that produced it.
    [[nodiscard]] std::size_t role_index(Vertex v) const;
    [[nodiscard]] std::vector<Vertex> role_a() const;

  private:
    std::size_t ell_;
    PatternGraph pattern_;
};

[[nodiscard]] inline GadgetTemplate build_gadget_template(std::size_t ell) { return GadgetTemplate(ell); }

// The b_0 -> b_{3l+1} path that absorbs a_i (i in 1..l+1): 4l+3 template
// vertices B + C + {a_i}, edge k in relative colour k. Throws
// std::out_of_range for other i.
[[nodiscard]] ColouredWalk gadget_absorb_route(const GadgetTemplate& tpl, std::size_t i);

// a_1..a_{l+1}, b_0, b_1, then (c_i, b_{3i}, b_{3i+1}) for i = 1..l, then
// b_2, b_5, ..., b_{3l-1}. Every vertex after A has at most two earlier
// neighbours.
[[nodiscard]] std::vector<Vertex> gadget_degeneracy_order(const GadgetTemplate& tpl);

// Largest number of earlier neighbours any vertex has under `order`.
[[nodiscard]] std::size_t max_back_degree(const PatternGraph& pattern, const std::vector<Vertex>& order);

}  // namespace hampat
