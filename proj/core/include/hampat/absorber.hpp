#pragma once

// Absorbing structure: one gadget per template X vertex, strung together by
// cherries between two reservoir endpoints z1 and z2. For any admissible
// leftover set Z' it yields a z1 -> z2 path in colours base..base+t-1 whose
// interior is exactly A + Z'.

#include <cstdint>
#include <vector>

#include "hampat/bitset.hpp"
#include "hampat/core.hpp"
#include "hampat/gadget.hpp"
#include "hampat/rmbg.hpp"

namespace hampat {

struct EmbeddedGadget {
    GadgetTemplate tpl;
    Colour window_start = 0;   // host colour of relative colour 0
    std::vector<Vertex> image;  // template vertex -> host vertex
};

// Embed F_l in colours window_start..window_end (inclusive), sending a_i to
// anchors[i-1] and everything else outside `forbidden`. Throws
// std::invalid_argument when the window length is not 4l+2 or anchors are
// not l+1 distinct vertices, EmbeddingStuck when greedy embedding stalls.
[[nodiscard]] EmbeddedGadget embed_gadget(const GraphCollection& g, Colour window_start, Colour window_end,
                                          const std::vector<Vertex>& anchors, const VertexSet& forbidden);

struct AbsorberOptions {
    Colour colour_base = 0;
    std::uint64_t seed = 0;
    int max_retries = 20;
};

struct AbsorberStructure {
    Vertex z1 = 0;
    Vertex z2 = 0;
    VertexSet reservoir;
    RmbgTemplate tpl;
    std::vector<Vertex> y_image;  // template Y index -> host
    std::vector<Vertex> z_image;  // template Z index -> host, sorted
    std::vector<EmbeddedGadget> gadgets;
    // cherry_middles[0]: z1 -> gadget 0; [i]: gadget i-1 -> gadget i;
    // back(): last gadget -> z2.
    std::vector<Vertex> cherry_middles;
    VertexSet absorbing_set;  // A
    Colour colour_base = 0;
    std::size_t t = 0;
    int attempts = 0;

    [[nodiscard]] std::size_t a() const noexcept { return absorbing_set.count(); }
    // Host colour range [first, last] of gadget i's window.
    [[nodiscard]] std::pair<Colour, Colour> window(std::size_t i) const;
};

// t = 4 e(B) + 2 and |A| = 4 e(B) - m + 1 for a template with m kept Z.
[[nodiscard]] std::size_t absorber_colour_count(const RmbgTemplate& tpl);
[[nodiscard]] std::size_t absorber_size(const RmbgTemplate& tpl);

// Y is sampled outside the reservoir; template Z is labelled by
// reservoir \ {z1, z2} in increasing order, so that set must have exactly
// tpl.z_count() vertices. Gadgets are embedded in X order, each avoiding
// everything placed before it. Throws std::invalid_argument on inconsistent
// sizes, StageFailure("absorber") when every attempt stalls.
[[nodiscard]] AbsorberStructure build_absorbing_structure(const GraphCollection& g, const VertexSet& reservoir,
                                                          Vertex z1, Vertex z2, const RmbgTemplate& tpl,
                                                          const AbsorberOptions& opts = {});

// z1 -> z2 path with t edges, edge i in colour colour_base + i, interior
// exactly A + leftover. `leftover` must be tpl.m vertices of
// reservoir \ {z1, z2} (std::invalid_argument otherwise).
[[nodiscard]] ColouredWalk absorb(const AbsorberStructure& s, const std::vector<Vertex>& leftover);

}  // namespace hampat
