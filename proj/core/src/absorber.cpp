#include "hampat/absorber.hpp"

#include <algorithm>
#include <stdexcept>

#include "hampat/embed.hpp"
#include "hampat/random.hpp"

namespace hampat {

std::size_t absorber_colour_count(const RmbgTemplate& tpl) { return 4 * tpl.edge_count() + 2; }

std::size_t absorber_size(const RmbgTemplate& tpl) { return 4 * tpl.edge_count() - tpl.m + 1; }

std::pair<Colour, Colour> AbsorberStructure::window(std::size_t i) const {
    const auto& gad = gadgets.at(i);
    return {gad.window_start, static_cast<Colour>(gad.window_start + gad.tpl.colour_count() - 1)};
}

EmbeddedGadget embed_gadget(const GraphCollection& g, Colour window_start, Colour window_end,
                            const std::vector<Vertex>& anchors, const VertexSet& forbidden) {
    if (anchors.size() < 2) throw std::invalid_argument("embed_gadget: need at least two anchors");
    const std::size_t ell = anchors.size() - 1;
    if (window_end < window_start || window_end - window_start + 1 != 4 * ell + 2)
        throw std::invalid_argument("embed_gadget: colour window must span exactly 4*ell+2 colours");
    if (window_end >= g.colours()) throw std::invalid_argument("embed_gadget: colour window outside the collection");

    EmbeddedGadget out{GadgetTemplate(ell), window_start, {}};
    EmbeddingRequest req;
    req.pattern = out.tpl.pattern();
    for (auto& e : req.pattern.edges) e.colour += window_start;
    req.anchored = out.tpl.role_a();
    req.anchors = anchors;
    req.forbidden = forbidden;
    req.target = VertexSet(g.order());
    req.target.fill();
    req.order = gadget_degeneracy_order(out.tpl);
    req.k = 2;
    out.image = greedy_pattern_embed(g, req);
    return out;
}

AbsorberStructure build_absorbing_structure(const GraphCollection& g, const VertexSet& reservoir, Vertex z1,
                                            Vertex z2, const RmbgTemplate& tpl, const AbsorberOptions& opts) {
    const std::size_t n = g.order();
    if (reservoir.universe() != n) throw std::invalid_argument("absorber: reservoir over the wrong vertex set");
    if (z1 == z2 || z1 >= n || z2 >= n || !reservoir.test(z1) || !reservoir.test(z2))
        throw std::invalid_argument("absorber: z1, z2 must be distinct reservoir vertices");
    std::vector<Vertex> z_image;
    for (auto v : reservoir.to_vector())
        if (v != z1 && v != z2) z_image.push_back(v);
    if (z_image.size() != tpl.z_count())
        throw std::invalid_argument("absorber: reservoir has " + std::to_string(z_image.size() + 2) +
                                    " vertices, template needs " + std::to_string(tpl.z_count() + 2));
    const std::size_t t = absorber_colour_count(tpl);
    if (opts.colour_base + t > g.colours()) throw std::invalid_argument("absorber: not enough colours for the template");
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (!reservoir.test(v)) outside.push_back(v);
    if (outside.size() < tpl.y_count()) throw std::invalid_argument("absorber: not enough vertices outside the reservoir");

    std::string last_error;
    for (int attempt = 1; attempt <= opts.max_retries; ++attempt) {
        Rng rng(mix_seed(opts.seed, static_cast<std::uint64_t>(attempt)));
        AbsorberStructure s;
        s.z1 = z1;
        s.z2 = z2;
        s.reservoir = reservoir;
        s.tpl = tpl;
        s.z_image = z_image;
        s.y_image = sample_without_replacement(outside, tpl.y_count(), rng);
        s.colour_base = opts.colour_base;
        s.t = t;
        s.attempts = attempt;
        try {
            VertexSet used = reservoir;
            for (auto y : s.y_image) used.set(y);
            Colour start = static_cast<Colour>(opts.colour_base + 2);
            for (std::size_t x = 0; x < tpl.x_count(); ++x) {
                std::vector<Vertex> anchors;
                for (auto r : tpl.x_adj[x])
                    anchors.push_back(r < tpl.y_count() ? s.y_image[r] : z_image[r - tpl.y_count()]);
                const auto width = static_cast<Colour>(4 * anchors.size() - 2);
                s.gadgets.push_back(embed_gadget(g, start, start + width - 1, anchors, used));
                for (auto v : s.gadgets.back().image) used.set(v);
                start += width + 2;
            }
            VertexSet everything(n);
            everything.fill();
            Vertex prev = z1;
            Colour colour = opts.colour_base;
            for (std::size_t i = 0; i <= s.gadgets.size(); ++i) {
                const Vertex next = i < s.gadgets.size() ? s.gadgets[i].image[s.gadgets[i].tpl.b(0)] : z2;
                const Vertex mid = cherry_connect(g, colour, colour + 1, prev, next, everything, used);
                used.set(mid);
                s.cherry_middles.push_back(mid);
                if (i < s.gadgets.size()) {
                    const auto& gad = s.gadgets[i];
                    prev = gad.image[gad.tpl.b(3 * gad.tpl.ell() + 1)];
                    colour = static_cast<Colour>(gad.window_start + gad.tpl.colour_count());
                }
            }
        } catch (const StageFailure& e) {
            last_error = e.what();
            continue;
        }

        s.absorbing_set = VertexSet(n);
        for (auto y : s.y_image) s.absorbing_set.set(y);
        for (auto v : s.cherry_middles) s.absorbing_set.set(v);
        for (const auto& gad : s.gadgets)
            for (Vertex tv = 0; tv < gad.tpl.order(); ++tv)
                if (gad.tpl.role(tv) != GadgetRole::a) s.absorbing_set.set(gad.image[tv]);
        if (s.absorbing_set.count() != absorber_size(tpl))
            throw std::logic_error("absorber: absorbing set has the wrong size");
        return s;
    }
    throw StageFailure("absorber", "no embedding after " + std::to_string(opts.max_retries) +
                                       " attempts; last: " + last_error);
}

ColouredWalk absorb(const AbsorberStructure& s, const std::vector<Vertex>& leftover) {
    const RmbgTemplate& tpl = s.tpl;
    if (leftover.size() != tpl.m)
        throw std::invalid_argument("absorb: leftover must have exactly " + std::to_string(tpl.m) + " vertices");
    std::vector<char> kept(tpl.z_count(), 0);
    for (Vertex v : leftover) {
        const auto it = std::lower_bound(s.z_image.begin(), s.z_image.end(), v);
        if (it == s.z_image.end() || *it != v)
            throw std::invalid_argument("absorb: vertex " + std::to_string(v) + " is not an absorbable reservoir vertex");
        auto& flag = kept[static_cast<std::size_t>(it - s.z_image.begin())];
        if (flag) throw std::invalid_argument("absorb: repeated leftover vertex");
        flag = 1;
    }
    std::vector<std::uint32_t> deleted;
    for (std::uint32_t z = 0; z < tpl.z_count(); ++z)
        if (!kept[z]) deleted.push_back(z);
    const auto match = match_after_deletion(tpl, deleted);
    if (!match) throw StageFailure("absorb", "template has no perfect matching for this leftover set");

    ColouredWalk w;
    w.vertices.push_back(s.z1);
    for (std::size_t i = 0; i < s.gadgets.size(); ++i) {
        w.vertices.push_back(s.cherry_middles[i]);
        const auto& row = tpl.x_adj[i];
        const auto k = static_cast<std::size_t>(std::lower_bound(row.begin(), row.end(), (*match)[i]) - row.begin());
        const auto& gad = s.gadgets[i];
        for (Vertex tv : gadget_absorb_route(gad.tpl, k + 1).vertices) w.vertices.push_back(gad.image[tv]);
    }
    w.vertices.push_back(s.cherry_middles.back());
    w.vertices.push_back(s.z2);
    w.colours.resize(w.vertices.size() - 1);
    for (std::size_t i = 0; i < w.colours.size(); ++i) w.colours[i] = static_cast<Colour>(s.colour_base + i);
    return w;
}

}  // namespace hampat
