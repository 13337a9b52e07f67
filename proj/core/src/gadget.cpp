#include "hampat/gadget.hpp"

#include <algorithm>
#include <stdexcept>

namespace hampat {

// Layout: a_1..a_{l+1} at [0, l+1), b_0..b_{3l+1} at [l+1, 4l+3),
// c_1..c_l at [4l+3, 5l+3).
GadgetTemplate::GadgetTemplate(std::size_t ell) : ell_(ell) {
    if (ell < 1) throw std::invalid_argument("gadget template needs ell >= 1");
    pattern_.order = order();
    auto add = [this](Vertex u, Vertex v, std::size_t colour) {
        pattern_.edges.push_back({u, v, static_cast<Colour>(colour)});
    };
    // Every A/C edge at b_{3i+r} (r = 0, 1) carries colour 4i+r; the B path
    // b_{3i+1} b_{3i+2} b_{3i+3} carries 4i+2, 4i+3.
    for (std::size_t i = 0; i <= ell; ++i) {
        add(a(i + 1), b(3 * i), 4 * i);
        add(a(i + 1), b(3 * i + 1), 4 * i + 1);
    }
    for (std::size_t i = 0; i < ell; ++i) {
        add(c(i + 1), b(3 * i), 4 * i);
        add(c(i + 1), b(3 * i + 1), 4 * i + 1);
        add(c(i + 1), b(3 * i + 3), 4 * i + 4);
        add(c(i + 1), b(3 * i + 4), 4 * i + 5);
        add(b(3 * i + 1), b(3 * i + 2), 4 * i + 2);
        add(b(3 * i + 2), b(3 * i + 3), 4 * i + 3);
    }
}

Vertex GadgetTemplate::a(std::size_t i) const {
    if (i < 1 || i > ell_ + 1) throw std::out_of_range("gadget role a index");
    return static_cast<Vertex>(i - 1);
}

Vertex GadgetTemplate::b(std::size_t j) const {
    if (j > 3 * ell_ + 1) throw std::out_of_range("gadget role b index");
    return static_cast<Vertex>(ell_ + 1 + j);
}

Vertex GadgetTemplate::c(std::size_t i) const {
    if (i < 1 || i > ell_) throw std::out_of_range("gadget role c index");
    return static_cast<Vertex>(4 * ell_ + 3 + i - 1);
}

GadgetRole GadgetTemplate::role(Vertex v) const {
    if (v < ell_ + 1) return GadgetRole::a;
    if (v < 4 * ell_ + 3) return GadgetRole::b;
    if (v < order()) return GadgetRole::c;
    throw std::out_of_range("gadget vertex id");
}

std::size_t GadgetTemplate::role_index(Vertex v) const {
    switch (role(v)) {
        case GadgetRole::a: return v + 1;
        case GadgetRole::b: return v - (ell_ + 1);
        case GadgetRole::c: return v - (4 * ell_ + 3) + 1;
    }
    return 0;
}

std::vector<Vertex> GadgetTemplate::role_a() const {
    std::vector<Vertex> out(ell_ + 1);
    for (std::size_t i = 0; i <= ell_; ++i) out[i] = a(i + 1);
    return out;
}

ColouredWalk gadget_absorb_route(const GadgetTemplate& tpl, std::size_t i) {
    const std::size_t ell = tpl.ell();
    if (i < 1 || i > ell + 1) throw std::out_of_range("gadget_absorb_route: index outside 1..ell+1");
    ColouredWalk w;
    // Segment k runs b_{3k} -> middle -> b_{3k+1}; the middle is a_i in
    // segment i-1, c_{k+1} before it and c_k after it.
    for (std::size_t k = 0; k <= ell; ++k) {
        Vertex middle;
        if (k + 1 == i)
            middle = tpl.a(i);
        else if (k + 1 < i)
            middle = tpl.c(k + 1);
        else
            middle = tpl.c(k);
        w.vertices.push_back(tpl.b(3 * k));
        w.vertices.push_back(middle);
        if (k < ell) {
            w.vertices.push_back(tpl.b(3 * k + 1));
            w.vertices.push_back(tpl.b(3 * k + 2));
        }
    }
    w.vertices.push_back(tpl.b(3 * ell + 1));
    w.colours.resize(w.vertices.size() - 1);
    for (std::size_t k = 0; k < w.colours.size(); ++k) w.colours[k] = static_cast<Colour>(k);
    return w;
}

std::vector<Vertex> gadget_degeneracy_order(const GadgetTemplate& tpl) {
    const std::size_t ell = tpl.ell();
    std::vector<Vertex> order = tpl.role_a();
    order.push_back(tpl.b(0));
    order.push_back(tpl.b(1));
    for (std::size_t i = 1; i <= ell; ++i) {
        order.push_back(tpl.c(i));
        order.push_back(tpl.b(3 * i));
        order.push_back(tpl.b(3 * i + 1));
    }
    for (std::size_t i = 0; i < ell; ++i) order.push_back(tpl.b(3 * i + 2));
    return order;
}

std::size_t max_back_degree(const PatternGraph& pattern, const std::vector<Vertex>& order) {
    std::vector<std::size_t> position(pattern.order, pattern.order);
    for (std::size_t i = 0; i < order.size(); ++i) position.at(order[i]) = i;
    std::vector<std::size_t> back(pattern.order, 0);
    for (const auto& e : pattern.edges) {
        if (position[e.u] < position[e.v])
            ++back[e.v];
        else
            ++back[e.u];
    }
    return back.empty() ? 0 : *std::max_element(back.begin(), back.end());
}

}  // namespace hampat
