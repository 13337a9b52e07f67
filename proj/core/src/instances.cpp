#include "hampat/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hampat/errors.hpp"
#include "hampat/random.hpp"
#include "json.hpp"

namespace hampat {

using ojson = nlohmann::ordered_json;

std::size_t dirac_degree_target(std::size_t n, double alpha) {
    const double raw = (0.5 + alpha) * static_cast<double>(n);
    auto target = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    return std::min(target, n == 0 ? std::size_t{0} : n - 1);
}

namespace {

Graph random_dirac_graph(std::size_t n, double p, std::size_t target, Rng& rng) {
    std::vector<VertexSet> adj(n, VertexSet(n));
    std::vector<std::size_t> deg(n, 0);
    const auto threshold = static_cast<std::uint64_t>(std::min(p, 1.0) * 18446744073709551615.0);
    const bool always = p >= 1.0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (always || rng() < threshold) {
                adj[u].set(v);
                adj[v].set(u);
                ++deg[u];
                ++deg[v];
            }

    // Repair: always the current lowest-degree deficient vertex, ties by id.
    std::vector<Vertex> candidates;
    while (true) {
        Vertex worst = 0;
        std::size_t worst_deg = n;
        for (Vertex v = 0; v < n; ++v)
            if (deg[v] < target && deg[v] < worst_deg) {
                worst = v;
                worst_deg = deg[v];
            }
        if (worst_deg == n) break;
        candidates.clear();
        for (Vertex w = 0; w < n; ++w)
            if (w != worst && !adj[worst].test(w)) candidates.push_back(w);
        const Vertex w = candidates[uniform_below(rng, candidates.size())];
        adj[worst].set(w);
        adj[w].set(worst);
        ++deg[worst];
        ++deg[w];
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (std::size_t v = adj[u].next(u + 1); v != VertexSet::npos; v = adj[u].next(v + 1))
            edges.push_back({u, static_cast<Vertex>(v)});
    return Graph(n, edges);
}

}  // namespace

GraphCollection gen_random_dirac(std::size_t n, std::size_t m, double alpha, std::uint64_t seed,
                                 double density_margin) {
    if (n < 3) throw std::invalid_argument("gen_random_dirac: n must be at least 3");
    if (m < 1) throw std::invalid_argument("gen_random_dirac: m must be at least 1");
    if (!(alpha > 0.0 && alpha <= 0.5)) throw std::invalid_argument("gen_random_dirac: alpha must lie in (0, 1/2]");
    const std::size_t target = dirac_degree_target(n, alpha);
    const double p = 0.5 + alpha + density_margin;
    std::vector<std::shared_ptr<const Graph>> graphs;
    graphs.reserve(m);
    for (std::size_t c = 0; c < m; ++c) {
        Rng rng(mix_seed(seed, c));
        graphs.push_back(std::make_shared<const Graph>(random_dirac_graph(n, p, target, rng)));
    }
    return GraphCollection(n, std::move(graphs));
}

Instance gen_counterexample(std::size_t n) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("gen_counterexample: n must be even and at least 6");
    const Vertex h = static_cast<Vertex>(n / 2);
    std::vector<Edge> cliques;
    std::vector<Edge> bipartite;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const bool same_side = (u < h) == (v < h);
            if (same_side || v == u + h) cliques.push_back({u, v});
            if (!same_side) bipartite.push_back({u, v});
        }
    std::vector<std::shared_ptr<const Graph>> graphs{std::make_shared<const Graph>(n, cliques),
                                                     std::make_shared<const Graph>(n, bipartite)};
    ColourPattern chi = ColourPattern::constant(n, 1);
    chi.colours[0] = 0;
    chi.colours[1] = 0;
    return Instance{GraphCollection(n, std::move(graphs)), std::move(chi)};
}

GraphCollection gen_identical(const Graph& base, std::size_t m) {
    auto shared = std::make_shared<const Graph>(base);
    return GraphCollection(base.order(), std::vector<std::shared_ptr<const Graph>>(m, shared));
}

ColourPattern gen_pattern(PatternKind kind, std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("gen_pattern: need at least one colour");
    if ((kind == PatternKind::alternating || kind == PatternKind::block) && m < 2)
        throw std::invalid_argument("gen_pattern: alternating and block patterns need two colours");
    ColourPattern chi;
    chi.colours.resize(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        switch (kind) {
            case PatternKind::identity: chi.colours[i] = static_cast<Colour>(i % m); break;
            case PatternKind::random: chi.colours[i] = static_cast<Colour>(uniform_below(rng, m)); break;
            case PatternKind::alternating: chi.colours[i] = static_cast<Colour>(i % 2); break;
            case PatternKind::block: chi.colours[i] = i < n / 2 ? 0 : 1; break;
            case PatternKind::constant: chi.colours[i] = 0; break;
        }
    }
    return chi;
}

namespace {

constexpr std::pair<PatternKind, std::string_view> kPatternNames[] = {
    {PatternKind::identity, "identity"},       {PatternKind::random, "random"},
    {PatternKind::alternating, "alternating"}, {PatternKind::block, "block"},
    {PatternKind::constant, "constant"},
};

}  // namespace

std::optional<PatternKind> parse_pattern_kind(std::string_view name) {
    for (const auto& [kind, text] : kPatternNames)
        if (text == name) return kind;
    return std::nullopt;
}

std::string_view to_string(PatternKind kind) noexcept {
    for (const auto& [k, text] : kPatternNames)
        if (k == kind) return text;
    return "unknown";
}

std::string instance_to_json(const Instance& inst) {
    const GraphCollection& g = inst.graphs;
    ojson j;
    j["n"] = g.order();
    j["m"] = g.colours();
    ojson graphs = ojson::array();
    for (Colour c = 0; c < g.colours(); ++c) {
        ojson edges = ojson::array();
        for (const Edge& e : g[c].edges()) edges.push_back(ojson::array({e.u, e.v}));
        graphs.push_back(std::move(edges));
    }
    j["graphs"] = std::move(graphs);
    if (inst.pattern)
        j["pattern"] = inst.pattern->colours;
    else
        j["pattern"] = nullptr;
    return j.dump() + "\n";
}

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::size_t line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    const auto pos = text.find(quoted);
    return pos == std::string_view::npos ? 1 : line_of_offset(text, pos);
}

std::size_t require_count(const ojson& j, std::string_view text, const char* key) {
    if (!j.contains(key)) throw ParseError(1, key, "missing");
    const ojson& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(line_of_key(text, key), key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

}  // namespace

Instance instance_from_json(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "<document>", e.what());
    }
    if (!j.is_object()) throw ParseError(1, "<document>", "expected a JSON object");
    const std::size_t n = require_count(j, text, "n");
    const std::size_t m = require_count(j, text, "m");
    if (!j.contains("graphs") || !j["graphs"].is_array()) throw ParseError(line_of_key(text, "graphs"), "graphs", "expected an array");
    const ojson& graphs = j["graphs"];
    const std::size_t gline = line_of_key(text, "graphs");
    if (graphs.size() != m)
        throw ParseError(gline, "graphs", "has " + std::to_string(graphs.size()) + " entries, m=" + std::to_string(m));

    std::vector<std::shared_ptr<const Graph>> built;
    built.reserve(m);
    for (std::size_t c = 0; c < m; ++c) {
        const std::string field = "graphs[" + std::to_string(c) + "]";
        if (!graphs[c].is_array()) throw ParseError(gline, field, "expected an edge array");
        std::vector<Edge> edges;
        edges.reserve(graphs[c].size());
        for (std::size_t k = 0; k < graphs[c].size(); ++k) {
            const ojson& e = graphs[c][k];
            const std::string ef = field + "[" + std::to_string(k) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw ParseError(gline, ef, "expected [u, v] with non-negative integers");
            const auto u = e[0].get<std::uint64_t>();
            const auto v = e[1].get<std::uint64_t>();
            if (u >= n || v >= n) throw ParseError(gline, ef, "endpoint out of range for n=" + std::to_string(n));
            if (u == v) throw ParseError(gline, ef, "loop");
            if (u > v) throw ParseError(gline, ef, "edge not in u<v form (asymmetric listing)");
            const Edge edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
            if (!edges.empty() && !(edges.back() < edge))
                throw ParseError(gline, ef, "edges must be strictly increasing (sorted, no repeats)");
            edges.push_back(edge);
        }
        built.push_back(std::make_shared<const Graph>(n, edges));
    }

    Instance inst{GraphCollection(n, std::move(built)), std::nullopt};
    if (j.contains("pattern") && !j["pattern"].is_null()) {
        const ojson& p = j["pattern"];
        const std::size_t pline = line_of_key(text, "pattern");
        if (!p.is_array()) throw ParseError(pline, "pattern", "expected an array or null");
        ColourPattern chi;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const std::string pf = "pattern[" + std::to_string(i) + "]";
            if (!p[i].is_number_unsigned()) throw ParseError(pline, pf, "expected a non-negative integer");
            const auto c = p[i].get<std::uint64_t>();
            if (c >= m) throw ParseError(pline, pf, "colour " + std::to_string(c) + " is not below m=" + std::to_string(m));
            chi.colours.push_back(static_cast<Colour>(c));
        }
        if (chi.size() != n) throw ParseError(pline, "pattern", "length " + std::to_string(chi.size()) + " differs from n=" + std::to_string(n));
        inst.pattern = std::move(chi);
    }
    return inst;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

void save_instance(const std::filesystem::path& path, const Instance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << instance_to_json(inst);
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json(read_file(path)); }

std::string walk_to_json(const ColouredWalk& w) {
    ojson j;
    j["vertices"] = w.vertices;
    j["colours"] = w.colours;
    j["closed"] = w.closed;
    return j.dump() + "\n";
}

ColouredWalk walk_from_json(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "<document>", e.what());
    }
    ColouredWalk w;
    try {
        w.vertices = j.at("vertices").get<std::vector<Vertex>>();
        w.colours = j.at("colours").get<std::vector<Colour>>();
        w.closed = j.at("closed").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, "walk", e.what());
    }
    return w;
}

}  // namespace hampat
