#include "hampat/rmbg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hampat/errors.hpp"
#include "hampat/random.hpp"
#include "json.hpp"

namespace hampat {

std::size_t rmbg_removed_count(std::size_t m, double beta) {
    return static_cast<std::size_t>(std::ceil(beta * static_cast<double>(m) - 1e-9));
}

std::size_t RmbgTemplate::removed() const noexcept { return rmbg_removed_count(m, beta); }

std::size_t RmbgTemplate::edge_count() const noexcept {
    std::size_t e = 0;
    for (const auto& row : x_adj) e += row.size();
    return e;
}

std::vector<std::size_t> RmbgTemplate::right_degrees() const {
    std::vector<std::size_t> deg(right_count(), 0);
    for (const auto& row : x_adj)
        for (auto r : row) ++deg[r];
    return deg;
}

std::size_t RmbgTemplate::min_degree() const {
    std::size_t low = SIZE_MAX;
    for (const auto& row : x_adj) low = std::min(low, row.size());
    for (auto d : right_degrees()) low = std::min(low, d);
    return low == SIZE_MAX ? 0 : low;
}

std::size_t RmbgTemplate::max_degree() const {
    std::size_t high = 0;
    for (const auto& row : x_adj) high = std::max(high, row.size());
    for (auto d : right_degrees()) high = std::max(high, d);
    return high;
}

BipartiteGraph RmbgTemplate::restricted(const std::vector<std::uint32_t>& kept_z) const {
    const std::size_t y = y_count();
    std::vector<std::uint32_t> renumber(right_count(), Matching::unmatched);
    for (std::uint32_t r = 0; r < y; ++r) renumber[r] = r;
    for (std::size_t k = 0; k < kept_z.size(); ++k) renumber[y + kept_z[k]] = static_cast<std::uint32_t>(y + k);
    BipartiteGraph bg(x_count(), y + kept_z.size());
    for (std::uint32_t x = 0; x < x_count(); ++x) {
        for (auto r : x_adj[x])
            if (renumber[r] != Matching::unmatched) bg.add_edge(x, renumber[r]);
        std::sort(bg.adj[x].begin(), bg.adj[x].end());
    }
    return bg;
}

namespace {

std::vector<std::uint32_t> complement_of(std::size_t z_count, const std::vector<std::uint32_t>& deleted) {
    std::vector<char> gone(z_count, 0);
    for (auto z : deleted) gone.at(z) = 1;
    std::vector<std::uint32_t> kept;
    for (std::uint32_t z = 0; z < z_count; ++z)
        if (!gone[z]) kept.push_back(z);
    return kept;
}

bool robust_for(const RmbgTemplate& tpl, const std::vector<std::uint32_t>& deleted) {
    const auto kept = complement_of(tpl.z_count(), deleted);
    return perfect_matching(tpl.restricted(kept)).found();
}

// C(n, k) saturating at `cap`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(cap)) return cap + 1;
    }
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(acc)));
}

}  // namespace

std::optional<std::vector<std::uint32_t>> match_after_deletion(const RmbgTemplate& tpl,
                                                               const std::vector<std::uint32_t>& deleted_z) {
    if (deleted_z.size() != tpl.removed())
        throw std::invalid_argument("match_after_deletion: expected " + std::to_string(tpl.removed()) +
                                    " deleted Z vertices, got " + std::to_string(deleted_z.size()));
    const auto kept = complement_of(tpl.z_count(), deleted_z);
    const auto result = perfect_matching(tpl.restricted(kept));
    if (!result.found()) return std::nullopt;
    const std::size_t y = tpl.y_count();
    std::vector<std::uint32_t> out = result.matching->left_to_right;
    for (auto& r : out)
        if (r >= y) r = static_cast<std::uint32_t>(y + kept[r - y]);
    return out;
}

RobustnessReport verify_robustness(const RmbgTemplate& tpl, std::uint64_t exhaustive_budget, std::size_t samples,
                                   std::uint64_t seed) {
    RobustnessReport report;
    const std::size_t zc = tpl.z_count();
    const std::size_t r = tpl.removed();
    if (r > zc) return report;

    auto check = [&](const std::vector<std::uint32_t>& deleted) {
        ++report.checked;
        if (robust_for(tpl, deleted)) return true;
        report.counterexample = deleted;
        std::sort(report.counterexample.begin(), report.counterexample.end());
        return false;
    };

    if (binomial_capped(zc, r, exhaustive_budget) <= exhaustive_budget) {
        report.exhaustive = true;
        std::vector<std::uint32_t> pick(r);
        std::iota(pick.begin(), pick.end(), 0u);
        while (true) {
            if (!check(pick)) return report;
            std::size_t i = r;
            while (i > 0 && pick[i - 1] == zc - r + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
        report.ok = true;
        return report;
    }

    // Probes: keep the m lowest-degree Z vertices; keep Z vertices clustered
    // around one X neighbourhood; keep Z vertices clustered around one z.
    const std::size_t y = tpl.y_count();
    const auto deg = tpl.right_degrees();
    std::vector<std::uint32_t> by_degree(zc);
    std::iota(by_degree.begin(), by_degree.end(), 0u);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::uint32_t p, std::uint32_t q) { return deg[y + p] < deg[y + q]; });
    auto deleted_keeping = [&](std::vector<std::uint32_t> preferred) {
        std::vector<char> keep(zc, 0);
        std::size_t kept = 0;
        for (auto z : by_degree) preferred.push_back(z);
        for (auto z : preferred)
            if (kept < tpl.m && !keep[z]) {
                keep[z] = 1;
                ++kept;
            }
        std::vector<std::uint32_t> deleted;
        for (std::uint32_t z = 0; z < zc; ++z)
            if (!keep[z]) deleted.push_back(z);
        return deleted;
    };
    if (!check(deleted_keeping({}))) return report;
    for (const auto& row : tpl.x_adj) {
        std::vector<std::uint32_t> near;
        for (auto rid : row)
            if (rid >= y) near.push_back(rid - static_cast<std::uint32_t>(y));
        if (!check(deleted_keeping(near))) return report;
    }
    for (std::uint32_t z = 0; z < zc; ++z) {
        std::vector<std::uint32_t> near{z};
        for (const auto& row : tpl.x_adj)
            if (std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(y + z)))
                for (auto rid : row)
                    if (rid >= y && rid != y + z) near.push_back(rid - static_cast<std::uint32_t>(y));
        if (!check(deleted_keeping(near))) return report;
    }

    Rng rng(seed);
    std::vector<std::uint32_t> all(zc);
    std::iota(all.begin(), all.end(), 0u);
    for (std::size_t i = 0; i < samples; ++i)
        if (!check(sample_without_replacement(all, r, rng))) return report;
    report.ok = true;
    return report;
}

std::size_t repair_min_degree(RmbgTemplate& tpl, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t added = 0;
    const std::size_t xs = tpl.x_count();
    const std::size_t rs = tpl.right_count();
    auto right_deg = tpl.right_degrees();
    auto has = [&](std::uint32_t x, std::uint32_t r) {
        return std::binary_search(tpl.x_adj[x].begin(), tpl.x_adj[x].end(), r);
    };
    auto join = [&](std::uint32_t x, std::uint32_t r) {
        auto& row = tpl.x_adj[x];
        row.insert(std::upper_bound(row.begin(), row.end(), r), r);
        ++right_deg[r];
        ++added;
    };

    for (std::uint32_t r = 0; r < rs; ++r) {
        while (right_deg[r] < 2 && right_deg[r] < xs) {
            std::vector<std::uint32_t> options;
            for (std::uint32_t x = 0; x < xs; ++x)
                if (!has(x, r)) options.push_back(x);
            shuffle(options, rng);
            const auto pick = *std::min_element(options.begin(), options.end(), [&](std::uint32_t p, std::uint32_t q) {
                return tpl.x_adj[p].size() < tpl.x_adj[q].size();
            });
            join(pick, r);
        }
    }
    for (std::uint32_t x = 0; x < xs; ++x) {
        while (tpl.x_adj[x].size() < 2 && tpl.x_adj[x].size() < rs) {
            std::vector<std::uint32_t> options;
            for (std::uint32_t r = 0; r < rs; ++r)
                if (!has(x, r)) options.push_back(r);
            shuffle(options, rng);
            const auto pick = *std::min_element(options.begin(), options.end(),
                                                [&](std::uint32_t p, std::uint32_t q) { return right_deg[p] < right_deg[q]; });
            join(x, pick);
        }
    }
    return added;
}

namespace {

RmbgTemplate random_candidate(std::size_t m, double beta, std::uint64_t seed, const RmbgOptions& opts) {
    RmbgTemplate tpl;
    tpl.m = m;
    tpl.beta = beta;
    tpl.seed = seed;
    const std::size_t xs = tpl.x_count();
    tpl.x_adj.assign(xs, {});
    Rng rng(seed);

    std::vector<std::uint32_t> xids(xs);
    std::iota(xids.begin(), xids.end(), 0u);
    const std::size_t yd = std::min(xs, opts.y_degree ? opts.y_degree : std::size_t{12});
    for (std::uint32_t r = 0; r < tpl.y_count(); ++r)
        for (auto x : sample_without_replacement(xids, yd, rng)) tpl.x_adj[x].push_back(r);

    // Z edges dealt from a reshuffled cyclic deck of X so X degrees stay level.
    std::vector<std::uint32_t> deck;
    std::size_t top = 0;
    const std::size_t zd = std::min(xs, opts.z_degree);
    for (std::size_t z = 0; z < tpl.z_count(); ++z) {
        const auto rid = static_cast<std::uint32_t>(tpl.y_count() + z);
        std::size_t placed = 0;
        while (placed < zd) {
            if (top == deck.size()) {
                deck = xids;
                shuffle(deck, rng);
                top = 0;
            }
            const auto x = deck[top++];
            if (!tpl.x_adj[x].empty() && tpl.x_adj[x].back() == rid) continue;
            tpl.x_adj[x].push_back(rid);
            ++placed;
        }
    }
    for (auto& row : tpl.x_adj) std::sort(row.begin(), row.end());
    repair_min_degree(tpl, mix_seed(seed, 1));
    return tpl;
}

}  // namespace

RmbgBuild build_rmbg(std::size_t m, double beta, std::uint64_t seed, const RmbgOptions& opts) {
    if (m < 1) throw std::invalid_argument("build_rmbg: m must be positive");
    if (!(beta > 0.0)) throw std::invalid_argument("build_rmbg: beta must be positive");
    for (int attempt = 1; attempt <= opts.max_retries; ++attempt) {
        const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(attempt));
        RmbgTemplate tpl = random_candidate(m, beta, s, opts);
        tpl.seed = seed;
        if (tpl.min_degree() < 2 || tpl.max_degree() > opts.max_degree) continue;
        RobustnessReport report = verify_robustness(tpl, opts.exhaustive_budget, opts.samples, mix_seed(s, 2));
        if (report.ok) return {std::move(tpl), std::move(report), attempt};
    }
    throw RetriesExhausted("rmbg", opts.max_retries, 0.0);
}

std::string rmbg_to_json(const RmbgTemplate& tpl) {
    nlohmann::ordered_json j;
    j["m"] = tpl.m;
    j["beta"] = tpl.beta;
    j["seed"] = tpl.seed;
    auto edges = nlohmann::ordered_json::array();
    for (std::uint32_t x = 0; x < tpl.x_adj.size(); ++x)
        for (auto r : tpl.x_adj[x]) edges.push_back({x, r});
    j["edges"] = std::move(edges);
    return j.dump() + "\n";
}

RmbgTemplate rmbg_from_json(std::string_view text, const RmbgOptions& opts) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, "<document>", e.what());
    }
    RmbgTemplate tpl;
    try {
        tpl.m = j.at("m").get<std::size_t>();
        tpl.beta = j.at("beta").get<double>();
        tpl.seed = j.at("seed").get<std::uint64_t>();
        if (tpl.m < 1 || !(tpl.beta > 0.0)) throw ParseError(1, "m", "template sizes out of range");
        tpl.x_adj.assign(tpl.x_count(), {});
        for (const auto& e : j.at("edges")) {
            const auto x = e.at(0).get<std::uint32_t>();
            const auto r = e.at(1).get<std::uint32_t>();
            if (x >= tpl.x_count() || r >= tpl.right_count()) throw ParseError(1, "edges", "endpoint out of range");
            tpl.x_adj[x].push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, "rmbg", e.what());
    }
    for (auto& row : tpl.x_adj) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw ParseError(1, "edges", "repeated edge");
    }
    if (tpl.min_degree() < 2 || tpl.max_degree() > opts.max_degree)
        throw StageFailure("rmbg", "cached template violates the degree bounds");
    if (!verify_robustness(tpl, opts.exhaustive_budget, opts.samples, tpl.seed).ok)
        throw StageFailure("rmbg", "cached template failed robustness re-verification");
    return tpl;
}

RmbgTemplate cached_rmbg(const std::filesystem::path& dir, std::size_t m, double beta, std::uint64_t seed,
                         const RmbgOptions& opts) {
    std::ostringstream name;
    name << "rmbg_m" << m << "_r" << rmbg_removed_count(m, beta) << "_s" << seed << ".json";
    const auto path = dir / name.str();
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return rmbg_from_json(ss.str(), opts);
    }
    RmbgTemplate tpl = build_rmbg(m, beta, seed, opts).tpl;
    std::filesystem::create_directories(dir);
    std::ofstream(path) << rmbg_to_json(tpl);
    return tpl;
}

}  // namespace hampat
