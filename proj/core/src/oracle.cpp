#include "hampat/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace hampat {

std::string_view to_string(OracleStatus s) noexcept {
    switch (s) {
        case OracleStatus::found: return "found";
        case OracleStatus::no_solution: return "no-solution";
        case OracleStatus::budget_exhausted: return "budget-exhausted";
    }
    return "unknown";
}

namespace {

using Mask = std::uint64_t;

// Vertex 0 sits at pattern position p; u_0 = 0 and edge k of the search
// sequence u has colour chi[(p + k) mod n]. Trying every p covers every
// cycle exactly once per orientation-and-start, so the search is complete.
class Search {
  public:
    Search(const GraphCollection& g, const ColourPattern& chi, std::uint64_t budget)
        : n_(g.order()), budget_(budget), adj_(n_, std::vector<Mask>(n_, 0)), col_(n_) {
        if (chi.size() != n_) throw std::invalid_argument("oracle: pattern length must equal n");
        if (n_ < 3 || n_ > 64) throw std::invalid_argument("oracle: supports 3 <= n <= 64");
        chi.validate(g.colours());
        // adj_[i][v]: neighbours of v in the graph of pattern position i.
        for (std::size_t i = 0; i < n_; ++i)
            for (Vertex v = 0; v < n_; ++v)
                for (Vertex w : g[chi[i]].neighbours(v)) adj_[i][v] |= Mask{1} << w;
        full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    }

    // Returns false when the budget ran out.
    template <typename OnCycle>
    bool run(std::size_t p, OnCycle&& on_cycle) {
        for (std::size_t k = 0; k < n_; ++k) col_[k] = (p + k) % n_;
        seq_.assign(1, 0);
        return dfs(Mask{1}, on_cycle);
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Vertex>& sequence() const noexcept { return seq_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }

  private:
    // Returns false to stop (budget or the callback asked to stop).
    template <typename OnCycle>
    bool dfs(Mask visited, OnCycle& on_cycle) {
        const std::size_t k = seq_.size() - 1;
        const Vertex u = seq_.back();
        if (k == n_ - 1) {
            if (adj_[col_[n_ - 1]][u] & Mask{1}) return on_cycle();
            return true;
        }
        Mask options = adj_[col_[k]][u] & ~visited;
        while (options) {
            const auto w = static_cast<Vertex>(std::countr_zero(options));
            options &= options - 1;
            if (++nodes_ > budget_) return false;
            const Mask after = visited | (Mask{1} << w);
            if (k + 1 == n_ - 1) {
                if (!(adj_[col_[n_ - 1]][w] & Mask{1})) continue;
            } else {
                const Mask free = full_ & ~after;
                if (!(adj_[col_[k + 1]][w] & free)) continue;
                if (!(adj_[col_[n_ - 1]][0] & free)) continue;
            }
            seq_.push_back(w);
            const bool go_on = dfs(after, on_cycle);
            seq_.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<Mask>> adj_;
    std::vector<std::size_t> col_;
    std::vector<Vertex> seq_;
    Mask full_ = 0;
};

}  // namespace

std::size_t pattern_symmetry_count(const ColourPattern& chi) {
    const std::size_t n = chi.size();
    std::size_t count = 0;
    for (std::size_t r = 0; r < n; ++r) {
        bool rot = true;
        bool ref = true;
        for (std::size_t i = 0; i < n && (rot || ref); ++i) {
            if (chi[i] != chi[(i + r) % n]) rot = false;
            if (chi[i] != chi[(r + 2 * n - 1 - i) % n]) ref = false;
        }
        count += static_cast<std::size_t>(rot) + static_cast<std::size_t>(ref);
    }
    return count;
}

OracleResult exact_solve(const GraphCollection& g, const ColourPattern& chi, const OracleOptions& opts) {
    Search search(g, chi, opts.budget);
    OracleResult result;
    const std::size_t n = search.n();
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<Vertex> u;
        const bool finished = search.run(p, [&] {
            u = search.sequence();
            return false;
        });
        if (!u.empty()) {
            ColouredWalk w;
            w.closed = true;
            if (opts.any_rotation) {
                w.vertices = u;
                for (std::size_t k = 0; k < n; ++k) w.colours.push_back(chi[(p + k) % n]);
                result.rotation = p;
            } else {
                w.vertices.assign(n, 0);
                for (std::size_t k = 0; k < n; ++k) w.vertices[(p + k) % n] = u[k];
                w.colours = chi.colours;
            }
            result.status = OracleStatus::found;
            result.cycle = std::move(w);
            result.nodes = search.nodes();
            return result;
        }
        if (!finished) {
            result.status = OracleStatus::budget_exhausted;
            result.nodes = search.nodes();
            return result;
        }
    }
    result.status = OracleStatus::no_solution;
    result.nodes = search.nodes();
    return result;
}

CountResult count_solutions(const GraphCollection& g, const ColourPattern& chi, std::uint64_t budget) {
    Search search(g, chi, budget);
    CountResult result;
    for (std::size_t p = 0; p < search.n(); ++p) {
        const bool finished = search.run(p, [&] {
            ++result.sequences;
            return true;
        });
        if (!finished) {
            result.status = OracleStatus::budget_exhausted;
            result.nodes = search.nodes();
            return result;
        }
    }
    // The symmetry group acts freely on Hamilton sequences (n >= 3), so every
    // orbit has exactly `symmetries` members.
    result.symmetries = pattern_symmetry_count(chi);
    result.count = result.sequences / result.symmetries;
    result.status = result.count ? OracleStatus::found : OracleStatus::no_solution;
    result.nodes = search.nodes();
    return result;
}

}  // namespace hampat
