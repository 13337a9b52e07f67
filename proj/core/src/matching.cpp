#include "hampat/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hampat {

std::size_t BipartiteGraph::min_degree() const {
    if (left == 0 && right == 0) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> rdeg(right, 0);
    for (const auto& row : adj) {
        best = std::min(best, row.size());
        for (auto r : row) ++rdeg[r];
    }
    for (auto d : rdeg) best = std::min(best, d);
    return best;
}

bool Matching::valid_for(const BipartiteGraph& g) const {
    if (left_to_right.size() != g.left || right_to_left.size() != g.right) return false;
    std::size_t count = 0;
    for (std::uint32_t l = 0; l < g.left; ++l) {
        const auto r = left_to_right[l];
        if (r == unmatched) continue;
        if (r >= g.right || right_to_left[r] != l) return false;
        if (std::find(g.adj[l].begin(), g.adj[l].end(), r) == g.adj[l].end()) return false;
        ++count;
    }
    for (std::uint32_t r = 0; r < g.right; ++r)
        if (right_to_left[r] != unmatched && left_to_right[right_to_left[r]] != r) return false;
    return count == size;
}

namespace {

class HopcroftKarp {
  public:
    explicit HopcroftKarp(const BipartiteGraph& g)
        : g_(g), l2r_(g.left, Matching::unmatched), r2l_(g.right, Matching::unmatched), dist_(g.left), it_(g.left) {}

    Matching run() {
        std::size_t size = 0;
        while (bfs()) {
            std::fill(it_.begin(), it_.end(), 0);
            for (std::uint32_t l = 0; l < g_.left; ++l)
                if (l2r_[l] == Matching::unmatched && dfs(l)) ++size;
        }
        return Matching{std::move(l2r_), std::move(r2l_), size};
    }

  private:
    static constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();

    bool bfs() {
        std::vector<std::uint32_t> queue;
        queue.reserve(g_.left);
        for (std::uint32_t l = 0; l < g_.left; ++l) {
            if (l2r_[l] == Matching::unmatched) {
                dist_[l] = 0;
                queue.push_back(l);
            } else {
                dist_[l] = inf;
            }
        }
        bool found = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto l = queue[head];
            for (auto r : g_.adj[l]) {
                const auto next = r2l_[r];
                if (next == Matching::unmatched) {
                    found = true;
                } else if (dist_[next] == inf) {
                    dist_[next] = dist_[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        return found;
    }

    // Iterative would be faster on huge inputs; sides here stay in the
    // hundreds, so recursion depth is bounded by the layer count.
    bool dfs(std::uint32_t l) {
        const auto& row = g_.adj[l];
        for (auto& i = it_[l]; i < row.size(); ++i) {
            const auto r = row[i];
            const auto next = r2l_[r];
            if (next == Matching::unmatched || (dist_[next] == dist_[l] + 1 && dfs(next))) {
                l2r_[l] = r;
                r2l_[r] = l;
                ++i;
                return true;
            }
        }
        dist_[l] = inf;
        return false;
    }

    const BipartiteGraph& g_;
    std::vector<std::uint32_t> l2r_;
    std::vector<std::uint32_t> r2l_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::size_t> it_;
};

}  // namespace

Matching maximum_bipartite_matching(const BipartiteGraph& g) {
    for (const auto& row : g.adj)
        for (auto r : row)
            if (r >= g.right) throw std::invalid_argument("bipartite edge endpoint out of range");
    return HopcroftKarp(g).run();
}

PerfectMatchingResult perfect_matching(const BipartiteGraph& g) {
    if (g.left != g.right) throw std::invalid_argument("perfect_matching: sides must have equal size");
    Matching m = maximum_bipartite_matching(g);
    if (m.size == g.left) return {std::move(m), {}};

    // Alternating reachability from every free left vertex. The reached left
    // set S has N(S) equal to the reached right set, all of it matched back
    // into S, so |N(S)| = |S| - (#free left vertices) < |S|.
    std::vector<char> left_seen(g.left, 0);
    std::vector<char> right_seen(g.right, 0);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t l = 0; l < g.left; ++l)
        if (m.left_to_right[l] == Matching::unmatched) {
            left_seen[l] = 1;
            queue.push_back(l);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto r : g.adj[queue[head]]) {
            if (right_seen[r]) continue;
            right_seen[r] = 1;
            const auto back = m.right_to_left[r];
            if (back != Matching::unmatched && !left_seen[back]) {
                left_seen[back] = 1;
                queue.push_back(back);
            }
        }
    }
    std::vector<std::uint32_t> witness;
    for (std::uint32_t l = 0; l < g.left; ++l)
        if (left_seen[l]) witness.push_back(l);
    return {std::nullopt, std::move(witness)};
}

std::size_t neighbourhood_size(const BipartiteGraph& g, const std::vector<std::uint32_t>& left_set) {
    std::vector<char> hit(g.right, 0);
    std::size_t count = 0;
    for (auto l : left_set)
        for (auto r : g.adj[l])
            if (!hit[r]) {
                hit[r] = 1;
                ++count;
            }
    return count;
}

}  // namespace hampat
