#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/fsequence.hpp"
#include "cobweb/matrix.hpp"

namespace cobweb {

/// Vertex <s,t>: position s within level t (both 1-based; level 0 exists only
/// on posets built with an explicit bottom).
struct grid_vertex {
    int s = 0;  // position within level
    int t = 0;  // level index

    bool operator==(const grid_vertex&) const = default;
    // level-major order; matches the natural labeling
    bool operator<(const grid_vertex& o) const { return t != o.t ? t < o.t : s < o.s; }
};

inline std::string to_string(const grid_vertex& v) {
    return "<" + std::to_string(v.s) + "," + std::to_string(v.t) + ">";
}

/// Level-major order-preserving bijection between grid vertices and 1..N.
class natural_labeling {
public:
    natural_labeling(int first_level, std::vector<int> sizes)
        : first_level_(first_level), sizes_(std::move(sizes)), offsets_(sizes_.size() + 1, 0) {
        for (std::size_t i = 0; i < sizes_.size(); ++i)
            offsets_[i + 1] = offsets_[i] + sizes_[i];
    }

    int count() const { return offsets_.back(); }

    int label(grid_vertex v) const {
        int i = v.t - first_level_;
        if (i < 0 || i >= static_cast<int>(sizes_.size()) || v.s < 1 || v.s > sizes_[i])
            throw std::out_of_range("vertex outside poset: " + to_string(v));
        return offsets_[i] + v.s;
    }

    grid_vertex vertex(int label) const {
        if (label < 1 || label > count()) throw std::out_of_range("label out of range");
        int i = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), label - 1) -
                                 offsets_.begin()) - 1;
        return {label - offsets_[i], first_level_ + i};
    }

private:
    int first_level_;
    std::vector<int> sizes_;
    std::vector<int> offsets_;
};

/// Finite graded poset stored as a chain of bipartite biadjacency matrices:
/// up(i) relates level first_level+i to the level above it.  Covers exist
/// only between consecutive levels, so the digraph is graded, acyclic and
/// transitively irreducible by construction.
class graded_poset {
public:
    graded_poset(std::vector<int> sizes, std::vector<bool_matrix> up, int first_level = 1)
        : first_level_(first_level), sizes_(std::move(sizes)), up_(std::move(up)) {
        if (sizes_.empty()) throw std::invalid_argument("poset needs at least one level");
        for (int s : sizes_)
            if (s < 1) throw std::invalid_argument("level sizes must be positive");
        if (up_.size() + 1 != sizes_.size())
            throw std::invalid_argument("biadjacency shape error");
        for (std::size_t i = 0; i < up_.size(); ++i)
            if (up_[i].rows() != sizes_[i] || up_[i].cols() != sizes_[i + 1])
                throw std::invalid_argument("biadjacency shape error");
    }

    /// Complete case: every consecutive pair of levels forms a di-biclique.
    static graded_poset cobweb(const fsequence& f, int n) {
        return cobweb_layer(f, 1, n);
    }

    /// Levels k..n of the cobweb denominated by f.
    static graded_poset cobweb_layer(const fsequence& f, int k, int n) {
        if (k > n) throw std::invalid_argument("empty level range");
        std::vector<int> sizes;
        for (int t = k; t <= n; ++t) sizes.push_back(to_int32(f.value(t)));
        std::vector<bool_matrix> up;
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
            up.push_back(bool_matrix::ones(sizes[i], sizes[i + 1]));
        return graded_poset(std::move(sizes), std::move(up), k);
    }

    int first_level() const { return first_level_; }
    int last_level() const { return first_level_ + static_cast<int>(sizes_.size()) - 1; }
    int level_count() const { return static_cast<int>(sizes_.size()); }

    int level_size(int t) const { return sizes_[level_index(t)]; }
    const std::vector<int>& level_sizes() const { return sizes_; }

    /// Biadjacency between level t and level t+1.
    const bool_matrix& biadjacency(int t) const {
        int i = level_index(t);
        if (i + 1 >= static_cast<int>(sizes_.size()))
            throw std::out_of_range("no level above " + std::to_string(t));
        return up_[i];
    }
    const std::vector<bool_matrix>& biadjacency_chain() const { return up_; }

    int vertex_count() const {
        int n = 0;
        for (int s : sizes_) n += s;
        return n;
    }

    long long edge_count() const {
        long long n = 0;
        for (const bool_matrix& m : up_) n += m.count();
        return n;
    }

    bool is_cobweb() const {
        for (const bool_matrix& m : up_)
            if (!m.all_ones()) return false;
        return true;
    }

    bool contains(grid_vertex v) const {
        int i = v.t - first_level_;
        return i >= 0 && i < static_cast<int>(sizes_.size()) && v.s >= 1 && v.s <= sizes_[i];
    }

    std::vector<grid_vertex> vertices() const {
        std::vector<grid_vertex> out;
        for (int i = 0; i < static_cast<int>(sizes_.size()); ++i)
            for (int s = 1; s <= sizes_[i]; ++s) out.push_back({s, first_level_ + i});
        return out;
    }

    natural_labeling labeling() const { return natural_labeling(first_level_, sizes_); }

    bool covers(grid_vertex x, grid_vertex y) const {
        require(x);
        require(y);
        if (y.t != x.t + 1) return false;
        return up_[level_index(x.t)].at(x.s - 1, y.s - 1);
    }

    /// x <= y.  O(1) grid formula on cobwebs, reachability otherwise; the two
    /// agree on cobwebs.
    bool leq(grid_vertex x, grid_vertex y) const {
        require(x);
        require(y);
        if (x.t == y.t) return x.s == y.s;
        if (x.t > y.t) return false;
        if (is_cobweb()) return true;
        std::vector<char> reach(sizes_[level_index(x.t)], 0);
        reach[x.s - 1] = 1;
        for (int t = x.t; t < y.t; ++t) {
            const bool_matrix& b = up_[level_index(t)];
            std::vector<char> next(b.cols(), 0);
            for (int i = 0; i < b.rows(); ++i) {
                if (!reach[i]) continue;
                for (int j = 0; j < b.cols(); ++j)
                    if (b.at(i, j)) next[j] = 1;
            }
            reach = std::move(next);
        }
        return reach[y.s - 1] != 0;
    }

    int in_degree(grid_vertex v) const {
        require(v);
        if (v.t == first_level_) return 0;
        const bool_matrix& b = up_[level_index(v.t) - 1];
        int d = 0;
        for (int i = 0; i < b.rows(); ++i) d += b.at(i, v.s - 1);
        return d;
    }

    int out_degree(grid_vertex v) const {
        require(v);
        if (v.t == last_level()) return 0;
        const bool_matrix& b = up_[level_index(v.t)];
        int d = 0;
        for (int j = 0; j < b.cols(); ++j) d += b.at(v.s - 1, j);
        return d;
    }

    /// Induced sub-poset on levels k..n.
    graded_poset layer(int k, int n) const {
        if (k < first_level_ || n > last_level() || k > n)
            throw std::out_of_range("layer bounds outside poset levels");
        std::vector<int> sizes(sizes_.begin() + level_index(k), sizes_.begin() + level_index(n) + 1);
        std::vector<bool_matrix> up(up_.begin() + level_index(k), up_.begin() + level_index(k) + (n - k));
        return graded_poset(std::move(sizes), std::move(up), k);
    }

    graded_poset dual() const {
        std::vector<int> sizes(sizes_.rbegin(), sizes_.rend());
        std::vector<bool_matrix> up;
        for (auto it = up_.rbegin(); it != up_.rend(); ++it) up.push_back(it->transpose());
        return graded_poset(std::move(sizes), std::move(up), first_level_);
    }

    /// All chains with one vertex per level, consecutive vertices in cover
    /// relation, in lexicographic order of their position sequences.
    std::vector<std::vector<grid_vertex>> max_chains() const {
        std::vector<std::vector<grid_vertex>> out;
        std::vector<grid_vertex> chain;
        walk_chains(0, chain, out);
        return out;
    }

    bigint max_chain_count() const {
        // exact count without enumeration: valid on cobwebs, where every
        // position combination is a chain
        if (is_cobweb()) {
            bigint n = 1;
            for (int s : sizes_) n *= s;
            return n;
        }
        return bigint(max_chains().size());
    }

    /// Vertices strictly between the bottom and top levels with in-degree or
    /// out-degree zero.
    std::vector<grid_vertex> mute_vertices() const {
        std::vector<grid_vertex> out;
        for (grid_vertex v : vertices()) {
            if (v.t == first_level_ || v.t == last_level()) continue;
            if (in_degree(v) == 0 || out_degree(v) == 0) out.push_back(v);
        }
        return out;
    }

    std::vector<grid_vertex> dummy_vertices() const {
        std::vector<grid_vertex> out;
        for (grid_vertex v : vertices()) {
            if (v.t == first_level_ || v.t == last_level()) continue;
            if (in_degree(v) == 0 && out_degree(v) == 0) out.push_back(v);
        }
        return out;
    }

    /// Adjacency matrix of the cover digraph in natural labeling: strictly
    /// block-superdiagonal with the biadjacency chain as blocks.
    bool_matrix adjacency_matrix() const {
        natural_labeling lab = labeling();
        bool_matrix a(lab.count(), lab.count());
        int offset = 0;
        for (std::size_t i = 0; i < up_.size(); ++i) {
            const bool_matrix& b = up_[i];
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    if (b.at(r, c)) a.set(offset + r, offset + b.rows() + c, true);
            offset += b.rows();
        }
        return a;
    }

    /// Hasse diagram connectivity (reported, not enforced).
    bool is_connected() const {
        int n = vertex_count();
        if (n == 1) return true;
        bool_matrix a = adjacency_matrix();
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (seen[w] || (!a.at(v, w) && !a.at(w, v))) continue;
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
        return visited == n;
    }

    /// Hasse diagram in DOT, levels as ranks, edges directed upward.
    std::string to_dot() const {
        std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
        for (int i = 0; i < static_cast<int>(sizes_.size()); ++i) {
            out += "  { rank=same;";
            for (int s = 1; s <= sizes_[i]; ++s)
                out += " " + node_id({s, first_level_ + i}) + ";";
            out += " }\n";
        }
        for (int i = 0; i < static_cast<int>(up_.size()); ++i)
            for (int r = 0; r < up_[i].rows(); ++r)
                for (int c = 0; c < up_[i].cols(); ++c)
                    if (up_[i].at(r, c))
                        out += "  " + node_id({r + 1, first_level_ + i}) + " -> " +
                               node_id({c + 1, first_level_ + i + 1}) + ";\n";
        out += "}\n";
        return out;
    }

    bool operator==(const graded_poset&) const = default;

private:
    int level_index(int t) const {
        int i = t - first_level_;
        if (i < 0 || i >= static_cast<int>(sizes_.size()))
            throw std::out_of_range("level out of range: " + std::to_string(t));
        return i;
    }

    void require(grid_vertex v) const {
        if (!contains(v)) throw std::out_of_range("vertex outside poset: " + to_string(v));
    }

    void walk_chains(int depth, std::vector<grid_vertex>& chain,
                     std::vector<std::vector<grid_vertex>>& out) const {
        if (depth == static_cast<int>(sizes_.size())) {
            out.push_back(chain);
            return;
        }
        for (int s = 1; s <= sizes_[depth]; ++s) {
            if (depth > 0 && !up_[depth - 1].at(chain.back().s - 1, s - 1)) continue;
            chain.push_back({s, first_level_ + depth});
            walk_chains(depth + 1, chain, out);
            chain.pop_back();
        }
    }

    static std::string node_id(grid_vertex v) {
        return "v" + std::to_string(v.s) + "_" + std::to_string(v.t);
    }

    int first_level_;
    std::vector<int> sizes_;
    std::vector<bool_matrix> up_;
};

}  // namespace cobweb
