#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cobweb/matrix.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// General finite poset on vertices 0..n-1.  Stores the full order relation;
/// the cover digraph is its transitive reduction.  This is the carrier for
/// the poset sum/join operations, whose results need not stay level-graded.
class finite_poset {
public:
    /// From the reflexive order matrix.  Validates reflexivity, antisymmetry
    /// and transitivity.
    explicit finite_poset(bool_matrix order) : leq_(std::move(order)) {
        const int n = leq_.rows();
        if (leq_.cols() != n) throw std::invalid_argument("order matrix must be square");
        for (int i = 0; i < n; ++i)
            if (!leq_.at(i, i)) throw std::invalid_argument("order must be reflexive");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i != j && leq_.at(i, j) && leq_.at(j, i))
                    throw std::invalid_argument("order must be antisymmetric");
                if (!leq_.at(i, j)) continue;
                for (int k = 0; k < n; ++k)
                    if (leq_.at(j, k) && !leq_.at(i, k))
                        throw std::invalid_argument("order must be transitive");
            }
        reduce();
    }

    static finite_poset antichain(int n) { return finite_poset(bool_matrix::identity(n)); }

    static finite_poset chain(int n) {
        bool_matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, true);
        return finite_poset(std::move(m));
    }

    /// Order generated by a set of edges (x below y); must be acyclic.
    static finite_poset from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        bool_matrix adj(n, n);
        for (auto [x, y] : edges) adj.set(x, y, true);
        bool_matrix closed = reflexive_transitive_closure(adj);
        return finite_poset(std::move(closed));
    }

    /// Natural labeling of a graded poset, shifted to 0-based vertices.
    static finite_poset from_graded(const graded_poset& p) {
        return finite_poset(reflexive_transitive_closure(p.adjacency_matrix()));
    }

    int size() const { return leq_.rows(); }

    bool leq(int x, int y) const { return leq_.at(x, y); }
    bool lt(int x, int y) const { return x != y && leq_.at(x, y); }
    bool comparable(int x, int y) const { return leq_.at(x, y) || leq_.at(y, x); }
    bool covers(int x, int y) const { return covers_.at(x, y); }

    const bool_matrix& order_matrix() const { return leq_; }
    const bool_matrix& cover_matrix() const { return covers_; }

    /// Number of pairs in cover relation ({X} in the counting identities).
    long long cover_count() const { return covers_.count(); }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (covers_.col_is_zero(v)) out.push_back(v);
        return out;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (covers_.row_is_zero(v)) out.push_back(v);
        return out;
    }

    finite_poset dual() const { return finite_poset(leq_.transpose()); }

    /// Induced sub-poset; vertex i of the result is verts[i].
    finite_poset induced(const std::vector<int>& verts) const {
        const int m = static_cast<int>(verts.size());
        bool_matrix order(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) order.set(i, j, leq_.at(verts[i], verts[j]));
        return finite_poset(std::move(order));
    }

    bool operator==(const finite_poset&) const = default;

private:
    void reduce() {
        const int n = leq_.rows();
        covers_ = bool_matrix(n, n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y || !leq_.at(x, y)) continue;
                bool direct = true;
                for (int z = 0; z < n && direct; ++z)
                    if (z != x && z != y && leq_.at(x, z) && leq_.at(z, y)) direct = false;
                if (direct) covers_.set(x, y, true);
            }
    }

    bool_matrix leq_;
    bool_matrix covers_;
};

/// Disjoint union; vertices of q are shifted past p's.
inline finite_poset cardinal_sum(const finite_poset& p, const finite_poset& q) {
    const int np = p.size(), nq = q.size();
    bool_matrix order(np + nq, np + nq);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) order.set(i, j, p.leq(i, j));
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) order.set(np + i, np + j, q.leq(i, j));
    return finite_poset(std::move(order));
}

/// Stacked sum: everything in p below everything in q.  The Hasse diagram
/// gains exactly the (maximal of p) x (minimal of q) cover edges.
inline finite_poset ordinal_sum(const finite_poset& p, const finite_poset& q) {
    const int np = p.size(), nq = q.size();
    bool_matrix order(np + nq, np + nq);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) order.set(i, j, p.leq(i, j));
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) order.set(np + i, np + j, q.leq(i, j));
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nq; ++j) order.set(i, np + j, true);
    return finite_poset(std::move(order));
}

/// Product order on pairs: (x1,y1) <= (x2,y2) iff x1 <= x2 and y1 <= y2.
/// Pair (x,y) becomes vertex x*|q|+y.
inline finite_poset cartesian_product(const finite_poset& p, const finite_poset& q) {
    const int np = p.size(), nq = q.size();
    bool_matrix order(np * nq, np * nq);
    for (int x1 = 0; x1 < np; ++x1)
        for (int y1 = 0; y1 < nq; ++y1)
            for (int x2 = 0; x2 < np; ++x2)
                for (int y2 = 0; y2 < nq; ++y2)
                    order.set(x1 * nq + y1, x2 * nq + y2, p.leq(x1, x2) && q.leq(y1, y2));
    return finite_poset(std::move(order));
}

/// Identification of a sub-poset of p with a sub-poset of q, pairwise
/// (vertex in p, vertex in q).  The identified regions must carry identical
/// orders for the join to be defined.
struct overlap_spec {
    std::vector<std::pair<int, int>> identify;
};

/// Glue q onto p along the overlap.  Vertices of p keep their ids; vertices
/// of q outside the overlap follow in q's order.  The result order is the
/// closure of the combined cover digraphs, which agrees with both operand
/// orders on their ranges.
inline finite_poset natural_join(const finite_poset& p, const finite_poset& q,
                                 const overlap_spec& overlap) {
    if (overlap.identify.empty()) throw std::invalid_argument("overlap must be nonempty");
    const int np = p.size(), nq = q.size();

    std::vector<int> q_to_joint(nq, -1);
    std::vector<char> p_used(np, 0), q_used(nq, 0);
    for (auto [pv, qv] : overlap.identify) {
        if (pv < 0 || pv >= np || qv < 0 || qv >= nq)
            throw std::out_of_range("overlap vertex out of range");
        if (p_used[pv] || q_used[qv])
            throw std::invalid_argument("overlap identification must be a bijection");
        p_used[pv] = q_used[qv] = 1;
        q_to_joint[qv] = pv;
    }
    // conformity: the identified sub-posets are order-isomorphic
    for (auto [p1, q1] : overlap.identify)
        for (auto [p2, q2] : overlap.identify)
            if (p.leq(p1, p2) != q.leq(q1, q2))
                throw std::invalid_argument("natural join conformity error");

    int next = np;
    for (int v = 0; v < nq; ++v)
        if (q_to_joint[v] < 0) q_to_joint[v] = next++;
    const int n = next;

    bool_matrix adj(n, n);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (p.covers(i, j)) adj.set(i, j, true);
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j)
            if (q.covers(i, j)) adj.set(q_to_joint[i], q_to_joint[j], true);

    finite_poset joint(reflexive_transitive_closure(adj));

    // the join must not disturb either operand's order
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (joint.leq(i, j) != p.leq(i, j))
                throw std::invalid_argument("natural join conformity error");
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j)
            if (joint.leq(q_to_joint[i], q_to_joint[j]) != q.leq(i, j))
                throw std::invalid_argument("natural join conformity error");
    return joint;
}

/// Natural join of graded posets along level suffix/prefix: the last
/// shared_levels levels of p are identified, in place, with the first
/// shared_levels levels of q.
inline graded_poset natural_join(const graded_poset& p, const graded_poset& q,
                                 int shared_levels) {
    if (shared_levels <= 0) throw std::invalid_argument("overlap must be nonempty");
    if (shared_levels > p.level_count() || shared_levels > q.level_count())
        throw std::invalid_argument("overlap exceeds operand levels");

    const int p_base = p.last_level() - shared_levels + 1;
    for (int i = 0; i < shared_levels; ++i)
        if (p.level_size(p_base + i) != q.level_size(q.first_level() + i))
            throw std::invalid_argument("natural join conformity error");
    for (int i = 0; i + 1 < shared_levels; ++i)
        if (p.biadjacency(p_base + i) != q.biadjacency(q.first_level() + i))
            throw std::invalid_argument("natural join conformity error");

    std::vector<int> sizes = p.level_sizes();
    std::vector<bool_matrix> up = p.biadjacency_chain();
    for (int t = q.first_level() + shared_levels; t <= q.last_level(); ++t) {
        sizes.push_back(q.level_size(t));
        up.push_back(q.biadjacency(t - 1));
    }
    return graded_poset(std::move(sizes), std::move(up), p.first_level());
}

/// Block form of the natural join of two Hasse-diagram adjacency matrices:
/// a is over V u W, b is over W u U; the shared W x W block must coincide.
inline bool_matrix natural_join_adjacency(const bool_matrix& a, const bool_matrix& b,
                                          int v, int w, int u) {
    if (a.rows() != v + w || a.cols() != v + w || b.rows() != w + u || b.cols() != w + u)
        throw std::invalid_argument("matrix shape mismatch");
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            if (a.at(v + i, v + j) != b.at(i, j))
                throw std::invalid_argument("natural join conformity error");
    bool_matrix out(v + w + u, v + w + u);
    for (int i = 0; i < v + w; ++i)
        for (int j = 0; j < v + w; ++j)
            if (a.at(i, j)) out.set(i, j, true);
    for (int i = 0; i < w + u; ++i)
        for (int j = 0; j < w + u; ++j)
            if (b.at(i, j)) out.set(v + i, v + j, true);
    return out;
}

/// Brute-force poset isomorphism for the small-operand algebra checks.
inline bool is_isomorphic(const finite_poset& p, const finite_poset& q) {
    const int n = p.size();
    if (q.size() != n) return false;
    if (p.cover_count() != q.cover_count()) return false;

    auto signature = [](const finite_poset& r, int v) {
        int below = 0, above = 0, cov_up = 0, cov_down = 0;
        for (int w = 0; w < r.size(); ++w) {
            if (r.lt(w, v)) ++below;
            if (r.lt(v, w)) ++above;
            if (r.covers(v, w)) ++cov_up;
            if (r.covers(w, v)) ++cov_down;
        }
        return std::array<int, 4>{below, above, cov_up, cov_down};
    };
    std::vector<std::array<int, 4>> sp(n), sq(n);
    for (int v = 0; v < n; ++v) {
        sp[v] = signature(p, v);
        sq[v] = signature(q, v);
    }
    {
        auto a = sp, b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto extend = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || sp[v] != sq[w]) continue;
            bool ok = true;
            for (int x = 0; x < v && ok; ++x)
                if (p.leq(x, v) != q.leq(map[x], w) || p.leq(v, x) != q.leq(w, map[x]))
                    ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace cobweb
