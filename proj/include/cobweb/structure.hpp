#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "cobweb/join.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

using linear_extension = std::vector<int>;  // permutation of 0..n-1

/// The four-element obstruction {a<c, b<c, b<d} with exactly those
/// comparabilities.
inline finite_poset n_poset() {
    return finite_poset::from_edges(4, {{0, 2}, {1, 2}, {1, 3}});
}

struct n_free_result {
    bool n_free = true;
    std::array<int, 4> witness{-1, -1, -1, -1};  // a, b, c, d when found
};

/// A poset is N-free iff its Hasse diagram has no cover-preserving subposet
/// isomorphic to the N poset: covers a<c, b<c, b<d with a,b / a,d / c,d
/// pairwise incomparable.
inline n_free_result is_n_free(const finite_poset& p, int vertex_cap = 64) {
    if (p.size() > vertex_cap) throw std::length_error("exhaustive enumeration cap");
    const int n = p.size();
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            if (!p.covers(b, c)) continue;
            for (int d = 0; d < n; ++d) {
                if (d == c || !p.covers(b, d) || p.comparable(c, d)) continue;
                for (int a = 0; a < n; ++a) {
                    if (a == b || a == d || !p.covers(a, c)) continue;
                    if (p.comparable(a, b) || p.comparable(a, d)) continue;
                    return {false, {a, b, c, d}};
                }
            }
        }
    return {};
}

inline bool is_linear_extension(const finite_poset& p, const linear_extension& ext) {
    if (static_cast<int>(ext.size()) != p.size()) return false;
    std::vector<int> position(p.size(), -1);
    for (int i = 0; i < static_cast<int>(ext.size()); ++i) {
        if (ext[i] < 0 || ext[i] >= p.size() || position[ext[i]] != -1) return false;
        position[ext[i]] = i;
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.lt(x, y) && position[x] > position[y]) return false;
    return true;
}

/// True iff the extensions form a realizer: x < y in p exactly when x
/// precedes y in every extension.
inline bool verify_realizer(const finite_poset& p, const std::vector<linear_extension>& exts) {
    if (exts.empty()) throw std::invalid_argument("realizer needs at least one extension");
    std::vector<std::vector<int>> pos;
    for (const auto& ext : exts) {
        if (!is_linear_extension(p, ext))
            throw std::invalid_argument("input is not a linear extension");
        std::vector<int> position(p.size());
        for (int i = 0; i < static_cast<int>(ext.size()); ++i) position[ext[i]] = i;
        pos.push_back(std::move(position));
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (x == y) continue;
            bool before_in_all = true;
            for (const auto& position : pos)
                if (position[x] > position[y]) {
                    before_in_all = false;
                    break;
                }
            if (p.lt(x, y) != before_in_all) return false;
        }
    return true;
}

/// Two-extension realizer of a cobweb: level-major left-to-right, and
/// level-major right-to-left within each level.
inline std::pair<linear_extension, linear_extension> cobweb_realizer(const graded_poset& p) {
    linear_extension l1, l2;
    int offset = 0;
    for (int size : p.level_sizes()) {
        for (int s = 0; s < size; ++s) l1.push_back(offset + s);
        for (int s = size; s-- > 0;) l2.push_back(offset + s);
        offset += size;
    }
    return {l1, l2};
}

inline void require_extension_cap(const finite_poset& p, int vertex_cap) {
    if (p.size() > vertex_cap) throw std::length_error("exhaustive enumeration cap");
}

inline std::vector<linear_extension> all_linear_extensions(const finite_poset& p,
                                                           int vertex_cap = 10) {
    require_extension_cap(p, vertex_cap);
    std::vector<linear_extension> out;
    linear_extension prefix;
    std::vector<char> used(p.size(), 0);
    auto walk = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == p.size()) {
            out.push_back(prefix);
            return;
        }
        for (int v = 0; v < p.size(); ++v) {
            if (used[v]) continue;
            bool minimal = true;
            for (int w = 0; w < p.size() && minimal; ++w)
                if (!used[w] && p.lt(w, v)) minimal = false;
            if (!minimal) continue;
            used[v] = 1;
            prefix.push_back(v);
            self(self);
            prefix.pop_back();
            used[v] = 0;
        }
    };
    walk(walk);
    return out;
}

/// All runs of the nondeterministic greedy algorithm: keep climbing while
/// some minimal element of the remainder lies above the last chosen one,
/// otherwise restart from any minimal element.
inline std::vector<linear_extension> greedy_extensions(const finite_poset& p,
                                                       int vertex_cap = 10) {
    require_extension_cap(p, vertex_cap);
    std::vector<linear_extension> out;
    linear_extension prefix;
    std::vector<char> used(p.size(), 0);
    auto walk = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == p.size()) {
            out.push_back(prefix);
            return;
        }
        std::vector<int> minimals;
        for (int v = 0; v < p.size(); ++v) {
            if (used[v]) continue;
            bool minimal = true;
            for (int w = 0; w < p.size() && minimal; ++w)
                if (!used[w] && p.lt(w, v)) minimal = false;
            if (minimal) minimals.push_back(v);
        }
        std::vector<int> candidates;
        if (!prefix.empty()) {
            for (int v : minimals)
                if (p.lt(prefix.back(), v)) candidates.push_back(v);
        }
        if (candidates.empty()) candidates = minimals;
        for (int v : candidates) {
            used[v] = 1;
            prefix.push_back(v);
            self(self);
            prefix.pop_back();
            used[v] = 0;
        }
    };
    walk(walk);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Jumps of an extension: consecutive positions whose elements are not in
/// cover relation (equivalently, incomparable).
inline int jump_count(const finite_poset& p, const linear_extension& ext) {
    if (!is_linear_extension(p, ext))
        throw std::invalid_argument("input is not a linear extension");
    int jumps = 0;
    for (std::size_t i = 0; i + 1 < ext.size(); ++i)
        if (!p.covers(ext[i], ext[i + 1])) ++jumps;
    return jumps;
}

/// s(P): minimum jump count over all linear extensions.
inline int jump_number(const finite_poset& p, int vertex_cap = 10) {
    int best = p.size();  // upper bound; any extension has <= n-1 jumps
    for (const auto& ext : all_linear_extensions(p, vertex_cap))
        best = std::min(best, jump_count(p, ext));
    return best;
}

inline std::vector<linear_extension> optimal_extensions(const finite_poset& p,
                                                        int vertex_cap = 10) {
    auto all = all_linear_extensions(p, vertex_cap);
    int s = p.size();
    for (const auto& ext : all) s = std::min(s, jump_count(p, ext));
    std::vector<linear_extension> out;
    for (const auto& ext : all)
        if (jump_count(p, ext) == s) out.push_back(ext);
    return out;
}

/// Greedy poset: every greedy extension is optimal (G(P) subset of O(P)).
inline bool is_greedy_poset(const finite_poset& p, int vertex_cap = 10) {
    int s = jump_number(p, vertex_cap);
    for (const auto& ext : greedy_extensions(p, vertex_cap))
        if (jump_count(p, ext) != s) return false;
    return true;
}

/// Reversible poset, by the characterization O(P) = G(P).
inline bool is_reversible(const finite_poset& p, int vertex_cap = 10) {
    auto greedy = greedy_extensions(p, vertex_cap);
    auto optimal = optimal_extensions(p, vertex_cap);
    std::sort(optimal.begin(), optimal.end());
    return greedy == optimal;
}

}  // namespace cobweb
