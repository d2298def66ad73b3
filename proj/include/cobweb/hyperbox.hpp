#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/fsequence.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/relations.hpp"

namespace cobweb {

/// Discrete box [k_F] x [(k+1)_F] x ... x [n_F]; its points are in bijection
/// with the maximal chains of the cobweb layer over the same levels.
struct hyper_box {
    int start_level = 0;
    int end_level = 0;
    std::vector<int> extents;

    int dimension() const { return static_cast<int>(extents.size()); }

    bigint volume() const {
        bigint v = 1;
        for (int e : extents) v *= e;
        return v;
    }

    bool operator==(const hyper_box&) const = default;
};

inline hyper_box layer_box(const fsequence& f, int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("empty level range");
    hyper_box box{k, n, {}};
    for (int t = k; t <= n; ++t) box.extents.push_back(to_int32(f.value(t)));
    return box;
}

/// Chain <x_k,...,x_n> with x_t = <s_t,t>  ->  point (s_k,...,s_n).
inline std::vector<int> point_of_chain(const std::vector<grid_vertex>& chain) {
    std::vector<int> pt;
    for (grid_vertex v : chain) pt.push_back(v.s);
    return pt;
}

inline std::vector<grid_vertex> chain_of_point(const std::vector<int>& point, int start_level) {
    std::vector<grid_vertex> chain;
    for (std::size_t i = 0; i < point.size(); ++i)
        chain.push_back({point[i], start_level + static_cast<int>(i)});
    return chain;
}

/// Counting form of the chain partition statement: the maximal chains of the
/// layer over levels k+1..n split into fnomial(n,k) consecutive blocks of
/// m_F! chains each, m = n-k.  The partition is built explicitly from the
/// canonical (lexicographic) chain enumeration and re-verified.
struct chain_partition_report {
    int k = 0, n = 0, m = 0;
    bigint chain_count;      // |maximal chains of the layer|
    bigrat coefficient;      // fnomial(n, k); the block count when integral
    bigint block_size;       // m_F!
    bool admissible = false;
    bool identity_holds = false;
    bigint block_count;
    bool enumerated = false;  // chains within the enumeration cap, partition built
    bool partition_verified = false;
};

inline chain_partition_report verify_chain_partition(const fsequence& f, int n, int k,
                                                     std::size_t enumeration_cap = 2000000) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    chain_partition_report rep;
    rep.k = k;
    rep.n = n;
    rep.m = n - k;
    rep.coefficient = fnomial(f, n, k);
    rep.block_size = f_factorial(f, rep.m);
    rep.admissible = is_integral(rep.coefficient);

    rep.chain_count = 1;
    for (int t = k + 1; t <= n; ++t) rep.chain_count *= f.value(t);
    rep.identity_holds = bigrat(rep.chain_count) == rep.coefficient * bigrat(rep.block_size);
    if (!rep.admissible) return rep;  // identity still reported, no integral partition

    rep.block_count = as_integer(rep.coefficient);
    if (k == n) {
        // the empty chain forms the single block of size 0_F! = 1
        rep.enumerated = true;
        rep.partition_verified = rep.chain_count == 1 && rep.block_size == 1;
        return rep;
    }
    if (rep.chain_count > bigint(enumeration_cap)) return rep;

    graded_poset layer = graded_poset::cobweb_layer(f, k + 1, n);
    auto chains = layer.max_chains();
    rep.enumerated = true;
    if (bigint(chains.size()) != rep.chain_count) return rep;
    std::set<std::vector<int>> seen;
    for (const auto& c : chains) seen.insert(point_of_chain(c));
    if (bigint(seen.size()) != rep.chain_count) return rep;  // disjointness of blocks

    long long bs = to_int64(rep.block_size);
    long long nblocks = to_int64(rep.block_count);
    rep.partition_verified =
        bs * nblocks == static_cast<long long>(chains.size());
    return rep;
}

/// Axis-aligned sub-box, 1-based inclusive interval per axis.
struct sub_box {
    std::vector<std::array<int, 2>> intervals;

    std::vector<int> lengths() const {
        std::vector<int> out;
        for (const auto& iv : intervals) out.push_back(iv[1] - iv[0] + 1);
        return out;
    }

    bool operator==(const sub_box&) const = default;
};

struct box_tiling {
    std::vector<sub_box> tiles;

    bool operator==(const box_tiling&) const = default;
};

struct tiling_search_result {
    bool found = false;
    bool exhausted = false;  // search space fully explored (certifies "no tiling")
    box_tiling tiling;
    unsigned long long nodes = 0;
    // !found && !exhausted: the node budget ran out, existence undecided
};

namespace detail {

class box_tiler {
public:
    box_tiler(std::vector<int> extents, std::vector<int> lengths, unsigned long long budget)
        : budget_(budget), extents_(std::move(extents)), lengths_(std::move(lengths)) {
        std::sort(lengths_.begin(), lengths_.end());
        long long cells = 1;
        for (int e : extents_) {
            if (e < 1) throw std::invalid_argument("extents must be positive");
            cells *= e;
            if (cells > 8000000) throw std::length_error("box too large for tiling search");
        }
        cells_ = cells;
        stride_.assign(extents_.size(), 1);
        for (int i = static_cast<int>(extents_.size()) - 2; i >= 0; --i)
            stride_[i] = stride_[i + 1] * extents_[i + 1];
        tile_volume_ = 1;
        for (int l : lengths_) tile_volume_ *= l;
    }

    /// First tiling in canonical order: branch on the lexicographically
    /// least uncovered cell, try axis assignments of the tile lengths in
    /// lexicographic order.
    tiling_search_result first_tiling() {
        tiling_search_result res;
        occupied_.assign(cells_, 0);
        out_of_budget_ = false;
        std::vector<sub_box> placed;
        search(0, placed, res.nodes, [&](const std::vector<sub_box>& tiles) {
            res.tiling.tiles = tiles;
            res.found = true;
            return true;  // stop at the first
        });
        res.exhausted = !res.found && !out_of_budget_;
        return res;
    }

    /// Number of tilings, counting up to cap; second member reports whether
    /// the search ran to completion (count is exact).
    std::pair<unsigned long long, bool> count_tilings(unsigned long long cap) {
        occupied_.assign(cells_, 0);
        out_of_budget_ = false;
        unsigned long long nodes = 0, count = 0;
        std::vector<sub_box> placed;
        bool capped = search(0, placed, nodes, [&](const std::vector<sub_box>&) {
            ++count;
            return count >= cap;  // stop when the cap is reached
        });
        return {count, !capped && !out_of_budget_};
    }

private:
    /// Visit every completion; `on_solution` returns true to stop the search.
    template <typename Sink>
    bool search(long long scan_from, std::vector<sub_box>& placed, unsigned long long& nodes,
                Sink&& on_solution) {
        long long cell = scan_from;
        while (cell < cells_ && occupied_[cell]) ++cell;
        if (cell == cells_) return on_solution(placed);

        std::vector<int> corner = coords(cell);
        std::vector<int> perm = lengths_;
        // distinct assignments of the length multiset to axes, in lex order
        do {
            if (budget_ && nodes >= budget_) {
                out_of_budget_ = true;
                return true;
            }
            ++nodes;
            if (!fits(corner, perm)) continue;
            paint(corner, perm, 1);
            placed.push_back(make_box(corner, perm));
            bool stop = search(cell + 1, placed, nodes, on_solution);
            placed.pop_back();
            paint(corner, perm, 0);
            if (stop) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    std::vector<int> coords(long long cell) const {
        std::vector<int> c(extents_.size());
        for (std::size_t i = 0; i < extents_.size(); ++i) {
            c[i] = static_cast<int>(cell / stride_[i]);
            cell %= stride_[i];
        }
        return c;
    }

    bool fits(const std::vector<int>& corner, const std::vector<int>& len) const {
        for (std::size_t i = 0; i < extents_.size(); ++i)
            if (corner[i] + len[i] > extents_[i]) return false;
        // overlap scan over the candidate cells
        return scan_cells(corner, len, [&](long long cell) { return !occupied_[cell]; });
    }

    void paint(const std::vector<int>& corner, const std::vector<int>& len, char value) {
        scan_cells(corner, len, [&](long long cell) {
            occupied_[cell] = value;
            return true;
        });
    }

    template <typename Visit>
    bool scan_cells(const std::vector<int>& corner, const std::vector<int>& len,
                    Visit&& visit) const {
        const int dim = static_cast<int>(extents_.size());
        std::vector<int> offset(dim, 0);
        for (;;) {
            long long cell = 0;
            for (int i = 0; i < dim; ++i) cell += (corner[i] + offset[i]) * stride_[i];
            if (!visit(cell)) return false;
            int i = dim - 1;
            while (i >= 0 && ++offset[i] == len[i]) offset[i--] = 0;
            if (i < 0) return true;
        }
    }

    sub_box make_box(const std::vector<int>& corner, const std::vector<int>& len) const {
        sub_box b;
        for (std::size_t i = 0; i < extents_.size(); ++i)
            b.intervals.push_back({corner[i] + 1, corner[i] + len[i]});
        return b;
    }

    unsigned long long budget_ = 0;  // 0: unlimited
    bool out_of_budget_ = false;
    std::vector<int> extents_;
    std::vector<int> lengths_;
    std::vector<long long> stride_;
    long long cells_ = 0;
    long long tile_volume_ = 0;
    std::vector<char> occupied_;
};

}  // namespace detail

/// The box/tile pair of the self-similar tiling problem: the m-dimensional
/// layer box with extents ((n-m+1)_F, ..., n_F), tiled by sub-boxes whose
/// edge-length multiset is {1_F, ..., m_F} (any axis arrangement).
inline std::pair<std::vector<int>, std::vector<int>> tiling_instance(const fsequence& f,
                                                                     int m, int n) {
    if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
    std::vector<int> extents, lengths;
    for (int t = n - m + 1; t <= n; ++t) extents.push_back(to_int32(f.value(t)));
    for (int t = 1; t <= m; ++t) lengths.push_back(to_int32(f.value(t)));
    return {std::move(extents), std::move(lengths)};
}

/// node_budget = 0 searches without bound; a positive budget may return the
/// undecided outcome (neither found nor exhausted).
inline tiling_search_result tile_box(std::vector<int> extents, std::vector<int> lengths,
                                     unsigned long long node_budget = 0) {
    bigint box_volume = 1, tile_volume = 1;
    for (int e : extents) box_volume *= e;
    for (int l : lengths) tile_volume *= l;
    if (box_volume % tile_volume != 0)
        throw std::domain_error("volume ratio non-integral, no tiling possible");
    return detail::box_tiler(std::move(extents), std::move(lengths), node_budget).first_tiling();
}

inline tiling_search_result tile(const fsequence& f, int m, int n,
                                 unsigned long long node_budget = 0) {
    auto [extents, lengths] = tiling_instance(f, m, n);
    return tile_box(std::move(extents), std::move(lengths), node_budget);
}

inline std::pair<unsigned long long, bool> count_box_tilings(std::vector<int> extents,
                                                             std::vector<int> lengths,
                                                             unsigned long long cap,
                                                             unsigned long long node_budget = 0) {
    bigint box_volume = 1, tile_volume = 1;
    for (int e : extents) box_volume *= e;
    for (int l : lengths) tile_volume *= l;
    if (box_volume % tile_volume != 0)
        throw std::domain_error("volume ratio non-integral, no tiling possible");
    return detail::box_tiler(std::move(extents), std::move(lengths), node_budget)
        .count_tilings(cap);
}

inline std::pair<unsigned long long, bool> tile_count(const fsequence& f, int m, int n,
                                                      unsigned long long cap,
                                                      unsigned long long node_budget = 0) {
    auto [extents, lengths] = tiling_instance(f, m, n);
    return count_box_tilings(std::move(extents), std::move(lengths), cap, node_budget);
}

/// Independent tiling verifier: every tile in bounds with the required
/// length multiset, tiles pairwise disjoint, union covering the whole box.
inline bool verify_tiling(const std::vector<int>& extents, const std::vector<int>& lengths,
                          const box_tiling& tiling) {
    const int dim = static_cast<int>(extents.size());
    std::vector<int> want = lengths;
    std::sort(want.begin(), want.end());

    long long cells = 1;
    for (int e : extents) cells *= e;
    std::vector<char> covered(cells, 0);
    std::vector<long long> stride(dim, 1);
    for (int i = dim - 2; i >= 0; --i) stride[i] = stride[i + 1] * extents[i + 1];

    long long painted = 0;
    for (const sub_box& tile : tiling.tiles) {
        if (static_cast<int>(tile.intervals.size()) != dim) return false;
        std::vector<int> got = tile.lengths();
        std::sort(got.begin(), got.end());
        if (got != want) return false;
        for (int i = 0; i < dim; ++i)
            if (tile.intervals[i][0] < 1 || tile.intervals[i][1] > extents[i] ||
                tile.intervals[i][0] > tile.intervals[i][1])
                return false;
        std::vector<int> at(dim);
        for (int i = 0; i < dim; ++i) at[i] = tile.intervals[i][0];
        for (;;) {
            long long cell = 0;
            for (int i = 0; i < dim; ++i) cell += static_cast<long long>(at[i] - 1) * stride[i];
            if (covered[cell]) return false;  // overlap
            covered[cell] = 1;
            ++painted;
            int i = dim - 1;
            while (i >= 0 && ++at[i] > tile.intervals[i][1]) {
                at[i] = tile.intervals[i][0];
                --i;
            }
            if (i < 0) break;
        }
    }
    return painted == cells;
}

/// Natural join of two consecutive 2-axis boxes, as relations, equals the
/// 3-axis Cartesian product.
struct product_join_report {
    bigint expected = 0;
    bigint actual = 0;
    bool matches = false;
};

inline product_join_report product_join_identity(const fsequence& f, int k) {
    graded_poset levels = graded_poset::cobweb_layer(f, k, k + 2);
    auto domains = level_domains(levels);
    nary_relation left = nary_relation::complete({domains[0], domains[1]});
    nary_relation right = nary_relation::complete({domains[1], domains[2]});
    nary_relation joined = compose_chain({left, right});
    nary_relation product = nary_relation::complete({domains[0], domains[1], domains[2]});

    product_join_report rep;
    rep.expected = f.value(k) * f.value(k + 1) * f.value(k + 2);
    rep.actual = joined.count();
    rep.matches = joined == product && bigint(product.count()) == rep.expected;
    return rep;
}

/// Character-grid rendering of a 2-axis tiling; each tile gets one symbol.
inline std::string render_tiling_2d(const std::vector<int>& extents, const box_tiling& tiling) {
    if (extents.size() != 2) throw std::invalid_argument("grid rendering needs a 2-axis box");
    static const char symbols[] =
        "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::vector<std::string> grid(extents[0], std::string(extents[1], '.'));
    for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
        const sub_box& b = tiling.tiles[i];
        for (int r = b.intervals[0][0]; r <= b.intervals[0][1]; ++r)
            for (int c = b.intervals[1][0]; c <= b.intervals[1][1]; ++c)
                grid[r - 1][c - 1] = symbols[i % (sizeof(symbols) - 1)];
    }
    std::string out;
    for (const std::string& row : grid) {
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace cobweb
