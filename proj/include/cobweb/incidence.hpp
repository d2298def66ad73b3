#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/fsequence.hpp"
#include "cobweb/matrix.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// Zeta matrix: zeta[x][y] = 1 iff x <= y, vertices in natural labeling.
/// Computed as the reflexive-transitive Boolean closure of the cover
/// adjacency matrix.
inline bool_matrix zeta_closure(const graded_poset& p) {
    return reflexive_transitive_closure(p.adjacency_matrix());
}

inline int_matrix zeta_matrix(const graded_poset& p) {
    return int_matrix::from_bool(zeta_closure(p));
}

/// Cumulative level sizes S(t) = 1_F + ... + t_F; S(0) = 0.  Level t owns
/// labels S(t-1)+1 .. S(t).
inline std::vector<bigint> level_boundaries(const fsequence& f, int n) {
    std::vector<bigint> s(n + 1, 0);
    for (int t = 1; t <= n; ++t) s[t] = s[t - 1] + f.value(t);
    return s;
}

/// Closed-form zeta of an n-level cobweb at a label pair, without building
/// the poset: [x<=y] - [x<y] * sum_t [x > S(t)][y <= S(t+1)].
inline int zeta_cobweb_closed(const fsequence& f, int n, const bigint& x, const bigint& y) {
    std::vector<bigint> s = level_boundaries(f, n);
    if (x < 1 || x > s[n] || y < 1 || y > s[n]) throw std::out_of_range("label out of range");
    int correction = 0;
    for (int t = 0; t + 1 <= n; ++t)
        if (x > s[t] && y <= s[t + 1]) correction += 1;
    return (x <= y ? 1 : 0) - (x < y ? 1 : 0) * correction;
}

/// Exact integer inverse of the zeta matrix, by back substitution on the
/// unit upper-triangular system.  Serves as the independent reference for
/// every closed-form value below.
inline int_matrix mobius_oracle(const graded_poset& p) {
    int_matrix zeta = zeta_matrix(p);
    int_matrix mu = invert_unit_upper_triangular(zeta);
    if (!(zeta * mu).is_identity() || !(mu * zeta).is_identity())
        throw std::logic_error("mobius inversion failed");
    return mu;
}

/// Rank-only Mobius value of a cobweb for x in level r, y in level s, x <= y:
/// (-1)^(s-r) * prod_{k=r+1}^{s-1} (k_F - 1).  r = s gives 1, s = r+1 gives -1.
inline bigint mobius_cobweb(const fsequence& f, int r, int s) {
    if (r > s) throw std::invalid_argument("mobius level pair needs r <= s");
    if (r == s) return 1;
    bigint prod = 1;
    for (int k = r + 1; k <= s - 1; ++k) prod *= f.value(k) - 1;
    return (s - r) % 2 == 0 ? prod : -prod;
}

/// Grid-coordinate Mobius function of a cobweb; agrees entrywise with
/// mobius_oracle under the natural labeling.
inline bigint mobius_grid(const fsequence& f, grid_vertex x, grid_vertex y) {
    if (x.t < 0 || y.t < 0 || x.s < 1 || y.s < 1 || bigint(x.s) > f.value(x.t) ||
        bigint(y.s) > f.value(y.t))
        throw std::out_of_range("invalid grid coordinates");
    if (x.t == y.t) return x.s == y.s ? 1 : 0;
    if (x.t > y.t) return 0;
    return mobius_cobweb(f, x.t, y.t);
}

/// Level-indexed coefficients c_{r,s} of the cobweb Mobius matrix: the full
/// matrix is rebuilt from identity diagonal blocks and c_{r,s} * ones blocks.
class coding_matrix {
public:
    coding_matrix(const fsequence& f, int up_to) : first_(1), c_(up_to) {
        if (up_to < 1) throw std::invalid_argument("coding matrix needs at least one level");
        for (int r = 1; r <= up_to; ++r)
            for (int s = r; s <= up_to; ++s) c_[r - 1].push_back(mobius_cobweb(f, r, s));
    }

    int levels() const { return static_cast<int>(c_.size()); }

    const bigint& c(int r, int s) const {
        if (r < first_ || s < r || s > levels())
            throw std::out_of_range("coding matrix index out of range");
        return c_[r - 1][s - r];
    }

    int_matrix reconstruct(const fsequence& f) const {
        std::vector<int> sizes;
        for (int t = 1; t <= levels(); ++t) sizes.push_back(to_int32(f.value(t)));
        std::vector<int> offset(sizes.size() + 1, 0);
        for (std::size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
        int_matrix m(offset.back(), offset.back());
        for (int r = 1; r <= levels(); ++r)
            for (int s = r; s <= levels(); ++s)
                for (int i = 0; i < sizes[r - 1]; ++i)
                    for (int j = 0; j < sizes[s - 1]; ++j) {
                        if (r == s) {
                            if (i == j) m.at(offset[r - 1] + i, offset[s - 1] + j) = 1;
                        } else {
                            m.at(offset[r - 1] + i, offset[s - 1] + j) = c(r, s);
                        }
                    }
        return m;
    }

private:
    int first_;
    std::vector<std::vector<bigint>> c_;
};

inline void require_unit_bottom(const fsequence& f) {
    if (f.zeroth() && *f.zeroth() != 1)
        throw std::domain_error("whitney numbers require a singleton bottom level");
}

/// Whitney number of the first kind: w_r = sum of mu(bottom, x) over rank-r
/// vertices = r_F * (-1)^r * prod_{k=1}^{r-1}(k_F - 1).  A singleton bottom
/// level is prepended when the sequence lacks one.
inline bigint whitney_first(const fsequence& f, int r) {
    if (r < 0) throw std::invalid_argument("rank must be nonnegative");
    require_unit_bottom(f);
    if (r == 0) return 1;
    return f.value(r) * mobius_cobweb(f, 0, r);
}

/// Whitney number of the second kind: the level size r_F.
inline bigint whitney_second(const fsequence& f, int r) {
    if (r < 0) throw std::invalid_argument("rank must be nonnegative");
    require_unit_bottom(f);
    if (r == 0) return 1;
    return f.value(r);
}

/// Integer polynomial, stored by ascending power.
class polynomial {
public:
    polynomial() = default;
    explicit polynomial(std::vector<bigint> ascending) : coeff_(std::move(ascending)) {
        while (coeff_.size() > 1 && coeff_.back() == 0) coeff_.pop_back();
    }

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }

    const bigint& coeff(int power) const {
        static const bigint zero = 0;
        return power >= 0 && power <= degree() ? coeff_[power] : zero;
    }

    bigint evaluate(const bigint& t) const {
        bigint acc = 0;
        for (int i = degree(); i >= 0; --i) acc = acc * t + coeff_[i];
        return acc;
    }

    bool operator==(const polynomial&) const = default;

    std::string to_string(const std::string& var = "t") const {
        if (coeff_.empty() || (coeff_.size() == 1 && coeff_[0] == 0)) return "0";
        std::ostringstream out;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const bigint& c = coeff_[i];
            if (c == 0) continue;
            bigint mag = abs(c);
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || i == 0) out << mag.str();
            if (i > 0) {
                if (mag != 1) out << "*";
                out << var;
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }

private:
    std::vector<bigint> coeff_;
};

/// Characteristic polynomial sum_k w_k t^(n-k); monic of degree n.
inline polynomial char_poly(const fsequence& f, int n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<bigint> ascending(n + 1, 0);
    for (int k = 0; k <= n; ++k) ascending[n - k] = whitney_first(f, k);
    return polynomial(std::move(ascending));
}

/// Staircase text rendering of the cobweb zeta matrix: row x prints '1' at
/// the diagonal, '0' for each higher label in the same level, '-' for every
/// other above-diagonal position, blanks below the diagonal.
inline std::string scala_render(const fsequence& f, int n) {
    std::vector<bigint> s = level_boundaries(f, n);
    const int total = to_int32(s[n]);
    std::ostringstream out;
    for (int x = 1; x <= total; ++x) {
        int level = 1;
        while (s[level] < x) ++level;
        std::string row(x - 1, ' ');
        row += '1';
        for (int y = x + 1; y <= total; ++y) row += (bigint(y) <= s[level]) ? '0' : '-';
        out << row << '\n';
    }
    return out.str();
}

}  // namespace cobweb
