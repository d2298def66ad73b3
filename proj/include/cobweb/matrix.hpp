#pragma once

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobweb/bignum.hpp"

namespace cobweb {

/// Dense 0/1 matrix.  Products and powers are Boolean (or-of-ands).
class bool_matrix {
public:
    bool_matrix() = default;
    bool_matrix(int rows, int cols, bool fill = false)
        : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, fill ? 1 : 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static bool_matrix identity(int n) {
        bool_matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static bool_matrix ones(int rows, int cols) { return bool_matrix(rows, cols, true); }

    static bool_matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        bool_matrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("ragged rows");
            int j = 0;
            for (int v : row) m.set(i, j++, v != 0);
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int r, int c) const { return bits_[index(r, c)] != 0; }
    void set(int r, int c, bool v) { bits_[index(r, c)] = v ? 1 : 0; }

    bool operator==(const bool_matrix&) const = default;

    bool_matrix transpose() const {
        bool_matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
        return t;
    }

    bool_matrix elementwise_or(const bool_matrix& other) const {
        require_same_shape(other);
        bool_matrix out(rows_, cols_);
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] | other.bits_[i];
        return out;
    }

    bool_matrix boolean_product(const bool_matrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
        bool_matrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (!at(i, k)) continue;
                for (int j = 0; j < other.cols_; ++j)
                    if (other.at(k, j)) out.set(i, j, true);
            }
        return out;
    }

    bool row_is_zero(int r) const {
        for (int j = 0; j < cols_; ++j)
            if (at(r, j)) return false;
        return true;
    }

    bool col_is_zero(int c) const {
        for (int i = 0; i < rows_; ++i)
            if (at(i, c)) return false;
        return true;
    }

    bool all_ones() const {
        for (std::uint8_t b : bits_)
            if (!b) return false;
        return true;
    }

    int count() const {
        int n = 0;
        for (std::uint8_t b : bits_) n += b;
        return n;
    }

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(r) * cols_ + c;
    }
    void require_same_shape(const bool_matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Reflexive-transitive closure of a square adjacency matrix, by repeated
/// Boolean squaring of (I | A) until the fixed point.
inline bool_matrix reflexive_transitive_closure(const bool_matrix& adj) {
    if (adj.rows() != adj.cols()) throw std::invalid_argument("closure needs a square matrix");
    bool_matrix m = adj.elementwise_or(bool_matrix::identity(adj.rows()));
    for (;;) {
        bool_matrix sq = m.boolean_product(m);
        if (sq == m) return m;
        m = std::move(sq);
    }
}

/// Dense exact-integer matrix.
class int_matrix {
public:
    int_matrix() = default;
    int_matrix(int rows, int cols, bigint fill = 0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, std::move(fill)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static int_matrix identity(int n) {
        int_matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static int_matrix from_bool(const bool_matrix& b) {
        int_matrix m(b.rows(), b.cols());
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(i, j)) m.at(i, j) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bigint& at(int r, int c) { return a_[index(r, c)]; }
    const bigint& at(int r, int c) const { return a_[index(r, c)]; }

    bool operator==(const int_matrix&) const = default;

    int_matrix operator*(const int_matrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
        int_matrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const bigint& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < other.cols_; ++j) {
                    const bigint& w = other.at(k, j);
                    if (w != 0) out.at(i, j) += v * w;
                }
            }
        return out;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    std::string to_csv() const {
        std::ostringstream out;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) out << ',';
                out << at(i, j);
            }
            out << '\n';
        }
        return out.str();
    }

    static int_matrix from_csv(const std::string& text) {
        std::vector<std::vector<bigint>> rows;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            std::vector<bigint> row;
            std::istringstream cells(line);
            std::string cell;
            while (std::getline(cells, cell, ',')) row.emplace_back(cell);
            rows.push_back(std::move(row));
        }
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        int_matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged csv");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_ = 0, cols_ = 0;
    std::vector<bigint> a_;
};

/// Exact inverse of a unit upper-triangular integer matrix, by back
/// substitution: M[i][j] = -sum_{i<=k<j} M[i][k] * Z[k][j].
inline int_matrix invert_unit_upper_triangular(const int_matrix& z) {
    const int n = z.rows();
    if (z.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
    for (int i = 0; i < n; ++i) {
        if (z.at(i, i) != 1) throw std::invalid_argument("matrix is not unit triangular");
        for (int j = 0; j < i; ++j)
            if (z.at(i, j) != 0) throw std::invalid_argument("matrix is not upper triangular");
    }
    int_matrix m = int_matrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bigint sum = 0;
            for (int k = i; k < j; ++k) {
                const bigint& mik = m.at(i, k);
                if (mik != 0 && z.at(k, j) != 0) sum += mik * z.at(k, j);
            }
            m.at(i, j) = -sum;
        }
    return m;
}

}  // namespace cobweb
