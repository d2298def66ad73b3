#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/bignum.hpp"

namespace cobweb {

/// A natural-numbers-valued sequence k -> k_F (1-based) fixing the level
/// sizes of a graded poset.  The index-0 value is kept separate and optional;
/// it is consulted only where a unique bottom element is required.
class fsequence {
public:
    fsequence(std::string name, std::function<bigint(int)> eval,
              std::optional<int> max_index = std::nullopt,
              std::optional<bigint> zeroth = std::nullopt)
        : name_(std::move(name)),
          eval_(std::move(eval)),
          max_index_(max_index),
          zeroth_(std::move(zeroth)) {}

    static fsequence natural() {
        return fsequence("natural", [](int k) { return bigint(k); });
    }

    // 1, 1, 2, 3, 5, 8, ...
    static fsequence fibonacci() {
        return fsequence("fibonacci", [](int k) {
            bigint a = 1, b = 1;
            for (int i = 2; i <= k; ++i) {
                bigint c = a + b;
                a = b;
                b = c;
            }
            return a;
        });
    }

    /// k_F = 1 + q + ... + q^(k-1)
    static fsequence gaussian(int q) {
        if (q < 1) throw std::invalid_argument("gaussian parameter q must be >= 1");
        return fsequence("gaussian(q=" + std::to_string(q) + ")", [q](int k) {
            bigint sum = 0, pw = 1;
            for (int i = 0; i < k; ++i) {
                sum += pw;
                pw *= q;
            }
            return sum;
        });
    }

    static fsequence constant(bigint c) {
        if (c < 1) throw std::invalid_argument("sequence values must be positive");
        return fsequence("constant(" + c.str() + ")", [c](int) { return c; });
    }

    /// Explicit finite list interpreted as 1_F, 2_F, ...
    static fsequence from_values(std::string name, std::vector<bigint> values) {
        for (const bigint& v : values)
            if (v < 1) throw std::invalid_argument("sequence values must be positive");
        auto n = static_cast<int>(values.size());
        return fsequence(std::move(name),
                         [vals = std::move(values)](int k) { return vals[k - 1]; }, n);
    }

    /// Loads a list of positive integers: a JSON-style array "[1,2,3]" or one
    /// value per line.
    static fsequence from_file(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open sequence file: " + path.string());
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        for (char& c : text)
            if (c == '[' || c == ']' || c == ',') c = ' ';
        std::vector<bigint> values;
        std::istringstream tokens(text);
        std::string tok;
        while (tokens >> tok) values.emplace_back(tok);
        if (values.empty())
            throw std::runtime_error("sequence file is empty: " + path.string());
        return from_values(path.stem().string(), std::move(values));
    }

    const std::string& name() const { return name_; }
    const std::optional<bigint>& zeroth() const { return zeroth_; }
    std::optional<int> max_index() const { return max_index_; }

    fsequence with_zeroth(bigint z) const {
        if (z < 1) throw std::invalid_argument("sequence values must be positive");
        fsequence copy = *this;
        copy.zeroth_ = std::move(z);
        return copy;
    }

    /// k_F for k >= 1; the bottom size 0_F for k == 0 when defined.
    bigint value(int k) const {
        if (k < 0) throw std::invalid_argument("sequence index must be nonnegative");
        if (k == 0) {
            if (!zeroth_) throw std::domain_error("no bottom level defined");
            return *zeroth_;
        }
        if (max_index_ && k > *max_index_)
            throw std::out_of_range("sequence defined only up to index " +
                                    std::to_string(*max_index_));
        bigint v = eval_(k);
        if (v < 1) throw std::domain_error("sequence values must be positive");
        return v;
    }

private:
    std::string name_;
    std::function<bigint(int)> eval_;
    std::optional<int> max_index_;
    std::optional<bigint> zeroth_;
};

/// n_F! = 1_F * 2_F * ... * n_F, with 0_F! = 1.
inline bigint f_factorial(const fsequence& f, int n) {
    if (n < 0) throw std::invalid_argument("factorial index must be nonnegative");
    bigint prod = 1;
    for (int k = 1; k <= n; ++k) prod *= f.value(k);
    return prod;
}

/// n_F * (n-1)_F * ... * (n-k+1)_F; the empty product (k = 0) is 1.
inline bigint falling_factorial(const fsequence& f, int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("degree exceeds index");
    bigint prod = 1;
    for (int i = 0; i < k; ++i) prod *= f.value(n - i);
    return prod;
}

/// f(r_F) * f((r+1)_F) * ... * f((r+len-1)_F); empty product is 1.
inline bigint upper_factorial(const std::function<bigint(const bigint&)>& fn,
                              const fsequence& f, int r, int len) {
    if (r < 0 || len < 0) throw std::invalid_argument("upper factorial bounds must be nonnegative");
    bigint prod = 1;
    for (int i = 0; i < len; ++i) prod *= fn(f.value(r + i));
    return prod;
}

/// Exact rational n_F! / (k_F! (n-k)_F!); an integer iff the sequence is
/// admissible at (n, k).
inline bigrat fnomial(const fsequence& f, int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("degree exceeds index");
    return bigrat(falling_factorial(f, n, k), f_factorial(f, k));
}

struct admissibility_report {
    bool admissible = true;
    // least (n, k) with a non-integral coefficient, scanning n then k
    int n = -1;
    int k = -1;
};

inline admissibility_report is_admissible(const fsequence& f, int up_to) {
    if (up_to < 0) throw std::invalid_argument("admissibility bound must be nonnegative");
    for (int n = 0; n <= up_to; ++n)
        for (int k = 0; k <= n; ++k)
            if (!is_integral(fnomial(f, n, k))) return {false, n, k};
    return {};
}

}  // namespace cobweb
