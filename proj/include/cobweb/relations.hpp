#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/poset.hpp"

namespace cobweb {

/// m-ary relation over named finite domains; tuples are stored as index
/// vectors (one coordinate per domain) in a canonical sorted set.
class nary_relation {
public:
    explicit nary_relation(std::vector<std::vector<std::string>> domains)
        : domains_(std::move(domains)) {
        if (domains_.size() < 2) throw std::invalid_argument("relation needs arity >= 2");
        for (const auto& d : domains_)
            if (d.empty()) throw std::invalid_argument("relation domains must be nonempty");
    }

    static nary_relation complete(std::vector<std::vector<std::string>> domains) {
        nary_relation rel(std::move(domains));
        std::vector<int> tuple(rel.arity(), 0);
        for (;;) {
            rel.tuples_.insert(tuple);
            int i = rel.arity() - 1;
            while (i >= 0 && ++tuple[i] == static_cast<int>(rel.domains_[i].size())) {
                tuple[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        return rel;
    }

    int arity() const { return static_cast<int>(domains_.size()); }
    const std::vector<std::string>& domain(int i) const { return domains_.at(i); }
    const std::vector<std::vector<std::string>>& domains() const { return domains_; }
    const std::set<std::vector<int>>& tuples() const { return tuples_; }
    std::size_t count() const { return tuples_.size(); }

    void insert_indices(std::vector<int> tuple) {
        if (static_cast<int>(tuple.size()) != arity())
            throw std::invalid_argument("tuple arity mismatch");
        for (int i = 0; i < arity(); ++i)
            if (tuple[i] < 0 || tuple[i] >= static_cast<int>(domains_[i].size()))
                throw std::out_of_range("tuple coordinate outside domain");
        tuples_.insert(std::move(tuple));
    }

    void insert(const std::vector<std::string>& tuple) {
        if (static_cast<int>(tuple.size()) != arity())
            throw std::invalid_argument("tuple arity mismatch");
        std::vector<int> ix(arity());
        for (int i = 0; i < arity(); ++i) ix[i] = domain_index(i, tuple[i]);
        tuples_.insert(std::move(ix));
    }

    bool contains(const std::vector<std::string>& tuple) const {
        std::vector<int> ix(arity());
        for (int i = 0; i < arity(); ++i) ix[i] = domain_index(i, tuple[i]);
        return tuples_.count(ix) > 0;
    }

    std::vector<std::vector<std::string>> tuples_named() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& t : tuples_) {
            std::vector<std::string> named(arity());
            for (int i = 0; i < arity(); ++i) named[i] = domains_[i][t[i]];
            out.push_back(std::move(named));
        }
        return out;
    }

    bool operator==(const nary_relation&) const = default;

private:
    int domain_index(int i, const std::string& name) const {
        const auto& d = domains_.at(i);
        auto it = std::find(d.begin(), d.end(), name);
        if (it == d.end())
            throw std::invalid_argument("element '" + name + "' not in domain " + std::to_string(i));
        return static_cast<int>(it - d.begin());
    }

    std::vector<std::vector<std::string>> domains_;
    std::set<std::vector<int>> tuples_;
};

/// Relational natural join of a chain of binary relations sharing middle
/// domains: tuples (x_0,...,x_m) with every consecutive pair related.
inline nary_relation compose_chain(const std::vector<nary_relation>& chain) {
    if (chain.empty()) throw std::invalid_argument("empty relation chain");
    for (const auto& rel : chain)
        if (rel.arity() != 2) throw std::invalid_argument("chain members must be binary");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i].domain(1) != chain[i + 1].domain(0))
            throw std::invalid_argument("consecutive relations must share their middle domain");

    std::vector<std::vector<std::string>> domains;
    domains.push_back(chain.front().domain(0));
    for (const auto& rel : chain) domains.push_back(rel.domain(1));
    nary_relation out(std::move(domains));

    std::vector<std::vector<int>> partial;
    for (const auto& t : chain.front().tuples()) partial.push_back({t[0], t[1]});
    for (std::size_t i = 1; i < chain.size(); ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : partial)
            for (const auto& t : chain[i].tuples()) {
                if (t[0] != prefix.back()) continue;
                auto ext = prefix;
                ext.push_back(t[1]);
                next.push_back(std::move(ext));
            }
        partial = std::move(next);
    }
    for (auto& t : partial) out.insert_indices(std::move(t));
    return out;
}

/// Projections of an m-ary relation onto consecutive coordinate pairs.
/// compose_chain(decompose(T)) always contains T.
inline std::vector<nary_relation> decompose(const nary_relation& rel) {
    std::vector<nary_relation> out;
    for (int i = 0; i + 1 < rel.arity(); ++i) {
        nary_relation proj({rel.domain(i), rel.domain(i + 1)});
        for (const auto& t : rel.tuples()) proj.insert_indices({t[i], t[i + 1]});
        out.push_back(std::move(proj));
    }
    return out;
}

/// A graded poset is identifiable with an n-ary relation iff no biadjacency
/// matrix has a zero row or zero column.
inline bool is_identifiable(const graded_poset& p) {
    for (const bool_matrix& b : p.biadjacency_chain()) {
        for (int r = 0; r < b.rows(); ++r)
            if (b.row_is_zero(r)) return false;
        for (int c = 0; c < b.cols(); ++c)
            if (b.col_is_zero(c)) return false;
    }
    return true;
}

/// Names a poset vertex for use as a relation domain element.
inline std::string vertex_name(grid_vertex v) {
    return std::to_string(v.s) + "@" + std::to_string(v.t);
}

/// One domain per level, elements named s@t.
inline std::vector<std::vector<std::string>> level_domains(const graded_poset& p) {
    std::vector<std::vector<std::string>> out;
    for (int t = p.first_level(); t <= p.last_level(); ++t) {
        std::vector<std::string> d;
        for (int s = 1; s <= p.level_size(t); ++s) d.push_back(vertex_name({s, t}));
        out.push_back(std::move(d));
    }
    return out;
}

/// The level-spanning chain tuples of a graded poset, as an n-ary relation.
inline nary_relation chain_relation(const graded_poset& p) {
    nary_relation rel(level_domains(p));
    for (const auto& chain : p.max_chains()) {
        std::vector<int> ix;
        for (grid_vertex v : chain) ix.push_back(v.s - 1);
        rel.insert_indices(std::move(ix));
    }
    return rel;
}

/// The consecutive-level cover relations of a graded poset, as binary
/// relations ready for compose_chain.
inline std::vector<nary_relation> cover_relations(const graded_poset& p) {
    auto domains = level_domains(p);
    std::vector<nary_relation> out;
    for (int i = 0; i + 1 < p.level_count(); ++i) {
        nary_relation rel({domains[i], domains[i + 1]});
        const bool_matrix& b = p.biadjacency_chain()[i];
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c)
                if (b.at(r, c)) rel.insert_indices({r, c});
        out.push_back(std::move(rel));
    }
    return out;
}

}  // namespace cobweb
