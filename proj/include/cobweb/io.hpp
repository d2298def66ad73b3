#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobweb/hyperbox.hpp"
#include "cobweb/matrix.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/relations.hpp"

namespace cobweb {

// ---- poset document: {sizes: [...], biadjacency: [[[0|1]...]...], first_level} ----

inline nlohmann::json to_json(const graded_poset& p) {
    nlohmann::json doc;
    doc["sizes"] = p.level_sizes();
    doc["first_level"] = p.first_level();
    nlohmann::json mats = nlohmann::json::array();
    for (const bool_matrix& b : p.biadjacency_chain()) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < b.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < b.cols(); ++c) row.push_back(b.at(r, c) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    doc["biadjacency"] = std::move(mats);
    return doc;
}

inline graded_poset poset_from_json(const nlohmann::json& doc) {
    std::vector<int> sizes = doc.at("sizes").get<std::vector<int>>();
    std::vector<bool_matrix> mats;
    for (const auto& rows : doc.at("biadjacency")) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        bool_matrix b(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b.set(i, j, rows[i][j].get<int>() != 0);
        mats.push_back(std::move(b));
    }
    int first = doc.value("first_level", 1);
    return graded_poset(std::move(sizes), std::move(mats), first);
}

// ---- relation document: {domains: [[names...]...], tuples: [[names...]...]} ----

inline nlohmann::json to_json(const nary_relation& rel) {
    nlohmann::json doc;
    doc["domains"] = rel.domains();
    doc["tuples"] = rel.tuples_named();
    return doc;
}

inline nary_relation relation_from_json(const nlohmann::json& doc) {
    nary_relation rel(doc.at("domains").get<std::vector<std::vector<std::string>>>());
    for (const auto& t : doc.at("tuples")) rel.insert(t.get<std::vector<std::string>>());
    return rel;
}

// ---- tiling document: {box: {k, n, extents}, tiles: [{intervals: [[a,b]...]}...]} ----

inline nlohmann::json to_json(const hyper_box& box, const box_tiling& tiling) {
    nlohmann::json doc;
    doc["box"] = {{"k", box.start_level}, {"n", box.end_level}, {"extents", box.extents}};
    nlohmann::json tiles = nlohmann::json::array();
    for (const sub_box& b : tiling.tiles) {
        nlohmann::json intervals = nlohmann::json::array();
        for (const auto& iv : b.intervals) intervals.push_back({iv[0], iv[1]});
        tiles.push_back({{"intervals", std::move(intervals)}});
    }
    doc["tiles"] = std::move(tiles);
    return doc;
}

// ---- matrix documents ----

inline nlohmann::json to_json(const int_matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const bigint& v = m.at(i, j);
            // entries stay within 64 bits at desk scale; strings beyond
            if (v >= std::numeric_limits<long long>::min() &&
                v <= std::numeric_limits<long long>::max())
                row.push_back(static_cast<long long>(v));
            else
                row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

}  // namespace cobweb
