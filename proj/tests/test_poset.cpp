#include <doctest.h>

#include <set>

#include "cobweb/io.hpp"
#include "cobweb/join.hpp"
#include "cobweb/poset.hpp"
#include "test_util.hpp"

using namespace cobweb;

TEST_CASE("cobweb construction counts") {
    graded_poset p = graded_poset::cobweb(fsequence::natural(), 3);
    CHECK(p.vertex_count() == 6);
    CHECK(p.edge_count() == 8);  // 1*2 + 2*3
    CHECK(p.is_cobweb());

    graded_poset chain = graded_poset::cobweb(fsequence::constant(1), 5);
    CHECK(chain.vertex_count() == 5);
    CHECK(chain.edge_count() == 4);

    graded_poset fib = graded_poset::cobweb(fsequence::fibonacci(), 4);
    CHECK(fib.level_sizes() == std::vector<int>{1, 1, 2, 3});
    CHECK(fib.edge_count() == 9);  // 1 + 2 + 6
}

TEST_CASE("biadjacency constructor and shape errors") {
    graded_poset fan({1, 2}, {bool_matrix::from_rows({{1, 1}})});
    CHECK(fan.is_cobweb());
    CHECK(fan.vertex_count() == 3);

    graded_poset two_chains({2, 2}, {bool_matrix::from_rows({{1, 0}, {0, 1}})});
    CHECK(two_chains.covers({1, 1}, {1, 2}));
    CHECK(two_chains.covers({2, 1}, {2, 2}));
    CHECK_FALSE(two_chains.covers({1, 1}, {2, 2}));
    CHECK_FALSE(two_chains.is_connected());

    // out-degree zero in the bottom level: not internal, but not identifiable
    graded_poset dangling({2, 1}, {bool_matrix::from_rows({{1}, {0}})});
    CHECK(dangling.out_degree({2, 1}) == 0);
    CHECK(dangling.mute_vertices().empty());

    CHECK_THROWS_WITH_AS(graded_poset({2, 2}, {bool_matrix::from_rows({{1, 1}})}),
                         "biadjacency shape error", std::invalid_argument);
    CHECK_THROWS_AS(graded_poset({1, 2}, {}), std::invalid_argument);
}

TEST_CASE("order queries") {
    graded_poset p = graded_poset::cobweb(fsequence::natural(), 3);
    CHECK(p.leq({1, 1}, {2, 3}));
    CHECK_FALSE(p.leq({1, 2}, {2, 2}));
    CHECK_FALSE(p.leq({2, 2}, {1, 2}));
    for (grid_vertex v : p.vertices()) CHECK(p.leq(v, v));
    CHECK_THROWS_AS(p.leq({4, 1}, {1, 1}), std::out_of_range);
}

TEST_CASE("grid-formula order equals reachability order on cobwebs") {
    for (const fsequence& f : {fsequence::natural(), fsequence::fibonacci(),
                               fsequence::gaussian(2), fsequence::constant(2)}) {
        for (int n = 1; n <= 4; ++n) {
            graded_poset p = graded_poset::cobweb(f, n);
            if (p.vertex_count() > 40) continue;
            // reachability through an independent route: closure of the
            // adjacency matrix in natural labeling
            bool_matrix zeta = reflexive_transitive_closure(p.adjacency_matrix());
            natural_labeling lab = p.labeling();
            for (grid_vertex x : p.vertices())
                for (grid_vertex y : p.vertices())
                    CHECK(p.leq(x, y) == zeta.at(lab.label(x) - 1, lab.label(y) - 1));
        }
    }
}

TEST_CASE("order axioms hold exhaustively") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        graded_poset p = trial < 18 ? testutil::random_graded(rng, 4, 3)
                                    : testutil::random_graded(rng, 6, 6);
        if (p.vertex_count() > 40) continue;
        auto vs = p.vertices();
        for (grid_vertex x : vs) {
            CHECK(p.leq(x, x));
            for (grid_vertex y : vs) {
                if (p.leq(x, y) && p.leq(y, x)) CHECK(x == y);
                for (grid_vertex z : vs)
                    if (p.leq(x, y) && p.leq(y, z)) CHECK(p.leq(x, z));
            }
        }
    }
}

TEST_CASE("layers") {
    graded_poset p = graded_poset::cobweb(fsequence::natural(), 3);
    graded_poset top = p.layer(2, 3);
    CHECK(top.level_sizes() == std::vector<int>{2, 3});
    CHECK(top.first_level() == 2);
    CHECK(top.is_cobweb());

    graded_poset antichain = p.layer(2, 2);
    CHECK(antichain.vertex_count() == 2);
    CHECK(antichain.edge_count() == 0);

    CHECK(graded_poset::cobweb(fsequence::fibonacci(), 5).layer(2, 4).level_sizes() ==
          std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(p.layer(0, 2), std::out_of_range);
}

TEST_CASE("maximal chains") {
    graded_poset p = graded_poset::cobweb(fsequence::natural(), 3);
    auto chains = p.max_chains();
    CHECK(chains.size() == 6);
    // canonical lexicographic order starts at all-1 positions
    CHECK(chains.front() == std::vector<grid_vertex>{{1, 1}, {1, 2}, {1, 3}});
    CHECK(chains.back() == std::vector<grid_vertex>{{1, 1}, {2, 2}, {3, 3}});

    CHECK(graded_poset::cobweb(fsequence::constant(1), 6).max_chains().size() == 1);
    CHECK(graded_poset::cobweb(fsequence::fibonacci(), 5).layer(2, 4).max_chains().size() == 6);
}

TEST_CASE("chain counts match the level-size product") {
    for (const fsequence& f : {fsequence::natural(), fsequence::fibonacci(),
                               fsequence::gaussian(2), fsequence::constant(2)}) {
        for (int k = 1; k <= 6; ++k)
            for (int n = k; n <= 8; ++n) {
                bigint expect = 1;
                for (int t = k; t <= n; ++t) expect *= f.value(t);
                if (expect > 100000) continue;
                graded_poset layer = graded_poset::cobweb_layer(f, k, n);
                CHECK(bigint(layer.max_chains().size()) == expect);
                CHECK(layer.max_chain_count() == expect);
            }
    }
}

TEST_CASE("mute and dummy vertices") {
    for (const fsequence& f : {fsequence::natural(), fsequence::fibonacci()}) {
        graded_poset p = graded_poset::cobweb(f, 4);
        CHECK(p.mute_vertices().empty());
        CHECK(p.dummy_vertices().empty());
    }

    graded_poset mute({1, 2, 1}, {bool_matrix::from_rows({{1, 0}}),
                                  bool_matrix::from_rows({{1}, {1}})});
    CHECK(mute.mute_vertices() == std::vector<grid_vertex>{{2, 2}});
    CHECK(mute.dummy_vertices().empty());
    CHECK(mute.in_degree({2, 2}) == 0);
    CHECK(mute.out_degree({2, 2}) == 1);

    graded_poset dummy({2, 2, 2}, {bool_matrix::from_rows({{1, 0}, {1, 0}}),
                                   bool_matrix::from_rows({{1, 1}, {0, 0}})});
    CHECK(dummy.dummy_vertices() == std::vector<grid_vertex>{{2, 2}});
    CHECK(dummy.mute_vertices() == std::vector<grid_vertex>{{2, 2}});
}

TEST_CASE("natural labeling") {
    graded_poset p = graded_poset::cobweb(fsequence::natural(), 2);
    natural_labeling lab = p.labeling();
    CHECK(lab.label({1, 1}) == 1);
    CHECK(lab.label({1, 2}) == 2);
    CHECK(lab.label({2, 2}) == 3);
    CHECK(lab.vertex(3) == grid_vertex{2, 2});

    bool_matrix a = p.adjacency_matrix();
    CHECK(a == bool_matrix::from_rows({{0, 1, 1}, {0, 0, 0}, {0, 0, 0}}));

    // order-preserving: x < y implies label(x) < label(y)
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        graded_poset r = testutil::random_graded(rng, 4, 3);
        natural_labeling rl = r.labeling();
        for (grid_vertex x : r.vertices())
            for (grid_vertex y : r.vertices())
                if (x != y && r.leq(x, y)) CHECK(rl.label(x) < rl.label(y));
    }
}

TEST_CASE("adjacency matrix is block-superdiagonal") {
    graded_poset p = graded_poset::cobweb(fsequence::fibonacci(), 4);
    bool_matrix a = p.adjacency_matrix();
    natural_labeling lab = p.labeling();
    for (int x = 1; x <= lab.count(); ++x)
        for (int y = 1; y <= lab.count(); ++y) {
            grid_vertex vx = lab.vertex(x), vy = lab.vertex(y);
            if (vy.t != vx.t + 1) CHECK_FALSE(a.at(x - 1, y - 1));
            else CHECK(a.at(x - 1, y - 1));  // cobweb blocks are all ones
        }

    graded_poset chain = graded_poset::cobweb(fsequence::constant(1), 3);
    CHECK(chain.adjacency_matrix() ==
          bool_matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("dual") {
    graded_poset chain = graded_poset::cobweb(fsequence::constant(1), 3);
    CHECK(chain.dual() == chain);

    graded_poset p = graded_poset::cobweb(fsequence::fibonacci(), 4);
    graded_poset d = p.dual();
    CHECK(d.level_sizes() == std::vector<int>{3, 2, 1, 1});
    CHECK(d.is_cobweb());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        graded_poset r = testutil::random_graded(rng, 4, 3);
        CHECK(r.dual().dual() == r);
    }
}

TEST_CASE("json poset document round-trips") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        graded_poset p = testutil::random_graded(rng, 4, 3);
        CHECK(poset_from_json(to_json(p)) == p);
    }
    graded_poset p = graded_poset::cobweb(fsequence::natural(), 2);
    nlohmann::json doc = to_json(p);
    CHECK(doc["sizes"] == nlohmann::json({1, 2}));
    CHECK(doc["biadjacency"][0] == nlohmann::json({{1, 1}}));
}

TEST_CASE("dot export") {
    graded_poset p = graded_poset::cobweb(fsequence::natural(), 2);
    std::string dot = p.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("v1_1 -> v1_2") != std::string::npos);
    CHECK(dot.find("v1_1 -> v2_2") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
}
