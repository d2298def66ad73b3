#include <doctest.h>

#include "cobweb/matrix.hpp"

using namespace cobweb;

TEST_CASE("boolean closure by repeated squaring") {
    // path 0 -> 1 -> 2 -> 3
    bool_matrix path(4, 4);
    path.set(0, 1, true);
    path.set(1, 2, true);
    path.set(2, 3, true);
    bool_matrix closed = reflexive_transitive_closure(path);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(closed.at(i, j) == (i <= j));

    CHECK(reflexive_transitive_closure(bool_matrix(3, 3)) == bool_matrix::identity(3));
}

TEST_CASE("boolean product") {
    bool_matrix a = bool_matrix::from_rows({{1, 0}, {0, 1}});
    bool_matrix b = bool_matrix::from_rows({{0, 1}, {1, 0}});
    CHECK(a.boolean_product(b) == b);
    CHECK(b.boolean_product(b) == a);
    CHECK_THROWS_AS(a.boolean_product(bool_matrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(bool_matrix::from_rows({{1, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("unit upper-triangular inversion") {
    int_matrix z(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) z.at(i, j) = 1;
    int_matrix inv = invert_unit_upper_triangular(z);
    CHECK(inv.at(0, 1) == -1);
    CHECK(inv.at(0, 2) == 0);
    CHECK(inv.at(1, 2) == -1);
    CHECK((z * inv).is_identity());
    CHECK((inv * z).is_identity());

    int_matrix not_unit = int_matrix::identity(2);
    not_unit.at(1, 1) = 2;
    CHECK_THROWS_AS(invert_unit_upper_triangular(not_unit), std::invalid_argument);
    int_matrix lower = int_matrix::identity(2);
    lower.at(1, 0) = 1;
    CHECK_THROWS_AS(invert_unit_upper_triangular(lower), std::invalid_argument);
}

TEST_CASE("csv round trip") {
    int_matrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = -7;
    m.at(1, 1) = bigint("123456789012345678901234567890");
    CHECK(int_matrix::from_csv(m.to_csv()) == m);
}
