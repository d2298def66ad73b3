#include <doctest.h>

#include "cobweb/fsequence.hpp"

using namespace cobweb;

TEST_CASE("built-in sequence values") {
    CHECK(fsequence::natural().value(4) == 4);

    fsequence fib = fsequence::fibonacci();
    CHECK(fib.value(1) == 1);
    CHECK(fib.value(2) == 1);
    CHECK(fib.value(3) == 2);
    CHECK(fib.value(4) == 3);
    CHECK(fib.value(5) == 5);

    // gaussian value independently from the closed form (q^k - 1) / (q - 1)
    fsequence g2 = fsequence::gaussian(2);
    CHECK(g2.value(3) == 7);
    for (int k = 1; k <= 10; ++k) CHECK(g2.value(k) == (bigint(1) << k) - 1);

    CHECK(fsequence::constant(3).value(100) == 3);
}

TEST_CASE("zeroth value is separate and optional") {
    fsequence nat = fsequence::natural();
    CHECK_THROWS_WITH_AS(nat.value(0), "no bottom level defined", std::domain_error);
    CHECK(nat.with_zeroth(1).value(0) == 1);
    CHECK(nat.value(1) == 1);  // unaffected
}

TEST_CASE("explicit value lists") {
    fsequence f = fsequence::from_values("custom", {bigint(2), bigint(3), bigint(6)});
    CHECK(f.value(2) == 3);
    CHECK_THROWS_AS(f.value(4), std::out_of_range);
    CHECK_THROWS_AS(fsequence::from_values("bad", {bigint(0)}), std::invalid_argument);
}

TEST_CASE("sequence files") {
    auto path = std::filesystem::temp_directory_path() / "cobweb_seq_test.json";
    {
        std::ofstream out(path);
        out << "[1, 1, 2, 3, 5]";
    }
    fsequence f = fsequence::from_file(path);
    CHECK(f.value(5) == 5);
    CHECK(f.max_index() == 5);

    auto lines = std::filesystem::temp_directory_path() / "cobweb_seq_test.txt";
    {
        std::ofstream out(lines);
        out << "4\n7\n9\n";
    }
    CHECK(fsequence::from_file(lines).value(3) == 9);
    std::filesystem::remove(path);
    std::filesystem::remove(lines);
}

TEST_CASE("factorials") {
    fsequence fib = fsequence::fibonacci();
    CHECK(f_factorial(fib, 5) == 30);  // 1*1*2*3*5
    CHECK(f_factorial(fib, 0) == 1);
    CHECK(f_factorial(fsequence::natural(), 4) == 24);

    CHECK(falling_factorial(fsequence::natural(), 4, 2) == 12);
    CHECK(falling_factorial(fib, 5, 0) == 1);
    CHECK(falling_factorial(fib, 5, 3) == 30);  // 5*3*2
    CHECK_THROWS_WITH_AS(falling_factorial(fib, 2, 3), "degree exceeds index",
                         std::invalid_argument);
}

TEST_CASE("upper factorial of a function") {
    auto minus_one = [](const bigint& x) { return x - 1; };
    CHECK(upper_factorial(minus_one, fsequence::natural(), 2, 3) == 6);  // 1*2*3
    CHECK(upper_factorial(minus_one, fsequence::fibonacci(), 1, 0) == 1);
    CHECK(upper_factorial(minus_one, fsequence::fibonacci(), 1, 2) == 0);  // (1-1)(1-1)
    // length one reduces to a single application
    CHECK(upper_factorial(minus_one, fsequence::natural(), 5, 1) == 4);
}

TEST_CASE("fnomial coefficients") {
    CHECK(fnomial(fsequence::natural(), 4, 2) == 6);
    CHECK(fnomial(fsequence::fibonacci(), 7, 0) == 1);
    CHECK(fnomial(fsequence::fibonacci(), 5, 2) == 15);
    CHECK(fnomial(fsequence::gaussian(2), 2, 1) == 3);
    CHECK_THROWS_AS(fnomial(fsequence::natural(), 2, 3), std::invalid_argument);
}

TEST_CASE("fnomial identities") {
    std::vector<fsequence> seqs{fsequence::natural(), fsequence::fibonacci(),
                                fsequence::gaussian(2), fsequence::gaussian(3),
                                fsequence::constant(2)};
    for (const fsequence& f : seqs) {
        for (int n = 0; n <= 12; ++n) {
            CHECK(f_factorial(f, n) ==
                  (n == 0 ? bigint(1) : f_factorial(f, n - 1) * f.value(n)));
            for (int k = 0; k <= n; ++k) {
                CHECK(fnomial(f, n, k) == fnomial(f, n, n - k));
                CHECK(fnomial(f, n, k) ==
                      bigrat(falling_factorial(f, n, k), f_factorial(f, k)));
            }
        }
    }
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(fsequence::natural(), 12).admissible);
    CHECK(is_admissible(fsequence::fibonacci(), 12).admissible);
    CHECK(is_admissible(fsequence::gaussian(2), 10).admissible);

    std::vector<bigint> vals;
    vals.push_back(2);
    vals.push_back(3);
    for (int i = 3; i <= 12; ++i) vals.push_back(i);
    admissibility_report rep = is_admissible(fsequence::from_values("f", vals), 12);
    CHECK_FALSE(rep.admissible);
    CHECK(rep.n == 2);  // (2*3)/(2*2) = 3/2
    CHECK(rep.k == 1);
}
