// Builds the 5-level Fibonacci cobweb and prints its staircase zeta
// rendering, mobius matrix and characteristic polynomial.

#include <iostream>

#include "cobweb/cobweb.hpp"

int main() {
    using namespace cobweb;

    fsequence fib = fsequence::fibonacci();
    const int levels = 5;

    std::cout << "zeta staircase, fibonacci, " << levels << " levels:\n";
    std::cout << scala_render(fib, levels) << "\n";

    graded_poset p = graded_poset::cobweb(fib, levels);
    int_matrix mu = mobius_oracle(p);
    std::cout << "mobius matrix (" << mu.rows() << "x" << mu.cols() << "):\n" << mu.to_csv();

    std::cout << "\ncharacteristic polynomial: " << char_poly(fib, levels).to_string() << "\n";
    return 0;
}
