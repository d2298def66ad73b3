#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cobweb {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bool is_integral(const bigrat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline bigint as_integer(const bigrat& r) {
    if (!is_integral(r))
        throw std::domain_error("rational is not an integer: " + r.str());
    return boost::multiprecision::numerator(r);
}

/// Narrowing conversion for values that index or size concrete containers.
inline long long to_int64(const bigint& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("value too large for enumeration: " + v.str());
    return static_cast<long long>(v);
}

inline int to_int32(const bigint& v) {
    long long x = to_int64(v);
    if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min())
        throw std::overflow_error("value too large for enumeration: " + v.str());
    return static_cast<int>(x);
}

}  // namespace cobweb
