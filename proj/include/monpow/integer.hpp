#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>

namespace monpow {

// All arithmetic in this library is exact. Exponents, determinants and bound
// values are arbitrary-precision integers; rationals appear only where a
// quotient of integers is itself the quantity of interest.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Integer int_pow(const Integer& base, std::size_t exponent) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

/// Largest k with k*k <= value. Requires value >= 0.
inline Integer floor_sqrt(const Integer& value) {
    return boost::multiprecision::sqrt(value);
}

/// Smallest k with k*k >= value. Requires value >= 0.
inline Integer ceil_sqrt(const Integer& value) {
    Integer root = boost::multiprecision::sqrt(value);
    if (root * root == value) {
        return root;
    }
    return root + 1;
}

} // namespace monpow
