#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace algcheck {

/// Exact rational arithmetic (GMP-backed).
/// Expression templates are off so results of arithmetic are plain values.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// "p/q", or "p" when the denominator is 1.
[[nodiscard]] inline std::string to_fraction_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

} // namespace algcheck
