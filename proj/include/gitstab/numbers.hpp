#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>
#include <vector>

namespace gitstab {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Serialized form used everywhere rationals leave the core: "p/q", q > 0.
inline std::string rat_to_string(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat rat_from_string(const std::string& s);

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// gcd of absolute values over a sequence of vectors; 0 when all entries vanish.
Int content(const std::vector<std::vector<Int>>& blocks);

}  // namespace gitstab
