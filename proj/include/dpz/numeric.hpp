#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dpz {

// Exact arithmetic everywhere; no fixed-width overflow semantics.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

}  // namespace dpz
