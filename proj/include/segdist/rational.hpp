#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <string>

namespace segdist {

// All exponents in the calculus are exact rationals; no floating point
// anywhere in the engine.
using Rat = boost::rational<long long>;

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

// Floor of n/d for arbitrary signs.
inline long long floor_div(long long n, long long d) {
  long long q = n / d, r = n % d;
  return (r != 0 && ((r < 0) != (d < 0))) ? q - 1 : q;
}

inline long long rat_floor(const Rat& x) {
  return floor_div(x.numerator(), x.denominator());
}

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

// Reduce into [0, 1).
inline Rat mod1(const Rat& x) { return x - rat(rat_floor(x)); }

// "p/q" in lowest terms, bare integer when q == 1.
inline std::string rat_str(const Rat& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

}  // namespace segdist
