#pragma once

#include <gmpxx.h>
#include <string>

namespace minorbit {

// Exact arbitrary-precision rational. No floating point anywhere in the core.
using Rat = mpq_class;

inline Rat frac(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace minorbit
