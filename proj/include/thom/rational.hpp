#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace thom {

using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; this does.
inline Rat rat(long n, long d = 1) {
  if (d == 0) throw std::domain_error("rat: zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace thom
