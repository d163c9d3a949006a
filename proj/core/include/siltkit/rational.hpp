#pragma once

#include <gmpxx.h>
#include <string>

namespace siltkit {

/* Exact rational scalar used throughout. All linear algebra is exact. */
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_of(long num, long den = 1) { return Rat(num, den); }

}  // namespace siltkit
