// Exact rational scalars on top of GMP, plus the "p/q" string format used
// throughout the JSON interfaces.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vok {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Serializes in lowest terms; the denominator is omitted when it is 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

// Total order used wherever deterministic output ordering is required.
inline int rat_cmp(const Rat& a, const Rat& b) { return cmp(a, b); }

}  // namespace vok
