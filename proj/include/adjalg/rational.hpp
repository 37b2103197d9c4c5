#pragma once

#include <gmpxx.h>

#include <string>

#include "adjalg/error.hpp"

namespace adjalg {

// Exact scalar field: arbitrary-precision rationals, always canonical
// (lowest terms, positive denominator). GMP maintains the invariant for us.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) fail(errc::bad_input, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Serialized form is "num" or "num/den", matching the JSON schemas.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        if (r.get_den() == 0) fail(errc::bad_input, "zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(errc::bad_input, "malformed rational '" + s + "'");
    }
}

}  // namespace adjalg
