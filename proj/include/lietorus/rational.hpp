#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lietorus {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Lattice coordinates are long long; gmpxx constructors only reach long.
inline Rat rat_of_ll(long long v) { return Rat(static_cast<long>(v)); }

/// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace lietorus
