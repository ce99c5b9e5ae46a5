#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace cybe {

// Exact rationals. mpq_class keeps gcd(num,den)=1 and den>0 after canonicalize().
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return mpq_sgn(r.get_mpq_t()) == 0; }

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q"; q > 0 enforced by canonicalization.
inline Rat rat_parse(std::string_view s) {
    if (s.empty()) throw Error("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw Error("bad rational literal: " + std::string(s));
    }
    Rat r;
    if (r.set_str(std::string(s), 10) != 0) throw Error("bad rational literal: " + std::string(s));
    if (mpz_sgn(r.get_den().get_mpz_t()) == 0) throw Error("zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace cybe
