#pragma once

#include <gmpxx.h>

#include <string>

#include "mirrormap/errors.hpp"

namespace mirrormap {

// Exact arithmetic substrate. mpq_class keeps values reduced with a positive
// denominator, which is exactly the Rat contract.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Accepts "p", "p/q", optional leading '-'.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rat(Int(s), Int(1));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("rat_from_string: malformed rational '" + s + "'");
    }
}

// Canonical form: "p" when integral, "p/q" otherwise (GMP's own convention).
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace mirrormap
