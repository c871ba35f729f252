/*
   Copyright 2026 the quintic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QUINTIC_RATIONAL_HPP
#define QUINTIC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quintic {

// Exact arithmetic scalars. mpq_class results of arithmetic are always in
// lowest terms with positive denominator, which is the storage invariant.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Renders "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

inline Rational pow_rat(const Rational& base, unsigned e) {
    Rational out = 1;
    Rational b = base;
    unsigned k = e;
    while (k) {
        if (k & 1u) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

inline Int pow_int(const Int& base, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Int binomial(unsigned n, unsigned k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int factorial(unsigned n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// All positive divisors of |n| (n != 0). Factors by trial division with a
// Pollard-rho fallback so census-sized constants are always handled.
std::vector<Int> divisors(const Int& n);

}  // namespace quintic

#endif
