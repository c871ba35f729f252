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

#ifndef QUINTIC_PENTAGON_HPP
#define QUINTIC_PENTAGON_HPP

#include <map>

#include "quintic/rational.hpp"

namespace quintic {

// Finite multiset of exact critical values.
struct CriticalSpectrum {
    std::map<Rational, Int> entries;
    Int total() const {
        Int t = 0;
        for (const auto& [v, m] : entries) t += m;
        return t;
    }
};

// Critical values of the normalized pentagon polynomial R5/16, where
// R5(x,y) = x^5 - 10x^3y^2 + 5xy^4 - 5x^4 - 10x^2y^2 - 5y^4 + 20x^2 + 20y^2 - 16.
// On the axis y = 0 the gradient factors as 5x(x-2)(x^2-2x-4); the five-fold
// symmetry distributes the 16 Morse points as {0: 10, +1: 5, -1: 1}.
CriticalSpectrum pentagon_spectrum();

// the degree-5 Chebyshev polynomial 16z^5 - 20z^3 + 5z: values {+1:2, -1:2}
CriticalSpectrum chebyshev_spectrum();

// spectrum of -(T5(z) - 1)/2, the right-hand side used for odd n: {0:2, +1:2}
CriticalSpectrum chebyshev_rhs_spectrum();

// Number of affine singular points of the block construction: one critical
// value per pentagon block with sign (-1)^(j(1+(n mod 2))), matching the
// right-hand side (0 for even n, a Chebyshev critical value for odd n).
Int pentagon_node_count(int n);

// same count for an arbitrary block spectrum (mirror-symmetry checks)
Int pentagon_node_count_with(int n, const CriticalSpectrum& block,
                             const CriticalSpectrum& rhs);

// exact evaluation helpers for the derivation tests
Rational pentagon_R5(const Rational& x, const Rational& y);
Rational chebyshev_T5(const Rational& z);

}  // namespace quintic

#endif
