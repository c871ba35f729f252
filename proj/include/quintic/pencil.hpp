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

#ifndef QUINTIC_PENCIL_HPP
#define QUINTIC_PENCIL_HPP

#include <array>
#include <vector>

#include "quintic/numberfield.hpp"

namespace quintic {

// A point (alpha : beta) of the parameter line of the pencil
// alpha*S5 + beta*S2*S3 restricted to S1 = 0.  Stored normalized: rational
// pairs as coprime integers with alpha > 0 (or (0,1)); pairs with an
// algebraic beta are scaled so alpha is the smallest positive integer that
// clears beta's coordinate denominators.
struct PencilParam {
    FieldElement alpha, beta;

    static PencilParam make(FieldElement a, FieldElement b);
    static PencilParam rational(long a, long b) {
        return make(FieldElement(Rational(a)), FieldElement(Rational(b)));
    }
    // (1 : 2*lambda - 1), normalized
    static PencilParam from_lambda(const FieldElement& lambda);

    FieldElement lambda() const;       // (alpha + beta) / (2 alpha), alpha != 0
    FieldElement beta_over_alpha() const;
    bool is_degenerate() const { return alpha.is_zero(); }  // (0:1)
    bool is_rational() const { return alpha.is_rational() && beta.is_rational(); }

    bool operator==(const PencilParam& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator<(const PencilParam& o) const;

    std::string to_string() const;
};

// Power sums C_i = sum_j x_j^i of the n+2 homogeneous coordinates.
struct PowerSums {
    int n = 0;
    std::array<FieldElement, 5> c;  // c[i] = C_{i+1}; c[0] must be zero on S1=0
};

// A coordinate point with at most 4 distinct values; mults sum to n+2 and
// sum(mults[k] * values[k]) = 0.
struct SymPoint {
    int n = 0;
    std::vector<FieldElement> values;
    std::vector<int> mults;

    static SymPoint make(int n, std::vector<FieldElement> values, std::vector<int> mults);
    std::vector<FieldElement> homogeneous() const;  // values expanded by multiplicity
};

// P(X) = X^4 - lambda C2 X^2 - (2/3) lambda C3 X + (lambda C2^2 - C4)/(n+2);
// the X^3 coefficient is identically zero.
struct QuarticP {
    std::array<FieldElement, 5> coeff;  // coeff[i] multiplies X^i; coeff[4] = 1
    FieldElement evaluate(const FieldElement& x) const;
};

// S1..S5 from C1..C5 on the locus C1 = 0
std::array<FieldElement, 5> elementary_from_power(const PowerSums& ps);

PowerSums power_sums(const SymPoint& pt);

QuarticP lemma1_quartic(int n, const FieldElement& lambda, const PowerSums& ps);

// (alpha/5) C5 - ((alpha+beta)/6) C2 C3 at the point
FieldElement evaluate_F(const SymPoint& pt, const PencilParam& p);

// true iff all n+2 partial derivatives of F agree at the point (alpha != 0)
bool verify_singular(const SymPoint& pt, const PencilParam& p);

}  // namespace quintic

#endif
