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

#ifndef QUINTIC_NUMBERFIELD_HPP
#define QUINTIC_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "quintic/polynomial.hpp"
#include "quintic/rational.hpp"

namespace quintic {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[t]/(modulus) for a monic irreducible modulus of degree 2..4.  A degree-1
// modulus means the rationals; create() returns nullptr for it, the value
// FieldElement uses for plain rationals.  Reducible or degree >= 5 moduli are
// rejected.
class NumberField {
   public:
    static FieldPtr create(const RatPoly& modulus, std::string label = "t");

    int degree() const { return modulus_.degree(); }
    const RatPoly& modulus() const { return modulus_; }
    const std::vector<Int>& primitive_modulus() const { return primitive_; }
    const std::string& label() const { return label_; }
    bool same(const NumberField& o) const { return modulus_ == o.modulus_; }

    // squarefree part of the discriminant of the primitive integer modulus
    Int primitive_discriminant() const;

   private:
    NumberField(RatPoly m, std::string label);
    RatPoly modulus_;
    std::vector<Int> primitive_;
    std::string label_;
};

// Element of a number field (or of Q when field() is null). Coordinates are
// with respect to the power basis 1, t, .., t^(d-1). Elements whose higher
// coordinates vanish are demoted to plain rationals, so rational values
// compare equal across fields. Zero test is exact; every nonzero element is
// invertible since the modulus is irreducible.
class FieldElement {
   public:
    FieldElement() : co_{Rational(0)} {}
    FieldElement(long v) : co_{Rational(v)} {}
    FieldElement(const Rational& r) : co_{r} {}
    FieldElement(FieldPtr f, std::vector<Rational> coords);

    static FieldElement generator(const FieldPtr& f);

    bool is_zero() const;
    bool is_rational() const { return field_ == nullptr; }
    const Rational& rational_value() const;
    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return co_; }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    FieldElement pow(unsigned e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // deterministic total order (rationals first, then by modulus, then coords)
    static int compare(const FieldElement& a, const FieldElement& b);
    bool operator<(const FieldElement& o) const { return compare(*this, o) < 0; }

    // monic minimal polynomial over Q
    RatPoly min_poly() const;

    // evaluates this element's coordinate polynomial at y (used to apply
    // field automorphisms t -> y)
    FieldElement substitute_generator(const FieldElement& y) const;

    std::string to_string() const;

   private:
    void normalize();
    FieldPtr field_;  // nullptr => rational
    std::vector<Rational> co_;
};

// evaluates a rational-coefficient polynomial at a field element
FieldElement eval_at(const RatPoly& p, const FieldElement& x);

using FPoly = Poly<FieldElement>;

}  // namespace quintic

#endif
