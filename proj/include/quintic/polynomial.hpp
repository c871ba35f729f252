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

#ifndef QUINTIC_POLYNOMIAL_HPP
#define QUINTIC_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

// Dense univariate polynomial, lowest degree first. K is an exact field
// scalar (Rational or FieldElement). The zero polynomial has no coefficients.
template <class K>
class Poly {
   public:
    Poly() = default;
    Poly(const K& constant) { c_.push_back(constant); trim(); }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const K& operator[](size_t i) const {
        static const K zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<K>& coeffs() const { return c_; }
    const K& lc() const {
        if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K{});
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K{});
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const K& s) const {
        Poly r = *this;
        for (auto& a : r.c_) a = a * s;
        r.trim();
        return r;
    }

    K evaluate(const K& x) const {
        K acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    // Horner over a wider scalar (e.g. Rational coefficients at a FieldElement).
    template <class E>
    E evaluate_in(const E& x) const {
        E acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + E(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
        return Poly(std::move(r));
    }

    // Substitute x -> a + b*x (enough for the solver's affine reparametrizations).
    Poly compose_affine(const K& a, const K& b) const {
        Poly lin(std::vector<K>{a, b});
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
        return acc;
    }

    // Division with remainder; requires invertible lc(divisor).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
        Poly r = *this;
        std::vector<K> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, K{});
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K f = r.lc() / d.lc();
            int k = r.degree() - d.degree();
            q[k] = f;
            for (int i = 0; i <= d.degree(); ++i)
                r.c_[i + k] = r.c_[i + k] - f * d.c_[i];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / lc();
        return *this * inv;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == K{}) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> exact_divide(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("polynomial division not exact");
    return q;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

template <class K>
K pow_of(const K& base, int e) {
    K out(1);
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

// res(p, q) = lc(p)^deg q * prod q(alpha) over roots alpha of p. Zero iff the
// inputs share a root over the algebraic closure.
template <class K>
K poly_resultant(const Poly<K>& p, const Poly<K>& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (p.degree() == 0) return pow_of(p.lc(), q.degree());
    if (q.degree() == 0) return pow_of(q.lc(), p.degree());
    if (p.degree() < q.degree()) {
        K sign = ((p.degree() * q.degree()) % 2) ? K(-1) : K(1);
        return sign * poly_resultant(q, p);
    }
    Poly<K> r = p.divmod(q).second;
    if (r.is_zero()) return K(0);
    K sign = ((p.degree() * q.degree()) % 2) ? K(-1) : K(1);
    return sign * pow_of(q.lc(), p.degree() - r.degree()) * poly_resultant(q, r);
}

using RatPoly = Poly<Rational>;

// --- rational-coefficient specifics -------------------------------------

// Primitive integer form: poly = scale * sum primitive[i] x^i, primitive
// integer coefficients with content 1 and positive leading coefficient.
struct PrimitiveForm {
    std::vector<Int> coeffs;
    Rational scale;
};
PrimitiveForm primitive_form(const RatPoly& p);
RatPoly from_integer_coeffs(const std::vector<Int>& c);

std::string poly_to_string(const RatPoly& p, const std::string& var);

// Rational roots with multiplicity; exact.
std::vector<std::pair<Rational, int>> rational_roots(const RatPoly& p);

// Factorization over Q. Factors of degree <= 4 are guaranteed irreducible.
// Any residual all of whose irreducible factors have degree >= 5 lands in
// `unfactored` (and is in fact irreducible for inputs of degree <= 9).
struct Factorization {
    Rational unit;                                    // leading constant
    std::vector<std::pair<RatPoly, int>> factors;     // monic irreducible, multiplicity
    std::vector<std::pair<RatPoly, int>> unfactored;  // flagged residuals, degree >= 5
    bool complete() const { return unfactored.empty(); }
};
Factorization poly_factor(const RatPoly& p);

Rational poly_resultant_rational(const RatPoly& p, const RatPoly& q);
Rational poly_discriminant(const RatPoly& p);

}  // namespace quintic

#endif
