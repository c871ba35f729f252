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

#include "quintic/numberfield.hpp"

#include <sstream>

namespace quintic {

NumberField::NumberField(RatPoly m, std::string label)
    : modulus_(std::move(m)), label_(std::move(label)) {
    primitive_ = primitive_form(modulus_).coeffs;
}

FieldPtr NumberField::create(const RatPoly& modulus, std::string label) {
    if (modulus.is_zero() || modulus.degree() < 1)
        throw std::invalid_argument("number field modulus must have degree >= 1");
    RatPoly m = modulus.monic();
    if (m.degree() == 1) return nullptr;  // Q itself
    if (m.degree() > 4)
        throw std::invalid_argument("number field degree capped at 4, got degree " +
                                    std::to_string(m.degree()));
    Factorization f = poly_factor(m);
    if (f.factors.size() != 1 || f.factors[0].second != 1 || f.factors[0].first.degree() != m.degree())
        throw std::invalid_argument("number field modulus is reducible over Q");
    return FieldPtr(new NumberField(std::move(m), std::move(label)));
}

Int NumberField::primitive_discriminant() const {
    Rational d = poly_discriminant(from_integer_coeffs(primitive_));
    // squarefree part of numerator*denominator
    Int n = d.get_num() * d.get_den();
    Int out = n < 0 ? Int(-1) : Int(1);
    n = abs(n);
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    return out * n;
}

FieldElement::FieldElement(FieldPtr f, std::vector<Rational> coords)
    : field_(std::move(f)), co_(std::move(coords)) {
    normalize();
}

FieldElement FieldElement::generator(const FieldPtr& f) {
    if (!f) throw std::invalid_argument("generator of the rational field");
    std::vector<Rational> co(f->degree(), Rational(0));
    co[1] = 1;
    return FieldElement(f, std::move(co));
}

void FieldElement::normalize() {
    if (!field_) {
        if (co_.empty()) co_ = {Rational(0)};
        co_.resize(1);
        return;
    }
    int d = field_->degree();
    if (static_cast<int>(co_.size()) > d) {
        RatPoly rem = RatPoly(std::vector<Rational>(co_.begin(), co_.end()))
                          .divmod(field_->modulus())
                          .second;
        co_.assign(d, Rational(0));
        for (int i = 0; i <= rem.degree(); ++i) co_[i] = rem[i];
    } else {
        co_.resize(d, Rational(0));
    }
    for (int i = 1; i < d; ++i)
        if (co_[i] != 0) return;
    co_.resize(1);
    field_ = nullptr;  // demote to Q
}

bool FieldElement::is_zero() const {
    for (const auto& c : co_)
        if (c != 0) return false;
    return true;
}

const Rational& FieldElement::rational_value() const {
    if (field_) throw std::logic_error("not a rational value");
    return co_[0];
}

namespace {

// common field of two elements; throws on genuinely mixed fields
FieldPtr unify(const FieldElement& a, const FieldElement& b) {
    if (!a.field()) return b.field();
    if (!b.field()) return a.field();
    if (a.field() == b.field() || a.field()->same(*b.field())) return a.field();
    throw std::invalid_argument("arithmetic between distinct number fields");
}

std::vector<Rational> lift(const FieldElement& x, const FieldPtr& f) {
    std::vector<Rational> co = x.coords();
    co.resize(f ? f->degree() : 1, Rational(0));
    return co;
}

}  // namespace

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.co_) c = -c;
    return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldPtr f = unify(a, b);
    auto ca = lift(a, f), cb = lift(b, f);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return FieldElement(f, std::move(ca));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldPtr f = unify(a, b);
    if (!f) return FieldElement(a.rational_value() * b.rational_value());
    auto ca = lift(a, f), cb = lift(b, f);
    std::vector<Rational> prod(ca.size() + cb.size() - 1, Rational(0));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) prod[i + j] += ca[i] * cb[j];
    }
    return FieldElement(f, std::move(prod));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero element");
    if (!field_) return FieldElement(Rational(1) / co_[0]);
    // extended Euclid in Q[x]: u*a + v*m = 1
    RatPoly a(std::vector<Rational>(co_.begin(), co_.end()));
    RatPoly m = field_->modulus();
    RatPoly r0 = m, r1 = a, s0, s1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        RatPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd (a nonzero constant; the modulus is irreducible)
    if (r0.degree() != 0) throw std::logic_error("zero divisor in number field");
    RatPoly u = s0 * (Rational(1) / r0[0]);
    return FieldElement(field_, u.coeffs());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement out(1), b = *this;
    while (e) {
        if (e & 1u) out = out * b;
        b = b * b;
        e >>= 1;
    }
    return out;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ != !o.field_) return false;
    if (field_ && !field_->same(*o.field_)) return false;
    return co_ == o.co_;
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ && !b.field_) return cmp(a.co_[0], b.co_[0]);
    if (!a.field_) return -1;
    if (!b.field_) return 1;
    const auto &ma = a.field_->modulus().coeffs(), &mb = b.field_->modulus().coeffs();
    if (ma.size() != mb.size()) return ma.size() < mb.size() ? -1 : 1;
    for (size_t i = 0; i < ma.size(); ++i)
        if (int c = cmp(ma[i], mb[i]); c != 0) return c;
    for (size_t i = 0; i < a.co_.size(); ++i)
        if (int c = cmp(a.co_[i], b.co_[i]); c != 0) return c;
    return 0;
}

RatPoly FieldElement::min_poly() const {
    if (!field_) return RatPoly(std::vector<Rational>{-co_[0], Rational(1)});
    int d = field_->degree();
    // coordinates of powers x^0..x^d
    std::vector<std::vector<Rational>> pw;
    FieldElement acc(1);
    for (int k = 0; k <= d; ++k) {
        pw.push_back(lift(acc, field_));
        acc = acc * (*this);
    }
    // smallest e with x^e in span(x^0..x^(e-1)): solve by Gaussian elimination
    for (int e = 1; e <= d; ++e) {
        // solve sum_{k<e} c_k x^k = x^e  (d equations, e unknowns)
        std::vector<std::vector<Rational>> m(d, std::vector<Rational>(e + 1, Rational(0)));
        for (int row = 0; row < d; ++row) {
            for (int k = 0; k < e; ++k) m[row][k] = pw[k][row];
            m[row][e] = pw[e][row];
        }
        // eliminate
        int rank = 0;
        std::vector<int> pivot_col;
        for (int col = 0; col < e && rank < d; ++col) {
            int pr = -1;
            for (int r = rank; r < d; ++r)
                if (m[r][col] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(m[rank], m[pr]);
            Rational inv = Rational(1) / m[rank][col];
            for (auto& x : m[rank]) x *= inv;
            for (int r = 0; r < d; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                Rational f = m[r][col];
                for (int c2 = col; c2 <= e; ++c2) m[r][c2] -= f * m[rank][c2];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        bool consistent = true;
        for (int r = rank; r < d; ++r)
            if (m[r][e] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<Rational> mp(e + 1, Rational(0));
        mp[e] = 1;
        for (int r = 0; r < rank; ++r) mp[pivot_col[r]] = -m[r][e];
        return RatPoly(std::move(mp));
    }
    throw std::logic_error("minimal polynomial not found");
}

FieldElement FieldElement::substitute_generator(const FieldElement& y) const {
    if (!field_) return *this;
    FieldElement acc;
    for (size_t i = co_.size(); i-- > 0;) acc = acc * y + FieldElement(co_[i]);
    return acc;
}

std::string FieldElement::to_string() const {
    if (!field_) return quintic::to_string(co_[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(co_.size()) - 1; i >= 0; --i) {
        if (co_[i] == 0) continue;
        Rational a = abs(co_[i]);
        if (!first) os << (co_[i] > 0 ? "+" : "-");
        else if (co_[i] < 0) os << "-";
        if (a != 1 || i == 0) os << quintic::to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << field_->label();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

FieldElement eval_at(const RatPoly& p, const FieldElement& x) {
    return p.evaluate_in<FieldElement>(x);
}

}  // namespace quintic
