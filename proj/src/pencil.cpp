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

#include "quintic/pencil.hpp"

#include <numeric>
#include <sstream>

namespace quintic {

PencilParam PencilParam::make(FieldElement a, FieldElement b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("pencil parameter (0,0)");
    PencilParam p;
    if (a.is_zero()) {
        p.alpha = FieldElement(Rational(0));
        p.beta = FieldElement(Rational(1));
        return p;
    }
    if (a.is_rational() && b.is_rational()) {
        Rational ra = a.rational_value(), rb = b.rational_value();
        // clear denominators, reduce to coprime integers, alpha > 0
        Int den = ra.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rb.get_den().get_mpz_t());
        Int na = ra.get_num() * (den / ra.get_den());
        Int nb = rb.get_num() * (den / rb.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
        if (g != 0) {
            na /= g;
            nb /= g;
        }
        if (na < 0) {
            na = -na;
            nb = -nb;
        }
        p.alpha = FieldElement(Rational(na));
        p.beta = FieldElement(Rational(nb));
        return p;
    }
    // algebraic: normalize to beta' = b/a, then alpha = least positive integer
    // clearing beta's coordinate denominators
    FieldElement bo = b / a;
    Int den = 1;
    for (const auto& c : bo.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Int g = den;
    for (const auto& c : bo.coords()) {
        Int num = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) g = 1;
    Rational scale = rat(den, g);
    p.alpha = FieldElement(scale);
    p.beta = bo * FieldElement(scale);
    return p;
}

PencilParam PencilParam::from_lambda(const FieldElement& lambda) {
    return make(FieldElement(Rational(1)), FieldElement(Rational(2)) * lambda - FieldElement(Rational(1)));
}

FieldElement PencilParam::lambda() const {
    if (alpha.is_zero()) throw std::domain_error("lambda undefined for (0:1)");
    return (alpha + beta) / (FieldElement(Rational(2)) * alpha);
}

FieldElement PencilParam::beta_over_alpha() const {
    if (alpha.is_zero()) throw std::domain_error("beta/alpha undefined for (0:1)");
    return beta / alpha;
}

bool PencilParam::operator<(const PencilParam& o) const {
    bool r1 = is_rational(), r2 = o.is_rational();
    if (r1 != r2) return r1;  // rational parameters sort first
    if (int c = FieldElement::compare(alpha, o.alpha); c != 0) return c < 0;
    return FieldElement::compare(beta, o.beta) < 0;
}

std::string PencilParam::to_string() const {
    std::ostringstream os;
    os << "(" << alpha.to_string() << " : " << beta.to_string() << ")";
    return os.str();
}

SymPoint SymPoint::make(int n, std::vector<FieldElement> values, std::vector<int> mults) {
    if (values.empty() || values.size() > 4 || values.size() != mults.size())
        throw std::invalid_argument("point needs 1..4 distinct values with matching multiplicities");
    int total = 0;
    FieldElement s;
    for (size_t k = 0; k < values.size(); ++k) {
        if (mults[k] <= 0) throw std::invalid_argument("multiplicities must be positive");
        total += mults[k];
        s = s + FieldElement(Rational(mults[k])) * values[k];
    }
    if (total != n + 2) throw std::invalid_argument("multiplicities must sum to n+2");
    if (!s.is_zero()) throw std::invalid_argument("coordinate sum is not zero");
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j]) throw std::invalid_argument("values must be pairwise distinct");
    SymPoint pt;
    pt.n = n;
    pt.values = std::move(values);
    pt.mults = std::move(mults);
    return pt;
}

std::vector<FieldElement> SymPoint::homogeneous() const {
    std::vector<FieldElement> out;
    for (size_t k = 0; k < values.size(); ++k)
        for (int i = 0; i < mults[k]; ++i) out.push_back(values[k]);
    return out;
}

std::array<FieldElement, 5> elementary_from_power(const PowerSums& ps) {
    if (!ps.c[0].is_zero())
        throw std::invalid_argument("power-sum identities require C1 = 0");
    const FieldElement &c2 = ps.c[1], &c3 = ps.c[2], &c4 = ps.c[3], &c5 = ps.c[4];
    std::array<FieldElement, 5> s;
    s[0] = ps.c[0];
    s[1] = c2 * FieldElement(rat(-1, 2));
    s[2] = c3 * FieldElement(rat(1, 3));
    s[3] = c4 * FieldElement(rat(-1, 4)) + c2 * c2 * FieldElement(rat(1, 8));
    s[4] = c5 * FieldElement(rat(1, 5)) - c2 * c3 * FieldElement(rat(1, 6));
    return s;
}

PowerSums power_sums(const SymPoint& pt) {
    PowerSums ps;
    ps.n = pt.n;
    for (int i = 1; i <= 5; ++i) {
        FieldElement c;
        for (size_t k = 0; k < pt.values.size(); ++k)
            c = c + FieldElement(Rational(pt.mults[k])) * pt.values[k].pow(i);
        ps.c[i - 1] = c;
    }
    return ps;
}

QuarticP lemma1_quartic(int n, const FieldElement& lambda, const PowerSums& ps) {
    if (!ps.c[0].is_zero())
        throw std::invalid_argument("Lemma 1 quartic requires C1 = 0");
    const FieldElement &c2 = ps.c[1], &c3 = ps.c[2], &c4 = ps.c[3];
    QuarticP q;
    q.coeff[4] = FieldElement(Rational(1));
    q.coeff[3] = FieldElement(Rational(0));
    q.coeff[2] = -(lambda * c2);
    q.coeff[1] = -(lambda * c3 * FieldElement(rat(2, 3)));
    q.coeff[0] = (lambda * c2 * c2 - c4) * FieldElement(rat(1, n + 2));
    return q;
}

FieldElement QuarticP::evaluate(const FieldElement& x) const {
    FieldElement acc;
    for (int i = 4; i >= 0; --i) acc = acc * x + coeff[i];
    return acc;
}

FieldElement evaluate_F(const SymPoint& pt, const PencilParam& p) {
    PowerSums ps = power_sums(pt);
    FieldElement six_inv(rat(1, 6)), five_inv(rat(1, 5));
    return p.alpha * five_inv * ps.c[4] - (p.alpha + p.beta) * six_inv * ps.c[1] * ps.c[2];
}

bool verify_singular(const SymPoint& pt, const PencilParam& p) {
    if (p.alpha.is_zero())
        throw std::invalid_argument("singularity test requires alpha != 0");
    PowerSums ps = power_sums(pt);
    // dF/dx_j = alpha x^4 - ((alpha+beta)/6)(2 x C3 + 3 x^2 C2); one partial
    // per distinct value
    FieldElement w = (p.alpha + p.beta) * FieldElement(rat(1, 6));
    FieldElement first;
    bool have = false;
    for (const auto& v : pt.values) {
        FieldElement d = p.alpha * v.pow(4) -
                         w * (FieldElement(Rational(2)) * v * ps.c[2] +
                              FieldElement(Rational(3)) * v * v * ps.c[1]);
        if (!have) {
            first = d;
            have = true;
        } else if (!(d == first)) {
            return false;
        }
    }
    return true;
}

}  // namespace quintic
