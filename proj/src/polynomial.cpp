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

#include "quintic/polynomial.hpp"

#include <map>
#include <sstream>

namespace quintic {
namespace {

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int eval_int(const std::vector<Int>& f, const Int& x) {
    Int acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

// Integer-coefficient exact division test: returns quotient coefficients if
// g divides f over Q (then integrality is automatic by Gauss's lemma when
// both are primitive), empty otherwise.
bool divide_int(const std::vector<Int>& f, const std::vector<Int>& g, std::vector<Int>& q) {
    if (g.empty() || g.back() == 0) return false;
    std::vector<Int> r = f;
    int dq = static_cast<int>(f.size()) - static_cast<int>(g.size());
    if (dq < 0) return false;
    q.assign(dq + 1, 0);
    for (int k = dq; k >= 0; --k) {
        if (r[k + g.size() - 1] % g.back() != 0) return false;
        Int c = r[k + g.size() - 1] / g.back();
        q[k] = c;
        for (size_t i = 0; i < g.size(); ++i) r[k + i] -= c * g[i];
    }
    for (const Int& c : r)
        if (c != 0) return false;
    return true;
}

struct SignedDivisors {
    std::vector<Int> d;  // positive and negative
};

SignedDivisors signed_divisors(const Int& n) {
    SignedDivisors out;
    for (const Int& d : divisors(n)) {
        out.d.push_back(d);
        out.d.push_back(-d);
    }
    return out;
}

RatPoly monic_from_int(const std::vector<Int>& c) {
    std::vector<Rational> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = rat(c[i], c.back());
    return RatPoly(std::move(r));
}

// Extracts one irreducible factor of degree `want` (2, 3 or 4) from a
// primitive integer polynomial with no rational roots, or returns false.
// Candidates are pinned by divisor constraints at x = 0, 1, -1 (and 2 for
// quartics): any integer factor g satisfies g(x0) | f(x0).
bool extract_factor(const std::vector<Int>& f, int want, std::vector<Int>& g_out,
                    std::vector<Int>& q_out) {
    const Int lc = f.back();
    const Int f0 = f.front();
    const Int f1 = eval_int(f, 1), fm1 = eval_int(f, -1);
    if (f0 == 0 || f1 == 0 || fm1 == 0) return false;  // roots were removed already
    auto dl = divisors(lc);
    auto d0 = signed_divisors(f0);
    auto d1 = signed_divisors(f1);
    auto dm1 = signed_divisors(fm1);

    if (want == 2) {
        // g = p x^2 + q x + r with p>0, p|lc, g(1)=p+q+r | f(1), g(-1)=p-q+r | f(-1)
        for (const Int& p : dl)
            for (const Int& a : d1.d)
                for (const Int& b : dm1.d) {
                    if ((a - b) % 2 != 0) continue;
                    Int q = (a - b) / 2;
                    Int r = (a + b) / 2 - p;
                    if (r == 0 || f0 % r != 0) continue;
                    std::vector<Int> g{r, q, p};
                    if (divide_int(f, g, q_out)) {
                        g_out = g;
                        return true;
                    }
                }
        return false;
    }
    if (want == 3) {
        // g = p x^3 + q x^2 + r x + s: s | f(0); g(+-1) divisor constraints
        for (const Int& p : dl)
            for (const Int& s : d0.d)
                for (const Int& a : d1.d)
                    for (const Int& b : dm1.d) {
                        // a = p+q+r+s, b = -p+q-r+s
                        Int two_q = a + b - 2 * s;
                        Int two_r = a - b - 2 * p;
                        if (two_q % 2 != 0 || two_r % 2 != 0) continue;
                        std::vector<Int> g{s, two_r / 2, two_q / 2, p};
                        if (divide_int(f, g, q_out)) {
                            g_out = g;
                            return true;
                        }
                    }
        return false;
    }
    if (want == 4) {
        const Int f2 = eval_int(f, 2);
        if (f2 == 0) return false;
        auto d2 = signed_divisors(f2);
        for (const Int& p : dl)
            for (const Int& t : d0.d)
                for (const Int& a : d1.d)
                    for (const Int& b : dm1.d) {
                        // a = p+q+r+s+t, b = p-q+r-s+t
                        if ((a - b) % 2 != 0) continue;
                        Int s1 = (a - b) / 2;  // q+s
                        Int r2 = (a + b) / 2 - p - t;
                        for (const Int& c2 : d2.d) {
                            // c2 = 16p+8q+4r+2s+t
                            Int s2 = c2 - 16 * p - 4 * r2 - t;  // 8q+2s
                            Int six_q = s2 - 2 * s1;
                            if (six_q % 6 != 0) continue;
                            Int q = six_q / 6;
                            Int s = s1 - q;
                            std::vector<Int> g{t, s, r2, q, p};
                            if (divide_int(f, g, q_out)) {
                                g_out = g;
                                return true;
                            }
                        }
                    }
        return false;
    }
    return false;
}

void factor_monic_rec(const RatPoly& p, std::map<std::vector<Int>, int>& factors,
                      std::vector<std::pair<RatPoly, int>>& unfactored);

void push_factor(const RatPoly& f, std::map<std::vector<Int>, int>& factors) {
    factors[primitive_form(f).coeffs] += 1;
}

void factor_monic_rec(const RatPoly& p, std::map<std::vector<Int>, int>& factors,
                      std::vector<std::pair<RatPoly, int>>& unfactored) {
    RatPoly q = p;
    if (q.degree() <= 0) return;
    for (const auto& [root, mult] : rational_roots(q)) {
        RatPoly lin(std::vector<Rational>{-root, Rational(1)});
        for (int i = 0; i < mult; ++i) q = exact_divide(q, lin);
        factors[primitive_form(lin).coeffs] += mult;
    }
    if (q.degree() <= 0) return;
    if (q.degree() <= 3) {
        push_factor(q, factors);  // no rational roots: irreducible for degrees 2, 3
        return;
    }
    auto prim = primitive_form(q).coeffs;
    std::vector<Int> g, rest;
    for (int want = 2; want <= 4 && want < static_cast<int>(prim.size()) - 1; ++want) {
        // quadratics first, so any degree-4 factor found later is irreducible
        if (extract_factor(prim, want, g, rest)) {
            factor_monic_rec(monic_from_int(g), factors, unfactored);
            factor_monic_rec(monic_from_int(rest), factors, unfactored);
            return;
        }
    }
    if (q.degree() == 4) {
        push_factor(q, factors);  // no roots, no quadratic split: irreducible
        return;
    }
    unfactored.push_back({q, 1});
}

}  // namespace

PrimitiveForm primitive_form(const RatPoly& p) {
    if (p.is_zero()) return {{}, Rational(0)};
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm_int(den, c.get_den());
    Int num = 0;
    for (const auto& c : p.coeffs()) num = gcd_int(num, c.get_num() * (den / c.get_den()));
    if (p.lc() < 0) num = -num;
    PrimitiveForm out;
    out.scale = rat(num, den);
    for (const auto& c : p.coeffs()) {
        Rational scaled = c / out.scale;
        out.coeffs.push_back(scaled.get_num());
    }
    return out;
}

RatPoly from_integer_coeffs(const std::vector<Int>& c) {
    std::vector<Rational> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]);
    return RatPoly(std::move(r));
}

std::string poly_to_string(const RatPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || i == 0) os << to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::pair<Rational, int>> rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of zero polynomial");
    std::vector<std::pair<Rational, int>> out;
    RatPoly q = p;
    // x^k factor
    int zk = 0;
    while (!q.is_zero() && q[0] == 0 && q.degree() > 0) {
        q = exact_divide(q, RatPoly::x());
        ++zk;
    }
    if (zk) out.push_back({Rational(0), zk});
    if (q.degree() <= 0) return out;

    auto prim = primitive_form(q).coeffs;
    for (const Int& qq : divisors(prim.back())) {
        for (const Int& pp : divisors(prim.front())) {
            for (int sgn : {1, -1}) {
                if (gcd_int(pp, qq) != 1) continue;
                Rational cand = rat(sgn * pp, qq);
                if (q.evaluate(cand) != 0) continue;
                int mult = 0;
                RatPoly lin(std::vector<Rational>{-cand, Rational(1)});
                while (q.degree() > 0 && q.evaluate(cand) == 0) {
                    q = exact_divide(q, lin);
                    ++mult;
                }
                out.push_back({cand, mult});
            }
        }
    }
    return out;
}

Factorization poly_factor(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    Factorization out;
    out.unit = p.lc();
    std::map<std::vector<Int>, int> fmap;
    factor_monic_rec(p.monic(), fmap, out.unfactored);
    for (const auto& [coeffs, mult] : fmap)
        out.factors.push_back({monic_from_int(coeffs), mult});
    // put the flagged residuals in monic form too
    for (auto& [f, m] : out.unfactored) f = f.monic();
    return out;
}

Rational poly_resultant_rational(const RatPoly& p, const RatPoly& q) {
    return poly_resultant(p, q);
}

Rational poly_discriminant(const RatPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (p.degree() == 1) return Rational(1);
    Rational r = poly_resultant(p, p.derivative());
    int d = p.degree();
    Rational sign = ((d * (d - 1) / 2) % 2) ? Rational(-1) : Rational(1);
    return sign * r / p.lc();
}

}  // namespace quintic
