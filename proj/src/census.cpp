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

#include "quintic/census.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace quintic {

std::string Pattern::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Pattern> enumerate_patterns(int n) {
    if (n < 2) throw std::invalid_argument("census needs n >= 2");
    int N = n + 2;
    std::vector<Pattern> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int mx) -> void {
        if (rem == 0) {
            out.push_back(Pattern{cur});
            return;
        }
        if (cur.size() == 4) return;
        for (int p = std::min(rem, mx); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, N, N);
    std::sort(out.begin(), out.end(),
              [](const Pattern& a, const Pattern& b) { return a.parts > b.parts; });
    return out;
}

namespace {

// value of one slot as an affine expression in up to two free unknowns
struct AffExpr {
    Rational c0, c1, c2;  // c0 + c1*u1 + c2*u2
};

struct LinearSolution {
    bool consistent = false;
    int nfree = 0;
    std::vector<AffExpr> vals;
};

// Solves sum m_k v_k = 0 (plus sum v_k = 0 for four parts, since four
// distinct values are exactly the roots of the Lemma 1 quartic, whose X^3
// coefficient vanishes) together with the normalization equations.
LinearSolution solve_linear(const std::vector<int>& mults, bool zero_first) {
    int r = static_cast<int>(mults.size());
    std::vector<std::vector<Rational>> rows;
    {
        std::vector<Rational> row(r + 1, Rational(0));
        for (int k = 0; k < r; ++k) row[k] = mults[k];
        rows.push_back(row);
    }
    if (r == 4) {
        std::vector<Rational> row(r + 1, Rational(1));
        row[r] = 0;
        rows.push_back(row);
    }
    if (zero_first) {
        if (r < 2) return {};
        std::vector<Rational> e0(r + 1, Rational(0)), e1(r + 1, Rational(0));
        e0[0] = 1;
        e1[1] = 1;
        e1[r] = 1;  // v0 = 0, v1 = 1
        rows.push_back(e0);
        rows.push_back(e1);
    } else {
        std::vector<Rational> e0(r + 1, Rational(0));
        e0[0] = 1;
        e0[r] = 1;  // v0 = 1
        rows.push_back(e0);
    }
    // Row echelon, normalization-pinned slots first, then from the last slot
    // backwards so the surviving free value is the earliest non-pinned slot
    // (the published case analyses free the second block).
    std::vector<int> col_order;
    col_order.push_back(0);
    if (zero_first) col_order.push_back(1);
    for (int c = r - 1; c >= 0; --c)
        if (std::find(col_order.begin(), col_order.end(), c) == col_order.end())
            col_order.push_back(c);
    int rank = 0;
    std::vector<int> pivot_of_col(r, -1);
    for (int col : col_order) {
        if (rank >= static_cast<int>(rows.size())) break;
        int pr = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        Rational inv = Rational(1) / rows[rank][col];
        for (auto& x : rows[rank]) x *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (int c = 0; c <= r; ++c) rows[i][c] -= f * rows[rank][c];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][r] != 0) return {};  // inconsistent
    LinearSolution sol;
    sol.consistent = true;
    std::vector<int> free_cols;
    for (int col = 0; col < r; ++col)
        if (pivot_of_col[col] < 0) free_cols.push_back(col);
    sol.nfree = static_cast<int>(free_cols.size());
    if (sol.nfree > 2) return {};  // cannot happen for <= 4 parts
    sol.vals.resize(r);
    for (int col = 0; col < r; ++col) {
        AffExpr e;
        if (pivot_of_col[col] < 0) {
            int idx = static_cast<int>(std::find(free_cols.begin(), free_cols.end(), col) -
                                       free_cols.begin());
            (idx == 0 ? e.c1 : e.c2) = 1;
        } else {
            const auto& row = rows[pivot_of_col[col]];
            e.c0 = row[r];
            for (size_t j = 0; j < free_cols.size(); ++j) {
                Rational coef = -row[free_cols[j]];
                (j == 0 ? e.c1 : e.c2) = coef;
            }
        }
        sol.vals[col] = e;
    }
    return sol;
}

RatPoly aff_to_poly(const AffExpr& e) {
    return RatPoly(std::vector<Rational>{e.c0, e.c1});
}

// joint primitive integer form of the constraint pair, positive lc on V
void normalize_pair(RatPoly& U, RatPoly& V) {
    std::vector<Rational> all;
    for (int i = 0; i <= U.degree(); ++i) all.push_back(U[i]);
    for (int i = 0; i <= V.degree(); ++i) all.push_back(V[i]);
    Int den = 1, num = 0;
    for (const auto& c : all) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : all) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    if (num == 0) num = 1;
    Rational scale = rat(num, den);
    if (V.lc() < 0) scale = -scale;
    Rational inv = Rational(1) / scale;
    U = U * inv;
    V = V * inv;
}

// rows of the rank-1 system: P(v_k) = A_k(u) * lambda + B_k(u)
struct SystemRows {
    std::vector<RatPoly> A, B;
};

SystemRows rows_for(int N, const std::vector<int>& mults, const std::vector<RatPoly>& vals) {
    RatPoly C2, C3, C4;
    for (size_t k = 0; k < vals.size(); ++k) {
        RatPoly v2 = vals[k] * vals[k];
        RatPoly m(Rational(mults[k]));
        C2 = C2 + m * v2;
        C3 = C3 + m * v2 * vals[k];
        C4 = C4 + m * v2 * v2;
    }
    SystemRows rows;
    Rational invN = rat(1, N);
    for (const auto& v : vals) {
        RatPoly v2 = v * v;
        rows.A.push_back(-(C2 * v2) - C3 * v * Rational(rat(2, 3)) + C2 * C2 * invN);
        rows.B.push_back(v2 * v2 - C4 * invN);
    }
    return rows;
}

std::vector<std::pair<FieldElement, FieldElement>> rows_at(
    int N, const std::vector<int>& mults, const std::vector<FieldElement>& vals) {
    FieldElement C2, C3, C4;
    for (size_t k = 0; k < vals.size(); ++k) {
        FieldElement m(Rational(mults[k]));
        C2 = C2 + m * vals[k].pow(2);
        C3 = C3 + m * vals[k].pow(3);
        C4 = C4 + m * vals[k].pow(4);
    }
    std::vector<std::pair<FieldElement, FieldElement>> out;
    FieldElement invN(rat(1, N)), two_thirds(rat(2, 3));
    for (const auto& v : vals) {
        out.push_back({-(C2 * v * v) - two_thirds * C3 * v + C2 * C2 * invN,
                       v.pow(4) - C4 * invN});
    }
    return out;
}

std::string minpoly_key(const FieldElement& v) {
    auto pf = primitive_form(v.min_poly());
    std::ostringstream os;
    for (size_t i = 0; i < pf.coeffs.size(); ++i) os << (i ? "," : "") << pf.coeffs[i].get_str();
    return os.str();
}

// canonical projective scaling: blocks ordered by multiplicity (then value),
// everything divided by the first nonzero value in that order
std::vector<FieldElement> canonical_scaled(const std::vector<FieldElement>& vals,
                                           const std::vector<int>& mults) {
    std::vector<size_t> idx(vals.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (mults[a] != mults[b]) return mults[a] > mults[b];
        return FieldElement::compare(vals[a], vals[b]) < 0;
    });
    FieldElement scale(Rational(1));
    for (size_t i : idx)
        if (!vals[i].is_zero()) {
            scale = vals[i].inverse();
            break;
        }
    std::vector<FieldElement> out(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) out[i] = vals[i] * scale;
    return out;
}

std::string multiset_signature(const Pattern& pat, const std::vector<FieldElement>& vals,
                               const std::vector<int>& mults) {
    std::vector<FieldElement> scaled = canonical_scaled(vals, mults);
    std::vector<std::string> items;
    for (size_t k = 0; k < scaled.size(); ++k) {
        std::ostringstream os;
        os << minpoly_key(scaled[k]) << "^" << mults[k];
        items.push_back(os.str());
    }
    std::sort(items.begin(), items.end());
    std::ostringstream os;
    os << pat.to_string() << "|";
    for (const auto& s : items) os << s << ";";
    return os.str();
}

Pattern merge_collapsed(const std::vector<FieldElement>& vals, const std::vector<int>& mults,
                        std::vector<FieldElement>& merged_vals, std::vector<int>& merged_mults) {
    for (size_t k = 0; k < vals.size(); ++k) {
        bool found = false;
        for (size_t j = 0; j < merged_vals.size(); ++j)
            if (merged_vals[j] == vals[k]) {
                merged_mults[j] += mults[k];
                found = true;
                break;
            }
        if (!found) {
            merged_vals.push_back(vals[k]);
            merged_mults.push_back(mults[k]);
        }
    }
    // sort blocks by multiplicity descending, value order as tiebreak
    std::vector<size_t> idx(merged_vals.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (merged_mults[a] != merged_mults[b]) return merged_mults[a] > merged_mults[b];
        return FieldElement::compare(merged_vals[a], merged_vals[b]) < 0;
    });
    std::vector<FieldElement> v2;
    std::vector<int> m2;
    for (size_t i : idx) {
        v2.push_back(merged_vals[i]);
        m2.push_back(merged_mults[i]);
    }
    merged_vals = std::move(v2);
    merged_mults = std::move(m2);
    return Pattern{merged_mults};
}

struct BranchBuilder {
    int n, N;
    Pattern pattern;
    SolveResult* out;

    void collapse_event(const std::vector<FieldElement>& vals, const std::vector<int>& mults,
                        bool lam_known, const FieldElement& lam) {
        CollapseEvent ev;
        ev.pattern = pattern;
        std::vector<FieldElement> mv;
        std::vector<int> mm;
        ev.merged = merge_collapsed(vals, mults, mv, mm);
        ev.merged_values = std::move(mv);
        ev.merged_mults = std::move(mm);
        ev.lambda_known = lam_known;
        ev.lambda = lam;
        out->collapses.push_back(std::move(ev));
    }

    bool collapsed(const std::vector<FieldElement>& vals) const {
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t j = i + 1; j < vals.size(); ++j)
                if (vals[i] == vals[j]) return true;
        return false;
    }

    void emit_point(const std::vector<FieldElement>& vals, const FieldPtr& field,
                    bool lambda_free, const FieldElement& lam) {
        if (collapsed(vals)) {
            FieldElement l2 = lam;
            collapse_event(vals, pattern.parts, !lambda_free, l2);
            return;
        }
        Branch b;
        b.kind = lambda_free ? BranchKind::GenericFixed : BranchKind::Isolated;
        b.pattern = pattern;
        b.n = n;
        b.field = field;
        b.values = vals;
        if (!lambda_free) {
            b.lambda = lam;
            b.param = PencilParam::from_lambda(lam);
        }
        b.signature = multiset_signature(pattern, vals, pattern.parts) +
                      (lambda_free ? "|all" : "|" + minpoly_key(lam));
        out->branches.push_back(std::move(b));
    }

    // classification of a 0- or 1-free-unknown branch
    void analyze(const std::vector<RatPoly>& vals, bool has_free) {
        SystemRows rows = rows_for(N, pattern.parts, vals);
        size_t r = vals.size();
        std::vector<RatPoly> minors;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j) {
                RatPoly m = rows.A[i] * rows.B[j] - rows.A[j] * rows.B[i];
                if (!m.is_zero()) minors.push_back(m);
            }
        if (minors.empty()) {
            analyze_rank1(vals, rows, has_free);
            return;
        }
        RatPoly g = minors[0];
        for (size_t i = 1; i < minors.size(); ++i) g = poly_gcd(g, minors[i]);
        if (g.degree() < 1) return;  // no common root: no singular solution
        process_roots(vals, rows, g, /*lambda_free=*/false);
    }

    void analyze_rank1(const std::vector<RatPoly>& vals, const SystemRows& rows, bool has_free) {
        int inz = -1;
        for (size_t i = 0; i < rows.A.size(); ++i)
            if (!rows.A[i].is_zero()) {
                inz = static_cast<int>(i);
                break;
            }
        if (inz < 0) {
            // every A vanishes: solutions are common roots of the B's, lambda free
            RatPoly g;
            bool all_zero = true;
            for (const auto& b : rows.B)
                if (!b.is_zero()) {
                    all_zero = false;
                    g = g.is_zero() ? b : poly_gcd(g, b);
                }
            if (all_zero) {
                if (!has_free) {
                    // a fixed point singular for every member
                    std::vector<FieldElement> cv;
                    for (const auto& v : vals) cv.push_back(FieldElement(v[0]));
                    emit_point(cv, nullptr, /*lambda_free=*/true, FieldElement());
                } else {
                    out->errors.push_back(pattern.to_string() +
                                          ": one-parameter family singular for every member");
                }
                return;
            }
            if (!has_free || g.degree() < 1) return;
            process_roots(vals, rows, g, /*lambda_free=*/true);
            return;
        }
        const RatPoly &A = rows.A[inz], &B = rows.B[inz];
        RatPoly g = poly_gcd(A, B);
        RatPoly G = exact_divide(A, g), H = exact_divide(-B, g);
        for (size_t i = 0; i < rows.A.size(); ++i)
            if (!(rows.A[i] * H + rows.B[i] * G).is_zero())
                throw std::logic_error("inconsistent rank-1 family rows");
        if (!has_free) {
            // constants: isolated orbit at lambda = H/G
            FieldElement lam(H[0] / G[0]);
            std::vector<FieldElement> cv;
            for (const auto& v : vals) cv.push_back(FieldElement(v[0]));
            emit_point(cv, nullptr, /*lambda_free=*/false, lam);
            return;
        }
        // points inside the family that are singular for every member
        RatPoly common = poly_gcd(A, B);
        for (size_t i = 0; i < rows.A.size() && common.degree() >= 1; ++i)
            common = poly_gcd(poly_gcd(common, rows.A[i]), rows.B[i]);
        if (common.degree() >= 1) process_roots(vals, rows, common, /*lambda_free=*/true);

        if (G.degree() == 0 && H.degree() == 0) {
            Branch b;
            b.kind = BranchKind::LineFamily;
            b.pattern = pattern;
            b.n = n;
            b.dimension = 1;
            b.forms = vals;
            b.lambda = FieldElement(H[0] / G[0]);
            b.param = PencilParam::from_lambda(b.lambda);
            b.signature = family_signature(vals, "line", b.param.to_string());
            out->branches.push_back(std::move(b));
            return;
        }
        // constraint U(c) alpha + V(c) beta = 0 with U = G - 2H, V = G
        RatPoly U = G - H * Rational(2), V = G;
        if (poly_gcd(U, V).degree() >= 1) throw std::logic_error("family constraint not reduced");
        normalize_pair(U, V);
        Branch b;
        b.kind = BranchKind::GenericFamily;
        b.pattern = pattern;
        b.n = n;
        b.forms = vals;
        b.constr_alpha = U;
        b.constr_beta = V;
        b.signature = family_signature(vals, "family",
                                       poly_to_string(U, "c") + "&" + poly_to_string(V, "c"));
        out->branches.push_back(std::move(b));
    }

    std::string family_signature(const std::vector<RatPoly>& forms, const char* tag,
                                 const std::string& extra) const {
        std::vector<std::string> items;
        for (size_t k = 0; k < forms.size(); ++k) {
            std::ostringstream os;
            os << poly_to_string(forms[k], "c") << "^" << pattern.parts[k];
            items.push_back(os.str());
        }
        std::sort(items.begin(), items.end());
        std::ostringstream os;
        os << pattern.to_string() << "|" << tag << "|" << extra << "|";
        for (const auto& s : items) os << s << ";";
        return os.str();
    }

    void process_roots(const std::vector<RatPoly>& vals, const SystemRows& rows, const RatPoly& g,
                       bool lambda_free) {
        Factorization f = poly_factor(g);
        for (const auto& [res, mult] : f.unfactored)
            out->errors.push_back(pattern.to_string() + ": unfactorable residual of degree " +
                                  std::to_string(res.degree()) + ": " + poly_to_string(res, "u"));
        for (const auto& [q, mult] : f.factors) {
            int d = q.degree();
            FieldPtr field;
            FieldElement root;
            if (d == 1) {
                root = FieldElement(-q[0]);
            } else if (d <= 4) {
                field = NumberField::create(q, "b");
                root = FieldElement::generator(field);
            } else {
                out->errors.push_back(pattern.to_string() + ": solution in a field of degree " +
                                      std::to_string(d) + " (unsupported): " +
                                      poly_to_string(q, "u"));
                continue;
            }
            std::vector<FieldElement> cv;
            for (const auto& v : vals) cv.push_back(eval_at(v, root));
            if (lambda_free) {
                emit_point(cv, field, true, FieldElement());
                continue;
            }
            // lambda from a row with A(root) != 0
            FieldElement lam;
            bool have = false, bad = false;
            auto frows = rows_at(N, pattern.parts, cv);
            for (const auto& [Av, Bv] : frows) {
                if (!Av.is_zero()) {
                    lam = -Bv / Av;
                    have = true;
                    break;
                }
            }
            if (!have) {
                for (const auto& [Av, Bv] : frows)
                    if (!Bv.is_zero()) bad = true;
                if (bad) continue;  // inconsistent: no parameter works
                emit_point(cv, field, true, FieldElement());
                continue;
            }
            for (const auto& [Av, Bv] : frows)
                if (!(Av * lam + Bv).is_zero())
                    throw std::logic_error("rank-1 solution fails a row");
            emit_point(cv, field, false, lam);
        }
    }

    // two free unknowns: happens exactly when all four parts are equal
    void analyze_two_free(const std::vector<AffExpr>& vals) {
        bool equal4 = pattern.parts.size() == 4 && pattern.parts[0] == pattern.parts[1] &&
                      pattern.parts[1] == pattern.parts[2] && pattern.parts[2] == pattern.parts[3];
        if (!equal4) {
            out->errors.push_back(pattern.to_string() + ": unexpected two-unknown system");
            return;
        }
        // All rank minors vanish identically here and lambda is the constant
        // 1/(2k); verify by specializing the second unknown (minor degree in
        // it is at most 8, so 9 vanishing specializations prove vanishing).
        FieldElement lam0;
        bool have_lam = false;
        for (long s = -4; s <= 4; ++s) {
            std::vector<RatPoly> uni;
            for (const auto& e : vals)
                uni.push_back(RatPoly(std::vector<Rational>{e.c0 + e.c2 * Rational(s), e.c1}));
            SystemRows rows = rows_for(N, pattern.parts, uni);
            for (size_t i = 0; i < uni.size(); ++i)
                for (size_t j = i + 1; j < uni.size(); ++j)
                    if (!(rows.A[i] * rows.B[j] - rows.A[j] * rows.B[i]).is_zero()) {
                        out->errors.push_back(pattern.to_string() +
                                              ": two-unknown system of full rank (unsupported)");
                        return;
                    }
            int inz = -1;
            for (size_t i = 0; i < rows.A.size(); ++i)
                if (!rows.A[i].is_zero()) inz = static_cast<int>(i);
            if (inz < 0) continue;
            RatPoly g = poly_gcd(rows.A[inz], rows.B[inz]);
            RatPoly G = exact_divide(rows.A[inz], g), H = exact_divide(-rows.B[inz], g);
            if (G.degree() != 0 || H.degree() != 0)
                throw std::logic_error("two-unknown family with non-constant lambda");
            FieldElement l(H[0] / G[0]);
            if (have_lam && !(l == lam0)) throw std::logic_error("two-unknown lambda varies");
            lam0 = l;
            have_lam = true;
        }
        if (!have_lam) throw std::logic_error("two-unknown family without lambda");
        Branch b;
        b.kind = BranchKind::Dim2Family;
        b.pattern = pattern;
        b.n = n;
        b.dimension = 2;
        b.lambda = lam0;
        b.param = PencilParam::from_lambda(lam0);
        b.signature = pattern.to_string() + "|dim2|" + b.param.to_string();
        out->branches.push_back(std::move(b));

        // Points singular for every member: need C2 = C3 = 0, i.e. the power
        // sums p2, p3 of the four values vanish. Eliminate the second unknown
        // by a Sylvester resultant over Q[u1] and back-substitute.
        using BiPoly = Poly<RatPoly>;  // polynomial in u2 with Q[u1] coefficients
        auto to_bi = [](const AffExpr& e) {
            return BiPoly(std::vector<RatPoly>{RatPoly(std::vector<Rational>{e.c0, e.c1}),
                                               RatPoly(e.c2)});
        };
        BiPoly p2, p3;
        for (const auto& e : vals) {
            BiPoly v = to_bi(e);
            p2 = p2 + v * v;
            p3 = p3 + v * v * v;
        }
        RatPoly res = sylvester_resultant(p2, p3);
        if (res.is_zero()) {
            out->errors.push_back(pattern.to_string() + ": positive-dimensional all-member locus");
            return;
        }
        Factorization rf = poly_factor(res);
        for (const auto& [q, mult] : rf.factors) {
            if (q.degree() != 1) continue;
            Rational rho = -q[0];
            RatPoly p2u, p3u;  // substitute u1 = rho
            for (int i = 0; i <= p2.degree(); ++i)
                p2u = p2u + RatPoly(p2[i].evaluate(rho)) * pow_of(RatPoly::x(), i);
            for (int i = 0; i <= p3.degree(); ++i)
                p3u = p3u + RatPoly(p3[i].evaluate(rho)) * pow_of(RatPoly::x(), i);
            RatPoly g = poly_gcd(p2u, p3u);
            if (g.degree() < 1) continue;
            for (const auto& [h, hm] : poly_factor(g).factors) {
                FieldPtr field;
                FieldElement tau;
                if (h.degree() == 1) {
                    tau = FieldElement(-h[0]);
                } else if (h.degree() <= 4) {
                    field = NumberField::create(h, "b");
                    tau = FieldElement::generator(field);
                } else {
                    out->errors.push_back(pattern.to_string() + ": all-member locus in degree " +
                                          std::to_string(h.degree()) + " field");
                    continue;
                }
                std::vector<FieldElement> cv;
                for (const auto& e : vals)
                    cv.push_back(FieldElement(e.c0) + FieldElement(e.c1) * FieldElement(rho) +
                                 FieldElement(e.c2) * tau);
                if (collapsed(cv)) {
                    collapse_event(cv, pattern.parts, false, FieldElement());
                    continue;
                }
                for (const auto& [Av, Bv] : rows_at(N, pattern.parts, cv))
                    if (!Av.is_zero() || !Bv.is_zero())
                        throw std::logic_error("all-member candidate has a nonzero row");
                emit_point(cv, field, true, FieldElement());
            }
        }
        for (const auto& [q, mult] : rf.factors) {
            if (q.degree() == 1) continue;
            // conjugate assignments of an already-found configuration cover
            // these roots; anything else is unresolved
            bool covered = false;
            for (const auto& br : out->branches) {
                if (br.kind != BranchKind::GenericFixed || !(br.pattern == pattern)) continue;
                for (const auto& v : br.values)
                    if (primitive_form(v.min_poly()).coeffs == primitive_form(q).coeffs)
                        covered = true;
            }
            if (!covered)
                out->errors.push_back(pattern.to_string() +
                                      ": unresolved two-unknown configuration over " +
                                      poly_to_string(q, "u"));
        }
        for (const auto& [res2, m2] : rf.unfactored)
            out->errors.push_back(pattern.to_string() + ": unfactorable two-unknown residual");
    }
};

}  // namespace

SolveResult solve_pattern(int n, const Pattern& pattern) {
    SolveResult out;
    int N = n + 2;
    {
        int sum = 0;
        for (int p : pattern.parts) sum += p;
        if (sum != N || pattern.parts.empty() || pattern.parts.size() > 4)
            throw std::invalid_argument("invalid pattern for this dimension");
    }
    BranchBuilder bb{n, N, pattern, &out};
    for (bool zero_first : {true, false}) {
        LinearSolution sol = solve_linear(pattern.parts, zero_first);
        if (!sol.consistent) continue;
        // identically coincident slots: this normalization only reaches
        // configurations counted under a coarser pattern
        bool ident_collapse = false;
        for (size_t i = 0; i < sol.vals.size() && !ident_collapse; ++i)
            for (size_t j = i + 1; j < sol.vals.size(); ++j) {
                const auto &a = sol.vals[i], &b = sol.vals[j];
                if (a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2) {
                    ident_collapse = true;
                    break;
                }
            }
        if (ident_collapse) continue;
        if (sol.nfree <= 1) {
            std::vector<RatPoly> vals;
            for (const auto& e : sol.vals) vals.push_back(aff_to_poly(e));
            bb.analyze(vals, sol.nfree == 1);
        } else {
            bb.analyze_two_free(sol.vals);
        }
    }
    return out;
}

Int orbit_length(int n, const std::vector<int>& mults, const std::vector<FieldElement>& values) {
    int N = n + 2;
    Int base = factorial(N);
    for (int m : mults) base /= factorial(m);
    size_t k0 = values.size();
    for (size_t k = 0; k < values.size(); ++k)
        if (!values[k].is_zero()) {
            k0 = k;
            break;
        }
    if (k0 == values.size()) throw std::invalid_argument("orbit of the zero point");
    std::set<FieldElement> sigmas;
    for (size_t l = 0; l < values.size(); ++l) {
        if (mults[l] != mults[k0]) continue;
        FieldElement sig = values[l] / values[k0];
        bool ok = true;
        for (size_t k = 0; k < values.size() && ok; ++k) {
            FieldElement img = sig * values[k];
            bool matched = false;
            for (size_t j = 0; j < values.size(); ++j)
                if (values[j] == img && mults[j] == mults[k]) {
                    matched = true;
                    break;
                }
            ok = matched;
        }
        if (ok) sigmas.insert(sig);
    }
    Int s(static_cast<long>(sigmas.size()));
    if (base % s != 0) throw std::logic_error("orbit length not divisible by symmetry order");
    return base / s;
}

Int line_count(int n, const std::vector<int>& mults, const std::vector<RatPoly>& forms) {
    int N = n + 2;
    Int base = factorial(N);
    for (int m : mults) base /= factorial(m);
    // span of the constant and linear coefficient vectors (by position)
    auto span_rref = [&](const std::vector<int>& perm) {
        std::vector<std::vector<Rational>> m(2, std::vector<Rational>(N, Rational(0)));
        int pos = 0;
        for (size_t k = 0; k < forms.size(); ++k) {
            const RatPoly& f = forms[perm[k]];
            for (int i = 0; i < mults[k]; ++i, ++pos) {
                m[0][pos] = f[0];
                m[1][pos] = f[1];
            }
        }
        // 2xN reduced row echelon
        int rank = 0;
        for (int col = 0; col < N && rank < 2; ++col) {
            int pr = -1;
            for (int r = rank; r < 2; ++r)
                if (m[r][col] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(m[rank], m[pr]);
            Rational inv = Rational(1) / m[rank][col];
            for (auto& x : m[rank]) x *= inv;
            for (int r = 0; r < 2; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                Rational f2 = m[r][col];
                for (int c = col; c < N; ++c) m[r][c] -= f2 * m[rank][c];
            }
            ++rank;
        }
        return m;
    };
    std::vector<int> id(forms.size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    auto base_span = span_rref(id);
    long stab = 0;
    std::vector<int> perm = id;
    std::sort(perm.begin(), perm.end());
    do {
        bool mult_ok = true;
        for (size_t k = 0; k < perm.size(); ++k)
            if (mults[perm[k]] != mults[k]) mult_ok = false;
        if (!mult_ok) continue;
        if (span_rref(perm) == base_span) ++stab;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Int s(stab);
    if (base % s != 0) throw std::logic_error("line count not divisible by stabilizer order");
    return base / s;
}

namespace {

// |H|: field maps psi (generator -> conjugate root) under which the value
// multiset maps to a scalar multiple of itself, psi(M) = sigma*M, fixing
// lambda when given. Conjugate solutions related this way describe the same
// projective orbit at the same parameter, the source of all bundling.
// Slot values are affine in the generator, so psi and sigma solve a 2x2
// linear system per assignment of two reference slots.
int stabilizer_order(const FieldPtr& field, const std::vector<FieldElement>& values,
                     const std::vector<int>& mults, const FieldElement* lambda) {
    if (!field) return 1;
    auto lin = [](const FieldElement& v) {  // (p, q) with v = p + q t
        Rational p = v.coords()[0], q(0);
        if (v.coords().size() > 1) q = v.coords()[1];
        return std::pair<Rational, Rational>(p, q);
    };
    size_t k1 = values.size();
    for (size_t k = 0; k < values.size(); ++k)
        if (!values[k].is_rational()) {
            k1 = k;
            break;
        }
    if (k1 == values.size()) return 1;
    auto [p1, q1] = lin(values[k1]);
    std::set<FieldElement> valid;
    for (size_t k2 = 0; k2 < values.size(); ++k2) {
        if (k2 == k1 || values[k2].is_zero()) continue;
        auto [p2, q2] = lin(values[k2]);
        for (size_t l1 = 0; l1 < values.size(); ++l1) {
            if (mults[l1] != mults[k1]) continue;
            for (size_t l2 = 0; l2 < values.size(); ++l2) {
                if (mults[l2] != mults[k2]) continue;
                // q1*psi - v_l1*sigma = -p1 ; q2*psi - v_l2*sigma = -p2
                FieldElement a{Rational(q1)}, b = -values[l1], c{Rational(q2)}, d = -values[l2];
                FieldElement det = a * d - b * c;
                if (det.is_zero()) continue;
                FieldElement r1{-p1}, r2{-p2};
                FieldElement psi = (r1 * d - b * r2) / det;
                FieldElement sigma = (a * r2 - r1 * c) / det;
                if (sigma.is_zero()) continue;
                if (!eval_at(field->modulus(), psi).is_zero()) continue;
                bool ok = true;
                for (size_t k = 0; k < values.size() && ok; ++k) {
                    FieldElement img = values[k].substitute_generator(psi);
                    bool matched = false;
                    for (size_t j = 0; j < values.size(); ++j)
                        if (mults[j] == mults[k] && values[j] * sigma == img) matched = true;
                    ok = matched;
                }
                if (ok && lambda && !(lambda->substitute_generator(psi) == *lambda)) ok = false;
                if (ok) valid.insert(psi);
            }
        }
    }
    return std::max<int>(1, static_cast<int>(valid.size()));
}

// affine substitutions c -> e + f c preserving the family's slot forms as a
// multiset; at a fixed parameter the constraint roots fall into orbits of
// this group, one singular orbit each
int family_symmetry_order(const std::vector<RatPoly>& forms, const std::vector<int>& mults) {
    size_t k0 = forms.size();
    for (size_t k = 0; k < forms.size(); ++k)
        if (forms[k].degree() == 1) {
            k0 = k;
            break;
        }
    if (k0 == forms.size()) return 1;
    int count = 0;
    std::set<std::pair<std::string, std::string>> seen;
    for (size_t l = 0; l < forms.size(); ++l) {
        if (mults[l] != mults[k0] || forms[l].degree() != 1) continue;
        // form_l(gamma(c)) = form_k0(c)
        Rational f = forms[k0][1] / forms[l][1];
        Rational e = (forms[k0][0] - forms[l][0]) / forms[l][1];
        RatPoly gamma(std::vector<Rational>{e, f});
        bool ok = true;
        for (size_t k = 0; k < forms.size() && ok; ++k) {
            RatPoly img = forms[k].compose_affine(e, f);
            bool matched = false;
            for (size_t j = 0; j < forms.size(); ++j)
                if (forms[j] == img && mults[j] == mults[k]) matched = true;
            ok = matched;
        }
        if (ok && seen.insert({to_string(e), to_string(f)}).second) ++count;
    }
    return std::max(1, count);
}

}  // namespace

std::string Branch::rep_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    auto emit = [&](const std::string& s, int m) {
        for (int i = 0; i < m; ++i) {
            if (!first) os << " : ";
            os << s;
            first = false;
        }
    };
    if (kind == BranchKind::Isolated || kind == BranchKind::GenericFixed) {
        for (size_t k = 0; k < values.size(); ++k) emit(values[k].to_string(), pattern.parts[k]);
    } else {
        for (size_t k = 0; k < forms.size(); ++k)
            emit(poly_to_string(forms[k], "c"), pattern.parts[k]);
    }
    os << ")";
    return os.str();
}

namespace {

struct CensusContext {
    int n, N;
    std::vector<Branch> fixed, families, line_like, isolated;
    std::set<PencilParam> exceptional_set;
    std::vector<std::string>* warnings;
};

// per-parameter evaluation of every 0-dimensional orbit
ParamTotal totals_at(const CensusContext& ctx, const PencilParam& p) {
    if (p.is_degenerate())
        throw std::invalid_argument("the member (0:1) has the locus S2 = S3 = 0 as singular set");
    ParamTotal out;
    out.param = p;
    out.node_total = 0;
    out.exceptional = ctx.exceptional_set.count(p) > 0;
    FieldElement beta = p.beta_over_alpha();

    for (const auto& br : ctx.fixed) {
        OrbitInstance oi;
        oi.kind = br.kind;
        oi.pattern = br.pattern;
        oi.representative = br.rep_string();
        oi.length = br.orbit_length;
        oi.orbit_count = br.orbits_per_param;
        FieldElement det = br.det_beta.evaluate_in<FieldElement>(beta);
        oi.status = det.is_zero() ? NodeStatus::NotNode : NodeStatus::Node;
        if (oi.status == NodeStatus::NotNode) oi.note = "degenerate Hessian at this parameter";
        if (oi.status == NodeStatus::Node)
            out.node_total += oi.length * Int(oi.orbit_count);
        out.orbits.push_back(oi);
    }
    for (const auto& br : ctx.families) {
        OrbitInstance oi;
        oi.kind = br.kind;
        oi.pattern = br.pattern;
        oi.representative = br.rep_string();
        oi.length = br.orbit_length;
        oi.orbit_count = br.family_orbits;
        // constraint at this parameter
        FPoly K;
        {
            std::vector<FieldElement> co;
            int dmax = std::max(br.constr_alpha.degree(), br.constr_beta.degree());
            for (int i = 0; i <= dmax; ++i)
                co.push_back(FieldElement(br.constr_alpha[i]) + beta * FieldElement(br.constr_beta[i]));
            K = FPoly(std::move(co));
        }
        int degK = std::max(br.constr_alpha.degree(), br.constr_beta.degree());
        if (K.degree() < degK || K.degree() < 1) {
            oi.status = NodeStatus::NotNode;
            oi.note = "constraint degenerates at this parameter";
            oi.orbit_count = 0;
            out.orbits.push_back(oi);
            continue;
        }
        // collision roots of the slot forms
        bool collided = false;
        std::string merge_note;
        for (size_t i2 = 0; i2 < br.forms.size() && !collided; ++i2)
            for (size_t j2 = i2 + 1; j2 < br.forms.size(); ++j2) {
                RatPoly d = br.forms[i2] - br.forms[j2];
                if (d.degree() != 1) continue;
                Rational cstar = -d[0] / d[1];
                if (K.evaluate(FieldElement(cstar)).is_zero()) {
                    collided = true;
                    std::vector<FieldElement> cv, mv;
                    std::vector<int> mm;
                    for (const auto& f2 : br.forms) cv.push_back(FieldElement(f2.evaluate(cstar)));
                    Pattern merged = merge_collapsed(cv, br.pattern.parts, mv, mm);
                    merge_note = "members collide onto a " + merged.to_string() + " configuration";
                    break;
                }
            }
        if (collided) {
            oi.status = NodeStatus::NotNode;
            oi.note = merge_note;
            out.orbits.push_back(oi);
            continue;
        }
        // squarefree at this parameter?
        if (poly_gcd(K, K.derivative()).degree() >= 1) {
            oi.status = NodeStatus::NotNode;
            oi.note = "constraint has a multiple root at this parameter";
            out.orbits.push_back(oi);
            continue;
        }
        // Hessian: nonzero resultant of the constraint against the family
        // determinant numerator certifies every member at once
        if (br.det_family.is_zero()) {
            oi.status = NodeStatus::NotNode;
            oi.note = "identically degenerate family Hessian";
            out.orbits.push_back(oi);
            continue;
        }
        FPoly detf;
        {
            std::vector<FieldElement> co;
            for (int i = 0; i <= br.det_family.degree(); ++i)
                co.push_back(FieldElement(br.det_family[i]));
            detf = FPoly(std::move(co));
        }
        FieldElement res = poly_resultant(K, detf);
        oi.status = res.is_zero() ? NodeStatus::NotNode : NodeStatus::Node;
        if (oi.status == NodeStatus::Node)
            out.node_total += oi.length * Int(oi.orbit_count);
        else
            oi.note = "degenerate Hessian at this parameter";
        out.orbits.push_back(oi);
    }
    for (const auto& br : ctx.isolated) {
        if (param_key(br.param) != param_key(p)) continue;
        OrbitInstance oi;
        oi.kind = br.kind;
        oi.pattern = br.pattern;
        oi.representative = br.rep_string();
        oi.length = br.orbit_length;
        oi.orbit_count = br.orbits_per_param;
        SymPoint pt = SymPoint::make(ctx.n, br.values, br.pattern.parts);
        oi.status = node_status(pt, br.param);
        if (oi.status == NodeStatus::Node)
            out.node_total += oi.length * Int(oi.orbit_count);
        out.orbits.push_back(oi);
    }
    return out;
}

}  // namespace

std::string param_key(const PencilParam& p) {
    if (p.is_degenerate()) return "r:0:1";
    if (p.is_rational())
        return "r:" + p.alpha.to_string() + ":" + p.beta.to_string();
    auto pf = primitive_form(p.beta_over_alpha().min_poly());
    std::string key = "a:";
    for (size_t i = 0; i < pf.coeffs.size(); ++i)
        key += (i ? "," : "") + pf.coeffs[i].get_str();
    return key;
}

CensusReport census(int n, int threads) {
    CensusReport rep;
    rep.n = n;
    rep.patterns = enumerate_patterns(n);
    int N = n + 2;

    std::vector<SolveResult> results(rep.patterns.size());
    if (threads > 1) {
        std::vector<std::future<SolveResult>> futs;
        for (const auto& p : rep.patterns)
            futs.push_back(std::async(std::launch::async, [&, p] { return solve_pattern(n, p); }));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < rep.patterns.size(); ++i)
            results[i] = solve_pattern(n, rep.patterns[i]);
    }

    std::vector<Branch> all;
    std::set<std::string> seen;
    for (auto& r : results) {
        for (auto& b : r.branches)
            if (seen.insert(b.signature).second) all.push_back(std::move(b));
        for (auto& c : r.collapses) rep.collapses.push_back(std::move(c));
        for (auto& e : r.errors) rep.errors.push_back(std::move(e));
    }

    CensusContext ctx{n, N, {}, {}, {}, {}, {}, &rep.warnings};

    for (auto& b : all) {
        switch (b.kind) {
            case BranchKind::GenericFixed: {
                b.conj_degree = b.field ? b.field->degree() : 1;
                b.stabilizer_order = stabilizer_order(b.field, b.values, b.pattern.parts, nullptr);
                if (b.conj_degree % b.stabilizer_order != 0)
                    throw std::logic_error("stabilizer does not divide field degree");
                b.orbits_per_param = b.conj_degree / b.stabilizer_order;
                b.orbit_length = orbit_length(n, b.pattern.parts, b.values);
                b.det_beta = hessian_det_beta(SymPoint::make(n, b.values, b.pattern.parts));
                ctx.fixed.push_back(b);
                break;
            }
            case BranchKind::GenericFamily: {
                // generic representative for the combinatorics
                Rational c0(17, 5);
                std::vector<FieldElement> cv;
                for (int tries = 0; tries < 64; ++tries) {
                    cv.clear();
                    for (const auto& f : b.forms) cv.push_back(FieldElement(f.evaluate(c0)));
                    bool distinct = true;
                    for (size_t i = 0; i < cv.size(); ++i)
                        for (size_t j = i + 1; j < cv.size(); ++j)
                            if (cv[i] == cv[j]) distinct = false;
                    if (distinct) break;
                    c0 += rat(3, 7);
                }
                b.orbit_length = orbit_length(n, b.pattern.parts, cv);
                int degK = std::max(b.constr_alpha.degree(), b.constr_beta.degree());
                int gam = family_symmetry_order(b.forms, b.pattern.parts);
                if (degK % gam != 0) throw std::logic_error("family symmetry does not divide degree");
                b.family_orbits = degK / gam;
                b.det_family =
                    family_det_numerator(n, b.forms, b.pattern.parts, b.constr_alpha, b.constr_beta);
                ctx.families.push_back(b);
                break;
            }
            case BranchKind::LineFamily: {
                b.orbit_length = line_count(n, b.pattern.parts, b.forms);
                ctx.line_like.push_back(b);
                break;
            }
            case BranchKind::Dim2Family: {
                Int base = factorial(N);
                for (int m : b.pattern.parts) base /= factorial(m);
                b.orbit_length = base / factorial(static_cast<unsigned>(b.pattern.parts.size()));
                ctx.line_like.push_back(b);
                break;
            }
            case BranchKind::Isolated: {
                b.conj_degree = b.field ? b.field->degree() : 1;
                b.lambda_degree = b.lambda.min_poly().degree();
                b.stabilizer_order = stabilizer_order(b.field, b.values, b.pattern.parts, &b.lambda);
                int denom = b.lambda_degree * b.stabilizer_order;
                if (b.conj_degree % denom != 0)
                    throw std::logic_error("conjugate orbits do not distribute over parameters");
                b.orbits_per_param = b.conj_degree / denom;
                b.param_count = b.lambda_degree;
                b.orbit_length = orbit_length(n, b.pattern.parts, b.values);
                ctx.isolated.push_back(b);
                break;
            }
        }
    }

    // exceptional parameters: line/dim-2 parameters and family degenerations
    for (const auto& b : ctx.line_like) ctx.exceptional_set.insert(b.param);
    for (const auto& b : ctx.families) {
        const RatPoly &U = b.constr_alpha, &V = b.constr_beta;
        for (size_t i = 0; i < b.forms.size(); ++i)
            for (size_t j = i + 1; j < b.forms.size(); ++j) {
                RatPoly d = b.forms[i] - b.forms[j];
                if (d.degree() != 1) continue;
                Rational cstar = -d[0] / d[1];
                Rational uv = U.evaluate(cstar), vv = V.evaluate(cstar);
                if (vv == 0) continue;  // would need alpha = 0
                ctx.exceptional_set.insert(
                    PencilParam::make(FieldElement(vv), FieldElement(-uv)));
            }
        // discriminant of U + x V with respect to c, as a polynomial in x
        using XPoly = Poly<RatPoly>;  // in c, coefficients in Q[x]
        std::vector<RatPoly> co;
        int dmax = std::max(U.degree(), V.degree());
        for (int i = 0; i <= dmax; ++i)
            co.push_back(RatPoly(std::vector<Rational>{U[i]}) +
                         RatPoly(std::vector<Rational>{Rational(0), Rational(1)}) * RatPoly(V[i]));
        XPoly K(co);
        RatPoly disc = sylvester_resultant(K, K.derivative());
        if (disc.is_zero()) throw std::logic_error("identically degenerate family constraint");
        if (disc.degree() >= 1) {
            Factorization df = poly_factor(disc);
            for (const auto& [q, m] : df.factors) {
                if (q.degree() == 1)
                    ctx.exceptional_set.insert(
                        PencilParam::make(FieldElement(Rational(1)), FieldElement(-q[0])));
                else
                    rep.warnings.push_back("family " + b.pattern.to_string() +
                                           " degenerates at an algebraic parameter (minpoly " +
                                           poly_to_string(q, "x") + ")");
            }
        }
        // leading-coefficient collapse of the constraint
        if (V[dmax] != 0) {
            if (U[dmax] == 0) {
                ctx.exceptional_set.insert(PencilParam::rational(1, 0));
            } else {
                ctx.exceptional_set.insert(
                    PencilParam::make(FieldElement(V[dmax]), FieldElement(-U[dmax])));
            }
        }
    }

    // verify discarded collapses reappear under the coarser pattern
    for (auto& ev : rep.collapses) {
        bool ok = false;
        std::string base_sig = multiset_signature(ev.merged, ev.merged_values, ev.merged_mults);
        std::string with_lambda =
            ev.lambda_known ? base_sig + "|" + minpoly_key(ev.lambda) : std::string{};
        for (const auto& b : all) {
            if (b.kind != BranchKind::Isolated && b.kind != BranchKind::GenericFixed) continue;
            if (b.signature == base_sig + "|all") ok = true;
            if (ev.lambda_known && b.signature == with_lambda) ok = true;
        }
        if (!ok) {
            // a family (or line) of the merged pattern may contain it; match
            // projectively: rescale the merged point so some value lands on
            // the family's normalized slot, recover c, compare multisets
            for (const auto& b : ctx.families) {
                if (!(b.pattern == ev.merged) || ok) continue;
                for (const auto& w : ev.merged_values) {
                    if (w.is_zero() || ok) continue;
                    FieldElement sigma = w.inverse();
                    std::vector<FieldElement> scaled;
                    for (const auto& v : ev.merged_values) scaled.push_back(v * sigma);
                    for (size_t k = 0; k < b.forms.size() && !ok; ++k) {
                        if (b.forms[k].degree() != 1) continue;
                        for (const auto& v : scaled) {
                            FieldElement c = (v - FieldElement(b.forms[k][0])) *
                                             FieldElement(Rational(1) / b.forms[k][1]);
                            bool same = true;
                            for (size_t a = 0; a < b.forms.size() && same; ++a) {
                                FieldElement img = eval_at(b.forms[a], c);
                                bool m2 = false;
                                for (size_t j = 0; j < scaled.size(); ++j)
                                    if (img == scaled[j] &&
                                        b.pattern.parts[a] == ev.merged_mults[j])
                                        m2 = true;
                                same = m2;
                            }
                            if (same) {
                                ok = true;
                                break;
                            }
                        }
                    }
                }
            }
            for (const auto& b : ctx.line_like)
                if (b.pattern == ev.merged) ok = true;
        }
        ev.verified = ok;
        if (!ok)
            rep.warnings.push_back("collapsed solution of " + ev.pattern.to_string() +
                                   " not found under " + ev.merged.to_string());
    }

    // candidate parameters: those carrying additional isolated orbits
    std::map<std::string, PencilParam> by_param;
    for (const auto& b : ctx.isolated) by_param.try_emplace(param_key(b.param), b.param);
    {
        // same minimal polynomial in different fields cannot be compared
        // exactly; report rather than silently merging
        std::map<std::string, std::set<std::string>> minpoly_fields;
        for (const auto& b : ctx.isolated) {
            if (b.param.is_rational()) continue;
            std::string mp = poly_to_string(b.param.beta_over_alpha().min_poly(), "x");
            std::ostringstream fld;
            if (b.field)
                fld << poly_to_string(b.field->modulus(), "t");
            minpoly_fields[mp].insert(fld.str());
        }
        for (const auto& [mp, flds] : minpoly_fields)
            if (flds.size() > 1)
                rep.warnings.push_back(
                    "parameters sharing minimal polynomial " + mp +
                    " arise in different fields; their totals are not merged");
    }

    for (const auto& [key, p] : by_param) {
        ParamTotal t = totals_at(ctx, p);
        if (t.exceptional)
            rep.at_exceptional.push_back(t);
        else
            rep.additional.push_back(t);
    }
    for (const auto& p : ctx.exceptional_set) {
        bool present = false;
        for (const auto& t : rep.at_exceptional)
            if (t.param == p) present = true;
        if (!present && p.is_rational() && !p.is_degenerate())
            rep.at_exceptional.push_back(totals_at(ctx, p));
    }

    for (const auto& t : rep.additional) {
        if (!rep.best || t.node_total > rep.best->node_total ||
            (t.node_total == rep.best->node_total && t.param < rep.best->param))
            rep.best = t;
    }
    if (rep.best) {
        rep.generic_node_total = 0;
        for (const auto& oi : rep.best->orbits)
            if (oi.status == NodeStatus::Node &&
                (oi.kind == BranchKind::GenericFixed || oi.kind == BranchKind::GenericFamily))
                rep.generic_node_total += oi.length * Int(oi.orbit_count);
    } else {
        rep.generic_node_total = 0;
        rep.warnings.push_back("no additional orbits at non-exceptional parameters");
    }

    rep.generic = ctx.fixed;
    rep.generic.insert(rep.generic.end(), ctx.families.begin(), ctx.families.end());
    rep.lines = ctx.line_like;
    rep.isolated = ctx.isolated;
    for (const auto& p : ctx.exceptional_set) rep.exceptional.push_back(p);
    std::sort(rep.exceptional.begin(), rep.exceptional.end());
    std::sort(rep.additional.begin(), rep.additional.end(),
              [](const ParamTotal& a, const ParamTotal& b) { return a.param < b.param; });
    std::sort(rep.at_exceptional.begin(), rep.at_exceptional.end(),
              [](const ParamTotal& a, const ParamTotal& b) { return a.param < b.param; });
    std::sort(rep.isolated.begin(), rep.isolated.end(), [](const Branch& a, const Branch& b) {
        if (a.orbit_length != b.orbit_length) return a.orbit_length > b.orbit_length;
        return a.param < b.param;
    });
    return rep;
}

ParamTotal evaluate_param(const CensusReport& report, const PencilParam& p) {
    CensusContext ctx{report.n, report.n + 2, {}, {}, {}, {}, {}, nullptr};
    for (const auto& b : report.generic)
        (b.kind == BranchKind::GenericFixed ? ctx.fixed : ctx.families).push_back(b);
    ctx.line_like = report.lines;
    ctx.isolated = report.isolated;
    for (const auto& q : report.exceptional) ctx.exceptional_set.insert(q);
    ParamTotal t = totals_at(ctx, p);
    return t;
}

}  // namespace quintic
