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

#include "quintic/hessian.hpp"

namespace quintic {
namespace {

// Second partials of F_(1:beta) = (1/5)C5 - ((1+beta)/6)C2C3 in ambient
// coordinates, split linearly in beta: F_ij = p + beta*q.
//   F_ii: p = 4x^3 - W/6, q = -W/6 with W = 2C3 + 12x^3 + 6xC2
//   F_ij: p = q = -x_i x_j (x_i + x_j)
// The chart Hessian entry is the chain-rule combination through the
// eliminated last coordinate:  f_ij = F_ij - F_iL - F_Lj + F_LL.
template <class T>
struct Ambient {
    std::vector<T> x;  // full homogeneous coordinate list
    T C2, C3;

    explicit Ambient(std::vector<T> coords) : x(std::move(coords)) {
        C2 = T{};
        C3 = T{};
        for (const T& v : x) {
            C2 = C2 + v * v;
            C3 = C3 + v * v * v;
        }
    }

    std::pair<T, T> F2(size_t i, size_t j) const {
        if (i == j) {
            T x3 = x[i] * x[i] * x[i];
            T W = scale(C3, 2, 6) + scale(x3, 12, 6) + scale(x[i] * C2, 6, 6);
            return {scale(x3, 4, 1) - W, -W};
        }
        T m = -(x[i] * x[j] * (x[i] + x[j]));
        return {m, m};
    }

    std::pair<T, T> chart_entry(size_t i, size_t j) const {
        size_t L = x.size() - 1;
        auto a = F2(i, j), b = F2(i, L), c = F2(L, j), d = F2(L, L);
        return {a.first - b.first - c.first + d.first,
                a.second - b.second - c.second + d.second};
    }

    static T scale(const T& v, long num, long den) { return v * T(Rational(rat(num, den))); }
};

// T(Rational) must construct; for RatPoly a constant poly, FieldElement lifts.

std::vector<FieldElement> full_coords(const ChartPoint& y) {
    std::vector<FieldElement> full;
    full.reserve(y.n + 2);
    full.push_back(FieldElement(Rational(1)));
    FieldElement h(Rational(1));
    for (const auto& c : y.coords) {
        full.push_back(c);
        h = h + c;
    }
    full.push_back(-h);
    return full;
}

}  // namespace

ChartPoint chart_reduce(const SymPoint& pt) {
    size_t k0 = pt.values.size();
    int pos = 0, chart = 0;
    for (size_t k = 0; k < pt.values.size(); ++k) {
        if (!pt.values[k].is_zero()) {
            k0 = k;
            chart = pos;
            break;
        }
        pos += pt.mults[k];
    }
    if (k0 == pt.values.size()) throw std::invalid_argument("projective point needs a nonzero value");
    FieldElement inv = pt.values[k0].inverse();
    std::vector<FieldElement> hom;
    for (size_t k = 0; k < pt.values.size(); ++k)
        for (int i = 0; i < pt.mults[k]; ++i) hom.push_back(pt.values[k] * inv);
    ChartPoint y;
    y.n = pt.n;
    y.chart_index = chart;
    hom.erase(hom.begin() + chart);
    hom.pop_back();
    y.coords = std::move(hom);
    return y;
}

HessianResult hessian_at(const ChartPoint& y, const FieldElement& beta) {
    Ambient<FieldElement> amb(full_coords(y));
    size_t n = y.coords.size();
    HessianResult out{ExactMatrix(n, n), FieldElement(), false};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto [p, q] = amb.chart_entry(i + 1, j + 1);
            out.matrix.at(i, j) = p + beta * q;
        }
    out.det = out.matrix.det();
    out.is_node = !out.det.is_zero();
    return out;
}

RatPoly hessian_det_beta(const SymPoint& pt) {
    ChartPoint y = chart_reduce(pt);
    Ambient<FieldElement> amb(full_coords(y));
    size_t n = y.coords.size();
    Matrix<FPoly> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto [p, q] = amb.chart_entry(i + 1, j + 1);
            m.at(i, j) = FPoly(std::vector<FieldElement>{p, q});
        }
    FPoly det = m.det();
    std::vector<Rational> co;
    for (int i = 0; i <= det.degree(); ++i) {
        if (!det[i].is_rational())
            throw std::logic_error("beta-symbolic Hessian determinant is not rational");
        co.push_back(det[i].rational_value());
    }
    return RatPoly(std::move(co));
}

RatPoly family_det_numerator(int n, const std::vector<RatPoly>& forms,
                             const std::vector<int>& mults, const RatPoly& U, const RatPoly& V) {
    // scale so the first constant nonzero slot becomes 1, then expand
    size_t k0 = forms.size();
    for (size_t k = 0; k < forms.size(); ++k)
        if (forms[k].degree() == 0) {
            k0 = k;
            break;
        }
    if (k0 == forms.size()) throw std::invalid_argument("family has no constant slot value");
    Rational inv = Rational(1) / forms[k0][0];
    std::vector<RatPoly> hom;
    for (size_t k = 0; k < forms.size(); ++k)
        for (int i = 0; i < mults[k]; ++i) hom.push_back(forms[k] * inv);
    // chart: drop the k0 block's first position (a constant 1) and the last
    size_t chart = 0;
    for (size_t k = 0; k < k0; ++k) chart += mults[k];
    hom.erase(hom.begin() + chart);
    hom.pop_back();
    std::vector<RatPoly> full;
    full.push_back(RatPoly(Rational(1)));
    RatPoly h(Rational(1));
    for (const auto& c : hom) {
        full.push_back(c);
        h = h + c;
    }
    full.push_back(-h);

    Ambient<RatPoly> amb(std::move(full));
    size_t sz = hom.size();
    Matrix<RatPoly> m(sz, sz);
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
            auto [p, q] = amb.chart_entry(i + 1, j + 1);
            m.at(i, j) = p * V - q * U;  // cleared beta = -U/V
        }
    return m.det();
}

NodeStatus node_status(const SymPoint& pt, const PencilParam& p) {
    if (p.alpha.is_zero()) return NodeStatus::Unverified;
    FieldElement beta = p.beta_over_alpha();
    try {
        HessianResult h = hessian_at(chart_reduce(pt), beta);
        return h.is_node ? NodeStatus::Node : NodeStatus::NotNode;
    } catch (const std::invalid_argument&) {
        return NodeStatus::Unverified;
    }
}

}  // namespace quintic
