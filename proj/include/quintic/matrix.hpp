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

#ifndef QUINTIC_MATRIX_HPP
#define QUINTIC_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "quintic/numberfield.hpp"
#include "quintic/polynomial.hpp"

namespace quintic {

// ring-appropriate exact division for the Bareiss update
inline Rational bareiss_div(const Rational& a, const Rational& b) { return a / b; }
inline FieldElement bareiss_div(const FieldElement& a, const FieldElement& b) { return a / b; }
template <class K>
Poly<K> bareiss_div(const Poly<K>& a, const Poly<K>& b) {
    return exact_divide(a, b);
}

// Dense rectangular matrix over an exact scalar (Rational, FieldElement or a
// polynomial ring over those).
template <class K>
class Matrix {
   public:
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K{}) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    K& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    // Exact determinant by fraction-free (Bareiss) elimination. A zero pivot
    // triggers a full pivot search over the remaining submatrix; the divisions
    // stay exact. All-zero remaining submatrix means the determinant is zero.
    K det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        size_t n = rows_;
        if (n == 0) return K(1);
        std::vector<K> m = a_;
        auto e = [&](size_t i, size_t j) -> K& { return m[i * n + j]; };
        int sign = 1;
        K prev = K(1);
        for (size_t k = 0; k + 1 < n; ++k) {
            if (e(k, k) == K{}) {
                size_t pi = k, pj = k;
                bool found = false;
                for (size_t i = k; i < n && !found; ++i)
                    for (size_t j = k; j < n && !found; ++j)
                        if (!(e(i, j) == K{})) {
                            pi = i;
                            pj = j;
                            found = true;
                        }
                if (!found) return K{};
                if (pi != k) {
                    for (size_t j = 0; j < n; ++j) std::swap(e(k, j), e(pi, j));
                    sign = -sign;
                }
                if (pj != k) {
                    for (size_t i = 0; i < n; ++i) std::swap(e(i, k), e(i, pj));
                    sign = -sign;
                }
            }
            for (size_t i = k + 1; i < n; ++i)
                for (size_t j = k + 1; j < n; ++j)
                    e(i, j) = bareiss_div(e(i, j) * e(k, k) - e(i, k) * e(k, j), prev);
            prev = e(k, k);
        }
        K d = e(n - 1, n - 1);
        return sign < 0 ? -d : d;
    }

   private:
    size_t rows_, cols_;
    std::vector<K> a_;
};

using ExactMatrix = Matrix<FieldElement>;

// Sylvester-matrix resultant with respect to the polynomial variable, usable
// when coefficients live in a ring without division (e.g. Q[x]).
template <class K>
K sylvester_resultant(const Poly<K>& p, const Poly<K>& q) {
    int dp = p.degree(), dq = q.degree();
    if (dp < 0 || dq < 0) throw std::invalid_argument("resultant of zero polynomial");
    if (dp == 0) return pow_of(p.lc(), dq);
    if (dq == 0) return pow_of(q.lc(), dp);
    size_t n = dp + dq;
    Matrix<K> s(n, n);
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i) s.at(r, r + i) = p[dp - i];
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i) s.at(dq + r, r + i) = q[dq - i];
    return s.det();
}

}  // namespace quintic

#endif
