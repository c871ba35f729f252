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

#ifndef QUINTIC_HESSIAN_HPP
#define QUINTIC_HESSIAN_HPP

#include "quintic/matrix.hpp"
#include "quintic/pencil.hpp"

namespace quintic {

enum class NodeStatus { Node, NotNode, Unverified };

// Affine chart of a point: the first nonzero coordinate (in the canonical
// slot arrangement) is scaled to 1 and dropped, the last coordinate is
// eliminated through the hyperplane relation as -(1 + sum of the rest).
struct ChartPoint {
    int n = 0;
    int chart_index = 0;
    std::vector<FieldElement> coords;  // the n remaining affine coordinates
};

ChartPoint chart_reduce(const SymPoint& pt);

struct HessianResult {
    ExactMatrix matrix;
    FieldElement det;
    bool is_node = false;
};

// Hessian of the chart equation f = F(1, x_1..x_n, -h) of the pencil member
// normalized to alpha = 1; all second partials come from the power-sum form
// of F via the chain rule through the elimination of the last coordinate.
HessianResult hessian_at(const ChartPoint& y, const FieldElement& beta);

// Determinant as a polynomial identity in beta for a fixed point.  The
// orbit's points are permutation images of each other, so the coefficients
// are rational whenever the value multiset is stable under the field's
// conjugations; non-rational coefficients are reported as an error.
RatPoly hessian_det_beta(const SymPoint& pt);

// Determinant numerator for a one-parameter family: slot values are linear
// polynomials in c, beta = -U(c)/V(c).  Returns det * V(c)^n, a polynomial
// in c; it vanishes at exactly the family members with degenerate Hessian.
RatPoly family_det_numerator(int n, const std::vector<RatPoly>& forms,
                             const std::vector<int>& mults, const RatPoly& U, const RatPoly& V);

// node test for a concrete representative (covers all conjugates at once:
// a nonzero element of an irreducible quotient is nonzero at every root)
NodeStatus node_status(const SymPoint& pt, const PencilParam& p);

}  // namespace quintic

#endif
