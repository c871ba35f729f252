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

#ifndef QUINTIC_BOUNDS_HPP
#define QUINTIC_BOUNDS_HPP

#include "quintic/rational.hpp"

namespace quintic {

// Ar_n(d): number of integer tuples (k_0..k_n) with 0 < k_i < d summing to
// floor(n*d/2) + 1; the spectral upper bound for the node count of a
// degree-d hypersurface in P^n.
Int arnold_number(int n, int d);

// mu_n(3) = Ar_n(3) = binomial(n+1, floor(n/2))
Int kalker_cubic_count(int n);

}  // namespace quintic

#endif
