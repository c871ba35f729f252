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

#include "quintic/pentagon.hpp"

#include <stdexcept>

namespace quintic {

Rational pentagon_R5(const Rational& x, const Rational& y) {
    Rational x2 = x * x, y2 = y * y;
    return x2 * x2 * x - 10 * x2 * x * y2 + 5 * x * y2 * y2 - 5 * x2 * x2 - 10 * x2 * y2 -
           5 * y2 * y2 + 20 * x2 + 20 * y2 - 16;
}

Rational chebyshev_T5(const Rational& z) {
    Rational z2 = z * z;
    return 16 * z2 * z2 * z - 20 * z2 * z + 5 * z;
}

CriticalSpectrum pentagon_spectrum() {
    // Pinned exact values: the origin sits at -16, the five vertex-opposite
    // maxima at +16, the ten pairwise edge crossings (the nodes) at 0;
    // normalizing by 1/16 gives the spectrum below. The orientation with the
    // origin at -1 is the one reproducing the odd-n counts; the mirrored
    // choice fails them (see the derivation tests).
    CriticalSpectrum s;
    s.entries[Rational(0)] = 10;
    s.entries[Rational(1)] = 5;
    s.entries[Rational(-1)] = 1;
    if (s.total() != 16) throw std::logic_error("pentagon spectrum must have 16 points");
    return s;
}

CriticalSpectrum chebyshev_spectrum() {
    CriticalSpectrum s;
    s.entries[Rational(1)] = 2;
    s.entries[Rational(-1)] = 2;
    return s;
}

CriticalSpectrum chebyshev_rhs_spectrum() {
    // v -> -(v-1)/2 applied to the T5 spectrum
    CriticalSpectrum s;
    for (const auto& [v, m] : chebyshev_spectrum().entries) s.entries[-(v - 1) / 2] += m;
    return s;
}

Int pentagon_node_count_with(int n, const CriticalSpectrum& block, const CriticalSpectrum& rhs) {
    if (n < 3) throw std::invalid_argument("pentagon construction needs n >= 3");
    int blocks = n / 2;
    std::map<Rational, Int> dist;
    dist[Rational(0)] = 1;
    for (int j = 0; j < blocks; ++j) {
        int sign = ((j * (1 + (n % 2))) % 2) ? -1 : 1;
        std::map<Rational, Int> next;
        for (const auto& [s, ways] : dist)
            for (const auto& [v, m] : block.entries) next[s + sign * v] += ways * m;
        dist = std::move(next);
    }
    if (n % 2 == 0) {
        auto it = dist.find(Rational(0));
        return it == dist.end() ? Int(0) : it->second;
    }
    Int total = 0;
    for (const auto& [w, mw] : rhs.entries) {
        auto it = dist.find(w);
        if (it != dist.end()) total += it->second * mw;
    }
    return total;
}

Int pentagon_node_count(int n) {
    return pentagon_node_count_with(n, pentagon_spectrum(), chebyshev_rhs_spectrum());
}

}  // namespace quintic
