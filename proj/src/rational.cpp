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

#include "quintic/rational.hpp"

#include <algorithm>
#include <map>

namespace quintic {
namespace {

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Pollard rho (Brent variant) for composites that survive trial division.
Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    Int x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd_int(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        c += 1;  // cycle degenerated; retry with another polynomial
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<Int> divisors(const Int& n) {
    if (n == 0) throw std::invalid_argument("divisors of zero");
    Int m = abs(n);
    std::map<Int, unsigned> primes;
    for (long p = 2; p <= 1000000 && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (m % p == 0) {
            primes[Int(p)]++;
            m /= p;
        }
    }
    if (m > 1) factor_into(m, primes);

    std::vector<Int> divs{1};
    for (const auto& [p, e] : primes) {
        size_t sz = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 400000) throw std::runtime_error("divisor enumeration too large");
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace quintic
