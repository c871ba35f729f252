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

#include "quintic/bounds.hpp"

#include <stdexcept>
#include <vector>

namespace quintic {

Int arnold_number(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("arnold_number needs n >= 1, d >= 1");
    long target = (static_cast<long>(n) * d) / 2 + 1;
    std::vector<Int> dp(target + 1, 0);
    dp[0] = 1;
    for (int coord = 0; coord <= n; ++coord) {
        std::vector<Int> next(target + 1, 0);
        for (long s = 0; s <= target; ++s) {
            if (dp[s] == 0) continue;
            for (long k = 1; k <= d - 1 && s + k <= target; ++k) next[s + k] += dp[s];
        }
        dp = std::move(next);
    }
    return dp[target];
}

Int kalker_cubic_count(int n) {
    if (n < 1) throw std::invalid_argument("kalker_cubic_count needs n >= 1");
    return binomial(n + 1, n / 2);
}

}  // namespace quintic
