/*
   Copyright 2026 The popuc Authors

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

#ifndef POPUC_TESTS_HELPERS_HPP
#define POPUC_TESTS_HELPERS_HPP

#include <optional>
#include <random>
#include <set>
#include <vector>

#include <popuc/popuc.hpp>

namespace testing_helpers {

/// Random admissible spec: distinct cyclotomic indices with total degree <= max_degree.
inline popuc::KroneckerSpec random_spec(std::mt19937_64& rng, std::uint64_t max_degree)
{
    std::uniform_int_distribution<std::uint64_t> index(1, 2 * max_degree);
    std::uniform_int_distribution<int> count(1, 6);
    std::set<std::uint64_t> chosen;
    std::uint64_t degree = 0;
    const int want = count(rng);
    for (int tries = 0; tries < 200 && static_cast<int>(chosen.size()) < want; ++tries) {
        const auto m = index(rng);
        const auto phi = popuc::numtheory::totient(m);
        if (!chosen.count(m) && degree + phi <= max_degree) {
            chosen.insert(m);
            degree += phi;
        }
    }
    if (chosen.empty())
        chosen.insert(1);
    return popuc::KroneckerSpec(std::vector<std::uint64_t>(chosen.begin(), chosen.end()));
}

/// For M = 2^k p^m with p an odd prime, the chain of C_M obtained from the
/// chain of C_p by negation (when k >= 1) and sieving. Empty for other M.
inline std::optional<popuc::SturmChain> sieved_cyclotomic_route(std::uint64_t M)
{
    const auto fm = popuc::numtheory::factorize(M);
    std::uint64_t two_power = 0, p = 0, m = 0;
    for (const auto& f : fm.factors) {
        if (f.prime == 2)
            two_power = f.exponent;
        else if (p == 0) {
            p = f.prime;
            m = f.exponent;
        } else {
            return std::nullopt;
        }
    }
    if (p == 0)
        return std::nullopt;
    popuc::SturmChain c = popuc::build_chain(popuc::cyclotomic(p));
    std::uint64_t stride = 1;
    for (std::uint64_t i = 1; i < m; ++i)
        stride *= p;
    if (two_power >= 1) {
        c = popuc::negate_chain(c);
        for (std::uint64_t i = 1; i < two_power; ++i)
            stride *= 2;
    }
    return popuc::sieve_chain(c, stride);
}

} // namespace testing_helpers

#endif // POPUC_TESTS_HELPERS_HPP
