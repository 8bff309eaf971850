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

#ifndef POPUC_NUMTHEORY_HPP
#define POPUC_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace popuc::numtheory {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly increasing. Empty for n = 1.
struct FactorMap {
    std::vector<PrimePower> factors;

    std::uint64_t value() const
    {
        std::uint64_t v = 1;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i)
                v *= p;
        return v;
    }

    bool squarefree() const
    {
        return std::all_of(factors.begin(), factors.end(), [](const PrimePower& f) { return f.exponent == 1; });
    }

    friend bool operator==(const FactorMap&, const FactorMap&) = default;
};

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

inline FactorMap factorize(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "factorize: n must be positive");
    FactorMap out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.factors.push_back({p, e});
    };
    strip(2);
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        strip(d);
    if (n > 1)
        out.factors.push_back({n, 1});
    return out;
}

inline std::uint64_t totient(std::uint64_t n)
{
    std::uint64_t phi = n;
    for (const auto& f : factorize(n).factors)
        phi = phi / f.prime * (f.prime - 1);
    return phi;
}

inline int mobius(std::uint64_t n)
{
    const FactorMap fm = factorize(n);
    if (!fm.squarefree())
        return 0;
    return fm.factors.size() % 2 == 0 ? 1 : -1;
}

/// Ascending list of all positive divisors, generated from the factorization.
inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n).factors) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// 1 <= y < M with gcd(y, M) = 1, ascending. For M = 1 the list is empty.
inline std::vector<std::uint64_t> coprime_residues(std::uint64_t M)
{
    if (M == 0)
        throw Error(ErrorKind::InvalidArgument, "coprime_residues: M must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t y = 1; y < M; ++y)
        if (std::gcd(y, M) == 1)
            out.push_back(y);
    return out;
}

inline std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= limit; n += 2)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

} // namespace popuc::numtheory

#endif // POPUC_NUMTHEORY_HPP
