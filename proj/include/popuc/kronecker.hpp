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

#ifndef POPUC_KRONECKER_HPP
#define POPUC_KRONECKER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "error.hpp"
#include "numtheory.hpp"
#include "ratpoly.hpp"

namespace popuc {

/// A squarefree Kronecker polynomial given by its distinct cyclotomic indices.
class KroneckerSpec {
public:
    KroneckerSpec() = default;

    /// Indices may come in any order; they are stored ascending.
    explicit KroneckerSpec(std::vector<std::uint64_t> indices)
        : indices_(std::move(indices))
    {
        if (indices_.empty())
            throw Error(ErrorKind::InvalidArgument, "Kronecker spec needs at least one cyclotomic index");
        std::sort(indices_.begin(), indices_.end());
        if (indices_.front() == 0)
            throw Error(ErrorKind::InvalidArgument, "cyclotomic indices must be positive");
        for (std::size_t i = 1; i < indices_.size(); ++i)
            if (indices_[i] == indices_[i - 1])
                throw Error(ErrorKind::DuplicateFactor,
                            "cyclotomic factor C_" + std::to_string(indices_[i]) + " repeated; roots would not be simple");
    }

    const std::vector<std::uint64_t>& indices() const noexcept { return indices_; }

    std::uint64_t degree() const
    {
        std::uint64_t d = 0;
        for (auto m : indices_)
            d += numtheory::totient(m);
        return d;
    }

    friend bool operator==(const KroneckerSpec&, const KroneckerSpec&) = default;

private:
    std::vector<std::uint64_t> indices_;
};

namespace detail {

inline RatPoly compute_cyclotomic(std::uint64_t n);

class CyclotomicCache {
public:
    static CyclotomicCache& instance()
    {
        static CyclotomicCache cache;
        return cache;
    }

    RatPoly get(std::uint64_t n)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(n); it != table_.end())
                return it->second;
        }
        RatPoly p = compute_cyclotomic(n);
        std::unique_lock lock(mutex_);
        return table_.try_emplace(n, std::move(p)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::uint64_t, RatPoly> table_;
};

/// (z^n - 1) divided by C_d for every proper divisor d.
inline RatPoly compute_cyclotomic(std::uint64_t n)
{
    RatPoly p = RatPoly::unity_minus_one(n);
    for (std::uint64_t d : numtheory::divisors(n))
        if (d < n)
            p = exact_div(p, CyclotomicCache::instance().get(d));
    return p;
}

} // namespace detail

inline RatPoly cyclotomic(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "cyclotomic: n must be positive");
    return detail::CyclotomicCache::instance().get(n);
}

/// Minimal polynomial of the non-primitive n-th roots of unity: (z^n - 1) / C_n.
inline RatPoly anticyclotomic(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "anticyclotomic: n must be positive");
    return exact_div(RatPoly::unity_minus_one(n), cyclotomic(n));
}

inline RatPoly kronecker_from_spec(const KroneckerSpec& spec)
{
    RatPoly k = RatPoly::constant(1);
    for (auto m : spec.indices())
        k = k * cyclotomic(m);
    return k;
}

/// (z + 1)(z^{M-1} + ... + 1) for odd M >= 3. Even M would put a double root at z = -1.
inline RatPoly adjoined_kronecker(std::uint64_t M)
{
    if (M % 2 == 0)
        throw Error(ErrorKind::EvenM, "adjoined Kronecker polynomial needs odd M, got " + std::to_string(M));
    if (M < 3)
        throw Error(ErrorKind::BadParam, "adjoined Kronecker polynomial needs M >= 3");
    std::vector<BigRational> geometric(M, BigRational(1));
    return RatPoly{1, 1} * RatPoly(std::move(geometric));
}

/// Indices whose cyclotomic factors make up the adjoined polynomial: 2 and every d > 1 dividing M.
inline KroneckerSpec adjoined_spec(std::uint64_t M)
{
    if (M % 2 == 0)
        throw Error(ErrorKind::EvenM, "adjoined Kronecker polynomial needs odd M, got " + std::to_string(M));
    if (M < 3)
        throw Error(ErrorKind::BadParam, "adjoined Kronecker polynomial needs M >= 3");
    std::vector<std::uint64_t> idx{2};
    for (auto d : numtheory::divisors(M))
        if (d > 1)
            idx.push_back(d);
    return KroneckerSpec(std::move(idx));
}

/// Indices d | n with d < n, the factors of the anti-cyclotomic polynomial.
inline KroneckerSpec anticyclotomic_spec(std::uint64_t n)
{
    if (n < 2)
        throw Error(ErrorKind::BadParam, "anti-cyclotomic seed needs n >= 2");
    std::vector<std::uint64_t> idx;
    for (auto d : numtheory::divisors(n))
        if (d < n)
            idx.push_back(d);
    return KroneckerSpec(std::move(idx));
}

/// Exact roots y/m for every index m, sorted by angle.
inline std::vector<UnityRoot> roots_of(const KroneckerSpec& spec)
{
    std::vector<UnityRoot> out;
    for (auto m : spec.indices()) {
        if (m == 1) {
            out.emplace_back(0, 1);
            continue;
        }
        for (auto y : numtheory::coprime_residues(m))
            out.emplace_back(static_cast<std::int64_t>(y), static_cast<std::int64_t>(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Recover the cyclotomic factorization of a raw seed polynomial.
/// Rejects zero roots, repeated factors, and anything that is not a product of
/// distinct cyclotomic polynomials.
inline KroneckerSpec decompose_kronecker(const RatPoly& k)
{
    if (!k.is_monic() || k.degree() == 0)
        throw Error(ErrorKind::InadmissibleSeed, "seed must be monic of degree >= 1");
    if (k.constant_term() == 0)
        throw Error(ErrorKind::ZeroRoot, "seed has a zero root; strip the power of z before building a chain");
    for (const auto& c : k.coefficients())
        if (c.get_den() != 1)
            throw Error(ErrorKind::InadmissibleSeed, "Kronecker polynomials have integer coefficients");
    std::vector<std::uint64_t> idx;
    RatPoly rest = k;
    const std::uint64_t deg = k.degree();
    // phi(m) >= sqrt(m/2), so every candidate index is below 2 deg^2 + 2.
    const std::uint64_t bound = 2 * deg * deg + 2;
    for (std::uint64_t m = 1; m <= bound && rest.degree() > 0; ++m) {
        if (numtheory::totient(m) > rest.degree())
            continue;
        DivResult r = divmod(rest, cyclotomic(m));
        if (!r.remainder.is_zero())
            continue;
        idx.push_back(m);
        rest = std::move(r.quotient);
        if (rest.degree() > 0 && divmod(rest, cyclotomic(m)).remainder.is_zero())
            throw Error(ErrorKind::DuplicateFactor, "cyclotomic factor C_" + std::to_string(m) + " repeated");
    }
    if (rest.degree() > 0)
        throw Error(ErrorKind::InadmissibleSeed, "seed is not a product of cyclotomic polynomials");
    return KroneckerSpec(std::move(idx));
}

} // namespace popuc

#endif // POPUC_KRONECKER_HPP
