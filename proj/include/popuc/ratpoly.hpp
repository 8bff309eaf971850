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

#ifndef POPUC_RATPOLY_HPP
#define POPUC_RATPOLY_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace popuc {

using ComplexValue = std::complex<double>;

/// Dense polynomial over the rationals; coefficient i belongs to z^i.
/// The zero polynomial has no coefficients and no degree.
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<BigRational> coefficients)
        : coeffs_(std::move(coefficients))
    {
        trim();
    }

    RatPoly(std::initializer_list<long> coefficients)
    {
        coeffs_.reserve(coefficients.size());
        for (long c : coefficients)
            coeffs_.emplace_back(c);
        trim();
    }

    static RatPoly constant(const BigRational& c) { return RatPoly(std::vector<BigRational>{c}); }

    static RatPoly monomial(std::size_t n, const BigRational& c = 1)
    {
        std::vector<BigRational> v(n + 1);
        v[n] = c;
        return RatPoly(std::move(v));
    }

    /// z^n - 1
    static RatPoly unity_minus_one(std::size_t n)
    {
        std::vector<BigRational> v(n + 1);
        v[n] = 1;
        v[0] -= 1;
        return RatPoly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::size_t degree() const
    {
        if (is_zero())
            throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial is undefined");
        return coeffs_.size() - 1;
    }

    /// Coefficient of z^i; zero past the degree.
    BigRational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

    const BigRational& leading() const
    {
        if (is_zero())
            throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    BigRational constant_term() const { return coefficient(0); }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }

    RatPoly& operator+=(const RatPoly& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator-=(const RatPoly& rhs)
    {
        if (rhs.coeffs_.size() > coeffs_.size())
            coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
            coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator*=(const BigRational& s)
    {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(RatPoly lhs, const BigRational& s) { return lhs *= s; }
    friend RatPoly operator*(const BigRational& s, RatPoly rhs) { return rhs *= s; }

    friend RatPoly operator-(RatPoly p)
    {
        for (auto& c : p.coeffs_)
            c = -c;
        return p;
    }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return RatPoly(std::move(out));
    }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Multiply by z^k.
    RatPoly shifted(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<BigRational> v(k + coeffs_.size());
        std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
        return RatPoly(std::move(v));
    }

    /// p(-z)
    RatPoly negated_argument() const
    {
        RatPoly out = *this;
        for (std::size_t i = 1; i < out.coeffs_.size(); i += 2)
            out.coeffs_[i] = -out.coeffs_[i];
        return out;
    }

    /// p(z^k), k >= 1.
    RatPoly substituted_power(std::size_t k) const
    {
        if (k == 0)
            throw Error(ErrorKind::InvalidArgument, "substituted_power: k must be positive");
        if (is_zero())
            return {};
        std::vector<BigRational> v((coeffs_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            v[i * k] = coeffs_[i];
        return RatPoly(std::move(v));
    }

    RatPoly derivative() const
    {
        if (coeffs_.size() <= 1)
            return {};
        std::vector<BigRational> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
        return RatPoly(std::move(v));
    }

    std::vector<double> to_doubles() const
    {
        std::vector<double> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(c.get_d());
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

enum class PolyOp { add, sub, mul };

inline RatPoly poly_arith(const RatPoly& a, const RatPoly& b, PolyOp op)
{
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown polynomial operation");
}

struct DivResult {
    RatPoly quotient;
    RatPoly remainder;
};

inline DivResult divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    if (a.is_zero() || a.degree() < b.degree())
        return {RatPoly{}, a};
    std::vector<BigRational> rem = a.coefficients();
    const auto& den = b.coefficients();
    const std::size_t db = b.degree();
    const BigRational lead_inv = 1 / b.leading();
    std::vector<BigRational> quot(rem.size() - db);
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigRational c = rem[i + db] * lead_inv;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i + j] -= c * den[j];
        quot[i] = std::move(c);
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

/// Quotient of an exact division; any remainder is an error.
inline RatPoly exact_div(const RatPoly& a, const RatPoly& b)
{
    DivResult r = divmod(a, b);
    if (!r.remainder.is_zero())
        throw Error(ErrorKind::NonZeroRemainder, "divisor does not divide the dividend exactly");
    return std::move(r.quotient);
}

/// a'/(N+1) for a monic a of degree N+1 >= 1; the result is monic of degree N.
inline RatPoly derivative_monic(const RatPoly& a)
{
    if (!a.is_monic())
        throw Error(ErrorKind::InvalidArgument, "derivative_monic: polynomial must be monic");
    const std::size_t d = a.degree();
    if (d == 0)
        throw Error(ErrorKind::InvalidArgument, "derivative_monic: polynomial must be non-constant");
    return a.derivative() * make_rational(1, static_cast<long>(d));
}

/// z^n a(1/z) for real coefficients: the coefficient list reversed within length n+1.
inline RatPoly reciprocal(const RatPoly& a, std::size_t n)
{
    if (a.is_zero())
        return {};
    if (a.degree() > n)
        throw Error(ErrorKind::InvalidArgument, "reciprocal: degree exceeds n");
    std::vector<BigRational> v(n + 1);
    const auto& c = a.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        v[n - i] = c[i];
    return RatPoly(std::move(v));
}

enum class PalindromeClass { palindromic, antipalindromic, neither };

inline PalindromeClass palindrome_class(const RatPoly& a)
{
    if (a.is_zero())
        throw Error(ErrorKind::InvalidArgument, "palindrome_class: zero polynomial");
    const RatPoly rev = reciprocal(a, a.degree());
    if (rev == a)
        return PalindromeClass::palindromic;
    if (rev == -a)
        return PalindromeClass::antipalindromic;
    return PalindromeClass::neither;
}

/// Root of unity exp(2 pi i k / M), stored as the reduced fraction k/M with 0 <= k < M.
class UnityRoot {
public:
    UnityRoot() = default;

    UnityRoot(std::int64_t k, std::int64_t M)
    {
        if (M <= 0)
            throw Error(ErrorKind::InvalidArgument, "UnityRoot: M must be positive");
        k %= M;
        if (k < 0)
            k += M;
        const std::int64_t g = std::gcd(k, M);
        k_ = k / g;
        m_ = M / g;
    }

    std::int64_t k() const noexcept { return k_; }
    std::int64_t M() const noexcept { return m_; }

    double angle() const noexcept { return 2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(m_); }

    ComplexValue value() const { return std::polar(1.0, angle()); }

    UnityRoot conj() const { return UnityRoot(m_ - k_, m_); }

    /// "k/M" (or "0" for z = 1).
    std::string fraction() const
    {
        return m_ == 1 ? std::to_string(k_) : std::to_string(k_) + "/" + std::to_string(m_);
    }

    friend bool operator==(const UnityRoot&, const UnityRoot&) = default;

    /// Ordered by angle in [0, 2 pi).
    friend std::strong_ordering operator<=>(const UnityRoot& a, const UnityRoot& b)
    {
        return a.k_ * b.m_ <=> b.k_ * a.m_;
    }

private:
    std::int64_t k_ = 0;
    std::int64_t m_ = 1;
};

/// Exact-angle evaluation: each term c_i zeta^i is placed at angle 2 pi (i k mod M) / M.
inline ComplexValue eval_at_unity(std::span<const double> coeffs, const UnityRoot& zeta)
{
    const std::int64_t M = zeta.M();
    const std::int64_t k = zeta.k();
    ComplexValue sum{0.0, 0.0};
    std::int64_t r = 0;
    for (double c : coeffs) {
        if (c != 0.0)
            sum += c * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(M));
        r = (r + k) % M;
    }
    return sum;
}

inline ComplexValue eval_at_unity(const RatPoly& a, const UnityRoot& zeta)
{
    const std::vector<double> c = a.to_doubles();
    return eval_at_unity(std::span<const double>(c), zeta);
}

/// Horner evaluation at an arbitrary complex point.
inline ComplexValue evaluate(std::span<const double> coeffs, ComplexValue z)
{
    ComplexValue acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

inline ComplexValue evaluate(const RatPoly& a, ComplexValue z)
{
    const std::vector<double> c = a.to_doubles();
    return evaluate(std::span<const double>(c), z);
}

} // namespace popuc

#endif // POPUC_RATPOLY_HPP
