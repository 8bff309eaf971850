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

#ifndef POPUC_CHAIN_HPP
#define POPUC_CHAIN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "kronecker.hpp"
#include "numtheory.hpp"
#include "ratpoly.hpp"

namespace popuc {

/// Para-orthogonal chain Phi_0 .. Phi_{N+1} with Verblunsky coefficients
/// a_0 .. a_N (|a_N| = 1) and norms h_0 .. h_N.
struct SturmChain {
    std::vector<RatPoly> polys;
    std::vector<BigRational> verblunsky;
    std::vector<BigRational> norms;

    /// N + 1, the degree of the seed.
    std::size_t degree() const { return polys.size() - 1; }
    std::size_t last_index() const { return verblunsky.size() - 1; }
    const RatPoly& seed() const { return polys.back(); }

    friend bool operator==(const SturmChain&, const SturmChain&) = default;
};

/// h_0 = 1, h_n = h_{n-1} (1 - a_{n-1}^2) for n = 1..N.
inline std::vector<BigRational> norms_from(const std::vector<BigRational>& verblunsky)
{
    std::vector<BigRational> h;
    if (verblunsky.empty())
        return h;
    h.reserve(verblunsky.size());
    h.emplace_back(1);
    for (std::size_t n = 1; n < verblunsky.size(); ++n)
        h.emplace_back(h.back() * (1 - verblunsky[n - 1] * verblunsky[n - 1]));
    return h;
}

struct InverseStep {
    RatPoly phi;
    BigRational a;
};

/// One step down the chain: a = -Phi_next(0) and
/// Phi = (Phi_next + a Phi_next^*) / (z (1 - a^2)).
inline InverseStep inverse_step(const RatPoly& next)
{
    if (!next.is_monic() || next.degree() == 0)
        throw Error(ErrorKind::InvalidArgument, "inverse_step: polynomial must be monic of degree >= 1");
    const std::size_t d = next.degree();
    BigRational a = -next.constant_term();
    if (abs(a) >= 1)
        throw Error(ErrorKind::UnimodularA, "inverse step at degree " + std::to_string(d) + " met |a| = |" +
                                                to_string(a) + "| >= 1");
    const auto& c = next.coefficients();
    // Numerator coefficient i is c_i + a c_{d-i}; its constant term must vanish exactly.
    BigRational constant = c[0] + a * c[d];
    if (constant != 0)
        throw Error(ErrorKind::NonVanishingConstant, "numerator of the inverse formula kept a constant term");
    const BigRational scale = 1 / (1 - a * a);
    std::vector<BigRational> out(d);
    for (std::size_t i = 1; i <= d; ++i) {
        BigRational v = c[i] + a * c[d - i];
        v *= scale;
        out[i - 1] = std::move(v);
    }
    return {RatPoly(std::move(out)), std::move(a)};
}

/// z Phi - a Phi^* with Phi^* the reciprocal at Phi's degree.
inline RatPoly forward_step(const RatPoly& phi, const BigRational& a)
{
    if (!phi.is_monic())
        throw Error(ErrorKind::InvalidArgument, "forward_step: polynomial must be monic");
    return phi.shifted(1) - reciprocal(phi, phi.degree()) * a;
}

/// Sturmian chain: Phi_{N+1} = K, Phi_N = K'/(N+1), the rest by inverse steps.
inline SturmChain build_chain(const RatPoly& seed)
{
    if (!seed.is_monic() || seed.degree() == 0)
        throw Error(ErrorKind::InvalidArgument, "build_chain: seed must be monic of degree >= 1");
    if (seed.constant_term() == 0)
        throw Error(ErrorKind::ZeroRoot, "build_chain: seed has a zero root");
    const std::size_t top = seed.degree();
    const BigRational last = -seed.constant_term();
    if (!is_unimodular(last))
        throw Error(ErrorKind::InadmissibleSeed, "build_chain: |K(0)| = " + to_string(abs(last)) + " != 1");
    // Unit-circle roots force K^* = -a_N K.
    if (reciprocal(seed, top) != seed * (-last))
        throw Error(ErrorKind::InadmissibleSeed, "build_chain: seed is not self-reciprocal, roots leave the unit circle");

    SturmChain chain;
    chain.polys.resize(top + 1);
    chain.verblunsky.resize(top);
    chain.polys[top] = seed;
    chain.polys[top - 1] = derivative_monic(seed);
    chain.verblunsky[top - 1] = last;
    for (std::size_t n = top - 1; n-- > 0;) {
        InverseStep step = inverse_step(chain.polys[n + 1]);
        chain.polys[n] = std::move(step.phi);
        chain.verblunsky[n] = std::move(step.a);
    }
    chain.norms = norms_from(chain.verblunsky);
    return chain;
}

inline SturmChain build_chain(const KroneckerSpec& spec)
{
    return build_chain(kronecker_from_spec(spec));
}

/// Chain of (-1)^{N+1} Phi_{N+1}(-z): Phi_n -> (-1)^n Phi_n(-z), a_n -> (-1)^{n+1} a_n.
inline SturmChain negate_chain(const SturmChain& c)
{
    SturmChain out;
    out.polys.reserve(c.polys.size());
    for (std::size_t n = 0; n < c.polys.size(); ++n) {
        RatPoly p = c.polys[n].negated_argument();
        out.polys.push_back(n % 2 == 0 ? std::move(p) : -p);
    }
    out.verblunsky.reserve(c.verblunsky.size());
    for (std::size_t n = 0; n < c.verblunsky.size(); ++n)
        out.verblunsky.push_back(n % 2 == 1 ? c.verblunsky[n] : BigRational(-c.verblunsky[n]));
    out.norms = c.norms;
    return out;
}

/// Chain of Phi_{N+1}(z^k): Phi_{nk+j} -> z^j Phi_n(z^k) and the Verblunsky
/// sequence spread out with k-1 zeros before each original value.
inline SturmChain sieve_chain(const SturmChain& c, std::size_t k)
{
    if (k == 0)
        throw Error(ErrorKind::BadParam, "sieve_chain: k must be positive");
    const std::size_t top = c.degree();
    SturmChain out;
    out.polys.reserve(k * top + 1);
    for (std::size_t n = 0; n < top; ++n) {
        const RatPoly base = c.polys[n].substituted_power(k);
        for (std::size_t j = 0; j < k; ++j)
            out.polys.push_back(base.shifted(j));
    }
    out.polys.push_back(c.polys[top].substituted_power(k));
    out.verblunsky.assign(k * top, BigRational(0));
    for (std::size_t j = 1; j <= top; ++j)
        out.verblunsky[k * j - 1] = c.verblunsky[j - 1];
    out.norms = norms_from(out.verblunsky);
    return out;
}

/// Angles in [offset, offset + 2 pi) where a self-inversive polynomial vanishes,
/// located by sign changes of its rotated real form.
inline std::vector<double> unit_circle_root_angles(const RatPoly& p)
{
    const std::vector<double> c = p.to_doubles();
    const double d = static_cast<double>(p.degree());
    const double offset = 1e-7 * std::numbers::sqrt2;
    // p(e^{it}) e^{-i d t / 2} is real or purely imaginary; fold both parts together.
    auto f = [&](double t) {
        const ComplexValue v = evaluate(std::span<const double>(c), std::polar(1.0, t)) * std::polar(1.0, -d * t / 2.0);
        return v.real() + v.imag();
    };
    const std::size_t samples = 256 * (p.degree() + 1);
    std::vector<double> out;
    double t0 = offset;
    double f0 = f(t0);
    for (std::size_t i = 1; i <= samples; ++i) {
        const double t1 = offset + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
        const double f1 = f(t1);
        if ((f0 < 0) != (f1 < 0)) {
            double lo = t0, hi = t1, flo = f0;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push_back(0.5 * (lo + hi));
        }
        t0 = t1;
        f0 = f1;
    }
    return out;
}

struct WendroffResult {
    RatPoly phi;
    /// Set when the numerical interlacing check failed. The polynomial is still
    /// the algebraic solution, but it need not have unit-circle zeros.
    bool interlacing_violation = false;
};

/// Phi_N from two degree-(N+1) para-orthogonal polynomials sharing it:
/// (at Phi - a Phit) / ((at - a) z) with a = -Phi(0), at = -Phit(0).
inline WendroffResult wendroff_phi_n(const RatPoly& next, const RatPoly& other)
{
    if (!next.is_monic() || !other.is_monic() || next.degree() == 0 || next.degree() != other.degree())
        throw Error(ErrorKind::InvalidArgument, "wendroff: need two monic polynomials of equal degree >= 1");
    const BigRational a = -next.constant_term();
    const BigRational at = -other.constant_term();
    if (!is_unimodular(a) || !is_unimodular(at))
        throw Error(ErrorKind::BadParam, "wendroff: constant terms must have modulus 1");
    if (a == at)
        throw Error(ErrorKind::EqualLastCoefficient, "wendroff: both polynomials share a_N = " + to_string(a));
    const RatPoly num = next * at - other * a;
    if (num.constant_term() != 0)
        throw Error(ErrorKind::NonVanishingConstant, "wendroff: numerator kept a constant term");
    std::vector<BigRational> q(num.coefficients().begin() + 1, num.coefficients().end());
    WendroffResult out{RatPoly(std::move(q)) * BigRational(1 / (at - a)), false};

    std::vector<double> r1 = unit_circle_root_angles(next);
    std::vector<double> r2 = unit_circle_root_angles(other);
    const std::size_t want = next.degree();
    if (r1.size() != want || r2.size() != want) {
        out.interlacing_violation = true;
        return out;
    }
    std::vector<std::pair<double, int>> merged;
    for (double t : r1)
        merged.emplace_back(t, 0);
    for (double t : r2)
        merged.emplace_back(t, 1);
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 1; i < merged.size(); ++i)
        if (merged[i].second == merged[i - 1].second)
            out.interlacing_violation = true;
    return out;
}

enum class ClosedFamily { free_family, single_moment, anti_2p, adjoined };

namespace detail {

inline SturmChain free_closed_form(std::size_t top)
{
    SturmChain c;
    for (std::size_t n = 0; n <= top; ++n)
        c.polys.push_back(RatPoly::monomial(n));
    c.polys.back() = RatPoly::unity_minus_one(top);
    c.verblunsky.assign(top, BigRational(0));
    c.verblunsky.back() = 1;
    return c;
}

inline SturmChain single_moment_closed_form(std::size_t top)
{
    SturmChain c;
    for (std::size_t n = 0; n < top; ++n) {
        std::vector<BigRational> v;
        for (std::size_t k = 0; k <= n; ++k)
            v.push_back(make_rational(static_cast<long>(k + 1), static_cast<long>(n + 1)));
        c.polys.emplace_back(std::move(v));
    }
    c.polys.emplace_back(std::vector<BigRational>(top + 1, BigRational(1)));
    for (std::size_t n = 0; n + 1 < top; ++n)
        c.verblunsky.push_back(make_rational(-1, static_cast<long>(n + 2)));
    c.verblunsky.emplace_back(-1);
    return c;
}

inline SturmChain anti_2p_closed_form(long p)
{
    SturmChain c;
    c.polys.push_back(RatPoly{1});
    c.polys.emplace_back(std::vector<BigRational>{make_rational(p - 1, p), BigRational(1)});
    for (long n = 2; n <= p; ++n) {
        std::vector<BigRational> v(static_cast<std::size_t>(n) + 1);
        v[static_cast<std::size_t>(n)] = 1;
        v[static_cast<std::size_t>(n) - 1] = make_rational(2 * p - n, 2 * p - n + 1);
        v[0] += make_rational(n % 2 == 0 ? 1 : -1, 2 * p - n + 1);
        c.polys.emplace_back(std::move(v));
    }
    const auto up = static_cast<std::size_t>(p);
    std::vector<BigRational> a2p(up + 2);
    a2p[up + 1] = 1;
    a2p[up] = 1;
    a2p[1] = -1;
    a2p[0] = -1;
    c.polys.emplace_back(std::move(a2p));

    c.verblunsky.push_back(make_rational(1 - p, p));
    for (long n = 1; n <= p - 1; ++n)
        c.verblunsky.push_back(make_rational(n % 2 == 0 ? 1 : -1, 2 * p - n));
    c.verblunsky.emplace_back(1);
    return c;
}

inline BigRational adjoined_verblunsky(long n, long M)
{
    if (n % 2 == 0)
        return make_rational(-2 * (n - M + 1), (n + 1) * (n - 2 * M + 1));
    return make_rational(2 * M, n * n - 2 * (M - 1) * n - 2 * M);
}

inline BigRational adjoined_slope(long n, long M)
{
    if (n % 2 == 0)
        return make_rational(2 * (2 * M - n - 1), 2 * M * n - n * n + 1);
    return make_rational(2, n);
}

inline SturmChain adjoined_closed_form(long M)
{
    SturmChain c;
    for (long n = 0; n <= M - 2; ++n)
        c.verblunsky.push_back(adjoined_verblunsky(n, M));
    c.verblunsky.emplace_back(-1);

    c.polys.push_back(RatPoly{1});
    for (long n = 1; n <= M - 1; ++n) {
        // Coefficients below the top are linear in k: -a_{n-1} + beta_n k.
        const BigRational intercept = -c.verblunsky[static_cast<std::size_t>(n - 1)];
        const BigRational slope = adjoined_slope(n, M);
        std::vector<BigRational> v(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k < n; ++k)
            v[static_cast<std::size_t>(k)] = intercept + slope * k;
        v[static_cast<std::size_t>(n)] = 1;
        c.polys.emplace_back(std::move(v));
    }
    c.polys.push_back(adjoined_kronecker(static_cast<std::uint64_t>(M)));
    return c;
}

} // namespace detail

/// Chain assembled directly from the closed-form coefficient expressions of a
/// known family, with no recursion. param is N+1 for the free and single-moment
/// families, the odd prime p for anti_2p and the odd M for adjoined.
inline SturmChain closed_form_chain(ClosedFamily family, std::uint64_t param)
{
    SturmChain c;
    switch (family) {
    case ClosedFamily::free_family:
    case ClosedFamily::single_moment:
        if (param < 1)
            throw Error(ErrorKind::BadParam, "closed form needs N+1 >= 1");
        c = family == ClosedFamily::free_family ? detail::free_closed_form(param)
                                                : detail::single_moment_closed_form(param);
        break;
    case ClosedFamily::anti_2p:
        if (param < 3 || !numtheory::is_prime(param))
            throw Error(ErrorKind::BadParam, "anti_2p closed form needs an odd prime p, got " + std::to_string(param));
        c = detail::anti_2p_closed_form(static_cast<long>(param));
        break;
    case ClosedFamily::adjoined:
        if (param < 3 || param % 2 == 0)
            throw Error(ErrorKind::BadParam, "adjoined closed form needs odd M >= 3, got " + std::to_string(param));
        c = detail::adjoined_closed_form(static_cast<long>(param));
        break;
    }
    c.norms = norms_from(c.verblunsky);
    return c;
}

struct Prop6Result {
    BigRational a_last;
    std::optional<BigRational> a_before_last;
    bool pass = false;
};

/// a_N = -1 and a_{N-1} = mu(M)/phi(M) for the chain of C_M.
inline Prop6Result prop6_check(std::uint64_t M)
{
    if (M < 2)
        throw Error(ErrorKind::BadParam, "prop6_check needs M >= 2");
    const SturmChain c = build_chain(cyclotomic(M));
    Prop6Result r;
    const std::size_t N = c.last_index();
    r.a_last = c.verblunsky[N];
    r.pass = r.a_last == -1;
    if (N >= 1) {
        r.a_before_last = c.verblunsky[N - 1];
        const BigRational expected = make_rational(numtheory::mobius(M), static_cast<long>(numtheory::totient(M)));
        r.pass = r.pass && *r.a_before_last == expected;
    }
    return r;
}

} // namespace popuc

#endif // POPUC_CHAIN_HPP
