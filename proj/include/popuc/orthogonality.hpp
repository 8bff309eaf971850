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

#ifndef POPUC_ORTHOGONALITY_HPP
#define POPUC_ORTHOGONALITY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "chain.hpp"
#include "error.hpp"
#include "numtheory.hpp"
#include "ratpoly.hpp"

namespace popuc {

/// Discrete measure on roots of unity. Weights are normalized to sum 1;
/// weight * scale gives the unnormalized value of a closed-form display.
struct Spectrum {
    std::vector<UnityRoot> points;
    std::vector<double> weights;
    double scale = 1.0;

    std::size_t size() const noexcept { return points.size(); }
    double raw_weight(std::size_t i) const { return weights[i] * scale; }

    std::optional<double> weight_at(const UnityRoot& z) const
    {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == z)
                return weights[i];
        return std::nullopt;
    }
};

struct GramReport {
    std::size_t size = 0;
    double max_offdiag = 0.0;
    double max_diag_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

namespace detail {

inline void check_roots(const SturmChain& chain, const std::vector<UnityRoot>& roots)
{
    if (roots.size() != chain.degree())
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(chain.degree()) + " spectrum points, got " +
                                                      std::to_string(roots.size()));
}

} // namespace detail

/// w_s = h_N / (Phi'_{N+1}(z_s) conj(Phi_N(z_s))) at the zeros of Phi_{N+1}.
inline Spectrum sturm_weights(const SturmChain& chain, const std::vector<UnityRoot>& roots)
{
    detail::check_roots(chain, roots);
    const std::size_t N = chain.last_index();
    const double hN = chain.norms[N].get_d();
    const std::vector<double> dseed = chain.seed().derivative().to_doubles();
    const std::vector<double> phiN = chain.polys[N].to_doubles();
    Spectrum s;
    s.points = roots;
    s.weights.reserve(roots.size());
    for (const auto& z : roots) {
        const ComplexValue w = hN / (eval_at_unity(dseed, z) * std::conj(eval_at_unity(phiN, z)));
        if (!(w.real() > 0.0) || std::abs(w.imag()) > 1e-9 * std::abs(w))
            throw Error(ErrorKind::NonPositiveWeight,
                        "weight at " + z.fraction() + " is (" + std::to_string(w.real()) + ", " + std::to_string(w.imag()) + ")");
        s.weights.push_back(w.real());
    }
    return s;
}

/// (N+1) h_N / |Phi'_{N+1}(z_s)|^2, the same weights written through the
/// Sturmian choice Phi_N = Phi'_{N+1}/(N+1).
inline std::vector<double> sturm_weights_modulus(const SturmChain& chain, const std::vector<UnityRoot>& roots)
{
    detail::check_roots(chain, roots);
    const std::size_t N = chain.last_index();
    const double factor = static_cast<double>(N + 1) * chain.norms[N].get_d();
    const std::vector<double> dseed = chain.seed().derivative().to_doubles();
    std::vector<double> out;
    for (const auto& z : roots)
        out.push_back(factor / std::norm(eval_at_unity(dseed, z)));
    return out;
}

enum class WeightFamily { binary_pq, anti_2p, adjoined };

namespace detail {

inline Spectrum normalized(std::vector<UnityRoot> points, std::vector<double> raw)
{
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    Spectrum s;
    double total = 0.0;
    for (double w : raw)
        total += w;
    for (std::size_t i : order) {
        s.points.push_back(points[i]);
        s.weights.push_back(raw[i] / total);
    }
    s.scale = total;
    return s;
}

inline double sq(double x) { return x * x; }

} // namespace detail

/// Spectrum from the closed-form weight expressions of a family, sorted by angle.
/// binary_pq takes (p, q); anti_2p takes p; adjoined takes M.
inline Spectrum family_weights(WeightFamily family, std::uint64_t first, std::uint64_t second = 0)
{
    using std::numbers::pi;
    std::vector<UnityRoot> points;
    std::vector<double> raw;
    switch (family) {
    case WeightFamily::binary_pq: {
        const std::uint64_t p = first, q = second;
        if (p < 3 || q <= p || !numtheory::is_prime(p) || !numtheory::is_prime(q))
            throw Error(ErrorKind::BadParam, "binary_pq weights need odd primes p < q");
        const double dp = static_cast<double>(p), dq = static_cast<double>(q);
        for (auto y : numtheory::coprime_residues(p * q)) {
            const double dy = static_cast<double>(y);
            points.emplace_back(static_cast<std::int64_t>(y), static_cast<std::int64_t>(p * q));
            raw.push_back(detail::sq(std::sin(pi * dy / dp)) * detail::sq(std::sin(pi * dy / dq)) /
                          detail::sq(std::sin(pi * dy / (dp * dq))));
        }
        break;
    }
    case WeightFamily::anti_2p: {
        const std::uint64_t p = first;
        if (p < 3 || !numtheory::is_prime(p))
            throw Error(ErrorKind::BadParam, "anti_2p weights need an odd prime p");
        const double dp = static_cast<double>(p);
        for (std::uint64_t k = 0; k < p; ++k) {
            points.emplace_back(static_cast<std::int64_t>(k), static_cast<std::int64_t>(p));
            raw.push_back(1.0 / (2.0 * dp * dp * detail::sq(std::cos(pi * static_cast<double>(k) / dp))));
        }
        points.emplace_back(1, 2);
        raw.push_back(0.5);
        break;
    }
    case WeightFamily::adjoined: {
        const std::uint64_t M = first;
        if (M < 3 || M % 2 == 0)
            throw Error(ErrorKind::BadParam, "adjoined weights need odd M >= 3");
        const double dm = static_cast<double>(M);
        for (std::uint64_t k = 1; k < M; ++k) {
            points.emplace_back(static_cast<std::int64_t>(k), static_cast<std::int64_t>(M));
            raw.push_back(detail::sq(std::tan(static_cast<double>(k) * pi / dm)) / (dm * dm));
        }
        points.emplace_back(1, 2);
        raw.push_back(1.0);
        break;
    }
    }
    return detail::normalized(std::move(points), std::move(raw));
}

/// G_nm = sum_s w_s Phi_n(z_s) conj(Phi_m(z_s)) against h_n delta_nm for 0 <= n, m <= N.
/// Summation runs over s in ascending order.
inline GramReport gram_verify(const SturmChain& chain, const Spectrum& spectrum, double tolerance)
{
    const std::size_t count = chain.degree();
    if (spectrum.size() != count || spectrum.weights.size() != count)
        throw Error(ErrorKind::DimensionMismatch, "spectrum has " + std::to_string(spectrum.size()) + " points, chain needs " +
                                                      std::to_string(count));
    // values[n][s] = Phi_n(z_s)
    std::vector<std::vector<ComplexValue>> values(count, std::vector<ComplexValue>(count));
    for (std::size_t n = 0; n < count; ++n) {
        const std::vector<double> c = chain.polys[n].to_doubles();
        for (std::size_t s = 0; s < count; ++s)
            values[n][s] = eval_at_unity(c, spectrum.points[s]);
    }
    GramReport r;
    r.size = count;
    r.tolerance = tolerance;
    for (std::size_t n = 0; n < count; ++n) {
        for (std::size_t m = n; m < count; ++m) {
            ComplexValue g{0.0, 0.0};
            for (std::size_t s = 0; s < count; ++s)
                g += spectrum.weights[s] * values[n][s] * std::conj(values[m][s]);
            if (n == m)
                r.max_diag_deviation = std::max(r.max_diag_deviation, std::abs(g - chain.norms[n].get_d()));
            else
                r.max_offdiag = std::max(r.max_offdiag, std::abs(g));
        }
    }
    r.pass = r.max_offdiag <= tolerance && r.max_diag_deviation <= tolerance;
    return r;
}

enum class TrigSum { sec_sum, tan_sum };

struct TrigIdentityResult {
    double value = 0.0;
    double expected = 0.0;
    bool pass = false;
};

/// sum_{k=0}^{M-1} sec^2(pi k / M) = M^2 and sum_{k=1}^{M-1} tan^2(pi k / M) = M (M - 1), M odd.
inline TrigIdentityResult trig_identity_check(TrigSum kind, std::uint64_t M)
{
    using std::numbers::pi;
    if (M % 2 == 0)
        throw Error(ErrorKind::BadParam, "trig identities hold for odd M only");
    if (kind == TrigSum::tan_sum && M < 3)
        throw Error(ErrorKind::BadParam, "tan_sum needs M >= 3");
    const double dm = static_cast<double>(M);
    TrigIdentityResult r;
    if (kind == TrigSum::sec_sum) {
        for (std::uint64_t k = 0; k < M; ++k)
            r.value += 1.0 / detail::sq(std::cos(pi * static_cast<double>(k) / dm));
        r.expected = dm * dm;
    } else {
        for (std::uint64_t k = 1; k < M; ++k)
            r.value += detail::sq(std::tan(static_cast<double>(k) * pi / dm));
        r.expected = dm * (dm - 1.0);
    }
    r.pass = std::abs(r.value - r.expected) <= 1e-8 * dm * dm;
    return r;
}

} // namespace popuc

#endif // POPUC_ORTHOGONALITY_HPP
