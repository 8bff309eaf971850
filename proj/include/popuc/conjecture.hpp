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

#ifndef POPUC_CONJECTURE_HPP
#define POPUC_CONJECTURE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "error.hpp"
#include "kronecker.hpp"
#include "numtheory.hpp"

namespace popuc {

struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0; // inclusive
    bool empty = true;
};

struct Mismatch {
    std::size_t index;
    BigRational predicted;
    BigRational actual;
};

/// Head and tail formulas both claim this index and disagree with each other.
struct FormulaOverlapConflict {
    std::size_t index;
    BigRational head;
    BigRational tail;
};

struct PairReport {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::size_t N = 0;
    IndexRange head_range;
    IndexRange tail_range;
    std::vector<Mismatch> mismatches;
    std::vector<FormulaOverlapConflict> conflicts;
    bool pass = false;
};

namespace detail {

inline void check_prime_pair(std::uint64_t p, std::uint64_t q)
{
    if (p < 3 || q <= p || !numtheory::is_prime(p) || !numtheory::is_prime(q))
        throw Error(ErrorKind::BadParam, "need odd primes p < q, got (" + std::to_string(p) + ", " + std::to_string(q) + ")");
}

} // namespace detail

/// Predicted a_n for 0 <= n < q - p, with n = p m + r.
inline BigRational head_prediction(std::uint64_t p, std::uint64_t q, std::size_t n)
{
    detail::check_prime_pair(p, q);
    if (n >= q - p)
        throw Error(ErrorKind::IndexOutOfRange, "head index " + std::to_string(n) + " outside [0, q-p)");
    const long lp = static_cast<long>(p);
    const long m = static_cast<long>(n / p);
    const long r = static_cast<long>(n % p);
    if (r == 0)
        return make_rational(lp - 1, (m + 1) * lp);
    return make_rational(-1, (m + 2) * lp - r);
}

/// Predicted a_{N-n-1} for 0 <= n <= q - 2, N = (p-1)(q-1) - 1.
inline BigRational tail_prediction(std::uint64_t p, std::uint64_t q, std::size_t n)
{
    detail::check_prime_pair(p, q);
    const long N = static_cast<long>((p - 1) * (q - 1)) - 1;
    const long ln = static_cast<long>(n);
    if (n > q - 2 || N - ln - 1 < 0)
        throw Error(ErrorKind::IndexOutOfRange, "tail offset " + std::to_string(n) + " outside [0, q-2]");
    const long lp = static_cast<long>(p);
    if ((ln + 1) % lp == 0)
        return make_rational(-(lp - 1), N - ln - 1 + lp);
    return make_rational(1, N + 1 - ln + 2 * (ln % lp));
}

/// Compare both formulas against the exact chain of C_pq. Also checks
/// a_N = -1 and a_{N-1} = 1/(N+1).
inline PairReport check_pair(std::uint64_t p, std::uint64_t q)
{
    detail::check_prime_pair(p, q);
    const SturmChain chain = build_chain(cyclotomic(p * q));
    const auto& a = chain.verblunsky;
    PairReport r;
    r.p = p;
    r.q = q;
    r.N = chain.last_index();
    const std::size_t N = r.N;

    std::vector<std::optional<BigRational>> head(N + 1), tail(N + 1);
    for (std::size_t n = 0; n < q - p && n < N; ++n)
        head[n] = head_prediction(p, q, n);
    if (q - p > 0 && N > 0) {
        r.head_range = {0, std::min<std::size_t>(q - p, N) - 1, false};
    }
    for (std::size_t n = 0; n <= q - 2 && n + 1 <= N; ++n)
        tail[N - n - 1] = tail_prediction(p, q, n);
    if (N >= 1) {
        const std::size_t reach = std::min<std::size_t>(q - 2, N - 1);
        r.tail_range = {N - 1 - reach, N - 1, false};
    }

    for (std::size_t i = 0; i < N; ++i) {
        if (head[i] && tail[i] && *head[i] != *tail[i])
            r.conflicts.push_back({i, *head[i], *tail[i]});
        for (const auto* pred : {&head[i], &tail[i]})
            if (*pred && **pred != a[i])
                r.mismatches.push_back({i, **pred, a[i]});
    }
    if (a[N] != -1)
        r.mismatches.push_back({N, BigRational(-1), a[N]});
    if (N >= 1) {
        const BigRational expected = make_rational(1, static_cast<long>(N + 1));
        if (a[N - 1] != expected)
            r.mismatches.push_back({N - 1, expected, a[N - 1]});
    }
    r.pass = r.mismatches.empty();
    return r;
}

/// All odd prime pairs p < q <= q_max, ordered by (q, p).
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_pairs(std::uint64_t q_max)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    const auto primes = numtheory::odd_primes_up_to(q_max);
    for (std::size_t j = 0; j < primes.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs.emplace_back(primes[i], primes[j]);
    return pairs;
}

using ScanProgress = std::function<void(const PairReport&, std::size_t done, std::size_t total)>;

/// Runs check_pair over every pair on a pool of workers (0 = hardware
/// concurrency). Reports come back in (q, p) order regardless of scheduling.
inline std::vector<PairReport> scan(std::uint64_t q_max, unsigned workers = 0, const ScanProgress& progress = {})
{
    const auto pairs = scan_pairs(q_max);
    if (pairs.empty())
        throw Error(ErrorKind::BadParam, "no odd prime pairs p < q <= " + std::to_string(q_max));
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(pairs.size()));

    std::vector<PairReport> reports(pairs.size());
    // Largest pairs first so the slow builds overlap.
    std::vector<std::size_t> order(pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = order.size() - 1 - i;
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t done = 0;
    std::exception_ptr failure;

    auto work = [&] {
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= order.size())
                return;
            const std::size_t i = order[slot];
            try {
                PairReport rep = check_pair(pairs[i].first, pairs[i].second);
                std::lock_guard lock(mu);
                reports[i] = std::move(rep);
                ++done;
                if (progress)
                    progress(reports[i], done, pairs.size());
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
    return reports;
}

} // namespace popuc

#endif // POPUC_CONJECTURE_HPP
