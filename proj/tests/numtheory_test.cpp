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

#include <random>

#include <gtest/gtest.h>

#include <popuc/numtheory.hpp>

#include "oracles.hpp"

using namespace popuc;
using namespace popuc::numtheory;

TEST(Factorize, Examples)
{
    EXPECT_TRUE(factorize(1).factors.empty());
    EXPECT_EQ(factorize(20), (FactorMap{{{2, 2}, {5, 1}}}));
    // Frozen from the brute-force oracle.
    const auto brute = oracle::factor(163715);
    ASSERT_EQ(brute.size(), 3u);
    EXPECT_EQ(factorize(163715), (FactorMap{{{5, 1}, {137, 1}, {239, 1}}}));
}

TEST(Factorize, RejectsZero)
{
    try {
        factorize(0);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
}

TEST(Factorize, MatchesTrialDivisionOracle)
{
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const FactorMap fm = factorize(n);
        const auto brute = oracle::factor(n);
        ASSERT_EQ(fm.factors.size(), brute.size()) << n;
        for (std::size_t i = 0; i < brute.size(); ++i) {
            EXPECT_EQ(fm.factors[i].prime, brute[i].first);
            EXPECT_EQ(fm.factors[i].exponent, brute[i].second);
            EXPECT_TRUE(is_prime(fm.factors[i].prime));
        }
        EXPECT_EQ(fm.value(), n);
    }
}

TEST(Totient, Examples)
{
    EXPECT_EQ(totient(1), 1u);
    EXPECT_EQ(totient(8), 4u);
    EXPECT_EQ(totient(15), 8u);
    for (std::uint64_t n = 1; n <= 500; ++n)
        EXPECT_EQ(totient(n), oracle::totient(n)) << n;
}

TEST(Mobius, Examples)
{
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(15), 1);
    EXPECT_EQ(mobius(20), 0);
    EXPECT_EQ(mobius(30), -1);
    for (std::uint64_t n = 1; n <= 2000; ++n)
        EXPECT_EQ(mobius(n), oracle::mobius(n)) << n;
}

TEST(Divisors, Examples)
{
    EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(divisors(6), oracle::divisors(6));
    EXPECT_EQ(divisors(6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
    EXPECT_EQ(divisors(15), (std::vector<std::uint64_t>{1, 3, 5, 15}));
    for (std::uint64_t n = 1; n <= 2000; ++n)
        EXPECT_EQ(divisors(n), oracle::divisors(n)) << n;
}

TEST(CoprimeResidues, Examples)
{
    EXPECT_EQ(coprime_residues(15), (std::vector<std::uint64_t>{1, 2, 4, 7, 8, 11, 13, 14}));
    EXPECT_EQ(coprime_residues(8), (std::vector<std::uint64_t>{1, 3, 5, 7}));
    EXPECT_EQ(coprime_residues(7), (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6}));
    EXPECT_TRUE(coprime_residues(1).empty());
}

TEST(NumtheoryProperties, MultiplicativeOnCoprimePairs)
{
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
    int checked = 0;
    while (checked < 500) {
        const auto a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1)
            continue;
        EXPECT_EQ(totient(a * b), totient(a) * totient(b));
        EXPECT_EQ(mobius(a * b), mobius(a) * mobius(b));
        ++checked;
    }
}

TEST(NumtheoryProperties, DivisorSums)
{
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t phi_sum = 0;
        int mu_sum = 0;
        for (auto d : divisors(n)) {
            phi_sum += totient(d);
            mu_sum += mobius(d);
        }
        ASSERT_EQ(phi_sum, n);
        ASSERT_EQ(mu_sum, n == 1 ? 1 : 0) << n;
    }
}

TEST(NumtheoryProperties, CoprimeResiduesSymmetricAndCounted)
{
    for (std::uint64_t M = 3; M <= 400; ++M) {
        const auto r = coprime_residues(M);
        EXPECT_EQ(r.size(), totient(M));
        for (auto y : r)
            EXPECT_TRUE(std::binary_search(r.begin(), r.end(), M - y));
    }
}
