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

#include <popuc/chain.hpp>
#include <popuc/io.hpp>

#include "helpers.hpp"

using namespace popuc;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<BigRational> rationals(std::initializer_list<std::pair<long, long>> v)
{
    std::vector<BigRational> out;
    for (auto [n, d] : v)
        out.push_back(q(n, d));
    return out;
}

template <class F>
void expect_error(ErrorKind kind, F&& f)
{
    try {
        f();
        FAIL() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

void expect_chain_invariants(const SturmChain& c)
{
    const std::size_t top = c.degree();
    ASSERT_EQ(c.verblunsky.size(), top);
    ASSERT_EQ(c.norms.size(), top);
    EXPECT_EQ(c.polys[0], RatPoly{1});
    for (std::size_t n = 0; n <= top; ++n) {
        ASSERT_TRUE(c.polys[n].is_monic());
        ASSERT_EQ(c.polys[n].degree(), n);
    }
    const std::size_t N = top - 1;
    for (std::size_t n = 0; n < N; ++n)
        EXPECT_LT(abs(c.verblunsky[n]), 1) << "a_" << n;
    EXPECT_TRUE(is_unimodular(c.verblunsky[N]));
    EXPECT_EQ(c.verblunsky[N], -c.seed().constant_term());
    for (std::size_t n = 0; n <= N; ++n) {
        EXPECT_EQ(c.verblunsky[n], -c.polys[n + 1].constant_term());
        EXPECT_EQ(forward_step(c.polys[n], c.verblunsky[n]), c.polys[n + 1]) << "n=" << n;
    }
    EXPECT_EQ(c.norms[0], 1);
    for (std::size_t n = 1; n <= N; ++n) {
        EXPECT_EQ(c.norms[n], c.norms[n - 1] * (1 - c.verblunsky[n - 1] * c.verblunsky[n - 1]));
        EXPECT_GT(c.norms[n], 0);
    }
    EXPECT_EQ(reciprocal(c.seed(), top), c.seed() * BigRational(-c.verblunsky[N]));
}

} // namespace

TEST(InverseStep, Examples)
{
    const auto step = inverse_step(RatPoly({q(1, 4), q(1, 2), q(3, 4), q(1)}));
    EXPECT_EQ(step.phi, RatPoly({q(1, 3), q(2, 3), q(1)}));
    EXPECT_EQ(step.a, q(-1, 4));
    for (std::size_t n = 1; n < 6; ++n) {
        const auto s = inverse_step(RatPoly::monomial(n));
        EXPECT_EQ(s.phi, RatPoly::monomial(n - 1));
        EXPECT_EQ(s.a, 0);
    }
}

TEST(InverseStep, Errors)
{
    expect_error(ErrorKind::UnimodularA, [] { inverse_step(RatPoly{1, 0, 0, 0, 1}); });
    expect_error(ErrorKind::UnimodularA, [] { inverse_step(RatPoly{3, 1}); });
    expect_error(ErrorKind::InvalidArgument, [] { inverse_step(RatPoly{1, 2}); });
    expect_error(ErrorKind::InvalidArgument, [] { inverse_step(RatPoly{1}); });
}

TEST(BuildChain, FreeSeed)
{
    const SturmChain c = build_chain(RatPoly::unity_minus_one(4));
    EXPECT_EQ(c.verblunsky, rationals({{0, 1}, {0, 1}, {0, 1}, {1, 1}}));
    for (std::size_t n = 0; n < 4; ++n)
        EXPECT_EQ(c.polys[n], RatPoly::monomial(n));
    expect_chain_invariants(c);
}

TEST(BuildChain, CyclotomicTables)
{
    EXPECT_EQ(build_chain(cyclotomic(15)).verblunsky,
              rationals({{2, 3}, {-1, 5}, {-9, 16}, {1, 5}, {-2, 7}, {1, 9}, {1, 8}, {-1, 1}}));
    EXPECT_EQ(build_chain(cyclotomic(20)).verblunsky,
              rationals({{0, 1}, {1, 2}, {0, 1}, {-1, 3}, {0, 1}, {1, 4}, {0, 1}, {-1, 1}}));
    EXPECT_EQ(build_chain(cyclotomic(21)).verblunsky,
              rationals({{2, 3}, {-1, 5}, {-1, 4}, {1, 3}, {-1, 2}, {-1, 4}, {1, 10}, {1, 9}, {-2, 11}, {1, 13}, {1, 12},
                         {-1, 1}}));
    expect_chain_invariants(build_chain(cyclotomic(21)));
}

TEST(BuildChain, TopOfChainIsScaledDerivative)
{
    const SturmChain c = build_chain(cyclotomic(15));
    EXPECT_EQ(c.polys[8], cyclotomic(15));
    EXPECT_EQ(c.polys[7], derivative_monic(cyclotomic(15)));
    // h_n from the published a_n values.
    BigRational h = 1;
    for (std::size_t n = 1; n < c.norms.size(); ++n) {
        h *= 1 - c.verblunsky[n - 1] * c.verblunsky[n - 1];
        EXPECT_EQ(c.norms[n], h);
    }
}

TEST(BuildChain, RejectsInadmissibleSeeds)
{
    // C_6^2 has double roots: the chain runs into |a| = 1 before reaching Phi_0.
    expect_error(ErrorKind::UnimodularA, [] { build_chain(cyclotomic(6) * cyclotomic(6)); });
    expect_error(ErrorKind::UnimodularA, [] { build_chain(cyclotomic(1) * cyclotomic(1)); });
    expect_error(ErrorKind::UnimodularA, [] { build_chain(adjoined_kronecker(3) * cyclotomic(2)); });
    expect_error(ErrorKind::DuplicateFactor, [] { build_chain(KroneckerSpec({6, 6})); });
    expect_error(ErrorKind::ZeroRoot, [] { build_chain(RatPoly{0, -1, 0, 1}); });
    expect_error(ErrorKind::InadmissibleSeed, [] { build_chain(RatPoly{2, 1}); });
    expect_error(ErrorKind::InadmissibleSeed, [] { build_chain(RatPoly{-1, 1, 1}); });
    expect_error(ErrorKind::InvalidArgument, [] { build_chain(RatPoly{1, 2}); });
}

TEST(ForwardStep, Examples)
{
    EXPECT_EQ(forward_step(RatPoly({q(1, 3), q(2, 3), q(1)}), q(-1, 4)), RatPoly({q(1, 4), q(1, 2), q(3, 4), q(1)}));
    EXPECT_EQ(forward_step(RatPoly::monomial(5), q(0)), RatPoly::monomial(6));
    EXPECT_EQ(forward_step(RatPoly{1}, q(-1)), (RatPoly{1, 1}));
}

TEST(NegateChain, Examples)
{
    const SturmChain c5 = build_chain(cyclotomic(5));
    EXPECT_EQ(c5.verblunsky, rationals({{-1, 2}, {-1, 3}, {-1, 4}, {-1, 1}}));
    const SturmChain c10 = negate_chain(c5);
    EXPECT_EQ(c10.verblunsky, rationals({{1, 2}, {-1, 3}, {1, 4}, {-1, 1}}));
    EXPECT_EQ(c10, build_chain(cyclotomic(10)));

    const SturmChain free4 = build_chain(RatPoly::unity_minus_one(4));
    EXPECT_EQ(negate_chain(free4), free4);
    EXPECT_EQ(negate_chain(negate_chain(c5)), c5);
    expect_chain_invariants(c10);
}

TEST(SieveChain, Examples)
{
    const SturmChain c5 = build_chain(cyclotomic(5));
    const SturmChain c25 = sieve_chain(c5, 5);
    EXPECT_EQ(c25, build_chain(cyclotomic(25)));
    for (std::size_t n = 0; n < c25.verblunsky.size(); ++n) {
        if ((n + 1) % 5 == 0)
            EXPECT_EQ(c25.verblunsky[n], c5.verblunsky[(n + 1) / 5 - 1]);
        else
            EXPECT_EQ(c25.verblunsky[n], 0);
    }
    EXPECT_EQ(sieve_chain(c5, 1), c5);
    const SturmChain c8 = sieve_chain(build_chain(cyclotomic(2)), 4);
    EXPECT_EQ(c8.seed(), (RatPoly{1, 0, 0, 0, 1}));
    EXPECT_EQ(c8.verblunsky, rationals({{0, 1}, {0, 1}, {0, 1}, {-1, 1}}));
    expect_error(ErrorKind::BadParam, [&] { sieve_chain(c5, 0); });
}

TEST(Transforms, MatchRebuiltChainsForCyclotomicSeeds)
{
    for (std::uint64_t M = 1; M <= 60; ++M) {
        const SturmChain c = build_chain(cyclotomic(M));
        const std::size_t top = c.degree();
        RatPoly negated = c.seed().negated_argument();
        if (top % 2 == 1)
            negated = -negated;
        EXPECT_EQ(negate_chain(c), build_chain(negated)) << M;
        for (std::size_t k = 1; k <= 5; ++k)
            EXPECT_EQ(sieve_chain(c, k), build_chain(c.seed().substituted_power(k))) << M << " k=" << k;
    }
}

TEST(Wendroff, Examples)
{
    const auto r = wendroff_phi_n(RatPoly{-1, 0, 1}, RatPoly{1, 0, 1});
    EXPECT_EQ(r.phi, RatPoly::monomial(1));
    EXPECT_FALSE(r.interlacing_violation);

    // z^3 + 1 is the partner of z^3 - 1 that shares Phi_2 = z^2 = K'/3.
    const RatPoly seed = RatPoly::unity_minus_one(3);
    const RatPoly partner = forward_step(derivative_monic(seed), q(-1));
    EXPECT_EQ(partner, (RatPoly{1, 0, 0, 1}));
    const auto w = wendroff_phi_n(seed, partner);
    EXPECT_EQ(w.phi, derivative_monic(seed));
    EXPECT_FALSE(w.interlacing_violation);

    expect_error(ErrorKind::EqualLastCoefficient, [] { wendroff_phi_n(RatPoly{-1, 0, 1}, RatPoly{-1, 0, 1}); });
    expect_error(ErrorKind::BadParam, [] { wendroff_phi_n(RatPoly{-2, 0, 1}, RatPoly{1, 0, 1}); });
}

TEST(Wendroff, FlagsNonInterlacingInput)
{
    // Roots at 0, 120, 180, 240 degrees against 60, 90, 270, 300 degrees.
    const RatPoly first = anticyclotomic(6);
    const RatPoly second = cyclotomic(4) * cyclotomic(6);
    const auto r = wendroff_phi_n(first, second);
    EXPECT_TRUE(r.interlacing_violation);
}

TEST(Wendroff, RecoversSturmianPolynomialForCyclotomicSeeds)
{
    for (std::uint64_t M : {5, 7, 9, 12, 15, 21}) {
        const SturmChain c = build_chain(cyclotomic(M));
        const std::size_t N = c.last_index();
        const RatPoly partner = forward_step(c.polys[N], BigRational(-c.verblunsky[N]));
        const auto w = wendroff_phi_n(c.seed(), partner);
        EXPECT_EQ(w.phi, c.polys[N]) << M;
        EXPECT_FALSE(w.interlacing_violation) << M;
    }
}

TEST(ClosedForm, SingleMoment)
{
    const SturmChain c = closed_form_chain(ClosedFamily::single_moment, 8);
    EXPECT_EQ(c.verblunsky,
              rationals({{-1, 2}, {-1, 3}, {-1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 8}, {-1, 1}}));
    EXPECT_EQ(c.polys[2], RatPoly({q(1, 3), q(2, 3), q(1)}));
    EXPECT_EQ(c, build_chain(cyclotomic(3) * cyclotomic(9)));
}

TEST(ClosedForm, Anti2p)
{
    const SturmChain c = closed_form_chain(ClosedFamily::anti_2p, 3);
    EXPECT_EQ(c.verblunsky, rationals({{-2, 3}, {-1, 5}, {1, 4}, {1, 1}}));
    EXPECT_EQ(c.seed(), (RatPoly{-1, -1, 0, 1, 1}));
    EXPECT_EQ(c, build_chain(anticyclotomic(6)));
}

TEST(ClosedForm, Adjoined)
{
    const SturmChain c = closed_form_chain(ClosedFamily::adjoined, 3);
    EXPECT_EQ(c.verblunsky, rationals({{-4, 5}, {-2, 3}, {-1, 1}}));
    EXPECT_EQ(c.polys[1], RatPoly({q(4, 5), q(1)}));
    EXPECT_EQ(c.polys[2], RatPoly({q(2, 3), q(4, 3), q(1)}));
    // By hand: a = -2/3, numerator (5/9) z^2 + (4/9) z, divided by (5/9) z gives z + 4/5.
    EXPECT_EQ(inverse_step(c.polys[2]).phi, c.polys[1]);
    EXPECT_EQ(c, build_chain(adjoined_kronecker(3)));
}

TEST(ClosedForm, Free)
{
    const SturmChain c = closed_form_chain(ClosedFamily::free_family, 4);
    EXPECT_EQ(c.verblunsky, rationals({{0, 1}, {0, 1}, {0, 1}, {1, 1}}));
    for (std::size_t n = 0; n < 4; ++n)
        EXPECT_EQ(c.polys[n], RatPoly::monomial(n));
}

TEST(ClosedForm, BadParams)
{
    expect_error(ErrorKind::BadParam, [] { closed_form_chain(ClosedFamily::free_family, 0); });
    expect_error(ErrorKind::BadParam, [] { closed_form_chain(ClosedFamily::anti_2p, 9); });
    expect_error(ErrorKind::BadParam, [] { closed_form_chain(ClosedFamily::anti_2p, 2); });
    expect_error(ErrorKind::BadParam, [] { closed_form_chain(ClosedFamily::adjoined, 8); });
    expect_error(ErrorKind::BadParam, [] { closed_form_chain(ClosedFamily::adjoined, 1); });
}

TEST(ClosedForm, EqualsBuiltChainAcrossFamilies)
{
    for (std::uint64_t n = 1; n <= 40; ++n) {
        EXPECT_EQ(closed_form_chain(ClosedFamily::free_family, n), build_chain(RatPoly::unity_minus_one(n))) << n;
        EXPECT_EQ(closed_form_chain(ClosedFamily::single_moment, n),
                  build_chain(RatPoly(std::vector<BigRational>(n + 1, BigRational(1)))))
            << n;
    }
    for (auto p : numtheory::odd_primes_up_to(37))
        EXPECT_EQ(closed_form_chain(ClosedFamily::anti_2p, p), build_chain(anticyclotomic(2 * p))) << p;
    for (std::uint64_t M = 3; M <= 99; M += 2)
        EXPECT_EQ(closed_form_chain(ClosedFamily::adjoined, M), build_chain(adjoined_kronecker(M))) << M;
}

TEST(LastCoefficients, Examples)
{
    const auto r15 = prop6_check(15);
    EXPECT_EQ(r15.a_last, -1);
    EXPECT_EQ(*r15.a_before_last, q(1, 8));
    EXPECT_TRUE(r15.pass);
    const auto r20 = prop6_check(20);
    EXPECT_EQ(*r20.a_before_last, 0);
    EXPECT_TRUE(r20.pass);
    const auto r2 = prop6_check(2);
    EXPECT_EQ(r2.a_last, -1);
    EXPECT_FALSE(r2.a_before_last.has_value());
    EXPECT_TRUE(r2.pass);
    expect_error(ErrorKind::BadParam, [] { prop6_check(1); });
}

TEST(LastCoefficients, HoldsUpTo200)
{
    for (std::uint64_t M = 2; M <= 200; ++M)
        EXPECT_TRUE(prop6_check(M).pass) << M;
}

TEST(SievedRoute, SievedStructureReachesEveryTwoPowerTimesPrimePower)
{
    int covered = 0;
    for (std::uint64_t M = 3; M <= 400; ++M) {
        const auto route = testing_helpers::sieved_cyclotomic_route(M);
        if (!route)
            continue;
        ++covered;
        EXPECT_EQ(*route, build_chain(cyclotomic(M))) << M;
    }
    EXPECT_GT(covered, 80);
}

TEST(ChainProperties, RandomAdmissibleSeeds)
{
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const KroneckerSpec spec = testing_helpers::random_spec(rng, 64);
        const SturmChain c = build_chain(spec);
        expect_chain_invariants(c);
        // Replay from Phi_0.
        RatPoly phi{1};
        for (std::size_t n = 0; n < c.verblunsky.size(); ++n) {
            phi = forward_step(phi, c.verblunsky[n]);
            ASSERT_EQ(phi, c.polys[n + 1]);
        }
    }
}

TEST(ChainIo, JsonAndCsvShape)
{
    const SturmChain c = build_chain(cyclotomic(15));
    const auto j = io::chain_to_json(c);
    EXPECT_EQ(j["degree"], 8);
    EXPECT_EQ(j["verblunsky"][2], "-9/16");
    EXPECT_EQ(j["seed"].size(), 9u);
    EXPECT_EQ(j["polys"].size(), 9u);
    EXPECT_EQ(j["h"][0], "1");
    EXPECT_EQ(j["h"][1], "5/9");
    const std::string csv = io::verblunsky_csv(c);
    EXPECT_EQ(csv.substr(0, 20), "index,a\n0,2/3\n1,-1/5");
}
