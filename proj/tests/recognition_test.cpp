#include <gtest/gtest.h>

#include <random>

#include <narcissus/canonical.hpp>
#include <narcissus/enumeration.hpp>
#include <narcissus/oracle.hpp>
#include <narcissus/recognition.hpp>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

namespace narcissus {
namespace {

using testing::example1;
using testing::modified_example;

TEST(Narcissistic, Examples) {
    EXPECT_TRUE(is_narcissistic(example1()));
    EXPECT_FALSE(is_narcissistic(
        PreferenceProfile::from_rankings({{2, 1, 3, 4}, {2, 3, 4, 1}, {3, 2, 4, 1}, {4, 3, 2, 1}})));
    EXPECT_TRUE(is_narcissistic(PreferenceProfile::from_rankings({{1}})));
}

TEST(SinglePeaked, AlongGivenAxis) {
    EXPECT_TRUE(is_single_peaked_wrt(example1(), Axis({1, 2, 3, 4})));
    EXPECT_FALSE(is_single_peaked_wrt(example1(), Axis({2, 1, 3, 4})));
    EXPECT_TRUE(is_single_peaked_wrt(PreferenceProfile::from_rankings({{1}}), Axis({1})));
    EXPECT_THROW(is_single_peaked_wrt(example1(), Axis({1, 2, 3})), Error);
}

TEST(SinglePeaked, ValleyFreeSingleOrder) {
    // one voter, repeated so the profile is square: 2 > 3 > 1 > 4 rises to 2 then falls along 1..4
    const auto p = PreferenceProfile::from_rankings({{2, 3, 1, 4}, {2, 3, 1, 4}, {2, 3, 1, 4}, {2, 3, 1, 4}});
    EXPECT_TRUE(is_single_peaked_wrt(p, Axis({1, 2, 3, 4})));
    EXPECT_FALSE(is_single_peaked_wrt(p, Axis({2, 1, 4, 3})));
}

TEST(SinglePeaked, ExampleOneFindsIdentityAxis) {
    const auto r = check_single_peaked(example1());
    ASSERT_TRUE(r.holds);
    ASSERT_TRUE(r.axis);
    EXPECT_EQ(*r.axis, Axis({1, 2, 3, 4}));
    EXPECT_FALSE(r.witness);
}

TEST(SinglePeaked, CondorcetTripleHasWorstWitness) {
    const auto p = testing::condorcet_triple();
    EXPECT_FALSE(testing::sp_axis_exists(p));
    const auto r = check_single_peaked(p);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (Witness{WitnessKind::worst, {1, 2, 3}, {1, 2, 3}}));
    EXPECT_TRUE(witness_holds(p, *r.witness));
}

TEST(SinglePeaked, AlphaPairHasAlphaWitness) {
    const auto p = testing::alpha_pair();
    EXPECT_FALSE(testing::sp_axis_exists(p));
    const auto r = check_single_peaked(p);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (Witness{WitnessKind::alpha, {1, 2}, {1, 2, 3, 4}}));
    EXPECT_TRUE(witness_holds(p, *r.witness));
    EXPECT_EQ(describe(*r.witness), "alpha-subprofile: alternatives 1,2,3,4; voters 1,2");
}

TEST(SingleCrossing, AlongGivenOrder) {
    EXPECT_TRUE(is_single_crossing_wrt(example1(), Axis({1, 2, 3, 4})));
    EXPECT_FALSE(is_single_crossing_wrt(modified_example(), Axis({1, 2, 3, 4})));
    const auto two = PreferenceProfile::from_rankings({{2, 1}, {2, 1}});
    EXPECT_TRUE(is_single_crossing_wrt(two, Axis({1, 2})));
    EXPECT_TRUE(is_single_crossing_wrt(two, Axis({2, 1})));
    EXPECT_THROW(is_single_crossing_wrt(example1(), Axis({1, 2})), Error);
}

TEST(SingleCrossing, ExampleOneFindsIdentityOrder) {
    const auto r = check_single_crossing(example1());
    ASSERT_TRUE(r.holds);
    EXPECT_EQ(*r.axis, Axis({1, 2, 3, 4}));
}

TEST(SingleCrossing, ModifiedExampleHasDeltaWitness) {
    const auto r = check_single_crossing(modified_example());
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (Witness{WitnessKind::delta, {1, 2, 3, 4}, {1, 4, 2, 3}}));
    EXPECT_EQ(describe(*r.witness), "delta-subprofile: pairs {1,4},{2,3}; voters 1,2,3,4");
    EXPECT_TRUE(witness_holds(modified_example(), *r.witness));
}

TEST(SingleCrossing, SingleVoterHoldsTrivially) {
    const auto r = check_single_crossing(PreferenceProfile::from_rankings({{1}}));
    ASSERT_TRUE(r.holds);
    EXPECT_EQ(*r.axis, Axis({1}));
}

TEST(FindWitness, Examples) {
    EXPECT_EQ(find_witness(modified_example(), Family::single_crossing),
              (Witness{WitnessKind::delta, {1, 2, 3, 4}, {1, 4, 2, 3}}));
    EXPECT_FALSE(find_witness(example1(), Family::single_peaked));
    EXPECT_EQ(find_witness(testing::condorcet_triple(), Family::single_peaked),
              (Witness{WitnessKind::worst, {1, 2, 3}, {1, 2, 3}}));
}

TEST(FindWitness, GammaIsFoundWhenNoDeltaFits) {
    // three voters cannot host a delta; every pair here is split two to one
    const auto p = PreferenceProfile::from_rankings({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    EXPECT_FALSE(testing::sc_order_exists(p));
    const auto w = find_witness(p, Family::single_crossing);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->kind, WitnessKind::gamma);
    EXPECT_EQ(describe(*w), "gamma-subprofile: pairs {1,2},{1,3},{2,3}; voters 1,2,3");
    EXPECT_TRUE(witness_holds(p, *w));
    EXPECT_FALSE(check_single_crossing(p).holds);
}

TEST(FindWitness, TamperedWitnessIsRejected) {
    Witness w{WitnessKind::delta, {1, 2, 3, 4}, {1, 4, 2, 3}};
    EXPECT_TRUE(witness_holds(modified_example(), w));
    EXPECT_FALSE(witness_holds(example1(), w));
    w.voters = {2, 1, 3, 4};
    EXPECT_FALSE(witness_holds(modified_example(), w));
    w.voters = {1, 2, 3, 9};
    EXPECT_FALSE(witness_holds(modified_example(), w));
    EXPECT_FALSE(witness_holds(modified_example(), Witness{WitnessKind::worst, {1, 1, 2}, {1, 2, 3}}));
}

TEST(ScnImpliesSpn, Examples) {
    EXPECT_TRUE(scn_implies_spn_check(example1()));
    for (int n : {4, 5}) {
        int seen = 0;
        for (const auto& p : enumerate_scn(n)) {
            ASSERT_TRUE(scn_implies_spn_check(p));
            ++seen;
        }
        EXPECT_EQ(seen, n == 4 ? 8 : 64);
    }
}

TEST(ScnImpliesSpn, RejectsInputsOutsideItsDomain) {
    try {
        scn_implies_spn_check(modified_example());
        FAIL() << "expected throw";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
    }
    EXPECT_THROW(scn_implies_spn_check(testing::condorcet_triple()), Error);
}

TEST(Recognition, TinyProfilesAlwaysQualify) {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& p : testing::all_profiles(n)) {
            EXPECT_TRUE(check_single_peaked(p).holds);
            EXPECT_TRUE(check_single_crossing(p).holds);
        }
    }
}

// Characterization-based answers against exhaustive search over every
// narcissistic profile with n <= 4.
TEST(Recognition, AgreesWithExhaustiveSearchOnNarcissisticUniverse) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& p : oracle::brute_force_narcissistic(n)) {
            const bool sp = testing::sp_axis_exists(p);
            const bool sc = testing::sc_order_exists(p);
            const auto rsp = check_single_peaked(p);
            const auto rsc = check_single_crossing(p);
            ASSERT_EQ(rsp.holds, sp);
            ASSERT_EQ(rsc.holds, sc);
            ASSERT_EQ(find_witness(p, Family::single_peaked).has_value(), !sp);
            ASSERT_EQ(find_witness(p, Family::single_crossing).has_value(), !sc);
            if (rsp.holds) {
                ASSERT_TRUE(is_single_peaked_wrt(p, *rsp.axis));
                ASSERT_TRUE(is_single_peaked_wrt(p, rsp.axis->reversed()));
            } else {
                ASSERT_TRUE(witness_holds(p, *rsp.witness));
            }
            if (rsc.holds) ASSERT_TRUE(is_single_crossing_wrt(p, *rsc.axis));
            else ASSERT_TRUE(witness_holds(p, *rsc.witness));
        }
    }
}

TEST(Recognition, AgreesWithExhaustiveSearchOnAllThreeVoterProfiles) {
    for (const auto& p : testing::all_profiles(3)) {
        const auto rsp = check_single_peaked(p);
        const auto rsc = check_single_crossing(p);
        ASSERT_EQ(rsp.holds, testing::sp_axis_exists(p));
        ASSERT_EQ(rsc.holds, testing::sc_order_exists(p));
        if (!rsp.holds) {
            ASSERT_TRUE(witness_holds(p, *rsp.witness));
        }
        if (!rsc.holds) {
            ASSERT_TRUE(witness_holds(p, *rsc.witness));
        }
    }
}

TEST(Recognition, AgreesWithExhaustiveSearchOnRandomProfiles) {
    std::mt19937 rng(2024);
    std::vector<std::vector<PreferenceProfile>> spn(7);
    for (int n = 4; n <= 6; ++n) {
        for (const auto& p : enumerate_spn(n)) spn[n].push_back(p);
    }
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 4 + trial % 3;
        // uniform profiles are almost never SP or SC, so two thirds start from a
        // relabeled SPN profile, half of those with one voter replaced
        PreferenceProfile p = testing::random_profile(n, rng);
        if (trial % 3 != 0) {
            const auto& base = spn[n][rng() % spn[n].size()];
            auto r = testing::rankings_of(Relabeling(testing::random_permutation(n, rng)).apply(base));
            if (trial % 2 == 0) r[rng() % n] = testing::random_permutation(n, rng);
            p = PreferenceProfile::from_rankings(r);
        }
        const auto rsp = check_single_peaked(p);
        const auto rsc = check_single_crossing(p);
        ASSERT_EQ(rsp.holds, testing::sp_axis_exists(p));
        ASSERT_EQ(rsc.holds, testing::sc_order_exists(p));
        if (!rsp.holds) {
            ASSERT_TRUE(witness_holds(p, *rsp.witness));
        }
        if (!rsc.holds) {
            ASSERT_TRUE(witness_holds(p, *rsc.witness));
        }
    }
}

TEST(Recognition, LargerGeneralProfilesUseWitnessFirstPath) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = testing::random_profile(9, rng);
        const auto r = check_single_peaked(p);
        if (r.holds) EXPECT_TRUE(is_single_peaked_wrt(p, *r.axis));
        else EXPECT_TRUE(witness_holds(p, *r.witness));
    }
    // single-peaked along 1..9 by construction: every voter 1..9 walks outwards from its peak
    std::vector<std::vector<int>> rankings;
    for (int peak = 1; peak <= 9; ++peak) {
        std::vector<int> r{peak};
        int lo = peak - 1, hi = peak + 1;
        while (lo >= 1 || hi <= 9) {
            if (hi <= 9 && (lo < 1 || (hi + lo) % 2 == 0)) r.push_back(hi++);
            else r.push_back(lo--);
        }
        rankings.push_back(r);
    }
    std::vector<int> shuffled_ids{3, 7, 1, 9, 5, 2, 8, 4, 6};
    for (auto& r : rankings) {
        for (auto& a : r) a = shuffled_ids[a - 1];
    }
    const auto p = PreferenceProfile::from_rankings(rankings);
    const auto r = check_single_peaked(p);
    ASSERT_TRUE(r.holds);
    EXPECT_TRUE(is_single_peaked_wrt(p, *r.axis));
}

TEST(Recognition, DefinitionalAndIntervalFormsAgree) {
    std::mt19937 rng(99);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& p : oracle::brute_force_narcissistic(n)) {
            testing::any_permutation(n, [&](const std::vector<int>& seq) {
                const Axis axis(seq);
                EXPECT_EQ(is_single_peaked_wrt(p, axis), is_single_peaked_wrt_intervals(p, axis));
                EXPECT_EQ(is_single_crossing_wrt(p, axis), is_single_crossing_wrt_intervals(p, axis));
                return false;
            });
        }
    }
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + trial % 6;
        const auto p = testing::random_profile(n, rng);
        const Axis axis(testing::random_permutation(n, rng));
        ASSERT_EQ(is_single_peaked_wrt(p, axis), is_single_peaked_wrt_intervals(p, axis));
        ASSERT_EQ(is_single_crossing_wrt(p, axis), is_single_crossing_wrt_intervals(p, axis));
    }
}

TEST(Recognition, ReversalClosure) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 6;
        const auto p = testing::random_profile(n, rng);
        const Axis axis(testing::random_permutation(n, rng));
        ASSERT_EQ(is_single_peaked_wrt(p, axis), is_single_peaked_wrt(p, axis.reversed()));
        ASSERT_EQ(is_single_crossing_wrt(p, axis), is_single_crossing_wrt(p, axis.reversed()));
    }
}

}  // namespace
}  // namespace narcissus
