#pragma once

#include <narcissus/core.hpp>
#include <narcissus/ssyt.hpp>

namespace narcissus::testing {

// Four voters, single-peaked and single-crossing along 1..4.
inline PreferenceProfile example1() {
    return PreferenceProfile::from_rankings({{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 2, 4, 1}, {4, 3, 2, 1}});
}

// example1 with voter 3 changed to 3 > 2 > 1 > 4: still SPN, no longer SC.
inline PreferenceProfile modified_example() {
    return PreferenceProfile::from_rankings({{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 2, 1, 4}, {4, 3, 2, 1}});
}

// The two canonical SPN profiles on three voters.
inline PreferenceProfile three_voter_left() {
    return PreferenceProfile::from_rankings({{1, 2, 3}, {2, 1, 3}, {3, 2, 1}});
}
inline PreferenceProfile three_voter_right() {
    return PreferenceProfile::from_rankings({{1, 2, 3}, {2, 3, 1}, {3, 2, 1}});
}

inline PreferenceProfile two_voter_canonical() { return PreferenceProfile::from_rankings({{1, 2}, {2, 1}}); }

// b > c > a, c > a > b, a > b > c with a,b,c = 1,2,3: each alternative is
// last for exactly one voter.
inline PreferenceProfile condorcet_triple() {
    return PreferenceProfile::from_rankings({{2, 3, 1}, {3, 1, 2}, {1, 2, 3}});
}

// a > b > c > d and b > d > c > a (a,b,c,d = 1,2,3,4), padded to a square
// profile with two more copies of the first order.
inline PreferenceProfile alpha_pair() {
    return PreferenceProfile::from_rankings({{1, 2, 3, 4}, {2, 4, 3, 1}, {1, 2, 3, 4}, {1, 2, 3, 4}});
}

inline TableauRows example1_tableau() { return {{1, 1, 1}, {2, 3}, {3}}; }

}  // namespace narcissus::testing
