#pragma once

#include <vector>

#include "canonical.hpp"
#include "core.hpp"
#include "error.hpp"
#include "ssyt.hpp"

namespace narcissus {

/// Canonical SCN profile on n voters to tableau of order n-1:
/// T(i, j) = n + 1 - pos(≻_{n+1-j}, i), i.e. row i records the reverted
/// positions of alternative i in the orders of voters n, n-1, …, i+1.
inline Ssyt profile_to_ssyt(const PreferenceProfile& p) {
    const int n = p.size();
    detail::require(n >= 2, ErrorCode::precondition_violated, "need at least two voters");
    detail::require(check_canonical_scn(p), ErrorCode::precondition_violated,
                    "profile is not a canonical single-crossing narcissistic profile");
    TableauRows rows(n - 1);
    for (Alternative i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n - i; ++j) rows[i - 1].push_back(n + 1 - p.voter(n + 1 - j).position_of(i));
    }
    return Ssyt(std::move(rows));
}

/// Inverse map. Voter 1 carries no tableau data and gets 1≻2≻…≻n. Voter
/// i ≥ 2 puts each j < i at position n + 1 - T(j, n+1-i); the slots left
/// over after i itself take i+1, …, n in increasing order, as
/// single-peakedness along 1▷…▷n forces.
inline PreferenceProfile ssyt_to_profile(const Ssyt& t) {
    const int n = t.order() + 1;
    std::vector<std::vector<Alternative>> rankings;
    rankings.reserve(n);
    rankings.push_back(detail::iota_vector(n));
    for (Voter i = 2; i <= n; ++i) {
        std::vector<Alternative> r(n, 0);
        r[0] = i;
        for (Alternative j = 1; j < i; ++j) {
            const int position = n + 1 - t.at(j, n + 1 - i);
            detail::require(position >= 2 && r[position - 1] == 0, ErrorCode::internal_error,
                            "tableau assigns two alternatives to one position");
            r[position - 1] = j;
        }
        Alternative next = i + 1;
        for (auto& slot : r) {
            if (slot == 0) slot = next++;
        }
        rankings.push_back(std::move(r));
    }
    PreferenceProfile p = PreferenceProfile::from_rankings(rankings);

    // i ≻ i-1 ≻ … ≻ 1 and i ≻ i+1 ≻ … ≻ n as subsequences of voter i
    for (Voter i = 1; i <= n; ++i) {
        const auto& o = p.voter(i);
        for (Alternative a = 2; a < i; ++a) detail::require(o.prefers(a, a - 1), ErrorCode::internal_error, "left side not descending");
        for (Alternative a = i + 1; a < n; ++a) detail::require(o.prefers(a, a + 1), ErrorCode::internal_error, "right side not ascending");
    }
    return p;
}

}  // namespace narcissus
