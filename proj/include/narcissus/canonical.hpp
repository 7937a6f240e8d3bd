#pragma once

#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "recognition.hpp"

namespace narcissus {

/// A permutation σ of 1..n applied to voter ids and alternative ids at once.
class Relabeling {
public:
    explicit Relabeling(std::vector<int> map) : perm_(std::move(map), "relabeling must be a permutation of 1..n") {}

    static Relabeling identity(int n) { return Relabeling(detail::iota_vector(n)); }

    int size() const noexcept { return perm_.size(); }

    /// σ(x).
    int operator()(int x) const noexcept { return perm_.at(x); }

    std::span<const int> map() const noexcept { return perm_.sequence(); }

    Relabeling inverse() const {
        std::vector<int> inv(size());
        for (int x = 1; x <= size(); ++x) inv[(*this)(x) - 1] = x;
        return Relabeling(std::move(inv));
    }

    /// Voter σ(v) of the result holds σ applied elementwise to voter v's order.
    PreferenceProfile apply(const PreferenceProfile& p) const {
        detail::require(p.size() == size(), ErrorCode::invalid_argument, "relabeling and profile sizes differ");
        std::vector<std::vector<Alternative>> rankings(size());
        for (Voter v = 1; v <= size(); ++v) {
            auto& r = rankings[(*this)(v) - 1];
            for (Alternative a : p.voter(v).ranking()) r.push_back((*this)(a));
        }
        return PreferenceProfile::from_rankings(rankings);
    }

    friend bool operator==(const Relabeling&, const Relabeling&) = default;

private:
    detail::Permutation perm_;
};

struct CanonicalForm {
    PreferenceProfile profile;
    Relabeling relabeling;
};

namespace detail {

inline void require_spn(const PreferenceProfile& p) {
    require(is_narcissistic(p), ErrorCode::precondition_violated, "profile is not narcissistic");
    require(check_single_peaked(p).holds, ErrorCode::precondition_violated, "profile is not single-peaked");
}

/// σ sending the k-th alternative of `order` to k.
inline Relabeling relabeling_along(const PreferenceOrder& order) {
    std::vector<int> map(order.size());
    for (int k = 1; k <= order.size(); ++k) map[order.at(k) - 1] = k;
    return Relabeling(std::move(map));
}

}  // namespace detail

/// Two voters (a < b) whose orders are exact reverses; in an SPN profile
/// they are the voters that rank each other last.
inline std::pair<Voter, Voter> find_reverse_pair(const PreferenceProfile& p) {
    detail::require(p.size() >= 2, ErrorCode::precondition_violated, "a reverse pair needs two voters");
    auto rp = detail::reverse_pair(p);
    detail::require(rp.has_value(), ErrorCode::precondition_violated, "no two voters have mutually reversed orders");
    return *rp;
}

/// Relabels an SPN profile so that voter 1 is 1≻2≻…≻n, voter n is the
/// reverse, and 1▷2▷…▷n is a single-peaked axis.
///
/// Either member of the reverse pair can be sent to voter 1; the two
/// outcomes are mirror images. The one whose profile compares greater
/// (voter by voter, lexicographically on rankings) is kept, which makes the
/// result independent of the input labeling.
inline CanonicalForm canonicalize(const PreferenceProfile& p) {
    detail::require_spn(p);
    const int n = p.size();
    if (n == 1) return {p, Relabeling::identity(1)};

    const auto [a, b] = find_reverse_pair(p);
    Relabeling from_a = detail::relabeling_along(p.voter(a));
    Relabeling from_b = detail::relabeling_along(p.voter(b));
    PreferenceProfile via_a = from_a.apply(p);
    PreferenceProfile via_b = from_b.apply(p);
    if (via_b > via_a) return {std::move(via_b), std::move(from_b)};
    return {std::move(via_a), std::move(from_a)};
}

/// All five canonical-form conditions for an SCN profile:
///   voter i ranks i first; voter 1 is 1≻…≻n; voter n is n≻…≻1;
///   single-peaked and single-crossing along 1▷…▷n; and every alternative
///   a < n has non-decreasing positions across voters a+1, …, n.
inline bool check_canonical_scn(const PreferenceProfile& p) {
    const int n = p.size();
    if (!is_narcissistic(p)) return false;
    if (p.voter(1) != PreferenceOrder::identity(n)) return false;
    if (p.voter(n) != PreferenceOrder::reversed_identity(n)) return false;
    const Axis line = Axis::identity(n);
    if (!is_single_peaked_wrt(p, line) || !is_single_crossing_wrt(p, line)) return false;
    for (Alternative a = 1; a < n; ++a) {
        for (Voter v = a + 2; v <= n; ++v) {
            if (p.voter(v).position_of(a) < p.voter(v - 1).position_of(a)) return false;
        }
    }
    return true;
}

}  // namespace narcissus
