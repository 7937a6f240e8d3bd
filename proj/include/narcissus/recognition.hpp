#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "error.hpp"

namespace narcissus {

enum class WitnessKind { worst, alpha, gamma, delta };
enum class Family { single_peaked, single_crossing };

/// A forbidden subprofile, stored in role order.
///
/// Roles, writing x ≻_v y for "voter v prefers x to y":
///   worst  voters (i,j,k), alternatives (a,b,c):
///          i: {b,c} ≻ a,   j: {a,c} ≻ b,   k: {a,b} ≻ c
///   alpha  voters (i,j), alternatives (a,b,c,d):
///          i: {a,b} ≻ c ≻ d,   j: {b,d} ≻ c ≻ a
///   gamma  voters (i,j,k), alternatives (a,b,c,d,e,f) read as pairs {a,b},{c,d},{e,f}:
///          i: a≻b, c≻d, e≻f;   j: b≻a, d≻c, e≻f;   k: a≻b, d≻c, f≻e
///   delta  voters (i,j,k,l), alternatives (a,b,c,d) read as pairs {a,b},{c,d}:
///          i: a≻b, c≻d;   j: b≻a, c≻d;   k: a≻b, d≻c;   l: b≻a, d≻c
struct Witness {
    WitnessKind kind;
    std::vector<Voter> voters;
    std::vector<Alternative> alternatives;

    /// Ordered (a,b) pairs for gamma/delta; empty for worst/alpha.
    std::vector<std::pair<Alternative, Alternative>> pairs() const {
        std::vector<std::pair<Alternative, Alternative>> out;
        if (kind == WitnessKind::gamma || kind == WitnessKind::delta) {
            for (std::size_t k = 0; k + 1 < alternatives.size(); k += 2) out.emplace_back(alternatives[k], alternatives[k + 1]);
        }
        return out;
    }

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct RecognitionResult {
    bool holds = false;
    std::optional<Axis> axis;
    std::optional<Witness> witness;
};

inline const char* to_string(WitnessKind kind) noexcept {
    switch (kind) {
        case WitnessKind::worst: return "worst";
        case WitnessKind::alpha: return "alpha";
        case WitnessKind::gamma: return "gamma";
        case WitnessKind::delta: return "delta";
    }
    return "unknown";
}

/// One-line rendering, e.g. "delta-subprofile: pairs {1,4},{2,3}; voters 1,2,3,4".
inline std::string describe(const Witness& w) {
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (int x : xs) {
            if (!s.empty()) s += ',';
            s += std::to_string(x);
        }
        return s;
    };
    std::string s = std::string(to_string(w.kind)) + "-subprofile: ";
    if (w.kind == WitnessKind::gamma || w.kind == WitnessKind::delta) {
        s += "pairs ";
        bool first = true;
        for (auto [a, b] : w.pairs()) {
            if (!first) s += ',';
            first = false;
            s += '{' + std::to_string(a) + ',' + std::to_string(b) + '}';
        }
    } else {
        s += "alternatives " + join(w.alternatives);
    }
    return s + "; voters " + join(w.voters);
}

namespace detail {

inline void require_same_size(const PreferenceProfile& p, const Axis& axis) {
    require(p.size() == axis.size(), ErrorCode::invalid_argument, "axis and profile sizes differ");
}

inline bool all_distinct(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

inline bool matches_worst(const PreferenceProfile& p, const std::vector<Voter>& v, const std::vector<Alternative>& x) {
    const auto &i = p.voter(v[0]), &j = p.voter(v[1]), &k = p.voter(v[2]);
    const Alternative a = x[0], b = x[1], c = x[2];
    return i.prefers(b, a) && i.prefers(c, a) && j.prefers(a, b) && j.prefers(c, b) && k.prefers(a, c) &&
           k.prefers(b, c);
}

inline bool matches_alpha(const PreferenceProfile& p, const std::vector<Voter>& v, const std::vector<Alternative>& x) {
    const auto &i = p.voter(v[0]), &j = p.voter(v[1]);
    const Alternative a = x[0], b = x[1], c = x[2], d = x[3];
    return i.prefers(a, c) && i.prefers(b, c) && i.prefers(c, d) && j.prefers(b, c) && j.prefers(d, c) &&
           j.prefers(c, a);
}

inline bool matches_gamma(const PreferenceProfile& p, const std::vector<Voter>& v, const std::vector<Alternative>& x) {
    const auto &i = p.voter(v[0]), &j = p.voter(v[1]), &k = p.voter(v[2]);
    const Alternative a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5];
    return i.prefers(a, b) && i.prefers(c, d) && i.prefers(e, f) && j.prefers(b, a) && j.prefers(d, c) &&
           j.prefers(e, f) && k.prefers(a, b) && k.prefers(d, c) && k.prefers(f, e);
}

inline bool matches_delta(const PreferenceProfile& p, const std::vector<Voter>& v, const std::vector<Alternative>& x) {
    const auto &i = p.voter(v[0]), &j = p.voter(v[1]), &k = p.voter(v[2]), &l = p.voter(v[3]);
    const Alternative a = x[0], b = x[1], c = x[2], d = x[3];
    return i.prefers(a, b) && i.prefers(c, d) && j.prefers(b, a) && j.prefers(c, d) && k.prefers(a, b) &&
           k.prefers(d, c) && l.prefers(b, a) && l.prefers(d, c);
}

/// Lexicographic witness order: sorted voters, sorted alternatives, then
/// role-order voters and role-order alternatives.
inline auto witness_key(const Witness& w) {
    auto sv = w.voters;
    auto sa = w.alternatives;
    std::sort(sv.begin(), sv.end());
    std::sort(sa.begin(), sa.end());
    return std::make_tuple(sv, sa, w.voters, w.alternatives);
}

inline void keep_smaller(std::optional<Witness>& best, Witness candidate) {
    if (!best || witness_key(candidate) < witness_key(*best)) best = std::move(candidate);
}

/// Calls fn(subset) for every k-subset of 1..n in lexicographic order;
/// stops early when fn returns true.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
    if (k > n) return false;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 1);
    while (true) {
        if (fn(static_cast<const std::vector<int>&>(s))) return true;
        int idx = k - 1;
        while (idx >= 0 && s[idx] == n - k + idx + 1) --idx;
        if (idx < 0) return false;
        ++s[idx];
        for (int t = idx + 1; t < k; ++t) s[t] = s[t - 1] + 1;
    }
}

inline std::optional<Witness> find_worst(const PreferenceProfile& p) {
    const int n = p.size();
    std::optional<Witness> found;
    for_each_subset(n, 3, [&](const std::vector<int>& voters) {
        return for_each_subset(n, 3, [&](const std::vector<int>& alts) {
            // each voter's least preferred member of the triple
            std::vector<Alternative> worst;
            for (Voter v : voters) {
                const auto& o = p.voter(v);
                Alternative w = alts[0];
                for (Alternative x : alts) {
                    if (o.prefers(w, x)) w = x;
                }
                worst.push_back(w);
            }
            if (!all_distinct(worst)) return false;
            found = Witness{WitnessKind::worst, voters, worst};
            return true;
        });
    });
    return found;
}

inline std::optional<Witness> find_alpha(const PreferenceProfile& p) {
    const int n = p.size();
    std::optional<Witness> found;
    for_each_subset(n, 2, [&](const std::vector<int>& voters) {
        return for_each_subset(n, 4, [&](const std::vector<int>& alts) {
            std::optional<Witness> best;
            for (auto roles : {voters, std::vector<int>{voters[1], voters[0]}}) {
                std::vector<int> x = alts;
                do {
                    if (matches_alpha(p, roles, x)) keep_smaller(best, Witness{WitnessKind::alpha, roles, x});
                } while (std::next_permutation(x.begin(), x.end()));
            }
            if (!best) return false;
            found = std::move(best);
            return true;
        });
    });
    return found;
}

inline std::vector<std::pair<Alternative, Alternative>> ordered_pairs_where(
    int n, const auto& predicate) {
    std::vector<std::pair<Alternative, Alternative>> out;
    for (Alternative a = 1; a <= n; ++a) {
        for (Alternative b = 1; b <= n; ++b) {
            if (a != b && predicate(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

inline std::optional<Witness> find_gamma(const PreferenceProfile& p) {
    const int n = p.size();
    std::optional<Witness> found;
    for_each_subset(n, 3, [&](const std::vector<int>& voters) {
        std::optional<Witness> best;
        std::vector<int> roles = voters;
        do {
            const auto &i = p.voter(roles[0]), &j = p.voter(roles[1]), &k = p.voter(roles[2]);
            auto ab = ordered_pairs_where(n, [&](int a, int b) { return i.prefers(a, b) && j.prefers(b, a) && k.prefers(a, b); });
            auto cd = ordered_pairs_where(n, [&](int c, int d) { return i.prefers(c, d) && j.prefers(d, c) && k.prefers(d, c); });
            auto ef = ordered_pairs_where(n, [&](int e, int f) { return i.prefers(e, f) && j.prefers(e, f) && k.prefers(f, e); });
            for (auto [a, b] : ab) {
                for (auto [c, d] : cd) {
                    for (auto [e, f] : ef) keep_smaller(best, Witness{WitnessKind::gamma, roles, {a, b, c, d, e, f}});
                }
            }
        } while (std::next_permutation(roles.begin(), roles.end()));
        if (!best) return false;
        found = std::move(best);
        return true;
    });
    return found;
}

inline std::optional<Witness> find_delta(const PreferenceProfile& p) {
    const int n = p.size();
    std::optional<Witness> found;
    for_each_subset(n, 4, [&](const std::vector<int>& voters) {
        std::optional<Witness> best;
        std::vector<int> roles = voters;
        do {
            const auto &i = p.voter(roles[0]), &j = p.voter(roles[1]), &k = p.voter(roles[2]),
                       &l = p.voter(roles[3]);
            auto ab = ordered_pairs_where(
                n, [&](int a, int b) { return i.prefers(a, b) && j.prefers(b, a) && k.prefers(a, b) && l.prefers(b, a); });
            auto cd = ordered_pairs_where(
                n, [&](int c, int d) { return i.prefers(c, d) && j.prefers(c, d) && k.prefers(d, c) && l.prefers(d, c); });
            for (auto [a, b] : ab) {
                for (auto [c, d] : cd) keep_smaller(best, Witness{WitnessKind::delta, roles, {a, b, c, d}});
            }
        } while (std::next_permutation(roles.begin(), roles.end()));
        if (!best) return false;
        found = std::move(best);
        return true;
    });
    return found;
}

}  // namespace detail

/// Re-checks every comparison the witness asserts against `p`.
inline bool witness_holds(const PreferenceProfile& p, const Witness& w) {
    const int n = p.size();
    auto in_range = [n](const std::vector<int>& xs) {
        return std::all_of(xs.begin(), xs.end(), [n](int x) { return x >= 1 && x <= n; });
    };
    if (!in_range(w.voters) || !in_range(w.alternatives) || !detail::all_distinct(w.voters)) return false;
    switch (w.kind) {
        case WitnessKind::worst:
            return w.voters.size() == 3 && w.alternatives.size() == 3 && detail::all_distinct(w.alternatives) &&
                   detail::matches_worst(p, w.voters, w.alternatives);
        case WitnessKind::alpha:
            return w.voters.size() == 2 && w.alternatives.size() == 4 && detail::all_distinct(w.alternatives) &&
                   detail::matches_alpha(p, w.voters, w.alternatives);
        case WitnessKind::gamma:
            return w.voters.size() == 3 && w.alternatives.size() == 6 && detail::matches_gamma(p, w.voters, w.alternatives);
        case WitnessKind::delta:
            return w.voters.size() == 4 && w.alternatives.size() == 4 && detail::matches_delta(p, w.voters, w.alternatives);
    }
    return false;
}

/// Smallest witness of the family, or nullopt. Families are searched in a
/// fixed order: worst before alpha, delta before gamma.
inline std::optional<Witness> find_witness(const PreferenceProfile& p, Family family) {
    if (family == Family::single_peaked) {
        if (auto w = detail::find_worst(p)) return w;
        return detail::find_alpha(p);
    }
    if (auto w = detail::find_delta(p)) return w;
    return detail::find_gamma(p);
}

inline bool is_narcissistic(const PreferenceProfile& p) {
    for (Voter i = 1; i <= p.size(); ++i) {
        if (peak(p.voter(i)) != i) return false;
    }
    return true;
}

/// Definitional check: whenever a ▷ b ▷ peak or peak ▷ b ▷ a, voter prefers b to a.
inline bool is_single_peaked_wrt(const PreferenceProfile& p, const Axis& axis) {
    detail::require_same_size(p, axis);
    const int n = p.size();
    for (const auto& order : p.orders()) {
        const int top_place = axis.place_of(peak(order));
        for (int pa = 1; pa <= n; ++pa) {
            for (int pb = 1; pb <= n; ++pb) {
                const bool between = (pa < pb && pb < top_place) || (top_place < pb && pb < pa);
                if (between && !order.prefers(axis.at(pb), axis.at(pa))) return false;
            }
        }
    }
    return true;
}

/// Interval form: every top(≻_i, {j}) is a contiguous stretch of the axis.
inline bool is_single_peaked_wrt_intervals(const PreferenceProfile& p, const Axis& axis) {
    detail::require_same_size(p, axis);
    for (const auto& order : p.orders()) {
        int lo = p.size() + 1, hi = 0, k = 0;
        for (Alternative a : order.ranking()) {
            const int place = axis.place_of(a);
            lo = std::min(lo, place);
            hi = std::max(hi, place);
            if (hi - lo + 1 != ++k) return false;
        }
    }
    return true;
}

/// Definitional check: for i ▷ j ▷ k, a ≻_i b and a ≻_k b force a ≻_j b.
inline bool is_single_crossing_wrt(const PreferenceProfile& p, const Axis& voter_order) {
    detail::require_same_size(p, voter_order);
    const int n = p.size();
    for (Alternative a = 1; a <= n; ++a) {
        for (Alternative b = 1; b <= n; ++b) {
            if (a == b) continue;
            for (int x = 1; x <= n; ++x) {
                if (!p.voter(voter_order.at(x)).prefers(a, b)) continue;
                for (int z = x + 2; z <= n; ++z) {
                    if (!p.voter(voter_order.at(z)).prefers(a, b)) continue;
                    for (int y = x + 1; y < z; ++y) {
                        if (!p.voter(voter_order.at(y)).prefers(a, b)) return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Interval form: for every pair, the voters on each side form a contiguous
/// block of the voter order.
inline bool is_single_crossing_wrt_intervals(const PreferenceProfile& p, const Axis& voter_order) {
    detail::require_same_size(p, voter_order);
    const int n = p.size();
    for (Alternative a = 1; a <= n; ++a) {
        for (Alternative b = a + 1; b <= n; ++b) {
            int switches = 0;
            for (int x = 2; x <= n; ++x) {
                switches += p.voter(voter_order.at(x - 1)).prefers(a, b) != p.voter(voter_order.at(x)).prefers(a, b);
            }
            if (switches > 1) return false;
        }
    }
    return true;
}

/// Backtracking search for an axis, built left to right; a prefix is pruned
/// as soon as some voter stops being unimodal along it.
inline std::optional<Axis> search_single_peaked_axis(const PreferenceProfile& p) {
    const int n = p.size();
    struct Trend {
        int last = 0;
        bool falling = false;
    };
    std::vector<int> axis;
    std::vector<bool> used(n + 1, false);
    std::vector<Trend> trends(n);

    auto extend = [&](auto&& self) -> bool {
        if (static_cast<int>(axis.size()) == n) return true;
        for (Alternative x = 1; x <= n; ++x) {
            if (used[x]) continue;
            const std::vector<Trend> saved = trends;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                const int position = p.voter(v + 1).position_of(x);
                Trend& t = trends[v];
                if (!axis.empty()) {
                    // larger position means less preferred
                    if (position > t.last) t.falling = true;
                    else if (t.falling) ok = false;
                }
                t.last = position;
            }
            if (ok) {
                used[x] = true;
                axis.push_back(x);
                if (self(self)) return true;
                axis.pop_back();
                used[x] = false;
            }
            trends = saved;
        }
        return false;
    };
    if (!extend(extend)) return std::nullopt;
    return Axis(axis);
}

namespace detail {

/// The two voters with mutually reversed orders, smaller id first.
inline std::optional<std::pair<Voter, Voter>> reverse_pair(const PreferenceProfile& p) {
    const int n = p.size();
    const int all_pairs = static_cast<int>(n * (n - 1) / 2);
    for (Voter a = 1; a <= n; ++a) {
        for (Voter b = a + 1; b <= n; ++b) {
            if (count_diff_pairs(p.voter(a), p.voter(b)) == all_pairs) return std::pair{a, b};
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Single-peakedness with a certifying axis or a worst/alpha witness.
///
/// Narcissistic profiles only admit the order of one of their two mutually
/// reversed voters (or its reverse) as axis, so that single candidate is
/// tested. Other profiles use the pruned exhaustive search; above eight
/// alternatives the witness search runs first.
inline RecognitionResult check_single_peaked(const PreferenceProfile& p) {
    const int n = p.size();
    auto fail_with_witness = [&]() {
        auto w = find_witness(p, Family::single_peaked);
        detail::require(w.has_value(), ErrorCode::internal_error, "profile not single-peaked but no witness exists");
        return RecognitionResult{false, std::nullopt, std::move(w)};
    };

    if (n == 1) return {true, Axis::identity(1), std::nullopt};

    if (is_narcissistic(p)) {
        if (auto rp = detail::reverse_pair(p)) {
            Axis axis(std::vector<int>(p.voter(rp->first).ranking().begin(), p.voter(rp->first).ranking().end()));
            if (is_single_peaked_wrt(p, axis)) return {true, std::move(axis), std::nullopt};
        }
        return fail_with_witness();
    }

    if (n > 8) {
        if (auto w = find_witness(p, Family::single_peaked)) return {false, std::nullopt, std::move(w)};
    }
    if (auto axis = search_single_peaked_axis(p)) return {true, std::move(axis), std::nullopt};
    return fail_with_witness();
}

/// For each candidate first voter, the rest are ordered by |diff_pairs| to
/// that voter (ties by id) and the result verified. Nested diff-pair sets
/// make this complete: equal cardinality then means identical orders.
inline std::optional<Axis> search_single_crossing_order(const PreferenceProfile& p) {
    const int n = p.size();
    for (Voter first = 1; first <= n; ++first) {
        std::vector<std::pair<int, Voter>> keyed;
        for (Voter v = 1; v <= n; ++v) {
            if (v != first) keyed.emplace_back(count_diff_pairs(p.voter(first), p.voter(v)), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> order{first};
        for (auto [_, v] : keyed) order.push_back(v);
        Axis candidate(std::move(order));
        if (is_single_crossing_wrt(p, candidate)) return candidate;
    }
    return std::nullopt;
}

inline RecognitionResult check_single_crossing(const PreferenceProfile& p) {
    if (auto order = search_single_crossing_order(p)) return {true, std::move(order), std::nullopt};
    auto w = find_witness(p, Family::single_crossing);
    detail::require(w.has_value(), ErrorCode::internal_error, "profile not single-crossing but no witness exists");
    return {false, std::nullopt, std::move(w)};
}

/// Every single-crossing narcissistic profile is single-peaked; this
/// evaluates that claim on one profile. Meant for property tests.
inline bool scn_implies_spn_check(const PreferenceProfile& p) {
    detail::require(is_narcissistic(p) && check_single_crossing(p).holds, ErrorCode::invalid_argument,
                    "profile must be narcissistic and single-crossing");
    return check_single_peaked(p).holds;
}

}  // namespace narcissus
