#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace narcissus {

// Voters double as alternatives; both are 1-based ids in 1..n.
using Alternative = int;
using Voter = int;

namespace detail {

/// A permutation of 1..n stored together with its inverse, so that the
/// 1-based place of any element is an O(1) lookup.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> sequence, const char* what) : sequence_(std::move(sequence)) {
        const int n = static_cast<int>(sequence_.size());
        require(n >= 1, ErrorCode::invalid_argument, what);
        place_.assign(n, 0);
        for (int k = 0; k < n; ++k) {
            const int x = sequence_[k];
            require(x >= 1 && x <= n && place_[x - 1] == 0, ErrorCode::invalid_argument, what);
            place_[x - 1] = k + 1;
        }
    }

    int size() const noexcept { return static_cast<int>(sequence_.size()); }
    std::span<const int> sequence() const noexcept { return sequence_; }
    int at(int place) const noexcept { return sequence_[place - 1]; }
    int place_of(int x) const noexcept { return place_[x - 1]; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.sequence_ == b.sequence_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.sequence_ <=> b.sequence_; }

private:
    std::vector<int> sequence_;
    std::vector<int> place_;
};

inline std::vector<int> iota_vector(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace detail

/// A strict linear order over 1..n, most preferred first.
class PreferenceOrder {
public:
    explicit PreferenceOrder(std::vector<Alternative> ranking)
        : perm_(std::move(ranking), "preference order must be a permutation of 1..n") {}

    static PreferenceOrder identity(int n) { return PreferenceOrder(detail::iota_vector(n)); }
    static PreferenceOrder reversed_identity(int n) { return identity(n).reversed(); }

    int size() const noexcept { return perm_.size(); }
    std::span<const Alternative> ranking() const noexcept { return perm_.sequence(); }

    /// Alternative at 1-based position `position`.
    Alternative at(int position) const noexcept { return perm_.at(position); }

    /// 1-based position of `a`; unchecked.
    int position_of(Alternative a) const noexcept { return perm_.place_of(a); }

    bool prefers(Alternative a, Alternative b) const noexcept { return position_of(a) < position_of(b); }

    bool contains(Alternative a) const noexcept { return a >= 1 && a <= size(); }

    PreferenceOrder reversed() const {
        std::vector<Alternative> r(ranking().rbegin(), ranking().rend());
        return PreferenceOrder(std::move(r));
    }

    friend bool operator==(const PreferenceOrder&, const PreferenceOrder&) = default;
    friend auto operator<=>(const PreferenceOrder&, const PreferenceOrder&) = default;

private:
    detail::Permutation perm_;
};

/// n voters over n alternatives; voter i owns order i.
class PreferenceProfile {
public:
    explicit PreferenceProfile(std::vector<PreferenceOrder> orders) : orders_(std::move(orders)) {
        const auto n = orders_.size();
        detail::require(n >= 1, ErrorCode::invalid_argument, "profile needs at least one voter");
        for (const auto& o : orders_) {
            detail::require(static_cast<std::size_t>(o.size()) == n, ErrorCode::invalid_argument,
                            "profile must be square: every order ranks exactly n alternatives");
        }
    }

    /// Convenience: one ranking per voter.
    static PreferenceProfile from_rankings(const std::vector<std::vector<Alternative>>& rankings) {
        std::vector<PreferenceOrder> orders;
        orders.reserve(rankings.size());
        for (const auto& r : rankings) orders.emplace_back(r);
        return PreferenceProfile(std::move(orders));
    }

    int size() const noexcept { return static_cast<int>(orders_.size()); }

    /// Order of voter `i` (1-based); unchecked.
    const PreferenceOrder& voter(Voter i) const noexcept { return orders_[i - 1]; }

    std::span<const PreferenceOrder> orders() const noexcept { return orders_; }

    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;
    friend auto operator<=>(const PreferenceProfile&, const PreferenceProfile&) = default;

private:
    std::vector<PreferenceOrder> orders_;
};

/// A linear order ▷ read left to right. Used over alternatives for
/// single-peakedness and over voters for single-crossingness.
class Axis {
public:
    explicit Axis(std::vector<int> sequence) : perm_(std::move(sequence), "axis must be a permutation of 1..n") {}

    static Axis identity(int n) { return Axis(detail::iota_vector(n)); }

    int size() const noexcept { return perm_.size(); }
    std::span<const int> sequence() const noexcept { return perm_.sequence(); }
    int at(int place) const noexcept { return perm_.at(place); }
    int place_of(int x) const noexcept { return perm_.place_of(x); }

    Axis reversed() const { return Axis(std::vector<int>(sequence().rbegin(), sequence().rend())); }

    friend bool operator==(const Axis&, const Axis&) = default;

private:
    detail::Permutation perm_;
};

/// Unordered pair {low, high} of distinct alternatives.
struct AlternativePair {
    Alternative low;
    Alternative high;

    static AlternativePair of(Alternative a, Alternative b) {
        detail::require(a != b, ErrorCode::invalid_argument, "pair needs two distinct alternatives");
        return a < b ? AlternativePair{a, b} : AlternativePair{b, a};
    }

    friend auto operator<=>(const AlternativePair&, const AlternativePair&) = default;
};

using PairSet = std::set<AlternativePair>;

/// Alternatives i with i ≻ j for every j in `subset` other than i. This is
/// the prefix of the ranking up to and including the first member of
/// `subset`, returned in preference order.
inline std::vector<Alternative> top(const PreferenceOrder& order, std::span<const Alternative> subset) {
    const int n = order.size();
    int cut = n;
    for (Alternative j : subset) {
        detail::require(order.contains(j), ErrorCode::invalid_argument, "alternative outside 1..n");
        cut = std::min(cut, order.position_of(j));
    }
    auto r = order.ranking();
    return {r.begin(), r.begin() + cut};
}

inline std::vector<Alternative> top(const PreferenceOrder& order, std::initializer_list<Alternative> subset) {
    return top(order, std::span<const Alternative>(subset.begin(), subset.size()));
}

inline Alternative peak(const PreferenceOrder& order) noexcept { return order.at(1); }

inline int pos(const PreferenceOrder& order, Alternative j) {
    detail::require(order.contains(j), ErrorCode::invalid_argument, "alternative outside 1..n");
    return order.position_of(j);
}

inline PairSet diff_pairs(const PreferenceOrder& a, const PreferenceOrder& b) {
    detail::require(a.size() == b.size(), ErrorCode::invalid_argument, "orders rank different alternative sets");
    PairSet out;
    const int n = a.size();
    for (Alternative x = 1; x <= n; ++x) {
        for (Alternative y = x + 1; y <= n; ++y) {
            if (a.prefers(x, y) != b.prefers(x, y)) out.insert({x, y});
        }
    }
    return out;
}

/// |diff_pairs(a, b)| without materializing the set.
inline int count_diff_pairs(const PreferenceOrder& a, const PreferenceOrder& b) {
    detail::require(a.size() == b.size(), ErrorCode::invalid_argument, "orders rank different alternative sets");
    int count = 0;
    const int n = a.size();
    for (Alternative x = 1; x <= n; ++x) {
        for (Alternative y = x + 1; y <= n; ++y) count += a.prefers(x, y) != b.prefers(x, y);
    }
    return count;
}

inline std::string to_string(const PreferenceOrder& order) {
    std::string s;
    for (Alternative a : order.ranking()) {
        if (!s.empty()) s += " > ";
        s += std::to_string(a);
    }
    return s;
}

}  // namespace narcissus
