#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "big_count.hpp"
#include "bijection.hpp"
#include "core.hpp"
#include "error.hpp"
#include "ssyt.hpp"
#include "stream.hpp"

namespace narcissus {

/// Number of canonical SPN profiles: ∏_{i=2}^{n-1} C(n-1, i-1).
inline BigCount count_spn(int n) {
    detail::require(n >= 2, ErrorCode::invalid_argument, "need at least two voters");
    BigCount product = 1;
    for (int i = 2; i <= n - 1; ++i) product *= binomial(n - 1, i - 1);
    return product;
}

/// Number of canonical SCN profiles: 2^C(n-1, 2).
inline BigCount count_scn(int n) {
    detail::require(n >= 2, ErrorCode::invalid_argument, "need at least two voters");
    return power_of_two(choose_two(static_cast<unsigned long long>(n - 1)));
}

/// ((n-1)!)^n.
inline BigCount count_narcissistic(int n) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "need at least one voter");
    return boost::multiprecision::pow(factorial(n - 1), static_cast<unsigned>(n));
}

/// Canonical SPN profiles in a fixed order.
///
/// Voters 1 and n are pinned to 1≻…≻n and n≻…≻1. Voter i in 2..n-1 picks an
/// (i-1)-subset of positions 2..n for alternatives i-1, …, 1 (in that order,
/// at increasing positions); i+1, …, n fill the rest ascending. Subsets run
/// in lexicographic order with voter 2 varying slowest.
class SpnEnumerator {
public:
    using value_type = PreferenceProfile;

    explicit SpnEnumerator(int n) : n_(n) {
        detail::require(n >= 2, ErrorCode::invalid_argument, "need at least two voters");
        for (int i = 2; i <= n - 1; ++i) {
            std::vector<int> s(i - 1);
            std::iota(s.begin(), s.end(), 2);
            subsets_.push_back(std::move(s));
        }
    }

    std::optional<PreferenceProfile> next() {
        if (done_) return std::nullopt;
        if (started_ && !advance()) {
            done_ = true;
            return std::nullopt;
        }
        started_ = true;
        return build();
    }

private:
    bool advance() {
        for (int v = static_cast<int>(subsets_.size()) - 1; v >= 0; --v) {
            if (next_subset(subsets_[v])) {
                for (std::size_t w = v + 1; w < subsets_.size(); ++w) std::iota(subsets_[w].begin(), subsets_[w].end(), 2);
                return true;
            }
        }
        return false;
    }

    // next k-subset of {2..n} in lexicographic order
    bool next_subset(std::vector<int>& s) const {
        const int k = static_cast<int>(s.size());
        int idx = k - 1;
        while (idx >= 0 && s[idx] == n_ - (k - 1 - idx)) --idx;
        if (idx < 0) return false;
        ++s[idx];
        for (int t = idx + 1; t < k; ++t) s[t] = s[t - 1] + 1;
        return true;
    }

    PreferenceProfile build() const {
        std::vector<PreferenceOrder> orders;
        orders.reserve(n_);
        orders.push_back(PreferenceOrder::identity(n_));
        for (int i = 2; i <= n_ - 1; ++i) {
            std::vector<Alternative> r(n_, 0);
            r[0] = i;
            Alternative left = i - 1;
            for (int position : subsets_[i - 2]) r[position - 1] = left--;
            Alternative right = i + 1;
            for (auto& slot : r) {
                if (slot == 0) slot = right++;
            }
            orders.emplace_back(std::move(r));
        }
        orders.push_back(PreferenceOrder::reversed_identity(n_));
        return PreferenceProfile(std::move(orders));
    }

    int n_;
    std::vector<std::vector<int>> subsets_;
    bool started_ = false;
    bool done_ = false;
};

/// Canonical SCN profiles: the tableaux of order n-1 pushed through the
/// inverse bijection, in tableau order.
class ScnEnumerator {
public:
    using value_type = PreferenceProfile;

    explicit ScnEnumerator(int n) : tableaux_(check(n) - 1) {}

    std::optional<PreferenceProfile> next() {
        if (auto t = tableaux_.next()) return ssyt_to_profile(*t);
        return std::nullopt;
    }

private:
    static int check(int n) {
        detail::require(n >= 2, ErrorCode::invalid_argument, "need at least two voters");
        return n;
    }

    SsytEnumerator tableaux_;
};

inline Stream<SpnEnumerator> enumerate_spn(int n) { return Stream<SpnEnumerator>(SpnEnumerator(n)); }
inline Stream<ScnEnumerator> enumerate_scn(int n) { return Stream<ScnEnumerator>(ScnEnumerator(n)); }

}  // namespace narcissus
