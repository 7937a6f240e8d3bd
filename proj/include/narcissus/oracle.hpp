#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "big_count.hpp"
#include "core.hpp"
#include "error.hpp"
#include "stream.hpp"

// Brute-force reference used to cross-check the closed forms and the
// enumerators. Works on raw rankings and re-derives both domain definitions
// from scratch; it never calls into recognition, canonical or bijection.

namespace narcissus::oracle {

inline constexpr int kMaxBruteForceN = 5;

enum class Property { spn_canonical, scn_canonical };

/// Every narcissistic profile on n voters: voter i ranks i first and the
/// other n-1 alternatives in every order. ((n-1)!)^n items.
class NarcissisticEnumerator {
public:
    using value_type = PreferenceProfile;

    explicit NarcissisticEnumerator(int n) : n_(n) {
        detail::require(n >= 1, ErrorCode::invalid_argument, "need at least one voter");
        if (n > kMaxBruteForceN) {
            detail::fail(ErrorCode::resource_bound, "brute force is limited to n <= " + std::to_string(kMaxBruteForceN));
        }
        tails_.resize(n);
        for (int i = 1; i <= n; ++i) {
            for (int a = 1; a <= n; ++a) {
                if (a != i) tails_[i - 1].push_back(a);
            }
        }
    }

    std::optional<PreferenceProfile> next() {
        if (done_) return std::nullopt;
        if (started_ && !advance()) {
            done_ = true;
            return std::nullopt;
        }
        started_ = true;
        return PreferenceProfile::from_rankings(rankings());
    }

    /// Current item as raw rankings. Before the first next() this is the
    /// first item, so rankings()/advance() can drive the odometer directly.
    std::vector<std::vector<int>> rankings() const {
        std::vector<std::vector<int>> out(n_);
        for (int i = 1; i <= n_; ++i) {
            out[i - 1].push_back(i);
            out[i - 1].insert(out[i - 1].end(), tails_[i - 1].begin(), tails_[i - 1].end());
        }
        return out;
    }

    bool advance() {
        // odometer over voters, last voter fastest
        for (int v = n_ - 1; v >= 0; --v) {
            if (std::next_permutation(tails_[v].begin(), tails_[v].end())) return true;
        }
        return false;
    }

private:
    int n_;
    std::vector<std::vector<int>> tails_;
    bool started_ = false;
    bool done_ = false;
};

inline Stream<NarcissisticEnumerator> brute_force_narcissistic(int n) {
    return Stream<NarcissisticEnumerator>(NarcissisticEnumerator(n));
}

/// rank[v][a]: 0-based rank of alternative a+1 in voter v+1's order.
using RankTable = std::vector<std::vector<int>>;

inline RankTable rank_table(const std::vector<std::vector<int>>& rankings) {
    RankTable rank(rankings.size(), std::vector<int>(rankings.size()));
    for (std::size_t v = 0; v < rankings.size(); ++v) {
        for (std::size_t k = 0; k < rankings[v].size(); ++k) rank[v][rankings[v][k] - 1] = static_cast<int>(k);
    }
    return rank;
}

/// Single-peakedness along 1▷2▷…▷n, straight from the definition: for
/// a ▷ b ▷ peak or peak ▷ b ▷ a, b must beat a.
inline bool single_peaked_along_identity(const std::vector<std::vector<int>>& rankings, const RankTable& rank) {
    const int n = static_cast<int>(rankings.size());
    for (int v = 0; v < n; ++v) {
        const int top = rankings[v][0];
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (((a < b && b < top) || (top < b && b < a)) && rank[v][b - 1] > rank[v][a - 1]) return false;
            }
        }
    }
    return true;
}

/// Single-crossingness along voters 1▷2▷…▷n, straight from the definition:
/// for i < j < k, a ≻_i b and a ≻_k b imply a ≻_j b.
inline bool single_crossing_along_identity(const RankTable& rank) {
    const int n = static_cast<int>(rank.size());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    for (int k = j + 1; k < n; ++k) {
                        const bool outer = rank[i][a] < rank[i][b] && rank[k][a] < rank[k][b];
                        if (outer && rank[j][a] > rank[j][b]) return false;
                    }
                }
            }
        }
    }
    return true;
}

inline bool accepts(const std::vector<std::vector<int>>& rankings, Property property) {
    const int n = static_cast<int>(rankings.size());
    for (int k = 0; k < n; ++k) {
        if (rankings[0][k] != k + 1 || rankings[n - 1][k] != n - k) return false;
    }
    const RankTable rank = rank_table(rankings);
    if (!single_peaked_along_identity(rankings, rank)) return false;
    return property == Property::spn_canonical || single_crossing_along_identity(rank);
}

/// Calls fn(profile) for every narcissistic profile the oracle accepts.
template <class Fn>
void for_each_accepted(int n, Property property, Fn&& fn) {
    NarcissisticEnumerator gen(n);
    do {
        const auto r = gen.rankings();
        if (accepts(r, property)) fn(PreferenceProfile::from_rankings(r));
    } while (gen.advance());
}

inline BigCount oracle_count(int n, Property property) {
    BigCount total = 0;
    NarcissisticEnumerator gen(n);
    do total += accepts(gen.rankings(), property) ? 1 : 0;
    while (gen.advance());
    return total;
}

}  // namespace narcissus::oracle
