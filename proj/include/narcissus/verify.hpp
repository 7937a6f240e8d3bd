#pragma once

#include <set>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "canonical.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "recognition.hpp"
#include "ssyt.hpp"

namespace narcissus {

inline constexpr int kMaxVerifyN = 7;

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Cross-checks closed forms, enumerators, recognition and the bijection on
/// n voters; with `with_oracle`, also against the brute-force reference.
inline std::vector<CheckResult> run_verification(int n, bool with_oracle) {
    detail::require(n >= 2, ErrorCode::invalid_argument, "verification needs n >= 2");
    if (n > kMaxVerifyN) detail::fail(ErrorCode::resource_bound, "verification is limited to n <= " + std::to_string(kMaxVerifyN));
    if (with_oracle && n > oracle::kMaxBruteForceN) {
        detail::fail(ErrorCode::resource_bound, "oracle is limited to n <= " + std::to_string(oracle::kMaxBruteForceN));
    }

    std::vector<CheckResult> out;
    auto record = [&](std::string name, bool passed, std::string detail) {
        out.push_back({std::move(name), passed, std::move(detail)});
    };

    std::vector<PreferenceProfile> spn;
    for (const auto& p : enumerate_spn(n)) spn.push_back(p);
    std::vector<PreferenceProfile> scn;
    for (const auto& p : enumerate_scn(n)) scn.push_back(p);
    std::vector<Ssyt> tableaux;
    for (const auto& t : enumerate_ssyt(n - 1)) tableaux.push_back(t);

    const BigCount spn_formula = count_spn(n);
    record("spn-count", spn_formula == spn.size(),
           "formula " + to_decimal(spn_formula) + ", enumerated " + std::to_string(spn.size()));

    const BigCount scn_formula = count_scn(n);
    const bool scn_ok = scn_formula == scn.size() && scn_formula == count_ssyt_closed(n - 1);
    record("scn-count", scn_ok, "formula " + to_decimal(scn_formula) + ", enumerated " + std::to_string(scn.size()));

    const BigCount hook = count_ssyt_hook_formula(n - 1);
    record("hook-formula", hook == count_ssyt_closed(n - 1),
           "hook-content " + to_decimal(hook) + ", closed " + to_decimal(count_ssyt_closed(n - 1)));

    bool sorted_unique = true;
    for (std::size_t k = 1; k < tableaux.size(); ++k) sorted_unique = sorted_unique && tableaux[k - 1] < tableaux[k];
    record("ssyt-enumeration", sorted_unique && count_ssyt_closed(n - 1) == tableaux.size(),
           std::to_string(tableaux.size()) + " tableaux of order " + std::to_string(n - 1));

    const Axis line = Axis::identity(n);
    bool spn_shape = true;
    for (const auto& p : spn) {
        spn_shape = spn_shape && is_narcissistic(p) && is_single_peaked_wrt(p, line) &&
                    p.voter(1) == PreferenceOrder::identity(n) && p.voter(n) == PreferenceOrder::reversed_identity(n);
    }
    record("spn-canonical", spn_shape, "every SPN profile pinned and single-peaked along 1..n");

    bool scn_canonical = true, scn_sp = true;
    for (const auto& p : scn) {
        scn_canonical = scn_canonical && check_canonical_scn(p);
        scn_sp = scn_sp && check_single_peaked(p).holds;
    }
    record("scn-canonical", scn_canonical, "every SCN profile satisfies the canonical conditions");
    record("scn-implies-sp", scn_sp, "every SCN profile is single-peaked");

    const std::set<PreferenceProfile> spn_set(spn.begin(), spn.end());
    const std::set<PreferenceProfile> scn_set(scn.begin(), scn.end());
    bool subset = scn_set.size() == scn.size() && spn_set.size() == spn.size();
    for (const auto& p : scn_set) subset = subset && spn_set.count(p) == 1;
    if (n >= 4) subset = subset && scn_set.size() < spn_set.size();
    record("scn-subset-spn", subset, std::to_string(scn_set.size()) + " of " + std::to_string(spn_set.size()));

    std::set<PreferenceProfile> filtered;
    for (const auto& p : spn) {
        if (is_single_crossing_wrt(p, line)) filtered.insert(p);
    }
    record("two-path", filtered == scn_set, "SPN filtered by single-crossing along 1..n: " + std::to_string(filtered.size()));

    bool round_a = true;
    std::set<Ssyt> images;
    for (const auto& p : scn) {
        const Ssyt t = profile_to_ssyt(p);
        round_a = round_a && ssyt_to_profile(t) == p;
        images.insert(t);
    }
    record("round-trip-profile", round_a, "f^-1(f(p)) = p");
    bool round_b = true;
    for (const auto& t : tableaux) round_b = round_b && profile_to_ssyt(ssyt_to_profile(t)) == t;
    record("round-trip-tableau", round_b, "f(f^-1(t)) = t");
    record("injective", images.size() == scn.size(), std::to_string(images.size()) + " distinct images");

    if (with_oracle) {
        const BigCount spn_oracle = oracle::oracle_count(n, oracle::Property::spn_canonical);
        record("oracle-spn", spn_oracle == spn_formula, "brute force " + to_decimal(spn_oracle));
        std::set<PreferenceProfile> accepted;
        oracle::for_each_accepted(n, oracle::Property::scn_canonical, [&](PreferenceProfile p) { accepted.insert(std::move(p)); });
        record("oracle-scn", scn_formula == accepted.size(), "brute force " + std::to_string(accepted.size()));
        record("oracle-scn-set", accepted == scn_set, "brute-force set equals enumerated set");
    }
    return out;
}

}  // namespace narcissus
