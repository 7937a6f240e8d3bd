// Walks a scrambled copy of a 4-voter profile through canonicalize and the
// tableau bijection.
#include <iostream>

#include <narcissus/narcissus.hpp>

int main() {
    using namespace narcissus;
    const auto p = PreferenceProfile::from_rankings({{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 2, 4, 1}, {4, 3, 2, 1}});
    const auto scrambled = Relabeling({3, 1, 4, 2}).apply(p);
    std::cout << "input:\n" << format_profile(scrambled);

    const auto sp = check_single_peaked(scrambled);
    const auto sc = check_single_crossing(scrambled);
    std::cout << "single-peaked: " << (sp.holds ? "yes" : "no") << ", single-crossing: " << (sc.holds ? "yes" : "no")
              << "\n\n";

    const auto c = canonicalize(scrambled);
    std::cout << "canonical form:\n" << format_profile(c.profile) << '\n';

    const Ssyt t = profile_to_ssyt(c.profile);
    std::cout << "tableau:\n" << format_tableau(t) << '\n';
    std::cout << "back again:\n" << format_profile(ssyt_to_profile(t));
}
