// Prints exact SPN / SCN / narcissistic counts, checking the small rows by
// enumeration.
#include <cstdlib>
#include <iostream>

#include <narcissus/narcissus.hpp>

int main(int argc, char** argv) {
    using namespace narcissus;
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 12;
    std::cout << "n\tspn\tscn\tnarcissistic\n";
    for (int n = 2; n <= max_n; ++n) {
        std::cout << n << '\t' << to_decimal(count_spn(n)) << '\t' << to_decimal(count_scn(n)) << '\t'
                  << to_decimal(count_narcissistic(n));
        if (n <= 6) {
            const bool ok = count_spn(n) == enumerate_spn(n).count() && count_scn(n) == enumerate_scn(n).count();
            std::cout << (ok ? "\t(enumerated)" : "\t(ENUMERATION MISMATCH)");
        }
        std::cout << '\n';
    }
}
