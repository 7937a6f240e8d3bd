#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "error.hpp"

namespace narcissus {

/// Exact nonnegative count. Every cardinality in the library is one of these.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline BigCount factorial(unsigned n) {
    BigCount result = 1;
    for (unsigned k = 2; k <= n; ++k) result *= k;
    return result;
}

/// C(n, k); zero when k > n.
inline BigCount binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount result = 1;
    // result stays integral: after step i it equals C(n - k + i, i)
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigCount power_of_two(unsigned long long exponent) {
    BigCount result = 1;
    result <<= exponent;
    return result;
}

inline unsigned long long choose_two(unsigned long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Exact rational with gcd-reduced big-integer parts. Positive denominator.
class Fraction {
public:
    Fraction() = default;
    Fraction(BigCount numerator, BigCount denominator)
        : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
        detail::require(denominator_ != 0, ErrorCode::invalid_argument, "zero denominator");
        normalize();
    }

    const BigCount& numerator() const { return numerator_; }
    const BigCount& denominator() const { return denominator_; }
    bool is_integral() const { return denominator_ == 1; }

    Fraction& operator*=(const Fraction& other) {
        numerator_ *= other.numerator_;
        denominator_ *= other.denominator_;
        normalize();
        return *this;
    }

    friend Fraction operator*(Fraction lhs, const Fraction& rhs) { return lhs *= rhs; }
    friend bool operator==(const Fraction&, const Fraction&) = default;

private:
    void normalize() {
        if (denominator_ < 0) {
            numerator_ = -numerator_;
            denominator_ = -denominator_;
        }
        BigCount g = boost::multiprecision::gcd(numerator_, denominator_);
        if (g > 1) {
            numerator_ /= g;
            denominator_ /= g;
        }
    }

    BigCount numerator_ = 0;
    BigCount denominator_ = 1;
};

}  // namespace narcissus
