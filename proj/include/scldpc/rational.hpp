#pragma once

#include <cstdint>
#include <string>

namespace scldpc {

/// Exact rational with a positive denominator, always stored reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const;

    /// Fixed-point decimal, rounded half-to-even at `places` digits.
    std::string to_decimal(int places = 6) const;

    bool operator==(const Rational& other) const = default;
};

}  // namespace scldpc
