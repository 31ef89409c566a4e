#include "scldpc/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace scldpc {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num(numerator), den(denominator) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_string() const {
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string Rational::to_decimal(int places) const {
    if (places < 0) {
        throw std::invalid_argument("Rational::to_decimal: negative places");
    }
    const bool negative = num < 0;
    std::int64_t n = negative ? -num : num;

    std::int64_t ipart = n / den;
    std::int64_t rem = n % den;
    std::string frac;
    frac.reserve(places);
    for (int k = 0; k < places; ++k) {
        rem *= 10;
        frac.push_back(static_cast<char>('0' + rem / den));
        rem %= den;
    }

    // Round half to even on the remainder.
    const bool round_up = 2 * rem > den || (2 * rem == den && !frac.empty() &&
                                            (frac.back() - '0') % 2 == 1) ||
                          (2 * rem == den && frac.empty() && ipart % 2 == 1);
    if (round_up) {
        int k = places - 1;
        for (; k >= 0; --k) {
            if (frac[k] != '9') {
                ++frac[k];
                break;
            }
            frac[k] = '0';
        }
        if (k < 0) {
            ++ipart;
        }
    }

    std::string out = (negative && (ipart != 0 || frac.find_first_not_of('0') != std::string::npos))
                          ? "-"
                          : "";
    out += std::to_string(ipart);
    if (places > 0) {
        out += '.';
        out += frac;
    }
    return out;
}

}  // namespace scldpc
