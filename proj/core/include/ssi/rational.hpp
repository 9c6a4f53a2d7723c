#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ssi/errors.hpp"

namespace ssi {

// Exact rational number over int64 with a normalized representation
// (denominator > 0, gcd(|num|, den) == 1). Probabilities and operation
// costs are rationals so that sums can be compared with zero tolerance.
// Intermediate products are computed in 128-bit; results that do not fit
// back into int64 throw ssi::Error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    // Accepts "p", "p/q" and an optional leading minus. Anything else
    // (notably decimal notation) yields nullopt.
    static std::optional<Rational> parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace ssi
