#include "ssi/rational.hpp"

#include <charconv>
#include <numeric>

namespace ssi {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide value) {
    if (value > INT64_MAX || value < INT64_MIN) {
        throw Error("rational overflow");
    }
    return static_cast<std::int64_t>(value);
}

// Normalizes num/den into canonical form; den must be nonzero.
void normalize(Wide& num, Wide& den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
}

std::optional<std::int64_t> parse_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    Wide n = num;
    Wide d = den;
    normalize(n, d);
    num_ = narrow(n);
    den_ = narrow(d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<Wide>(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    Wide n = static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_;
    Wide d = static_cast<Wide>(den_) * rhs.den_;
    normalize(n, d);
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    Wide n = static_cast<Wide>(num_) * rhs.num_;
    Wide d = static_cast<Wide>(den_) * rhs.den_;
    normalize(n, d);
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const Wide left = static_cast<Wide>(lhs.num_) * rhs.den_;
    const Wide right = static_cast<Wide>(rhs.num_) * lhs.den_;
    if (left < right) return std::strong_ordering::less;
    if (left > right) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace ssi
