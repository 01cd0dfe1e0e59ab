#include "bcp/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace bcp {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    }
    return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t n = parse_int(text.substr(0, slash), text);
        std::string_view ds = text.substr(slash + 1);
        if (!ds.empty() && (ds[0] == '-' || ds[0] == '+')) {
            throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
        }
        std::int64_t d = parse_int(ds, text);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return Rational(n, d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        std::string_view digits = neg ? ip.substr(1) : ip;
        if (fp.empty() || fp.size() > 18 || fp[0] == '-' || fp[0] == '+') {
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        }
        std::int64_t whole = digits.empty() ? 0 : parse_int(digits, text);
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        }
        std::int64_t frac = parse_int(fp, text);
        __int128 scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        __int128 n = static_cast<__int128>(whole) * scale + frac;
        return from_wide(neg ? -n : n, scale);
    }
    return Rational(parse_int(text, text));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    return Rational::from_wide(n, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace bcp
