#include "twistroot/arith.hpp"

#include <algorithm>

namespace twistroot::arith {

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (n == 1) return 0;
    std::int64_t r = a % n;
    if (r < 0) r += n;
    // Extended Euclid on (r, n), tracking only the coefficient of r.
    std::int64_t old_r = r, cur_r = n;
    std::int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        std::int64_t q = old_r / cur_r;
        std::int64_t tmp = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
    }
    if (old_r != 1) return std::nullopt;
    std::int64_t inv = old_s % n;
    if (inv < 0) inv += n;
    return inv;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: argument must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kI64Min = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kI64Max = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num < kI64Min || num > kI64Max || den > kI64Max)
        throw overflow_error("Rational: value out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = from_i128(num, den);
}

Rational Rational::operator-() const {
    return from_i128(-static_cast<__int128>(num_), den_);
}

Rational Rational::operator+(const Rational& o) const {
    __int128 num = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    return from_i128(num, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    __int128 num = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    return from_i128(num, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.num_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from_i128(static_cast<__int128>(num_) * o.den_,
                     static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

Rational Rational::mod1() const {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    return Rational(r, den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace twistroot::arith
