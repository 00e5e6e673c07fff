#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistroot::arith {

/// Raised when a checked integer operation would wrap around.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer mul overflow");
    return r;
}

/// gcd with the usual conventions: nonnegative, gcd(0,0) = 0.
inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

/// Inverse of a modulo n, in [0, n-1]. Absent when gcd(a, n) != 1.
/// For n = 1 every residue is invertible and the inverse is 0.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n);

/// Positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Exact rational number, always in lowest terms with denominator >= 1.
/// Arithmetic goes through 128-bit intermediates and throws overflow_error
/// if a reduced result no longer fits in 64 bits.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : num_(num) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// Representative in [0, 1) of this value modulo 1.
    Rational mod1() const;

    std::string str() const;

private:
    static Rational from_i128(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace twistroot::arith
