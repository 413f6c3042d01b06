#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace setavg {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit by design of arithmetic literals
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& value);
    explicit Rational(mpq_class&& value);

    // Accepts "p", "p/q", "-p/q" and finite decimals such as "2.125" or "-0.5".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }
    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    // Decimal rendering with the given number of significant digits.
    std::string to_decimal(int significant_digits = 12) const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational pow(const Rational& base, unsigned exponent);
// floor(x + 1/2)
mpz_class round_half_up(const Rational& x);
mpz_class floor(const Rational& x);
mpz_class ceil(const Rational& x);
// Binomial coefficient C(n, k) as an exact integer-valued rational.
Rational binomial(unsigned n, unsigned k);
// Largest dyadic r = m / 2^bits with r <= sqrt(x); x must be nonnegative.
Rational sqrt_floor_dyadic(const Rational& x, unsigned bits);
// Smallest dyadic r = m / 2^bits with r >= sqrt(x); x must be nonnegative.
Rational sqrt_ceil_dyadic(const Rational& x, unsigned bits);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace setavg
