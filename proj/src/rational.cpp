#include "setavg/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace setavg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational::Rational(mpq_class&& value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    mpq_class q;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: " + std::string(text));
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        q = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal: " + std::string(text));
        mpz_class digits(std::string(whole) + std::string(frac).append(frac.empty() ? "0" : ""), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.empty() ? 1 : frac.size());
        q = mpq_class(digits, scale);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed rational: " + std::string(text));
        q = mpq_class(mpz_class(std::string(s), 10));
    }
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, to_double());
    return buf;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

mpz_class floor(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    return q;
}

mpz_class round_half_up(const Rational& x) { return floor(x + Rational(1, 2)); }
mpz_class ceil(const Rational& x) { return -floor(-x); }

Rational binomial(unsigned n, unsigned k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(mpq_class(c));
}

Rational sqrt_floor_dyadic(const Rational& x, unsigned bits) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative rational");
    // floor(sqrt(x) * 2^bits) = isqrt(floor(x * 4^bits))
    mpz_class scaled = x.raw().get_num() << (2 * bits);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.raw().get_den_mpz_t());
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class scale = mpz_class(1) << bits;
    return Rational(mpq_class(root, scale));
}

Rational sqrt_ceil_dyadic(const Rational& x, unsigned bits) {
    Rational lo = sqrt_floor_dyadic(x, bits);
    if (lo * lo == x) return lo;
    return lo + Rational(mpq_class(mpz_class(1), mpz_class(1) << bits));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace setavg
