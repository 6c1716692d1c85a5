#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stabilis {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. All arithmetic is exact; there is no float path anywhere
// in the core algorithms.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(long num, long den) : q_(num, den) { q_.canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { q_.canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sgn() const { return ::sgn(q_); }
    bool is_zero() const { return sgn() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { q_ /= o.q_; return *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_), raw_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_), raw_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_), raw_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ / b.q_), raw_tag{}); }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_), raw_tag{}); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const;

private:
    struct raw_tag {};
    // gmpxx arithmetic already yields canonical results for canonical inputs.
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}
    mpq_class q_;
};

// Parses "7", "-3", or "num/den" (denominator nonzero). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// Largest integer <= r / smallest integer >= r.
mpz_class rat_floor(const Rational& r);
mpz_class rat_ceil(const Rational& r);

// Smallest integer g >= 0 with g*g >= r. Requires r >= 0.
mpz_class ceil_sqrt(const Rational& r);

// Smallest multiple of 1/denom that is >= r (e.g. denom=1000 for the
// modified-greedy certificate factor).
Rational ceil_to_denominator(const Rational& r, unsigned long denom);

}  // namespace stabilis
