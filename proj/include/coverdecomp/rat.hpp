#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace covdec {

// Exact rational scalar. Always kept canonical: denominator > 0 and
// gcd(|numerator|, denominator) = 1, so equality is structural.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<long>(n)) {}
    Rat(long long n);
    Rat(long long num, long long den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const mpz_class& z) : q_(z) {}

    // Parses "num/den" or "num". Throws ParseError on malformed input.
    static Rat parse(std::string_view s);

    // "num/den", with "/den" omitted when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rat& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return cmp(q_, o.q_) < 0; }
    bool operator<=(const Rat& o) const { return cmp(q_, o.q_) <= 0; }
    bool operator>(const Rat& o) const { return cmp(q_, o.q_) > 0; }
    bool operator>=(const Rat& o) const { return cmp(q_, o.q_) >= 0; }

    static Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
    static Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }
    static Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

    // Largest integer <= value.
    mpz_class floor() const;
    // Smallest integer >= value.
    mpz_class ceil() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

}  // namespace covdec
