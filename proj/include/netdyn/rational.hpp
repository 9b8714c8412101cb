#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace netdyn {

/// Exact signed rational scalar. Always kept canonical: lowest terms,
/// denominator > 0. All arithmetic is exact; there is no rounding anywhere
/// in the library (doubles appear only in human-readable report fields).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);

    /// Parses "p/q", a plain integer, or a decimal like "0.375".
    /// Throws ConfigError on malformed input or zero denominator.
    static Rational parse(const std::string& s);

    /// 2^e for any integer e (e may be negative).
    static Rational pow2(int e);

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    /// Three-way comparison: -1, 0, +1.
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_)); }

    /// Largest integer <= value, as a Rational.
    Rational floor() const;
    /// Fractional part in [0,1): value - floor(value).
    Rational mod1() const;

    /// Power with non-negative integer exponent.
    Rational pow(unsigned e) const;

    /// Canonical serialization "p/q" in lowest terms ("0/1" for zero).
    std::string to_string() const;
    /// Rendering convenience only; never used in computations.
    double to_double() const { return v_.get_d(); }

    /// True when numerator and denominator both fit in int64; then fills n/d.
    bool fits_int64(std::int64_t& n, std::int64_t& d) const;

    const mpq_class& raw() const { return v_; }

private:
    // mpq_class arithmetic keeps canonical operands canonical, so this
    // constructor does not re-canonicalize; (num,den) and parse() do.
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace netdyn
