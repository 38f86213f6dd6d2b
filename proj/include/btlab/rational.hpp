#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace btlab {

// Exact rational number. Always canonical: lowest terms, denominator > 0.
// All arithmetic is exact; conversion to double happens only at the output
// boundary.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                // NOLINT: implicit by design
    Rational(long n, long d);
    explicit Rational(mpq_class v);

    // Accepts "p/q", an integer, or a decimal string ("0.125" -> 1/8).
    // Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& s);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(unsigned k) const;
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    // Nearest multiple of 10^-digits (half away from zero) / truncation toward zero.
    Rational round_decimal(unsigned digits) const;
    Rational trunc_decimal(unsigned digits) const;

    // Fixed-point decimal rendering with the given number of fractional digits.
    std::string decimal_str(unsigned digits) const;

    std::string str() const { return v_.get_str(); }   // "p/q" or "p"
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace btlab
