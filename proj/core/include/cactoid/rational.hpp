#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cactoid {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, so operator== is plain structural
/// equality. All arithmetic is exact; there is no floating point anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}                 // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    /// Parses "p" or "p/q" with optional leading '-'. Throws ParseError on
    /// anything else (including "p/0").
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_negative() const noexcept { return num_ < 0; }
    bool is_positive() const noexcept { return num_ > 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Canonical string: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws DimensionError on /0

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;  // throws DimensionError on zero

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

}  // namespace cactoid
