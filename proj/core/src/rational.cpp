#include "cactoid/rational.hpp"

#include <ostream>
#include <utility>

#include "cactoid/errors.hpp"

namespace cactoid {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DimensionError("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) {
            throw ParseError("empty integer literal");
        }
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            i = 1;
        }
        if (i == s.size()) {
            throw ParseError("sign without digits in rational literal");
        }
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw ParseError("bad character in rational literal: '" + std::string(s) + "'");
            }
        }
        return BigInt(std::string(s));
    };

    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) {
        throw DimensionError("division of rational by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw DimensionError("reciprocal of zero");
    }
    return Rational(den_, num_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cactoid
