#pragma once

#include "supernabla/bigint.hpp"
#include "supernabla/error.hpp"

#include <iosfwd>
#include <string>

namespace supernabla {

// Exact rational number, always reduced, denominator > 0.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
    BigRational(int v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT(google-explicit-constructor)
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    BigRational operator-() const { return BigRational(-num_, den_); }
    BigRational operator+(const BigRational& o) const {
        return BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    BigRational operator-(const BigRational& o) const {
        return BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    BigRational operator*(const BigRational& o) const {
        return BigRational(num_ * o.num_, den_ * o.den_);
    }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) fail("ZeroDenominator", "rational division by zero");
        return BigRational(num_ * o.den_, den_ * o.num_);
    }
    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }

    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRational& o) const { return !(*this == o); }
    bool operator<(const BigRational& o) const { return num_ * o.den_ < o.num_ * den_; }

    std::string str() const { return is_integer() ? num_.str() : num_.str() + "/" + den_.str(); }

private:
    void reduce() {
        if (den_.is_zero()) fail("ZeroDenominator", "rational with zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (num_.is_zero()) den_ = 1;
    }

    BigInt num_, den_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& v);

} // namespace supernabla
