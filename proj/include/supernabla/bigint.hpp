#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace supernabla {

// Value-type arbitrary-precision integer over GMP's mpz_t.
// Immutable in spirit: all arithmetic returns fresh values.
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); } // NOLINT(google-explicit-constructor)
    BigInt(int v) : BigInt(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    explicit BigInt(const std::string& decimal);

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    // Truncated division (C semantics). divexact requires exact divisibility.
    BigInt div_trunc(const BigInt& o) const;
    BigInt mod_trunc(const BigInt& o) const;
    BigInt divexact(const BigInt& o) const;
    bool divisible_by(const BigInt& o) const { return mpz_divisible_p(z_, o.z_) != 0; }

    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt lcm(const BigInt& a, const BigInt& b);
    BigInt abs() const;
    BigInt pow(unsigned long e) const;

    bool operator==(const BigInt& o) const { return mpz_cmp(z_, o.z_) == 0; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return mpz_cmp(z_, o.z_) < 0; }
    bool operator<=(const BigInt& o) const { return mpz_cmp(z_, o.z_) <= 0; }
    bool operator>(const BigInt& o) const { return mpz_cmp(z_, o.z_) > 0; }
    bool operator>=(const BigInt& o) const { return mpz_cmp(z_, o.z_) >= 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const; // throws on overflow

    std::string str() const;
    std::size_t hash() const;

private:
    mpz_t z_;
    friend class BigRational;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

} // namespace supernabla
