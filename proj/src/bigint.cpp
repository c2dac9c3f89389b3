#include "supernabla/bigint.hpp"

#include "supernabla/error.hpp"

#include <ostream>
#include <vector>

namespace supernabla {

BigInt::BigInt(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
        mpz_clear(z_);
        mpz_init(z_);
        fail("ParseError", "bad integer literal '" + decimal + "'");
    }
}

BigInt BigInt::operator-() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    mpz_add(r.z_, z_, o.z_);
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const {
    BigInt r;
    mpz_sub(r.z_, z_, o.z_);
    return r;
}

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    mpz_mul(r.z_, z_, o.z_);
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
}

BigInt BigInt::div_trunc(const BigInt& o) const {
    if (o.is_zero()) fail("ZeroDenominator", "integer division by zero");
    BigInt r;
    mpz_tdiv_q(r.z_, z_, o.z_);
    return r;
}

BigInt BigInt::mod_trunc(const BigInt& o) const {
    if (o.is_zero()) fail("ZeroDenominator", "integer modulo by zero");
    BigInt r;
    mpz_tdiv_r(r.z_, z_, o.z_);
    return r;
}

BigInt BigInt::divexact(const BigInt& o) const {
    if (o.is_zero()) fail("ZeroDenominator", "integer division by zero");
    if (!divisible_by(o)) fail("DivisionNotExact", str() + " not divisible by " + o.str());
    BigInt r;
    mpz_divexact(r.z_, z_, o.z_);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
}

BigInt BigInt::pow(unsigned long e) const {
    BigInt r;
    mpz_pow_ui(r.z_, z_, e);
    return r;
}

long BigInt::to_long() const {
    if (!fits_long()) fail("BoundExceeded", "integer too large for long: " + str());
    return mpz_get_si(z_);
}

std::string BigInt::str() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

std::size_t BigInt::hash() const {
    // FNV-1a over the decimal form; only used for cache fingerprints.
    std::size_t h = 1469598103934665603ull;
    for (char c : str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

} // namespace supernabla
