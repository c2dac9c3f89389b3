#pragma once

#include "supernabla/qtpoly.hpp"
#include "supernabla/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace supernabla {

// Rational function in q, t, u with exact integer coefficients, kept in a
// canonical form: numerator and denominator are coprime polynomials with
// nonnegative exponents, no common monomial factor, and the denominator's
// leading coefficient (graded lex, q > t > u) is positive.
class QtRat {
public:
    QtRat() : num_(0), den_(1) {}
    QtRat(long c) : num_(c), den_(1) {}        // NOLINT(google-explicit-constructor)
    QtRat(int c) : num_(c), den_(1) {}         // NOLINT(google-explicit-constructor)
    QtRat(QtPoly p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)
    QtRat(const BigInt& c) : num_(QtPoly(c)), den_(1) {} // NOLINT
    QtRat(const BigRational& r) : num_(QtPoly(r.num())), den_(QtPoly(r.den())) {} // NOLINT
    QtRat(QtPoly num, QtPoly den, bool already_canonical = false)
        : num_(std::move(num)), den_(std::move(den)) {
        if (!already_canonical) normalize();
    }

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    // The polynomial value; throws DivisionNotExact when a true denominator remains.
    QtPoly as_poly() const;

    QtRat operator-() const { return QtRat(-num_, den_, true); }
    QtRat operator+(const QtRat& o) const;
    QtRat operator-(const QtRat& o) const;
    QtRat operator*(const QtRat& o) const;
    QtRat operator/(const QtRat& o) const;
    QtRat& operator+=(const QtRat& o) { return *this = *this + o; }
    QtRat& operator-=(const QtRat& o) { return *this = *this - o; }
    QtRat& operator*=(const QtRat& o) { return *this = *this * o; }
    QtRat& operator/=(const QtRat& o) { return *this = *this / o; }

    // Equality by cross-multiplication, independent of representation.
    bool equals(const QtRat& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator==(const QtRat& o) const { return equals(o); }
    bool operator!=(const QtRat& o) const { return !equals(o); }

    // Simultaneous substitution; fails with PoleAtSpecialization when the
    // denominator vanishes identically after substitution.
    QtRat substitute(const std::optional<QtPoly>& q_expr,
                     const std::optional<QtPoly>& t_expr,
                     const std::optional<QtPoly>& u_expr = std::nullopt) const;

    BigRational eval(const BigRational& qv, const BigRational& tv,
                     const BigRational& uv = BigRational(0)) const;

    std::string str() const;
    static QtRat parse(const std::string& text);
    std::size_t hash() const { return num_.hash() * 1000003u + den_.hash(); }

private:
    void normalize();
    QtPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const QtRat& r);

// Power-series coefficients of a rational function of q alone, up to and
// including q^order. The denominator must not vanish at q = 0.
std::vector<BigRational> q_series(const QtRat& f, int order);

} // namespace supernabla
