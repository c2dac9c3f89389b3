#pragma once

#include "supernabla/bigint.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supernabla {

class BigRational;

// Exponent vector of a monomial q^a t^b u^c. Laurent exponents are allowed.
struct Mono {
    int q = 0, t = 0, u = 0;

    int deg() const { return q + t + u; }
    int operator[](int var) const { return var == 0 ? q : var == 1 ? t : u; }
    int& operator[](int var) { return var == 0 ? q : var == 1 ? t : u; }
    Mono operator+(Mono o) const { return {q + o.q, t + o.t, u + o.u}; }
    Mono operator-(Mono o) const { return {q - o.q, t - o.t, u - o.u}; }
    bool operator==(const Mono& o) const = default;
};

// Fixed monomial order: graded lex with q > t > u. Canonical signs, leading
// terms and the serialization order all refer to this order.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        if (a.q != b.q) return a.q < b.q;
        if (a.t != b.t) return a.t < b.t;
        return a.u < b.u;
    }
};

// Sparse exact polynomial in q, t and the auxiliary indeterminate u, with
// arbitrary-precision integer coefficients. No stored coefficient is zero.
class QtPoly {
public:
    using Terms = std::map<Mono, BigInt, MonoLess>;

    QtPoly() = default;
    QtPoly(long c) { if (c != 0) terms_[Mono{}] = BigInt(c); } // NOLINT
    QtPoly(int c) : QtPoly(static_cast<long>(c)) {}            // NOLINT
    QtPoly(const BigInt& c) { if (!c.is_zero()) terms_[Mono{}] = c; } // NOLINT
    static QtPoly monomial(const BigInt& c, Mono m);
    static QtPoly q(int e = 1) { return monomial(1, Mono{e, 0, 0}); }
    static QtPoly t(int e = 1) { return monomial(1, Mono{0, e, 0}); }
    static QtPoly u(int e = 1) { return monomial(1, Mono{0, 0, e}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Leading term under the fixed order; polynomial must be nonzero.
    const std::pair<const Mono, BigInt>& leading() const;
    int degree(int var) const;      // max exponent of var, 0 for the zero poly
    int min_degree(int var) const;  // min exponent of var, 0 for the zero poly
    bool uses(int var) const { return degree(var) != 0 || min_degree(var) != 0; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const BigInt* coeff(Mono m) const;
    BigInt coeff_or_zero(Mono m) const;

    QtPoly operator-() const;
    QtPoly operator+(const QtPoly& o) const;
    QtPoly operator-(const QtPoly& o) const;
    QtPoly operator*(const QtPoly& o) const;
    QtPoly& operator+=(const QtPoly& o);
    QtPoly& operator-=(const QtPoly& o);
    QtPoly& operator*=(const QtPoly& o) { return *this = *this * o; }
    QtPoly mul_term(const BigInt& c, Mono m) const;
    QtPoly mul_int(const BigInt& c) const;
    bool operator==(const QtPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QtPoly& o) const { return !(*this == o); }

    void add_term(Mono m, const BigInt& c); // in-place accumulate

    // Exact division; throws DivisionNotExact if the remainder is nonzero.
    QtPoly exact_div(const QtPoly& d) const;
    std::optional<QtPoly> try_exact_div(const QtPoly& d) const;

    // Simultaneous substitution var -> expression. An expression must be a
    // single invertible term whenever the variable occurs with a negative
    // exponent. Unmapped variables stay themselves.
    QtPoly substitute(const std::optional<QtPoly>& q_expr,
                      const std::optional<QtPoly>& t_expr,
                      const std::optional<QtPoly>& u_expr = std::nullopt) const;

    // Integer content (positive) and primitive part.
    BigInt content() const;
    QtPoly primitive_part() const;

    // GCD in Z[q,t,u] (inputs must have nonnegative exponents), normalized to
    // a positive leading coefficient. gcd(0,0) = 0.
    static QtPoly gcd(const QtPoly& a, const QtPoly& b);

    Mono min_exponents() const; // componentwise min over terms, {} for zero
    QtPoly shifted(Mono offset) const { return mul_term(1, offset); }

    BigRational eval(const BigRational& qv, const BigRational& tv,
                     const BigRational& uv) const;

    // Fixed text form, leading term first, e.g. "q^2 + 4*q + 7".
    std::string str() const;
    static QtPoly parse(const std::string& text);

    std::size_t hash() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const QtPoly& p);

// Pochhammer (a;b)_k style helpers used throughout.
QtPoly one_minus_q_pow(int k); // 1 - q^k
QtPoly one_minus_t_pow(int k); // 1 - t^k
QtPoly poly_M();               // (1-q)(1-t)
QtPoly q_pochhammer(int k);    // (q;q)_k = (1-q)(1-q^2)...(1-q^k)

} // namespace supernabla
