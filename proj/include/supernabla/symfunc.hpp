#pragma once

#include "supernabla/partition.hpp"
#include "supernabla/qtrat.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace supernabla {

enum class Basis { m, e, h, p, s, f, Ht, hhat, shat };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// A basis-tagged sparse linear combination of partition-indexed elements in
// one symbolic alphabet. May be inhomogeneous; coefficients are exact.
class SymFunc {
public:
    using Coeffs = std::map<Partition, QtRat, PartLess>;

    SymFunc() = default;
    SymFunc(Basis b, std::string alphabet) : basis_(b), alphabet_(std::move(alphabet)) {}

    Basis basis() const { return basis_; }
    const std::string& alphabet() const { return alphabet_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    QtRat coeff(const Partition& p) const;
    void set_coeff(const Partition& p, QtRat c);
    void add_coeff(const Partition& p, const QtRat& c);

    bool is_homogeneous() const;
    int degree() const; // max |mu|; 0 for the zero function

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc scaled(const QtRat& c) const;

    bool operator==(const SymFunc& o) const;

    std::string str() const; // basis:alphabet:{[..]: coeff, ...}
    static SymFunc parse(const std::string& text);

private:
    Basis basis_ = Basis::m;
    std::string alphabet_ = "x";
    Coeffs coeffs_;
};

// Single basis element c * b_mu.
SymFunc sym_term(Basis b, const Partition& mu, QtRat c = QtRat(1),
                 const std::string& alphabet = "x");

// Conversion between the classical bases {m,e,h,p,s,f}; round trips are exact.
SymFunc convert(const SymFunc& f, Basis target);

// Product of two symmetric functions (same alphabet), in the p basis.
SymFunc sym_mul(const SymFunc& a, const SymFunc& b);

// Hall scalar product; requires equal alphabets.
QtRat hall(const SymFunc& f, const SymFunc& g);

// Deformed (q,t) scalar product <p_mu,p_mu>_* = (-1)^(n-l) z_mu p_mu[M].
QtRat star_inner(const SymFunc& f, const SymFunc& g);

// The involution omega; result basis follows from the input basis.
SymFunc omega(const SymFunc& f);

// Hall-adjoint of multiplication by e_a.
SymFunc skew_e(const SymFunc& f, int a);

// Plethystic alphabet expressions, affine in the symbolic alphabet X:
// built from X, scalars (any exact rational function of q,t,u), the formal
// sign alphabet eps, sums, differences and products (at most one X factor).
class AlphaExpr {
public:
    static AlphaExpr X();
    static AlphaExpr constant(QtRat c);
    static AlphaExpr eps();
    AlphaExpr operator+(const AlphaExpr& o) const;
    AlphaExpr operator-(const AlphaExpr& o) const;
    AlphaExpr operator*(const AlphaExpr& o) const;
    AlphaExpr over_one_minus_q() const;
    AlphaExpr over_one_minus_t() const;
    AlphaExpr over_M() const;

    struct PK {
        QtRat scalar; // p_k image of the X-free part
        QtRat xcoef;  // coefficient of p_k(X)
    };
    PK pk(int k) const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

// f[E] expanded in the power-sum basis (possibly inhomogeneous).
SymFunc plethysm(const SymFunc& f, const AlphaExpr& e);
// f[E] for an X-free expression: a plain scalar.
QtRat plethysm_eval(const SymFunc& f, const AlphaExpr& e);

// Per-degree transition data between classical bases (shared, lazily built).
struct DegreeTables {
    int n = 0;
    std::vector<Partition> parts; // canonical order
    std::map<Partition, int, PartLess> index;
    // Row r of x2y expresses x_{parts[r]} over the y basis.
    std::vector<std::vector<BigRational>> p2m, m2p, e2p, p2e, h2p, p2h, s2m, m2s;
};
const DegreeTables& degree_tables(int n);

BigInt kostka_number(const Partition& shape, const Partition& content);

} // namespace supernabla
