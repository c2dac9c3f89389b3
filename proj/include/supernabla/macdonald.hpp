#pragma once

#include "supernabla/symfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace supernabla {

// Comparator for vectors of partitions (slot-wise canonical order).
struct PartVecLess {
    bool operator()(const std::vector<Partition>& a, const std::vector<Partition>& b) const {
        PartLess less;
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return false;
    }
};

// Sparse map from vectors of partitions to coefficients; houses expansions of
// nabla_Y images. When `symmetric` is set (all slot bases equal and the
// construction is slot-diagonal), only slot-sorted representatives are stored
// and lookups canonicalize their key first.
class TensorSymFunc {
public:
    using Key = std::vector<Partition>;
    using Coeffs = std::map<Key, QtRat, PartVecLess>;

    TensorSymFunc() = default;
    TensorSymFunc(std::vector<Basis> bases, std::vector<std::string> alphabets,
                  bool symmetric);
    static std::vector<std::string> default_alphabets(int arity); // x, y1, y2, ...

    int arity() const { return static_cast<int>(bases_.size()); }
    const std::vector<Basis>& bases() const { return bases_; }
    const std::vector<std::string>& alphabets() const { return alphabets_; }
    bool symmetric() const { return symmetric_; }
    const Coeffs& coeffs() const { return coeffs_; }

    Key canonical(Key k) const;
    QtRat get(const Key& k) const;
    void add(const Key& k, const QtRat& c);
    void set(const Key& k, QtRat c);
    bool is_zero() const { return coeffs_.empty(); }

    // Value-level equality over the union of supports (handles one side
    // stored canonically and the other raw).
    bool same_values(const TensorSymFunc& o) const;

    // One-slot tensor <-> SymFunc.
    SymFunc to_symfunc() const;
    static TensorSymFunc from_symfunc(const SymFunc& f);

    std::string str() const;

private:
    std::vector<Basis> bases_;
    std::vector<std::string> alphabets_;
    bool symmetric_ = false;
    Coeffs coeffs_;
};

// Table of modified Macdonald polynomials for one degree, built from fill
// statistics and validated against the specialization identities before use.
class MacdonaldTable {
public:
    static MacdonaldTable build(int n); // computes and validates
    static const MacdonaldTable& get(int n); // shared, memoized
    // Seed the shared registry (e.g. from a disk cache); no-op if present.
    static void install(MacdonaldTable t);

    int degree() const { return n_; }
    const std::vector<Partition>& mus() const { return mus_; }
    const SymFunc& htilde_m(const Partition& mu) const { return m_.at(mu); }
    const SymFunc& htilde_s(const Partition& mu) const { return s_.at(mu); }
    const SymFunc& htilde_p(const Partition& mu) const { return p_.at(mu); }
    const CellStats& stats(const Partition& mu) const { return stats_.at(mu); }
    const QtRat& star_norm(const Partition& mu) const { return norm_.at(mu); }

    void validate() const; // throws Error on any failed gate

    std::string serialize() const; // byte-stable
    static MacdonaldTable deserialize(const std::string& text); // + validate
    std::uint64_t content_hash() const;

private:
    friend MacdonaldTable table_from_mcoeffs(int, std::map<Partition, SymFunc, PartLess>);
    int n_ = 0;
    std::vector<Partition> mus_;
    std::map<Partition, SymFunc, PartLess> m_, s_, p_;
    std::map<Partition, CellStats, PartLess> stats_;
    std::map<Partition, QtRat, PartLess> norm_;
};

// H~_mu as a symmetric function in the Schur basis.
SymFunc htilde(const Partition& mu);
// Expand an Ht-basis function over a classical basis.
SymFunc ht_expand(const SymFunc& f_in_Ht, Basis target);
// Plethystic evaluation H~_mu[point] for an X-free expression.
QtRat htilde_eval(const Partition& mu, const AlphaExpr& point);

// Expansion of a homogeneous f over the H~ basis, via star-inner products.
std::map<Partition, QtRat, PartLess> eigen_expand(const SymFunc& f);

struct EigenOp {
    enum Kind { Nabla, Delta, Pi, Xi } kind = Nabla;
    SymFunc delta_f; // for Delta
    static EigenOp nabla() { return {Nabla, {}}; }
    static EigenOp delta(SymFunc f) { return {Delta, std::move(f)}; }
    static EigenOp pi() { return {Pi, {}}; }
    static EigenOp xi() { return {Xi, {}}; }
};

// Apply an eigenoperator; the result is returned in the Schur basis.
SymFunc apply_eigenop(const SymFunc& f, const EigenOp& op);

// Optional coefficient specialization applied at the eigen-expansion level.
struct SpecPoint {
    enum Mode { None, TOneOverQ, TZero, Numeric } mode = None;
    BigRational qv, tv; // for Numeric
    static SpecPoint none() { return {}; }
    static SpecPoint t_one_over_q() { return {TOneOverQ, {}, {}}; }
    static SpecPoint t_zero() { return {TZero, {}, {}}; }
    static SpecPoint numeric(BigRational q0, BigRational t0) {
        return {Numeric, std::move(q0), std::move(t0)};
    }
};

// nabla_{y_1} ... nabla_{y_k} f as a (k+1)-slot tensor; slot 0 is x.
TensorSymFunc super_nabla(const SymFunc& f, int k, Basis slot_basis = Basis::s,
                          const SpecPoint& spec = SpecPoint::none());

// Hall-pair `slot` of T against G (in the slot's alphabet); arity drops by 1.
TensorSymFunc pair_slot(const TensorSymFunc& T, const SymFunc& G, int slot);

// Evaluate one slot at a plethystic point (X-free expression); arity drops.
TensorSymFunc eval_slot(const TensorSymFunc& T, const AlphaExpr& point, int slot);

// Re-express one tensor slot in another classical basis.
TensorSymFunc tensor_convert_slot(const TensorSymFunc& T, int slot, Basis target);

// Substitutions on whole objects. t=1 on a tensor requires polynomial
// coefficients (images of e_n and friends always are).
TensorSymFunc specialize_tensor(const TensorSymFunc& T,
                                const std::optional<QtPoly>& q_expr,
                                const std::optional<QtPoly>& t_expr);
SymFunc specialize_sym(const SymFunc& f, const std::optional<QtPoly>& q_expr,
                       const std::optional<QtPoly>& t_expr);
// H~-basis functions at t=1, re-expressed over the hhat basis.
SymFunc specialize_ht_t1(const SymFunc& f_in_Ht);

// hhat/shat expansions: h_mu[X/(1-q)] and s_mu[X/(1-q)] in the m basis,
// and their principal specializations.
SymFunc hhat_to_m(const Partition& mu, const std::string& alphabet = "x");
SymFunc shat_to_m(const Partition& mu, const std::string& alphabet = "x");
QtRat hhat_at_one(const Partition& mu);
QtRat shat_at_one(const Partition& mu);

// Triangular-type construction: E_v = sum_mu (sum_theta Omega_mu(theta,v)) H~_mu,
// with vanishing factors replaced by 1 factor-by-factor.
SymFunc triangular_E(const std::vector<int>& v);

// ---- t = 1 engine -----------------------------------------------------------
// Coefficient tables of nabla_hat images, univariate in q, per-slot m basis.
// hm[mu][lambda] = sum over words of content lambda of q^(revmaj_mu(word)).
QtPoly hhat_norm_m_coeff(const Partition& mu, const Partition& lambda);

// Tensor of nabla_hat_{y1..yk} F|_{t=1} given per-mu weights W_mu with
// F|_{t=1} = sum_mu W_mu hhat_mu(x); the slots expand normalized hhat factors.
TensorSymFunc nabla_hat_tensor(int n, int k,
                               const std::map<Partition, QtRat, PartLess>& W);
// Weights for F = e_n: W_mu = f_mu[1-q].
std::map<Partition, QtRat, PartLess> t1_weights_en(int n);
// Weights for Delta_hat_{m_gamma}(omega p_n).
std::map<Partition, QtRat, PartLess> t1_weights_power(int n, const Partition& gamma);

} // namespace supernabla
