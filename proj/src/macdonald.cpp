#include "supernabla/macdonald.hpp"

#include "supernabla/error.hpp"
#include "supernabla/parallel.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace supernabla {

// --- TensorSymFunc -----------------------------------------------------------

TensorSymFunc::TensorSymFunc(std::vector<Basis> bases, std::vector<std::string> alphabets,
                             bool symmetric)
    : bases_(std::move(bases)), alphabets_(std::move(alphabets)), symmetric_(symmetric) {
    if (bases_.size() != alphabets_.size())
        fail("SlotOutOfRange", "tensor slot metadata size mismatch");
}

std::vector<std::string> TensorSymFunc::default_alphabets(int arity) {
    std::vector<std::string> a;
    a.emplace_back("x");
    for (int i = 1; i < arity; ++i) a.push_back("y" + std::to_string(i));
    return a;
}

TensorSymFunc::Key TensorSymFunc::canonical(Key k) const {
    if (symmetric_) std::sort(k.begin(), k.end(), PartLess{});
    return k;
}

QtRat TensorSymFunc::get(const Key& k) const {
    auto it = coeffs_.find(canonical(k));
    return it == coeffs_.end() ? QtRat(0) : it->second;
}

void TensorSymFunc::add(const Key& k, const QtRat& c) {
    if (c.is_zero()) return;
    Key kk = canonical(k);
    auto it = coeffs_.find(kk);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(kk), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void TensorSymFunc::set(const Key& k, QtRat c) {
    Key kk = canonical(k);
    if (c.is_zero())
        coeffs_.erase(kk);
    else
        coeffs_[kk] = std::move(c);
}

namespace {

TensorSymFunc expand_raw(const TensorSymFunc& t) {
    if (!t.symmetric()) return t;
    TensorSymFunc out(t.bases(), t.alphabets(), false);
    for (const auto& [key, c] : t.coeffs()) {
        TensorSymFunc::Key k = key;
        std::sort(k.begin(), k.end(), PartLess{});
        do {
            out.set(k, c);
        } while (std::next_permutation(k.begin(), k.end(), PartLess{}));
    }
    return out;
}

using Key = TensorSymFunc::Key;

} // namespace

bool TensorSymFunc::same_values(const TensorSymFunc& o) const {
    if (arity() != o.arity()) return false;
    TensorSymFunc a = expand_raw(*this), b = expand_raw(o);
    for (const auto& [k, c] : a.coeffs())
        if (!(b.get(k) == c)) return false;
    for (const auto& [k, c] : b.coeffs())
        if (!(a.get(k) == c)) return false;
    return true;
}

SymFunc TensorSymFunc::to_symfunc() const {
    if (arity() != 1) fail("SlotOutOfRange", "to_symfunc needs a 1-slot tensor");
    SymFunc f(bases_[0], alphabets_[0]);
    for (const auto& [k, c] : coeffs_) f.set_coeff(k[0], c);
    return f;
}

TensorSymFunc TensorSymFunc::from_symfunc(const SymFunc& f) {
    TensorSymFunc t({f.basis()}, {f.alphabet()}, false);
    for (const auto& [mu, c] : f.coeffs()) t.set({mu}, c);
    return t;
}

std::string TensorSymFunc::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        if (i) os << "*";
        os << basis_name(bases_[i]) << "(" << alphabets_[i] << ")";
    }
    os << ":{";
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << ", ";
        first = false;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) os << "x";
            os << part_str(k[i]);
        }
        os << ": " << c.str();
    }
    os << "}";
    return os.str();
}

// --- fill statistics ---------------------------------------------------------

namespace {

struct FillData {
    std::vector<Cell> order;          // reading order: top row down, left to right
    std::vector<int> south;           // index into order, -1 if bottom row
    std::vector<int> arm_, leg_;      // per cell in reading order
    std::vector<std::pair<int, int>> attacks; // (earlier, later) reading positions
};

FillData fill_data(const Partition& mu) {
    FillData fd;
    for (int row = part_length(mu) - 1; row >= 0; --row)
        for (int col = 0; col < mu[static_cast<std::size_t>(row)]; ++col)
            fd.order.push_back(Cell{col, row});
    auto find_pos = [&](int col, int row) {
        for (std::size_t i = 0; i < fd.order.size(); ++i)
            if (fd.order[i].col == col && fd.order[i].row == row) return static_cast<int>(i);
        return -1;
    };
    for (const Cell& c : fd.order) {
        fd.south.push_back(c.row > 0 ? find_pos(c.col, c.row - 1) : -1);
        fd.arm_.push_back(arm(mu, c));
        fd.leg_.push_back(leg(mu, c));
    }
    for (std::size_t i = 0; i < fd.order.size(); ++i)
        for (std::size_t j = i + 1; j < fd.order.size(); ++j) {
            const Cell& a = fd.order[i];
            const Cell& b = fd.order[j];
            bool attack = (a.row == b.row) || (a.row == b.row + 1 && a.col > b.col);
            if (attack) fd.attacks.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return fd;
}

// m-basis coefficients of H~_mu by summing q^inv t^maj over fillings.
SymFunc htilde_m_by_fills(const Partition& mu) {
    int n = part_size(mu);
    FillData fd = fill_data(mu);
    SymFunc out(Basis::m, "x");
    for (const Partition& lambda : partitions_of(n)) {
        std::vector<int> letters;
        for (std::size_t c = 0; c < lambda.size(); ++c)
            for (int r = 0; r < lambda[c]; ++r) letters.push_back(static_cast<int>(c) + 1);
        std::sort(letters.begin(), letters.end());
        QtPoly total;
        do {
            int maj = 0, inv = 0;
            for (std::size_t i = 0; i < letters.size(); ++i) {
                int s = fd.south[i];
                if (s >= 0 && letters[i] > letters[static_cast<std::size_t>(s)]) {
                    maj += fd.leg_[i] + 1;
                    inv -= fd.arm_[i];
                }
            }
            for (const auto& [i, j] : fd.attacks)
                if (letters[static_cast<std::size_t>(i)] > letters[static_cast<std::size_t>(j)]) ++inv;
            total.add_term(Mono{inv, maj, 0}, 1);
        } while (std::next_permutation(letters.begin(), letters.end()));
        if (!total.is_zero()) out.set_coeff(lambda, QtRat(total));
    }
    return out;
}

std::mutex table_mutex;
std::map<int, std::unique_ptr<MacdonaldTable>>& table_store() {
    static std::map<int, std::unique_ptr<MacdonaldTable>> store;
    return store;
}

} // namespace

MacdonaldTable table_from_mcoeffs(int n, std::map<Partition, SymFunc, PartLess> mcoeffs) {
    MacdonaldTable t;
    t.n_ = n;
    t.mus_ = partitions_of(n);
    t.m_ = std::move(mcoeffs);
    for (const Partition& mu : t.mus_) {
        const SymFunc& hm = t.m_.at(mu);
        t.s_.emplace(mu, convert(hm, Basis::s));
        t.p_.emplace(mu, convert(hm, Basis::p));
        t.stats_.emplace(mu, cell_stats(mu));
    }
    for (const Partition& mu : t.mus_)
        t.norm_.emplace(mu, star_inner(t.p_.at(mu), t.p_.at(mu)));
    t.validate();
    return t;
}

MacdonaldTable MacdonaldTable::build(int n) {
    std::vector<Partition> mus = partitions_of(n);
    std::vector<SymFunc> rows = parallel_map<SymFunc>(
        static_cast<int>(mus.size()),
        [&](int i) { return htilde_m_by_fills(mus[static_cast<std::size_t>(i)]); });
    std::map<Partition, SymFunc, PartLess> mcoeffs;
    for (std::size_t i = 0; i < mus.size(); ++i) mcoeffs.emplace(mus[i], rows[i]);
    return table_from_mcoeffs(n, std::move(mcoeffs));
}

void MacdonaldTable::install(MacdonaldTable t) {
    std::scoped_lock lk(table_mutex);
    table_store().try_emplace(t.degree(), std::make_unique<MacdonaldTable>(std::move(t)));
}

const MacdonaldTable& MacdonaldTable::get(int n) {
    {
        std::scoped_lock lk(table_mutex);
        auto it = table_store().find(n);
        if (it != table_store().end()) return *it->second;
    }
    auto t = std::make_unique<MacdonaldTable>(build(n));
    std::scoped_lock lk(table_mutex);
    auto [it, inserted] = table_store().try_emplace(n, std::move(t));
    return *it->second;
}

void MacdonaldTable::validate() const {
    const QtPoly q = QtPoly::q(), tt = QtPoly::t();
    for (const Partition& mu : mus_) {
        const SymFunc& hm = m_.at(mu);
        // H~_mu[1] = 1: the m_(n) coefficient is 1.
        if (n_ > 0 && !(hm.coeff(Partition{n_}) == QtRat(1)))
            fail("UnsupportedBasis", "table gate failed: H[1] != 1 for " + part_str(mu));
        // [1-u] product formula
        AlphaExpr pnt = AlphaExpr::constant(QtRat(1)) - AlphaExpr::constant(QtRat(QtPoly::u()));
        QtRat lhs = plethysm_eval(p_.at(mu), pnt);
        QtPoly rhs(1);
        for (Cell c : cells_of(mu))
            rhs = rhs * (QtPoly(1) - QtPoly::monomial(1, Mono{c.col, c.row, 1}));
        if (!(lhs == QtRat(rhs)))
            fail("UnsupportedBasis", "table gate failed: [1-u] formula for " + part_str(mu));
    }
    PartLess less;
    for (const Partition& mu : mus_)
        for (const Partition& nu : mus_) {
            if (!less(mu, nu)) continue;
            if (!star_inner(p_.at(mu), p_.at(nu)).is_zero())
                fail("UnsupportedBasis",
                     "table gate failed: star orthogonality " + part_str(mu) + "," + part_str(nu));
        }
    // intro displays for n <= 3
    auto expect_s = [&](const Partition& mu, const SymFunc& want) {
        if (!(s_.at(mu) == want))
            fail("UnsupportedBasis", "table gate failed: display for " + part_str(mu));
    };
    if (n_ == 1) expect_s({1}, sym_term(Basis::s, {1}));
    if (n_ == 2) {
        SymFunc h2(Basis::s, "x"), h11(Basis::s, "x");
        h2.set_coeff({2}, QtRat(1));
        h2.set_coeff({1, 1}, QtRat(q));
        h11.set_coeff({2}, QtRat(1));
        h11.set_coeff({1, 1}, QtRat(tt));
        expect_s({2}, h2);
        expect_s({1, 1}, h11);
    }
    if (n_ == 3) {
        SymFunc h3(Basis::s, "x"), h21(Basis::s, "x"), h111(Basis::s, "x");
        h3.set_coeff({3}, QtRat(1));
        h3.set_coeff({2, 1}, QtRat(QtPoly::q() + QtPoly::q(2)));
        h3.set_coeff({1, 1, 1}, QtRat(QtPoly::q(3)));
        h21.set_coeff({3}, QtRat(1));
        h21.set_coeff({2, 1}, QtRat(q + tt));
        h21.set_coeff({1, 1, 1}, QtRat(q * tt));
        h111.set_coeff({3}, QtRat(1));
        h111.set_coeff({2, 1}, QtRat(QtPoly::t() + QtPoly::t(2)));
        h111.set_coeff({1, 1, 1}, QtRat(QtPoly::t(3)));
        expect_s({3}, h3);
        expect_s({2, 1}, h21);
        expect_s({1, 1, 1}, h111);
    }
}

std::string MacdonaldTable::serialize() const {
    std::ostringstream os;
    os << "macdonald-table v1\n";
    os << "n " << n_ << "\n";
    for (const Partition& mu : mus_) {
        os << "mu " << part_str(mu) << "\n";
        os << m_.at(mu).str() << "\n";
    }
    std::string body = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (char c : body) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    os << "hash " << h << "\n";
    return os.str();
}

std::uint64_t MacdonaldTable::content_hash() const {
    std::string s = serialize();
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

MacdonaldTable MacdonaldTable::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "macdonald-table v1")
        fail("ParseError", "bad table header");
    if (!std::getline(is, line) || line.rfind("n ", 0) != 0) fail("ParseError", "bad table n line");
    int n = std::stoi(line.substr(2));
    std::map<Partition, SymFunc, PartLess> mcoeffs;
    std::string declared_hash;
    while (std::getline(is, line)) {
        if (line.rfind("hash ", 0) == 0) {
            declared_hash = line.substr(5);
            break;
        }
        if (line.rfind("mu ", 0) != 0) fail("ParseError", "bad table mu line: " + line);
        Partition mu = part_parse(line.substr(3));
        if (!std::getline(is, line)) fail("ParseError", "truncated table");
        mcoeffs.emplace(mu, SymFunc::parse(line));
    }
    MacdonaldTable t = table_from_mcoeffs(n, std::move(mcoeffs)); // validates
    std::string re = t.serialize();
    auto pos = re.rfind("hash ");
    std::string rehash = re.substr(pos + 5);
    while (!rehash.empty() && (rehash.back() == '\n' || rehash.back() == ' ')) rehash.pop_back();
    if (!declared_hash.empty() && declared_hash != rehash)
        fail("ParseError", "table hash mismatch");
    return t;
}

SymFunc htilde(const Partition& mu) {
    return MacdonaldTable::get(part_size(mu)).htilde_s(mu);
}

QtRat htilde_eval(const Partition& mu, const AlphaExpr& point) {
    return plethysm_eval(MacdonaldTable::get(part_size(mu)).htilde_p(mu), point);
}

SymFunc ht_expand(const SymFunc& f_in_Ht, Basis target) {
    if (f_in_Ht.basis() != Basis::Ht) fail("UnsupportedBasis", "ht_expand expects the Ht basis");
    SymFunc out(target, f_in_Ht.alphabet());
    for (const auto& [mu, c] : f_in_Ht.coeffs()) {
        const MacdonaldTable& table = MacdonaldTable::get(part_size(mu));
        SymFunc piece = (target == Basis::s) ? table.htilde_s(mu)
                        : (target == Basis::m) ? table.htilde_m(mu)
                        : (target == Basis::p) ? table.htilde_p(mu)
                                               : convert(table.htilde_m(mu), target);
        for (const auto& [lam, b] : piece.coeffs()) out.add_coeff(lam, c * b);
    }
    return out;
}

// --- eigen machinery ---------------------------------------------------------

std::map<Partition, QtRat, PartLess> eigen_expand(const SymFunc& f) {
    if (!f.is_homogeneous()) fail("NotHomogeneous", "eigen_expand needs homogeneous input");
    int n = f.degree();
    const MacdonaldTable& table = MacdonaldTable::get(n);
    SymFunc fp = convert(f, Basis::p);
    std::map<Partition, QtRat, PartLess> out;
    for (const Partition& mu : table.mus()) {
        QtRat c = star_inner(fp, table.htilde_p(mu)) / table.star_norm(mu);
        if (!c.is_zero()) out.emplace(mu, std::move(c));
    }
    return out;
}

namespace {

// Lazy fraction accumulator: sums n_i/d_i without intermediate reduction.
struct FracAcc {
    QtPoly num{0};
    QtPoly den{1};
    void add(const QtPoly& n, const QtPoly& d) {
        if (n.is_zero()) return;
        if (den == d) {
            num += n;
            return;
        }
        num = num * d + n * den;
        den = den * d;
    }
    QtRat finish() const { return QtRat(num, den); }
};

QtRat eigenvalue_of(const MacdonaldTable& table, const EigenOp& op, const Partition& mu) {
    const CellStats& st = table.stats(mu);
    switch (op.kind) {
        case EigenOp::Nabla: return QtRat(st.T);
        case EigenOp::Pi: return QtRat(st.Pi);
        case EigenOp::Delta:
            return plethysm_eval(op.delta_f, AlphaExpr::constant(QtRat(st.B)));
        case EigenOp::Xi: break;
    }
    fail("UnsupportedExpression", "Xi has no single eigenvalue");
}

SymFunc recombine(const MacdonaldTable& table,
                  const std::map<Partition, QtRat, PartLess>& coeffs, Basis basis) {
    SymFunc out(basis, "x");
    for (const Partition& lam : table.mus()) {
        FracAcc acc;
        for (const auto& [mu, c] : coeffs) {
            QtRat b = (basis == Basis::s) ? table.htilde_s(mu).coeff(lam)
                                          : convert(table.htilde_m(mu), basis).coeff(lam);
            if (b.is_zero()) continue;
            acc.add(c.num() * b.num(), c.den() * b.den());
        }
        out.set_coeff(lam, acc.finish());
    }
    return out;
}

} // namespace

SymFunc apply_eigenop(const SymFunc& f, const EigenOp& op) {
    if (!f.is_homogeneous()) fail("NotHomogeneous", "apply_eigenop needs homogeneous input");
    if (f.is_zero()) return SymFunc(Basis::s, f.alphabet());
    int n = f.degree();
    if (n == 0) return convert(f, Basis::s); // every operator fixes constants
    const MacdonaldTable& table = MacdonaldTable::get(n);
    std::map<Partition, QtRat, PartLess> coeffs;
    if (op.kind == EigenOp::Xi) {
        SymFunc fstar = plethysm(f, AlphaExpr::X().over_M());
        coeffs = eigen_expand(fstar);
        QtRat M(poly_M());
        for (auto& [mu, c] : coeffs) {
            const CellStats& st = table.stats(mu);
            c = c * M * QtRat(st.B) * QtRat(st.Pi);
        }
    } else {
        coeffs = eigen_expand(f);
        for (auto& [mu, c] : coeffs) c = c * eigenvalue_of(table, op, mu);
    }
    return recombine(table, coeffs, Basis::s);
}

// --- super nabla -------------------------------------------------------------

namespace {

QtRat spec_apply(const QtRat& v, const SpecPoint& spec) {
    switch (spec.mode) {
        case SpecPoint::None: return v;
        case SpecPoint::TOneOverQ: return v.substitute(std::nullopt, QtPoly::q(-1));
        case SpecPoint::TZero: return v.substitute(std::nullopt, QtPoly(0));
        case SpecPoint::Numeric: {
            BigRational r = v.eval(spec.qv, spec.tv);
            return QtRat(r);
        }
    }
    return v;
}

} // namespace

TensorSymFunc super_nabla(const SymFunc& f, int k, Basis slot_basis, const SpecPoint& spec) {
    if (!f.is_homogeneous()) fail("NotHomogeneous", "super_nabla needs homogeneous input");
    if (k < 0) fail("BoundExceeded", "super_nabla needs k >= 0");
    if (k == 0) {
        SymFunc g = convert(f, slot_basis);
        TensorSymFunc t({slot_basis}, {"x"}, false);
        for (const auto& [mu, c] : g.coeffs()) t.set({mu}, spec_apply(c, spec));
        return t;
    }
    int n = f.degree();
    const MacdonaldTable& table = MacdonaldTable::get(n);
    auto coeffs = eigen_expand(f);

    // specialized eigen data
    std::map<Partition, QtRat, PartLess> cmu;
    std::map<Partition, std::map<Partition, QtRat, PartLess>, PartLess> slotcoef;
    for (const Partition& mu : table.mus()) {
        auto it = coeffs.find(mu);
        if (it == coeffs.end()) continue;
        cmu[mu] = spec_apply(it->second, spec);
        const SymFunc base = (slot_basis == Basis::s) ? table.htilde_s(mu)
                                                      : convert(table.htilde_m(mu), slot_basis);
        auto& row = slotcoef[mu];
        for (const auto& [lam, b] : base.coeffs()) row[lam] = spec_apply(b, spec);
    }

    int arity = k + 1;
    TensorSymFunc out(std::vector<Basis>(static_cast<std::size_t>(arity), slot_basis),
                      TensorSymFunc::default_alphabets(arity), true);
    // iterate sorted multisets of partitions as canonical keys
    std::vector<Partition> parts = partitions_of(n);
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    std::function<void(int, int)> rec = [&](int pos, int minidx) {
        if (pos == arity) {
            Key key;
            for (int i = 0; i < arity; ++i)
                key.push_back(parts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
            FracAcc acc;
            for (const auto& [mu, c] : cmu) {
                const auto& row = slotcoef.at(mu);
                QtPoly nn = c.num();
                QtPoly dd = c.den();
                bool dead = false;
                for (int i = 0; i < arity; ++i) {
                    auto itb = row.find(key[static_cast<std::size_t>(i)]);
                    if (itb == row.end() || itb->second.is_zero()) {
                        dead = true;
                        break;
                    }
                    nn = nn * itb->second.num();
                    dd = dd * itb->second.den();
                }
                if (!dead) acc.add(nn, dd);
            }
            out.set(key, acc.finish());
            return;
        }
        for (int i = minidx; i < static_cast<int>(parts.size()); ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i);
        }
    };
    rec(0, 0);
    return out;
}

TensorSymFunc pair_slot(const TensorSymFunc& T, const SymFunc& G, int slot) {
    if (slot < 0 || slot >= T.arity()) fail("SlotOutOfRange", "pair_slot slot index");
    if (!G.is_homogeneous()) fail("DegreeMismatch", "pair_slot needs homogeneous G");
    TensorSymFunc raw = expand_raw(T);
    int n = -1;
    for (const auto& [k, c] : raw.coeffs()) {
        n = part_size(k[static_cast<std::size_t>(slot)]);
        break;
    }
    if (n >= 0 && !G.is_zero() && G.degree() != n)
        fail("DegreeMismatch", "pair_slot degree " + std::to_string(G.degree()) +
                                   " vs slot degree " + std::to_string(n));
    std::map<Partition, QtRat, PartLess> pv;
    if (n >= 0)
        for (const Partition& lam : partitions_of(n))
            pv[lam] = hall(sym_term(T.bases()[static_cast<std::size_t>(slot)], lam, QtRat(1),
                                    G.alphabet()),
                           G);
    std::vector<Basis> bases;
    std::vector<std::string> alphas;
    for (int i = 0; i < T.arity(); ++i) {
        if (i == slot) continue;
        bases.push_back(T.bases()[static_cast<std::size_t>(i)]);
        alphas.push_back(T.alphabets()[static_cast<std::size_t>(i)]);
    }
    TensorSymFunc out(bases, alphas, false);
    for (const auto& [k, c] : raw.coeffs()) {
        QtRat f = pv.at(k[static_cast<std::size_t>(slot)]);
        if (f.is_zero()) continue;
        Key nk;
        for (int i = 0; i < T.arity(); ++i)
            if (i != slot) nk.push_back(k[static_cast<std::size_t>(i)]);
        out.add(nk, c * f);
    }
    return out;
}

TensorSymFunc eval_slot(const TensorSymFunc& T, const AlphaExpr& point, int slot) {
    if (slot < 0 || slot >= T.arity()) fail("SlotOutOfRange", "eval_slot slot index");
    TensorSymFunc raw = expand_raw(T);
    std::map<Partition, QtRat, PartLess> pv;
    std::vector<Basis> bases;
    std::vector<std::string> alphas;
    for (int i = 0; i < T.arity(); ++i) {
        if (i == slot) continue;
        bases.push_back(T.bases()[static_cast<std::size_t>(i)]);
        alphas.push_back(T.alphabets()[static_cast<std::size_t>(i)]);
    }
    TensorSymFunc out(bases, alphas, false);
    for (const auto& [k, c] : raw.coeffs()) {
        const Partition& lam = k[static_cast<std::size_t>(slot)];
        auto it = pv.find(lam);
        if (it == pv.end())
            it = pv.emplace(lam,
                            plethysm_eval(
                                sym_term(T.bases()[static_cast<std::size_t>(slot)], lam), point))
                     .first;
        if (it->second.is_zero()) continue;
        Key nk;
        for (int i = 0; i < T.arity(); ++i)
            if (i != slot) nk.push_back(k[static_cast<std::size_t>(i)]);
        out.add(nk, c * it->second);
    }
    return out;
}

TensorSymFunc tensor_convert_slot(const TensorSymFunc& T, int slot, Basis target) {
    if (slot < 0 || slot >= T.arity()) fail("SlotOutOfRange", "tensor_convert_slot slot index");
    TensorSymFunc raw = expand_raw(T);
    std::vector<Basis> bases = T.bases();
    bases[static_cast<std::size_t>(slot)] = target;
    TensorSymFunc out(bases, T.alphabets(), false);
    // conversion rows cached per source partition
    std::map<Partition, SymFunc, PartLess> rows;
    for (const auto& [k, c0] : raw.coeffs()) {
        const Partition& lam = k[static_cast<std::size_t>(slot)];
        auto it = rows.find(lam);
        if (it == rows.end())
            it = rows.emplace(lam,
                              convert(sym_term(T.bases()[static_cast<std::size_t>(slot)], lam),
                                      target))
                     .first;
        for (const auto& [nu, w] : it->second.coeffs()) {
            Key nk = k;
            nk[static_cast<std::size_t>(slot)] = nu;
            out.add(nk, c0 * w);
        }
    }
    return out;
}

TensorSymFunc specialize_tensor(const TensorSymFunc& T, const std::optional<QtPoly>& q_expr,
                                const std::optional<QtPoly>& t_expr) {
    TensorSymFunc out(T.bases(), T.alphabets(), T.symmetric());
    for (const auto& [k, c] : T.coeffs()) out.set(k, c.substitute(q_expr, t_expr));
    return out;
}

SymFunc specialize_sym(const SymFunc& f, const std::optional<QtPoly>& q_expr,
                       const std::optional<QtPoly>& t_expr) {
    if (f.basis() == Basis::Ht)
        fail("UnsupportedBasis", "specialize the Ht basis with specialize_ht_t1");
    SymFunc out(f.basis(), f.alphabet());
    for (const auto& [mu, c] : f.coeffs()) out.set_coeff(mu, c.substitute(q_expr, t_expr));
    return out;
}

SymFunc specialize_ht_t1(const SymFunc& f_in_Ht) {
    if (f_in_Ht.basis() != Basis::Ht) fail("UnsupportedBasis", "expected the Ht basis");
    SymFunc out(Basis::hhat, f_in_Ht.alphabet());
    for (const auto& [mu, c] : f_in_Ht.coeffs()) {
        QtRat c1 = c.substitute(std::nullopt, QtPoly(1));
        out.set_coeff(mu, c1 / hhat_at_one(mu));
    }
    return out;
}

SymFunc hhat_to_m(const Partition& mu, const std::string& alphabet) {
    SymFunc h = sym_term(Basis::h, mu, QtRat(1), alphabet);
    return convert(plethysm(h, AlphaExpr::X().over_one_minus_q()), Basis::m);
}

SymFunc shat_to_m(const Partition& mu, const std::string& alphabet) {
    SymFunc s = sym_term(Basis::s, mu, QtRat(1), alphabet);
    return convert(plethysm(s, AlphaExpr::X().over_one_minus_q()), Basis::m);
}

QtRat hhat_at_one(const Partition& mu) {
    QtPoly den(1);
    for (int part : mu) den = den * q_pochhammer(part);
    return QtRat(QtPoly(1), den);
}

QtRat shat_at_one(const Partition& mu) {
    QtPoly den(1);
    for (Cell c : cells_of(mu)) den = den * one_minus_q_pow(hook(mu, c));
    return QtRat(QtPoly::q(n_stat(mu)), den);
}

// --- the E_v construction ------------------------------------------------------

namespace {

// w(x,y) = (x-y)(x-qt y) / ((x-q y)(x-t y)) with vanishing factors -> 1.
QtRat omega_w(const QtPoly& x, const QtPoly& y) {
    QtPoly qt = QtPoly::q() * QtPoly::t();
    auto factor = [](QtPoly f) { return f.is_zero() ? QtPoly(1) : f; };
    QtPoly n1 = factor(x - y);
    QtPoly n2 = factor(x - qt * y);
    QtPoly d1 = factor(x - QtPoly::q() * y);
    QtPoly d2 = factor(x - QtPoly::t() * y);
    return QtRat(n1 * n2, d1 * d2);
}

} // namespace

SymFunc triangular_E(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    SymFunc out(Basis::Ht, "x");
    QtPoly qt = QtPoly::q() * QtPoly::t();
    for (const Partition& mu : partitions_of(n)) {
        QtRat total(0);
        for (const auto& tab : standard_tableaux(mu)) {
            auto z = [&](int label) {
                const Cell& c = tab[static_cast<std::size_t>(label - 1)];
                return QtPoly::monomial(1, Mono{c.col, c.row, 0});
            };
            QtRat om(1);
            for (int lb = 1; lb <= n; ++lb)
                for (int lc = 1; lc <= n; ++lc) {
                    if (lb > lc) om = om * omega_w(z(lb), z(lc));
                    if (lb == lc + 1) {
                        QtPoly den = z(lb) - qt * z(lc);
                        if (den.is_zero()) den = QtPoly(1);
                        om = om * QtRat(z(lb), den);
                    }
                }
            for (int lc = 2; lc <= n; ++lc) {
                QtPoly zc = z(lc);
                QtPoly den = zc - QtPoly(1);
                if (den.is_zero()) den = QtPoly(1);
                QtPoly num(1);
                for (int r = 0; r < v[static_cast<std::size_t>(lc - 1)]; ++r) num = num * zc;
                om = om * QtRat(num, den);
            }
            total += om;
        }
        out.set_coeff(mu, total);
    }
    return out;
}

// --- t = 1 engine -------------------------------------------------------------

namespace {

int revmaj_blocks(const std::vector<int>& word, const Partition& mu) {
    int total = 0;
    std::size_t start = 0;
    for (int part : mu) {
        for (int i = 1; i < part; ++i)
            if (word[start + static_cast<std::size_t>(i) - 1] <
                word[start + static_cast<std::size_t>(i)])
                total += part - i;
        start += static_cast<std::size_t>(part);
    }
    return total;
}

} // namespace

QtPoly hhat_norm_m_coeff(const Partition& mu, const Partition& lambda) {
    int n = part_size(mu);
    if (part_size(lambda) != n) return QtPoly(0);
    std::vector<int> letters;
    for (std::size_t c = 0; c < lambda.size(); ++c)
        for (int r = 0; r < lambda[c]; ++r) letters.push_back(static_cast<int>(c) + 1);
    std::sort(letters.begin(), letters.end());
    QtPoly total;
    do {
        total.add_term(Mono{revmaj_blocks(letters, mu), 0, 0}, 1);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return total;
}

TensorSymFunc nabla_hat_tensor(int n, int k, const std::map<Partition, QtRat, PartLess>& W) {
    std::vector<Partition> parts = partitions_of(n);
    std::map<Partition, QtRat, PartLess> scal;
    std::map<Partition, std::map<Partition, QtPoly, PartLess>, PartLess> hm;
    for (const Partition& mu : parts) {
        auto it = W.find(mu);
        if (it == W.end() || it->second.is_zero()) continue;
        scal[mu] = it->second * hhat_at_one(mu);
        auto& row = hm[mu];
        for (const Partition& lam : parts) row[lam] = hhat_norm_m_coeff(mu, lam);
    }
    int arity = k + 1;
    TensorSymFunc out(std::vector<Basis>(static_cast<std::size_t>(arity), Basis::m),
                      TensorSymFunc::default_alphabets(arity), true);
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    std::function<void(int, int)> rec = [&](int pos, int minidx) {
        if (pos == arity) {
            Key key;
            for (int i = 0; i < arity; ++i)
                key.push_back(parts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
            FracAcc acc;
            for (const auto& [mu, s] : scal) {
                QtPoly nn = s.num();
                const auto& row = hm.at(mu);
                bool dead = false;
                for (int i = 0; i < arity; ++i) {
                    const QtPoly& b = row.at(key[static_cast<std::size_t>(i)]);
                    if (b.is_zero()) {
                        dead = true;
                        break;
                    }
                    nn = nn * b;
                }
                if (!dead) acc.add(nn, s.den());
            }
            out.set(key, acc.finish());
            return;
        }
        for (int i = minidx; i < static_cast<int>(parts.size()); ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i);
        }
    };
    rec(0, 0);
    return out;
}

std::map<Partition, QtRat, PartLess> t1_weights_en(int n) {
    std::map<Partition, QtRat, PartLess> W;
    for (const Partition& mu : partitions_of(n)) {
        QtPoly s(0);
        for (const Composition& alpha : rearrangements(mu)) s += one_minus_q_pow(alpha[0]);
        int sign = ((n - part_length(mu)) % 2) ? -1 : 1;
        W[mu] = QtRat(s.mul_int(sign));
    }
    return W;
}

std::map<Partition, QtRat, PartLess> t1_weights_power(int n, const Partition& gamma) {
    if (gamma.empty()) fail("EmptyGamma", "power weights need a nonempty gamma");
    std::map<Partition, QtRat, PartLess> W;
    for (const Partition& mu : partitions_of(n)) {
        long sr = 0;
        for (const Composition& alpha : rearrangements(mu)) sr += alpha[0];
        QtPoly B(0);
        for (int part : mu)
            for (int j = 0; j < part; ++j) B += QtPoly::q(j);
        QtRat mg = plethysm_eval(sym_term(Basis::m, gamma), AlphaExpr::constant(QtRat(B)));
        int sign = ((n - part_length(mu)) % 2) ? -1 : 1;
        W[mu] = QtRat(one_minus_q_pow(n).mul_int(sign * sr)) * mg;
    }
    return W;
}

} // namespace supernabla
