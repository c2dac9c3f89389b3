#include "supernabla/symfunc.hpp"

#include "supernabla/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace supernabla {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::f: return "f";
        case Basis::Ht: return "Ht";
        case Basis::hhat: return "hhat";
        case Basis::shat: return "shat";
    }
    return "?";
}

Basis basis_from_name(const std::string& s) {
    for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s, Basis::f, Basis::Ht,
                    Basis::hhat, Basis::shat})
        if (s == basis_name(b)) return b;
    fail("UnsupportedBasis", "unknown basis '" + s + "'");
}

QtRat SymFunc::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? QtRat(0) : it->second;
}

void SymFunc::set_coeff(const Partition& p, QtRat c) {
    if (c.is_zero())
        coeffs_.erase(p);
    else
        coeffs_[p] = std::move(c);
}

void SymFunc::add_coeff(const Partition& p, const QtRat& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        coeffs_[p] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

bool SymFunc::is_homogeneous() const {
    int d = -1;
    for (const auto& [mu, c] : coeffs_) {
        if (d < 0) d = part_size(mu);
        if (part_size(mu) != d) return false;
    }
    return true;
}

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [mu, c] : coeffs_) d = std::max(d, part_size(mu));
    return d;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (basis_ != o.basis_ || alphabet_ != o.alphabet_)
        fail("AlphabetMismatch", "adding incompatible symmetric functions");
    SymFunc r = *this;
    for (const auto& [mu, c] : o.coeffs_) r.add_coeff(mu, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_, alphabet_);
    for (const auto& [mu, c] : coeffs_) r.coeffs_[mu] = -c;
    return r;
}

SymFunc SymFunc::scaled(const QtRat& c) const {
    SymFunc r(basis_, alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [mu, cc] : coeffs_) r.set_coeff(mu, cc * c);
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return basis_ == o.basis_ && alphabet_ == o.alphabet_ && coeffs_ == o.coeffs_;
}

std::string SymFunc::str() const {
    std::ostringstream os;
    os << basis_name(basis_) << ":" << alphabet_ << ":{";
    bool first = true;
    for (const auto& [mu, c] : coeffs_) {
        if (!first) os << ", ";
        first = false;
        os << part_str(mu) << ": " << c.str();
    }
    os << "}";
    return os.str();
}

SymFunc SymFunc::parse(const std::string& text) {
    auto c1 = text.find(':');
    auto c2 = text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        fail("ParseError", "bad SymFunc text '" + text + "'");
    SymFunc f(basis_from_name(text.substr(0, c1)), text.substr(c1 + 1, c2 - c1 - 1));
    std::string body = text.substr(c2 + 1);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        fail("ParseError", "bad SymFunc body '" + body + "'");
    body = body.substr(1, body.size() - 2);
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && (body[i] == ' ' || body[i] == ',')) ++i;
        if (i >= body.size()) break;
        auto close = body.find(']', i);
        if (close == std::string::npos || body[i] != '[')
            fail("ParseError", "bad partition key in '" + body + "'");
        Partition mu = part_parse(body.substr(i, close - i + 1));
        i = close + 1;
        while (i < body.size() && (body[i] == ' ' || body[i] == ':')) ++i;
        // value runs to the next ", [" boundary or end
        std::size_t j = i;
        int depth = 0;
        while (j < body.size()) {
            if (body[j] == '(') ++depth;
            if (body[j] == ')') --depth;
            if (depth == 0 && body[j] == ',') break;
            ++j;
        }
        f.set_coeff(mu, QtRat::parse(body.substr(i, j - i)));
        i = j;
    }
    return f;
}

SymFunc sym_term(Basis b, const Partition& mu, QtRat c, const std::string& alphabet) {
    SymFunc f(b, alphabet);
    f.set_coeff(mu, std::move(c));
    return f;
}

// --- transition tables ------------------------------------------------------

namespace {

using Row = std::map<Partition, BigRational, PartLess>;

// Multiply an expansion over augmented monomials by p_r.
Row aug_mul_p(const Row& v, int r) {
    Row out;
    for (const auto& [lam, c] : v) {
        // append a new part r
        Partition ap = lam;
        ap.push_back(r);
        std::sort(ap.begin(), ap.end(), std::greater<int>());
        out[ap] += c;
        // or add r to an existing position
        for (std::size_t j = 0; j < lam.size(); ++j) {
            Partition bp = lam;
            bp[j] += r;
            std::sort(bp.begin(), bp.end(), std::greater<int>());
            out[bp] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<std::vector<BigRational>> invert_matrix(std::vector<std::vector<BigRational>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n, BigRational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = BigRational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) fail("UnsupportedBasis", "singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        BigRational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            BigRational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::map<int, std::unique_ptr<DegreeTables>>& tables_store() {
    static std::map<int, std::unique_ptr<DegreeTables>> store;
    return store;
}
std::mutex tables_mutex;

// p-expansions of the one-part e_n and h_n, by Newton's recurrences.
std::vector<Row> one_part_in_p(int n, bool elementary) {
    std::vector<Row> out(static_cast<std::size_t>(n) + 1);
    out[0][Partition{}] = BigRational(1);
    for (int m = 1; m <= n; ++m) {
        Row acc;
        for (int k = 1; k <= m; ++k) {
            BigRational sign = elementary ? BigRational((k % 2) ? 1 : -1) : BigRational(1);
            for (const auto& [mu, c] : out[static_cast<std::size_t>(m - k)]) {
                Partition nu = mu;
                nu.push_back(k);
                std::sort(nu.begin(), nu.end(), std::greater<int>());
                acc[nu] += sign * c;
            }
        }
        for (auto& [mu, c] : acc) c = c / BigRational(m);
        out[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return out;
}

Row row_product(const Row& a, const Row& b) {
    Row out;
    for (const auto& [mu, c] : a)
        for (const auto& [nu, d] : b) {
            Partition merged = mu;
            merged.insert(merged.end(), nu.begin(), nu.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            out[merged] += c * d;
        }
    return out;
}

std::vector<std::vector<BigRational>> rows_to_matrix(const std::vector<Row>& rows,
                                                     const DegreeTables& dt) {
    std::vector<std::vector<BigRational>> m(rows.size(),
                                            std::vector<BigRational>(dt.parts.size(), BigRational(0)));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [lam, c] : rows[r]) m[r][static_cast<std::size_t>(dt.index.at(lam))] = c;
    return m;
}

} // namespace

BigInt kostka_number(const Partition& shape, const Partition& content) {
    if (part_size(shape) != part_size(content)) return BigInt(0);
    // strip the largest letter as a horizontal strip, recurse
    static std::map<std::pair<Partition, Partition>, BigInt> memo;
    static std::mutex memo_mutex;
    if (content.empty()) return BigInt(shape.empty() ? 1 : 0);
    {
        std::scoped_lock lk(memo_mutex);
        auto it = memo.find({shape, content});
        if (it != memo.end()) return it->second;
    }
    int last = content.back();
    Partition rest(content.begin(), content.end() - 1);
    BigInt total(0);
    // enumerate nu with nu <= shape, shape/nu a horizontal strip of size `last`
    std::vector<int> nu(shape.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int rem) {
        if (row == shape.size()) {
            if (rem == 0) {
                Partition nup;
                for (int v : nu)
                    if (v > 0) nup.push_back(v);
                if (is_partition(nup)) total += kostka_number(nup, rest);
            }
            return;
        }
        int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (int v = lo; v <= shape[row]; ++v) {
            int removed = shape[row] - v;
            if (removed > rem) continue;
            nu[row] = v;
            rec(row + 1, rem - removed);
        }
    };
    rec(0, last);
    std::scoped_lock lk(memo_mutex);
    memo[{shape, content}] = total;
    return total;
}

const DegreeTables& degree_tables(int n) {
    {
        std::scoped_lock lk(tables_mutex);
        auto it = tables_store().find(n);
        if (it != tables_store().end()) return *it->second;
    }
    auto dt = std::make_unique<DegreeTables>();
    dt->n = n;
    dt->parts = partitions_of(n);
    for (std::size_t i = 0; i < dt->parts.size(); ++i)
        dt->index[dt->parts[i]] = static_cast<int>(i);
    std::size_t np = dt->parts.size();

    // p -> m via augmented monomials
    std::vector<Row> prows(np);
    for (std::size_t r = 0; r < np; ++r) {
        Row v;
        v[Partition{}] = BigRational(1);
        for (int part : dt->parts[r]) v = aug_mul_p(v, part);
        // translate augmented monomials to plain monomials
        Row plain;
        for (const auto& [lam, c] : v) {
            BigInt mult(1);
            std::size_t i = 0;
            while (i < lam.size()) {
                std::size_t j = i;
                while (j < lam.size() && lam[j] == lam[i]) ++j;
                mult *= factorial(static_cast<int>(j - i));
                i = j;
            }
            plain[lam] = c * BigRational(mult);
        }
        prows[r] = std::move(plain);
    }
    dt->p2m = rows_to_matrix(prows, *dt);
    dt->m2p = invert_matrix(dt->p2m);

    // e, h -> p
    auto erows1 = one_part_in_p(n, true);
    auto hrows1 = one_part_in_p(n, false);
    std::vector<Row> erows(np), hrows(np);
    for (std::size_t r = 0; r < np; ++r) {
        Row e, h;
        e[Partition{}] = BigRational(1);
        h[Partition{}] = BigRational(1);
        for (int part : dt->parts[r]) {
            e = row_product(e, erows1[static_cast<std::size_t>(part)]);
            h = row_product(h, hrows1[static_cast<std::size_t>(part)]);
        }
        erows[r] = std::move(e);
        hrows[r] = std::move(h);
    }
    dt->e2p = rows_to_matrix(erows, *dt);
    dt->h2p = rows_to_matrix(hrows, *dt);
    dt->p2e = invert_matrix(dt->e2p);
    dt->p2h = invert_matrix(dt->h2p);

    // s -> m via Kostka numbers
    dt->s2m.assign(np, std::vector<BigRational>(np, BigRational(0)));
    for (std::size_t r = 0; r < np; ++r)
        for (std::size_t c = 0; c < np; ++c)
            dt->s2m[r][c] = BigRational(kostka_number(dt->parts[r], dt->parts[c]));
    dt->m2s = invert_matrix(dt->s2m);

    std::scoped_lock lk(tables_mutex);
    auto [it, inserted] = tables_store().try_emplace(n, std::move(dt));
    return *it->second;
}

// --- conversions -------------------------------------------------------------

namespace {

// Apply per-degree matrix "basis row -> target columns" to an expansion.
SymFunc apply_tables(const SymFunc& f, Basis target,
                     const std::vector<std::vector<BigRational>> DegreeTables::*mat) {
    SymFunc out(target, f.alphabet());
    // group coefficients by degree
    std::map<int, std::vector<std::pair<Partition, QtRat>>> by_deg;
    for (const auto& [mu, c] : f.coeffs()) by_deg[part_size(mu)].push_back({mu, c});
    for (const auto& [deg, entries] : by_deg) {
        const DegreeTables& dt = degree_tables(deg);
        const auto& m = dt.*mat;
        for (const auto& [mu, c] : entries) {
            std::size_t r = static_cast<std::size_t>(dt.index.at(mu));
            for (std::size_t col = 0; col < dt.parts.size(); ++col) {
                if (m[r][col].is_zero()) continue;
                out.add_coeff(dt.parts[col], c * QtRat(m[r][col]));
            }
        }
    }
    return out;
}

SymFunc to_p(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::p: return f;
        case Basis::m: return apply_tables(f, Basis::p, &DegreeTables::m2p);
        case Basis::e: return apply_tables(f, Basis::p, &DegreeTables::e2p);
        case Basis::h: return apply_tables(f, Basis::p, &DegreeTables::h2p);
        case Basis::s: {
            SymFunc m = apply_tables(f, Basis::m, &DegreeTables::s2m);
            return apply_tables(m, Basis::p, &DegreeTables::m2p);
        }
        case Basis::f: {
            // F = sum c_mu f_mu  <=>  omega(F) = sum c_mu m_mu
            SymFunc m(Basis::m, f.alphabet());
            for (const auto& [mu, c] : f.coeffs()) m.set_coeff(mu, c);
            SymFunc p = apply_tables(m, Basis::p, &DegreeTables::m2p);
            return omega(p);
        }
        default: fail("UnsupportedBasis", "convert does not handle basis Ht/hhat/shat");
    }
}

SymFunc from_p(const SymFunc& f, Basis target) {
    switch (target) {
        case Basis::p: return f;
        case Basis::m: return apply_tables(f, Basis::m, &DegreeTables::p2m);
        case Basis::e: return apply_tables(f, Basis::e, &DegreeTables::p2e);
        case Basis::h: return apply_tables(f, Basis::h, &DegreeTables::p2h);
        case Basis::s: {
            SymFunc m = apply_tables(f, Basis::m, &DegreeTables::p2m);
            return apply_tables(m, Basis::s, &DegreeTables::m2s);
        }
        case Basis::f: {
            SymFunc w = omega(f); // still p basis
            SymFunc m = apply_tables(w, Basis::m, &DegreeTables::p2m);
            SymFunc out(Basis::f, f.alphabet());
            for (const auto& [mu, c] : m.coeffs()) out.set_coeff(mu, c);
            return out;
        }
        default: fail("UnsupportedBasis", "convert does not handle basis Ht/hhat/shat");
    }
}

} // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    if (f.basis() == Basis::Ht || f.basis() == Basis::hhat || f.basis() == Basis::shat ||
        target == Basis::Ht || target == Basis::hhat || target == Basis::shat)
        fail("UnsupportedBasis", "convert handles the classical bases only");
    if (f.basis() == Basis::s && target == Basis::m)
        return apply_tables(f, Basis::m, &DegreeTables::s2m);
    if (f.basis() == Basis::m && target == Basis::s)
        return apply_tables(f, Basis::s, &DegreeTables::m2s);
    return from_p(to_p(f), target);
}

SymFunc sym_mul(const SymFunc& a, const SymFunc& b) {
    if (a.alphabet() != b.alphabet()) fail("AlphabetMismatch", "product across alphabets");
    SymFunc pa = to_p(a), pb = to_p(b);
    SymFunc out(Basis::p, a.alphabet());
    for (const auto& [mu, c] : pa.coeffs())
        for (const auto& [nu, d] : pb.coeffs()) {
            Partition merged = mu;
            merged.insert(merged.end(), nu.begin(), nu.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            out.add_coeff(merged, c * d);
        }
    return out;
}

QtRat hall(const SymFunc& f, const SymFunc& g) {
    if (f.alphabet() != g.alphabet())
        fail("AlphabetMismatch", "Hall pairing across alphabets " + f.alphabet() + "," + g.alphabet());
    SymFunc pf = to_p(f), pg = to_p(g);
    QtRat total(0);
    for (const auto& [mu, c] : pf.coeffs()) {
        QtRat d = pg.coeff(mu);
        if (d.is_zero()) continue;
        total += c * d * QtRat(z_of(mu));
    }
    return total;
}

QtRat star_inner(const SymFunc& f, const SymFunc& g) {
    if (f.alphabet() != g.alphabet()) fail("AlphabetMismatch", "star pairing across alphabets");
    SymFunc pf = to_p(f), pg = to_p(g);
    QtRat total(0);
    for (const auto& [mu, c] : pf.coeffs()) {
        QtRat d = pg.coeff(mu);
        if (d.is_zero()) continue;
        QtPoly pM(1);
        for (int part : mu) pM = pM * (one_minus_q_pow(part) * one_minus_t_pow(part));
        int sign = ((part_size(mu) - part_length(mu)) % 2) ? -1 : 1;
        total += c * d * QtRat(z_of(mu)) * QtRat(pM) * QtRat(sign);
    }
    return total;
}

SymFunc omega(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::p: {
            SymFunc out(Basis::p, f.alphabet());
            for (const auto& [mu, c] : f.coeffs()) {
                int sign = ((part_size(mu) - part_length(mu)) % 2) ? -1 : 1;
                out.set_coeff(mu, c * QtRat(sign));
            }
            return out;
        }
        case Basis::e: {
            SymFunc out(Basis::h, f.alphabet());
            for (const auto& [mu, c] : f.coeffs()) out.set_coeff(mu, c);
            return out;
        }
        case Basis::h: {
            SymFunc out(Basis::e, f.alphabet());
            for (const auto& [mu, c] : f.coeffs()) out.set_coeff(mu, c);
            return out;
        }
        case Basis::m: {
            SymFunc out(Basis::f, f.alphabet());
            for (const auto& [mu, c] : f.coeffs()) out.set_coeff(mu, c);
            return out;
        }
        case Basis::f: {
            SymFunc out(Basis::m, f.alphabet());
            for (const auto& [mu, c] : f.coeffs()) out.set_coeff(mu, c);
            return out;
        }
        case Basis::s: {
            SymFunc out(Basis::s, f.alphabet());
            for (const auto& [mu, c] : f.coeffs()) out.set_coeff(conjugate(mu), c);
            return out;
        }
        default: {
            SymFunc s = convert(f, Basis::s);
            return omega(s);
        }
    }
}

SymFunc skew_e(const SymFunc& f, int a) {
    if (a < 0) fail("BoundExceeded", "skew_e needs a >= 0");
    if (a == 0) return f;
    SymFunc pf = to_p(f);
    SymFunc out(Basis::p, f.alphabet());
    const DegreeTables& dt = degree_tables(a);
    for (std::size_t r = 0; r < dt.parts.size(); ++r) {
        const Partition& alpha = dt.parts[r];
        // e_a = sum_alpha eps_alpha / z_alpha p_alpha; adjoint of p_k is k d/dp_k
        int sign = ((a - part_length(alpha)) % 2) ? -1 : 1;
        QtRat scale = QtRat(sign) / QtRat(z_of(alpha));
        for (int part : alpha) scale = scale * QtRat(part);
        SymFunc cur = pf;
        for (int part : alpha) {
            SymFunc next(Basis::p, f.alphabet());
            for (const auto& [mu, c] : cur.coeffs()) {
                int mult = static_cast<int>(std::count(mu.begin(), mu.end(), part));
                if (mult == 0) continue;
                Partition nu = mu;
                nu.erase(std::find(nu.begin(), nu.end(), part));
                next.add_coeff(nu, c * QtRat(mult));
            }
            cur = std::move(next);
            if (cur.is_zero()) break;
        }
        if (!cur.is_zero()) {
            for (const auto& [mu, c] : cur.coeffs()) out.add_coeff(mu, c * scale);
        }
    }
    return out;
}

// --- plethysm ----------------------------------------------------------------

struct AlphaExpr::Node {
    enum Kind { kX, kEps, kConst, kAdd, kSub, kMul } kind;
    QtRat value;
    std::shared_ptr<const Node> a, b;
};

AlphaExpr AlphaExpr::X() {
    AlphaExpr e;
    e.node_ = std::make_shared<Node>(Node{Node::kX, QtRat(0), nullptr, nullptr});
    return e;
}

AlphaExpr AlphaExpr::constant(QtRat c) {
    AlphaExpr e;
    e.node_ = std::make_shared<Node>(Node{Node::kConst, std::move(c), nullptr, nullptr});
    return e;
}

AlphaExpr AlphaExpr::eps() {
    AlphaExpr e;
    e.node_ = std::make_shared<Node>(Node{Node::kEps, QtRat(0), nullptr, nullptr});
    return e;
}

AlphaExpr AlphaExpr::operator+(const AlphaExpr& o) const {
    AlphaExpr e;
    e.node_ = std::make_shared<Node>(Node{Node::kAdd, QtRat(0), node_, o.node_});
    return e;
}

AlphaExpr AlphaExpr::operator-(const AlphaExpr& o) const {
    AlphaExpr e;
    e.node_ = std::make_shared<Node>(Node{Node::kSub, QtRat(0), node_, o.node_});
    return e;
}

AlphaExpr AlphaExpr::operator*(const AlphaExpr& o) const {
    AlphaExpr e;
    e.node_ = std::make_shared<Node>(Node{Node::kMul, QtRat(0), node_, o.node_});
    return e;
}

AlphaExpr AlphaExpr::over_one_minus_q() const {
    return *this * constant(QtRat(1) / QtRat(one_minus_q_pow(1)));
}

AlphaExpr AlphaExpr::over_one_minus_t() const {
    return *this * constant(QtRat(1) / QtRat(one_minus_t_pow(1)));
}

AlphaExpr AlphaExpr::over_M() const { return *this * constant(QtRat(1) / QtRat(poly_M())); }

AlphaExpr::PK AlphaExpr::pk(int k) const {
    std::function<PK(const Node*)> ev = [&](const Node* n) -> PK {
        switch (n->kind) {
            case Node::kX: return {QtRat(0), QtRat(1)};
            case Node::kEps: return {QtRat((k % 2) ? -1 : 1), QtRat(0)};
            case Node::kConst: {
                QtRat v = n->value.substitute(QtPoly::q(k), QtPoly::t(k), QtPoly::u(k));
                return {v, QtRat(0)};
            }
            case Node::kAdd: {
                PK a = ev(n->a.get()), b = ev(n->b.get());
                return {a.scalar + b.scalar, a.xcoef + b.xcoef};
            }
            case Node::kSub: {
                PK a = ev(n->a.get()), b = ev(n->b.get());
                return {a.scalar - b.scalar, a.xcoef - b.xcoef};
            }
            case Node::kMul: {
                PK a = ev(n->a.get()), b = ev(n->b.get());
                if (!a.xcoef.is_zero() && !b.xcoef.is_zero())
                    fail("UnsupportedExpression", "plethysm expression quadratic in X");
                return {a.scalar * b.scalar, a.scalar * b.xcoef + b.scalar * a.xcoef};
            }
        }
        fail("UnsupportedExpression", "bad plethysm expression");
    };
    return ev(node_.get());
}

SymFunc plethysm(const SymFunc& f, const AlphaExpr& e) {
    SymFunc pf = to_p(f);
    SymFunc out(Basis::p, f.alphabet());
    std::map<int, AlphaExpr::PK> cache;
    auto pk = [&](int k) -> const AlphaExpr::PK& {
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, e.pk(k)).first;
        return it->second;
    };
    for (const auto& [mu, c] : pf.coeffs()) {
        std::size_t l = mu.size();
        // expand prod_i (scalar_i + xcoef_i p_{mu_i}) over subsets
        for (unsigned mask = 0; mask < (1u << l); ++mask) {
            QtRat factor = c;
            Partition kept;
            bool dead = false;
            for (std::size_t i = 0; i < l; ++i) {
                const auto& v = pk(mu[i]);
                if (mask & (1u << i)) {
                    if (v.xcoef.is_zero()) {
                        dead = true;
                        break;
                    }
                    factor = factor * v.xcoef;
                    kept.push_back(mu[i]);
                } else {
                    if (v.scalar.is_zero()) {
                        dead = true;
                        break;
                    }
                    factor = factor * v.scalar;
                }
            }
            if (dead || factor.is_zero()) continue;
            std::sort(kept.begin(), kept.end(), std::greater<int>());
            out.add_coeff(kept, factor);
        }
    }
    return out;
}

QtRat plethysm_eval(const SymFunc& f, const AlphaExpr& e) {
    SymFunc out = plethysm(f, e);
    for (const auto& [mu, c] : out.coeffs())
        if (!mu.empty()) fail("UnsupportedExpression", "plethysm_eval on an X-ful expression");
    return out.coeff(Partition{});
}

} // namespace supernabla
