#include "supernabla/qtpoly.hpp"

#include "supernabla/error.hpp"
#include "supernabla/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace supernabla {

QtPoly QtPoly::monomial(const BigInt& c, Mono m) {
    QtPoly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

bool QtPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

bool QtPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{} && terms_.begin()->second.is_one();
}

const std::pair<const Mono, BigInt>& QtPoly::leading() const {
    if (terms_.empty()) fail("ZeroDenominator", "leading term of the zero polynomial");
    return *terms_.rbegin();
}

int QtPoly::degree(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[var] > d) d = m[var];
        first = false;
    }
    return d;
}

int QtPoly::min_degree(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[var] < d) d = m[var];
        first = false;
    }
    return d;
}

const BigInt* QtPoly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

BigInt QtPoly::coeff_or_zero(Mono m) const {
    const BigInt* c = coeff(m);
    return c ? *c : BigInt(0);
}

void QtPoly::add_term(Mono m, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QtPoly QtPoly::operator-() const {
    QtPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
    QtPoly r = *this;
    r += o;
    return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const {
    QtPoly r = *this;
    r -= o;
    return r;
}

QtPoly& QtPoly::operator+=(const QtPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QtPoly& QtPoly::operator-=(const QtPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QtPoly QtPoly::operator*(const QtPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return {};
    // Multiply the smaller operand into the larger one term by term.
    const QtPoly& big = terms_.size() >= o.terms_.size() ? *this : o;
    const QtPoly& small = terms_.size() >= o.terms_.size() ? o : *this;
    QtPoly r;
    for (const auto& [m, c] : small.terms_)
        for (const auto& [m2, c2] : big.terms_) r.add_term(m + m2, c * c2);
    return r;
}

QtPoly QtPoly::mul_term(const BigInt& c, Mono m) const {
    QtPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m2, c2] : terms_) r.terms_[m + m2] = c * c2;
    return r;
}

QtPoly QtPoly::mul_int(const BigInt& c) const {
    return mul_term(c, Mono{});
}

std::optional<QtPoly> QtPoly::try_exact_div(const QtPoly& d) const {
    if (d.is_zero()) fail("ZeroDenominator", "division by the zero polynomial");
    if (is_zero()) return QtPoly{};
    if (d.is_one()) return *this;
    // Shift both operands into the polynomial range so the monomial order
    // argument for exact division applies.
    Mono sa = min_exponents(), sd = d.min_exponents();
    QtPoly num = shifted(Mono{} - sa);
    QtPoly den = d.shifted(Mono{} - sd);
    const auto& dl = den.leading();
    QtPoly quot;
    // The leading monomial of num strictly decreases each round, and graded
    // lex is a well-order on nonnegative exponents, so this terminates.
    while (!num.is_zero()) {
        const auto& nl = num.leading();
        Mono qm = nl.first - dl.first;
        if (qm.q < 0 || qm.t < 0 || qm.u < 0) return std::nullopt;
        if (!nl.second.divisible_by(dl.second)) return std::nullopt;
        BigInt qc = nl.second.divexact(dl.second);
        quot.add_term(qm, qc);
        num -= den.mul_term(qc, qm);
    }
    // Undo the shifts: result = quot * q^(sa-sd) etc.
    return quot.shifted(sa - sd);
}

QtPoly QtPoly::exact_div(const QtPoly& d) const {
    auto r = try_exact_div(d);
    if (!r) fail("DivisionNotExact", "(" + str() + ") / (" + d.str() + ")");
    return *r;
}

Mono QtPoly::min_exponents() const {
    Mono m{};
    bool first = true;
    for (const auto& [mm, c] : terms_) {
        if (first) {
            m = mm;
            first = false;
        } else {
            m.q = std::min(m.q, mm.q);
            m.t = std::min(m.t, mm.t);
            m.u = std::min(m.u, mm.u);
        }
    }
    return m;
}

namespace {

// expr^e with e possibly negative; negative powers need a single +-1 term.
QtPoly expr_power(const QtPoly& expr, int e, std::map<int, QtPoly>& cache) {
    if (e == 0) return QtPoly(1);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    QtPoly r;
    if (e > 0) {
        r = expr_power(expr, e - 1, cache) * expr;
    } else {
        if (expr.term_count() != 1)
            fail("UnsupportedExpression", "negative power of a non-monomial substitution");
        const auto& [m, c] = *expr.terms().begin();
        if (!(c.is_one() || (-c).is_one()))
            fail("UnsupportedExpression", "negative power of a non-unit monomial");
        Mono inv = Mono{} - m;
        BigInt coeff = c; // +-1, self-inverse
        QtPoly base = QtPoly::monomial(coeff, inv);
        r = QtPoly(1);
        for (int i = 0; i < -e; ++i) r = r * base;
    }
    cache[e] = r;
    return r;
}

} // namespace

QtPoly QtPoly::substitute(const std::optional<QtPoly>& q_expr,
                          const std::optional<QtPoly>& t_expr,
                          const std::optional<QtPoly>& u_expr) const {
    QtPoly qe = q_expr.value_or(QtPoly::q());
    QtPoly te = t_expr.value_or(QtPoly::t());
    QtPoly ue = u_expr.value_or(QtPoly::u());
    std::map<int, QtPoly> qc, tc, uc;
    QtPoly out;
    for (const auto& [m, c] : terms_) {
        QtPoly term = QtPoly(c);
        if (m.q != 0) term = term * expr_power(qe, m.q, qc);
        if (m.t != 0) term = term * expr_power(te, m.t, tc);
        if (m.u != 0) term = term * expr_power(ue, m.u, uc);
        out += term;
    }
    return out;
}

BigInt QtPoly::content() const {
    BigInt g(0);
    for (const auto& [m, c] : terms_) {
        g = BigInt::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

QtPoly QtPoly::primitive_part() const {
    if (is_zero()) return {};
    BigInt c = content();
    QtPoly r;
    for (const auto& [m, coeffv] : terms_) r.terms_[m] = coeffv.divexact(c);
    return r;
}

namespace {

// Univariate view of a polynomial in one main variable whose coefficients are
// polynomials in the remaining variables.
std::vector<QtPoly> coeffs_in(const QtPoly& p, int var) {
    std::vector<QtPoly> out(static_cast<std::size_t>(p.degree(var)) + 1);
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int e = m[var];
        rest[var] = 0;
        out[static_cast<std::size_t>(e)].add_term(rest, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

QtPoly from_coeffs(const std::vector<QtPoly>& cs, int var) {
    QtPoly r;
    for (std::size_t e = 0; e < cs.size(); ++e)
        for (const auto& [m, c] : cs[e].terms()) {
            Mono mm = m;
            mm[var] = static_cast<int>(e);
            r.add_term(mm, c);
        }
    return r;
}

int deg_of(const std::vector<QtPoly>& cs) { return static_cast<int>(cs.size()) - 1; }

// Pseudo-remainder of A by B in the main variable (coefficients recursive).
std::vector<QtPoly> pseudo_rem(std::vector<QtPoly> A, const std::vector<QtPoly>& B) {
    int db = deg_of(B);
    const QtPoly& lb = B.back();
    int e = deg_of(A) - db + 1;
    while (deg_of(A) >= db && !(A.size() == 1 && A[0].is_zero())) {
        QtPoly la = A.back();
        int shift = deg_of(A) - db;
        // A = lb*A - la*x^shift*B
        for (auto& c : A) c = c * lb;
        for (int i = 0; i <= db; ++i) A[static_cast<std::size_t>(i + shift)] -= la * B[static_cast<std::size_t>(i)];
        while (A.size() > 1 && A.back().is_zero()) A.pop_back();
        --e;
        if (A.size() == 1 && A[0].is_zero()) break;
    }
    // Scale by lb^e so the result equals prem with the full lb^(delta+1) factor.
    if (e > 0) {
        QtPoly f(1);
        for (int i = 0; i < e; ++i) f = f * lb;
        for (auto& c : A) c = c * f;
    }
    return A;
}

QtPoly sign_normalize(const QtPoly& p) {
    if (p.is_zero()) return p;
    return p.leading().second.sign() < 0 ? -p : p;
}

QtPoly gcd_impl(const QtPoly& a, const QtPoly& b);

// Content of p with respect to var: gcd of its coefficients.
QtPoly content_in(const std::vector<QtPoly>& cs) {
    QtPoly g;
    for (const auto& c : cs) {
        g = gcd_impl(g, c);
        if (g.is_one()) break;
    }
    return g;
}

QtPoly gcd_impl(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero()) return sign_normalize(b);
    if (b.is_zero()) return sign_normalize(a);
    if (a.is_constant() || b.is_constant()) {
        BigInt g = BigInt::gcd(a.content(), b.content());
        return QtPoly(g);
    }
    int var = -1;
    for (int v : {0, 1, 2})
        if (a.uses(v) || b.uses(v)) {
            var = v;
            break;
        }
    auto A = coeffs_in(a, var), B = coeffs_in(b, var);
    QtPoly ca = content_in(A), cb = content_in(B);
    QtPoly cg = gcd_impl(ca, cb);
    for (auto& c : A) c = c.exact_div(ca);
    for (auto& c : B) c = c.exact_div(cb);
    if (deg_of(A) < deg_of(B)) std::swap(A, B);

    // Subresultant polynomial remainder sequence.
    QtPoly g(1), h(1);
    while (true) {
        int delta = deg_of(A) - deg_of(B);
        auto R = pseudo_rem(A, B);
        if (R.size() == 1 && R[0].is_zero()) break;
        if (deg_of(R) == 0) {
            B = {QtPoly(1)};
            break;
        }
        // divisor g*h^delta
        QtPoly div = g;
        for (int i = 0; i < delta; ++i) div = div * h;
        for (auto& c : R) c = c.exact_div(div);
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        // h = g^delta / h^(delta-1)
        QtPoly gp(1);
        for (int i = 0; i < delta; ++i) gp = gp * g;
        if (delta == 0) {
            h = h; // unchanged
        } else {
            QtPoly hp(1);
            for (int i = 0; i < delta - 1; ++i) hp = hp * h;
            h = gp.exact_div(hp);
        }
    }
    QtPoly pp = from_coeffs(B, var);
    pp = pp.exact_div(content_in(coeffs_in(pp, var)));
    return sign_normalize(cg * pp);
}

} // namespace

QtPoly QtPoly::gcd(const QtPoly& a, const QtPoly& b) {
    Mono ma = a.min_exponents(), mb = b.min_exponents();
    if (ma.q < 0 || ma.t < 0 || ma.u < 0 || mb.q < 0 || mb.t < 0 || mb.u < 0)
        fail("UnsupportedExpression", "gcd requires nonnegative exponents");
    return gcd_impl(a, b);
}

BigRational QtPoly::eval(const BigRational& qv, const BigRational& tv,
                         const BigRational& uv) const {
    auto powr = [](const BigRational& base, int e) {
        if (e == 0) return BigRational(1);
        bool neg = e < 0;
        unsigned long k = static_cast<unsigned long>(neg ? -e : e);
        BigRational r(1);
        for (unsigned long i = 0; i < k; ++i) r = r * base;
        if (neg) r = BigRational(1) / r;
        return r;
    };
    BigRational total(0);
    for (const auto& [m, c] : terms_)
        total += BigRational(c) * powr(qv, m.q) * powr(tv, m.t) * powr(uv, m.u);
    return total;
}

std::string QtPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        const BigInt& c = it->second;
        BigInt a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_var = !(m == Mono{});
        if (!a.is_one() || !has_var) {
            os << a.str();
            if (has_var) os << "*";
        }
        bool star = false;
        auto put = [&](const char* name, int e) {
            if (e == 0) return;
            if (star) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            star = true;
        };
        put("q", m.q);
        put("t", m.t);
        put("u", m.u);
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    int parse_int() {
        skip();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("ParseError", "expected integer in '" + s + "'");
        return std::stoi(s.substr(start, i - start));
    }
    BigInt parse_bigint() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("ParseError", "expected number in '" + s + "'");
        return BigInt(s.substr(start, i - start));
    }
};

} // namespace

QtPoly QtPoly::parse(const std::string& text) {
    Parser p(text);
    QtPoly out;
    bool any = false;
    while (!p.eof()) {
        int sign = 1;
        char c = p.peek();
        if (c == '+') {
            ++p.i;
        } else if (c == '-') {
            sign = -1;
            ++p.i;
        } else if (any) {
            fail("ParseError", "expected '+' or '-' in '" + text + "'");
        }
        BigInt coeff(1);
        Mono m{};
        bool saw_factor = false;
        while (true) {
            char ch = p.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff = coeff * p.parse_bigint();
                saw_factor = true;
            } else if (ch == 'q' || ch == 't' || ch == 'u') {
                ++p.i;
                int e = 1;
                if (p.peek() == '^') {
                    ++p.i;
                    e = p.parse_int();
                }
                int var = ch == 'q' ? 0 : ch == 't' ? 1 : 2;
                m[var] += e;
                saw_factor = true;
            } else if (ch == '*') {
                ++p.i;
                continue;
            } else {
                break;
            }
        }
        if (!saw_factor) fail("ParseError", "empty term in '" + text + "'");
        out.add_term(m, sign < 0 ? -coeff : coeff);
        any = true;
    }
    if (!any) fail("ParseError", "empty polynomial text");
    return out;
}

std::size_t QtPoly::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& [m, c] : terms_) {
        mix(static_cast<std::size_t>(m.q * 1315423911 + m.t * 2654435761u + m.u * 97));
        mix(c.hash());
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const QtPoly& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.str(); }

QtPoly one_minus_q_pow(int k) { return QtPoly(1) - QtPoly::q(k); }
QtPoly one_minus_t_pow(int k) { return QtPoly(1) - QtPoly::t(k); }
QtPoly poly_M() { return one_minus_q_pow(1) * one_minus_t_pow(1); }

QtPoly q_pochhammer(int k) {
    QtPoly r(1);
    for (int i = 1; i <= k; ++i) r = r * one_minus_q_pow(i);
    return r;
}

} // namespace supernabla
