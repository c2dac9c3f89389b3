#include "supernabla/qtrat.hpp"

#include "supernabla/error.hpp"

#include <algorithm>
#include <ostream>

namespace supernabla {

void QtRat::normalize() {
    if (den_.is_zero()) fail("ZeroDenominator", "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = QtPoly(1);
        return;
    }
    // Clear Laurent shifts: divide both by the common monomial floor.
    Mono mn = num_.min_exponents(), md = den_.min_exponents();
    Mono shift{std::min(mn.q, md.q), std::min(mn.t, md.t), std::min(mn.u, md.u)};
    if (!(shift == Mono{})) {
        num_ = num_.shifted(Mono{} - shift);
        den_ = den_.shifted(Mono{} - shift);
    }
    if (den_.is_one()) {
        // nothing to cancel
    } else if (auto quot = num_.try_exact_div(den_)) {
        num_ = std::move(*quot);
        den_ = QtPoly(1);
    } else {
        QtPoly g = QtPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    // Exact division in the Laurent ring may leave a monomial denominator
    // hidden as negative exponents; restore nonnegative form.
    mn = num_.min_exponents();
    md = den_.min_exponents();
    Mono neg{std::min({mn.q, md.q, 0}), std::min({mn.t, md.t, 0}), std::min({mn.u, md.u, 0})};
    if (!(neg == Mono{})) {
        num_ = num_.shifted(Mono{} - neg);
        den_ = den_.shifted(Mono{} - neg);
    }
    if (den_.leading().second.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QtPoly QtRat::as_poly() const {
    if (!den_.is_one()) fail("DivisionNotExact", "non-polynomial value " + str());
    return num_;
}

QtRat QtRat::operator+(const QtRat& o) const {
    if (den_ == o.den_) return QtRat(num_ + o.num_, den_);
    return QtRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QtRat QtRat::operator-(const QtRat& o) const {
    if (den_ == o.den_) return QtRat(num_ - o.num_, den_);
    return QtRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QtRat QtRat::operator*(const QtRat& o) const {
    return QtRat(num_ * o.num_, den_ * o.den_);
}

QtRat QtRat::operator/(const QtRat& o) const {
    if (o.is_zero()) fail("ZeroDenominator", "division by zero rational function");
    return QtRat(num_ * o.den_, den_ * o.num_);
}

QtRat QtRat::substitute(const std::optional<QtPoly>& q_expr,
                        const std::optional<QtPoly>& t_expr,
                        const std::optional<QtPoly>& u_expr) const {
    QtPoly n = num_.substitute(q_expr, t_expr, u_expr);
    QtPoly d = den_.substitute(q_expr, t_expr, u_expr);
    if (d.is_zero()) fail("PoleAtSpecialization", "denominator vanishes under substitution of " + str());
    return QtRat(std::move(n), std::move(d));
}

BigRational QtRat::eval(const BigRational& qv, const BigRational& tv,
                        const BigRational& uv) const {
    BigRational d = den_.eval(qv, tv, uv);
    if (d.is_zero()) fail("PoleAtSpecialization", "pole of " + str());
    return num_.eval(qv, tv, uv) / d;
}

std::string QtRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QtRat QtRat::parse(const std::string& text) {
    auto slash = text.find(")/(");
    if (text.size() > 2 && text.front() == '(' && slash != std::string::npos &&
        text.back() == ')') {
        QtPoly n = QtPoly::parse(text.substr(1, slash - 1));
        QtPoly d = QtPoly::parse(text.substr(slash + 3, text.size() - slash - 4));
        return QtRat(std::move(n), std::move(d));
    }
    return QtRat(QtPoly::parse(text));
}

std::ostream& operator<<(std::ostream& os, const QtRat& r) { return os << r.str(); }

std::vector<BigRational> q_series(const QtRat& f, int order) {
    if (f.num().uses(1) || f.num().uses(2) || f.den().uses(1) || f.den().uses(2))
        fail("UnsupportedExpression", "q_series needs a function of q alone");
    if (f.num().min_degree(0) < 0 || f.den().min_degree(0) < 0)
        fail("UnsupportedExpression", "q_series needs nonnegative exponents");
    std::vector<BigRational> num(static_cast<std::size_t>(order) + 1),
        den(static_cast<std::size_t>(order) + 1);
    for (const auto& [m, c] : f.num().terms())
        if (m.q <= order) num[static_cast<std::size_t>(m.q)] = BigRational(c);
    for (const auto& [m, c] : f.den().terms())
        if (m.q <= order) den[static_cast<std::size_t>(m.q)] = BigRational(c);
    if (den[0].is_zero()) fail("PoleAtSpecialization", "series pole at q=0 of " + f.str());
    std::vector<BigRational> out(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        BigRational acc = num[static_cast<std::size_t>(k)];
        for (int j = 1; j <= k; ++j)
            acc -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc / den[0];
    }
    return out;
}

} // namespace supernabla
