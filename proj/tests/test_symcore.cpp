#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supernabla/symfunc.hpp"

#include <cstdint>

using namespace supernabla;

namespace {

struct Lcg {
    std::uint64_t s = 0xfeedface12345ull;
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 17;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

SymFunc random_symfunc(Lcg& rng, Basis b, int deg) {
    SymFunc out(b, "x");
    for (const Partition& mu : partitions_of(deg))
        if (rng.range(0, 2) == 0) out.set_coeff(mu, QtRat(rng.range(-5, 5)));
    if (out.is_zero()) out.set_coeff(Partition(static_cast<std::size_t>(deg), 1), QtRat(1));
    return out;
}

} // namespace

TEST_CASE("partitions_of") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    CHECK(partitions_of(4).size() == 5);
    // brute-force oracle: count weakly decreasing positive sequences summing to 8
    CHECK(partitions_of(8).size() == 22);
    // canonical order: (1^4) first, (4) last, strictly increasing
    auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition{1, 1, 1, 1});
    CHECK(p4.back() == Partition{4});
    PartLess less;
    for (std::size_t i = 0; i + 1 < p4.size(); ++i) CHECK(less(p4[i], p4[i + 1]));
}

TEST_CASE("cell stats") {
    CellStats one = cell_stats(Partition{1});
    CHECK(one.B == QtPoly(1));
    CHECK(one.T == QtPoly(1));
    CHECK(one.Pi == QtPoly(1));
    CHECK(one.w == poly_M());

    CellStats s21 = cell_stats(Partition{2, 1});
    CHECK(s21.B == QtPoly(1) + QtPoly::q() + QtPoly::t());
    CHECK(s21.T == QtPoly::q() * QtPoly::t());
    CHECK(s21.nmu == 1);

    // empty partition conventions
    CellStats e = cell_stats(Partition{});
    CHECK(e.B == QtPoly(0));
    CHECK(e.T == QtPoly(1));
    CHECK(e.Pi == QtPoly(1));
    CHECK_THROWS_AS(w_poly(Partition{}), Error);
}

TEST_CASE("basic conversions") {
    SymFunc e2 = sym_term(Basis::e, {2});
    CHECK(convert(e2, Basis::s) == sym_term(Basis::s, {1, 1}));
    SymFunc p2 = sym_term(Basis::p, {2});
    SymFunc p2h = convert(p2, Basis::h);
    CHECK(p2h.coeff({2}) == QtRat(2));
    CHECK(p2h.coeff({1, 1}) == QtRat(-1));

    // s-form of Ht_21 -> m basis (Kostka expansion of the intro display)
    SymFunc hs(Basis::s, "x");
    hs.set_coeff({3}, QtRat(1));
    hs.set_coeff({2, 1}, QtRat(QtPoly::q() + QtPoly::t()));
    hs.set_coeff({1, 1, 1}, QtRat(QtPoly::q() * QtPoly::t()));
    SymFunc hm = convert(hs, Basis::m);
    CHECK(hm.coeff({3}) == QtRat(1));
    CHECK(hm.coeff({2, 1}) == QtRat(QtPoly(1) + QtPoly::q() + QtPoly::t()));
    CHECK(hm.coeff({1, 1, 1}) ==
          QtRat(QtPoly(1) + QtPoly(2) * QtPoly::q() + QtPoly(2) * QtPoly::t() +
                QtPoly::q() * QtPoly::t()));
}

TEST_CASE("conversions are mutually inverse up to degree 8") {
    Lcg rng;
    for (int n = 0; n <= 8; ++n) {
        SymFunc f = random_symfunc(rng, Basis::m, n);
        for (Basis b : {Basis::e, Basis::h, Basis::p, Basis::s, Basis::f}) {
            SymFunc g = convert(convert(f, b), Basis::m);
            CHECK(g == f);
        }
    }
}

TEST_CASE("hall pairing") {
    CHECK(hall(sym_term(Basis::s, {2, 1}), sym_term(Basis::s, {2, 1})) == QtRat(1));
    CHECK(hall(sym_term(Basis::p, {2, 1}), sym_term(Basis::p, {2, 1})) == QtRat(2));
    for (const Partition& lam : partitions_of(4))
        for (const Partition& mu : partitions_of(4)) {
            QtRat v = hall(sym_term(Basis::h, lam), sym_term(Basis::m, mu));
            CHECK(v == QtRat(lam == mu ? 1 : 0));
        }
    CHECK_THROWS_AS(hall(sym_term(Basis::p, {1}, QtRat(1), "x"),
                         sym_term(Basis::p, {1}, QtRat(1), "y")),
                    Error);
}

TEST_CASE("omega") {
    CHECK(omega(sym_term(Basis::e, {3})) == sym_term(Basis::h, {3}));
    CHECK(omega(sym_term(Basis::s, {2, 1})) == sym_term(Basis::s, {2, 1}));
    CHECK(omega(sym_term(Basis::p, {3})) == sym_term(Basis::p, {3}));
    CHECK(omega(sym_term(Basis::p, {2})) == sym_term(Basis::p, {2}, QtRat(-1)));
    // involution + isometry on random pairs of degree <= 6
    Lcg rng;
    for (int n = 1; n <= 6; ++n) {
        SymFunc f = random_symfunc(rng, Basis::s, n);
        SymFunc g = random_symfunc(rng, Basis::s, n);
        CHECK(omega(omega(f)) == f);
        CHECK(hall(omega(f), omega(g)) == hall(f, g));
    }
}

TEST_CASE("star inner product") {
    // <p1,p1>_* = M
    CHECK(star_inner(sym_term(Basis::p, {1}), sym_term(Basis::p, {1})) == QtRat(poly_M()));
    // matches <F, omega G[M X]> for all basis elements of degree <= 5
    AlphaExpr MX = AlphaExpr::X() * AlphaExpr::constant(QtRat(poly_M()));
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                SymFunc F = sym_term(Basis::s, lam);
                SymFunc G = sym_term(Basis::h, mu);
                QtRat lhs = star_inner(F, G);
                QtRat rhs = hall(F, omega(plethysm(G, MX)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("plethysm") {
    // p2[X/(1-q)] = p2 / (1-q^2)
    AlphaExpr Xq = AlphaExpr::X().over_one_minus_q();
    SymFunc r = plethysm(sym_term(Basis::p, {2}), Xq);
    CHECK(r.coeff({2}) == QtRat(QtPoly(1), one_minus_q_pow(2)));
    // h2[1-q] = 1 - q
    AlphaExpr one_minus_qv = AlphaExpr::constant(QtRat(one_minus_q_pow(1)));
    CHECK(plethysm_eval(sym_term(Basis::h, {2}), one_minus_qv) == QtRat(one_minus_q_pow(1)));
    // s21[M * (X/M)] = s21
    AlphaExpr cancel = (AlphaExpr::X().over_M()) * AlphaExpr::constant(QtRat(poly_M()));
    SymFunc s21 = sym_term(Basis::s, {2, 1});
    CHECK(convert(plethysm(s21, cancel), Basis::s) == s21);
    // p_k[eps] = (-1)^k
    CHECK(plethysm_eval(sym_term(Basis::p, {3}), AlphaExpr::eps()) == QtRat(-1));
    CHECK(plethysm_eval(sym_term(Basis::p, {2}), AlphaExpr::eps()) == QtRat(1));
}

TEST_CASE("skew by elementary") {
    for (int n = 2; n <= 5; ++n) {
        SymFunc en = sym_term(Basis::e, Partition{n});
        SymFunc r = convert(skew_e(en, 1), Basis::e);
        CHECK(r == sym_term(Basis::e, Partition{n - 1}));
    }
    CHECK(convert(skew_e(sym_term(Basis::s, {2}), 1), Basis::s) == sym_term(Basis::s, {1}));
    CHECK(convert(skew_e(sym_term(Basis::s, {2, 1}), 2), Basis::s) == sym_term(Basis::s, {1}));
    // adjointness <e_a^perp f, g> = <f, e_a g> on random inputs
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.range(2, 5), a = rng.range(1, n - 1);
        SymFunc f = random_symfunc(rng, Basis::s, n);
        SymFunc g = random_symfunc(rng, Basis::s, n - a);
        QtRat lhs = hall(skew_e(f, a), g);
        QtRat rhs = hall(f, sym_mul(sym_term(Basis::e, Partition{a}), g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("forgotten basis principal specialization matches the signed formula") {
    const int order = 20;
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            int l = part_length(mu);
            // combinatorial series: (-1)^(n-l) sum over rearrangements and
            // weakly increasing exponent tuples
            std::vector<BigRational> comb(order + 1, BigRational(0));
            for (const Composition& alpha : rearrangements(mu)) {
                std::vector<int> idx(static_cast<std::size_t>(l), 0);
                // enumerate 0 <= i1 <= ... <= il with bounded weight
                std::function<void(int, int, int)> rec = [&](int pos, int minv, int weight) {
                    if (pos == l) {
                        comb[static_cast<std::size_t>(weight)] += BigRational(1);
                        return;
                    }
                    for (int i = minv;; ++i) {
                        int w2 = weight + i * alpha[static_cast<std::size_t>(pos)];
                        if (w2 > order) break;
                        rec(pos + 1, i, w2);
                    }
                };
                rec(0, 0, 0);
            }
            int sign = ((n - l) % 2) ? -1 : 1;
            for (auto& c : comb) c = c * BigRational(sign);
            QtRat val = plethysm_eval(
                sym_term(Basis::f, mu),
                AlphaExpr::constant(QtRat(QtPoly(1), one_minus_q_pow(1))));
            auto series = q_series(val, order);
            for (int k = 0; k <= order; ++k)
                CHECK(series[static_cast<std::size_t>(k)] == comb[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("symfunc serialization round trips") {
    SymFunc f(Basis::s, "y1");
    f.set_coeff({2, 1}, QtRat(QtPoly::q() + QtPoly::t(), one_minus_q_pow(1)));
    f.set_coeff({3}, QtRat(7));
    CHECK(SymFunc::parse(f.str()) == f);
}

TEST_CASE("compositions and fillings") {
    CHECK(compositions_of(4).size() == 8);
    CHECK(sigma_set({2, 1, 3}) == std::vector<int>{2, 3});
    // PR((2,1,1), (2,2)): nu1 |- 2, nu2 |- 2 drawing parts from {2,1,1}
    auto fills = partition_fillings(Partition{2, 1, 1}, Composition{2, 2});
    // ((2),(1,1)) and ((1,1),(2))
    CHECK(fills.size() == 2);
    auto all = partition_fillings(Partition{1, 1, 1}, Composition{3});
    REQUIRE(all.size() == 1);
    CHECK(all[0][0] == Partition{1, 1, 1});
}

TEST_CASE("star pairing of a scaled alphabet against a Schur term") {
    // <e_1[X/M], s_1>_* = 1: the M denominators cancel against the deformed
    // pairing weight
    SymFunc e1m = plethysm(sym_term(Basis::e, {1}), AlphaExpr::X().over_M());
    CHECK(star_inner(e1m, sym_term(Basis::s, {1})) == QtRat(1));
}
