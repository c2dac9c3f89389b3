#pragma once

#include "supernabla/macdonald.hpp"
#include "supernabla/pathcomb.hpp"

#include <map>
#include <string>
#include <vector>

namespace supernabla {

// Result of one identity or positivity check. Mismatch carries the first
// differing coefficient as its witness; nonpositivity carries the offending
// coefficient. Reports are deterministic for fixed parameters.
struct CheckReport {
    std::string id;
    std::string params;
    enum Verdict { Match, Mismatch, Positive, Nonpositive } verdict = Match;
    std::string witness;
    double runtime_ms = 0;
    bool conjecture = false; // nonpositive conjecture findings are not failures

    bool ok() const {
        return verdict == Match || verdict == Positive ||
               (conjecture && verdict == Nonpositive);
    }
    std::string line() const;
    std::string json() const;
};

// Two-variable Schur expansion s_(a,b)(q,t) = (qt)^b h_(a-b)(q,t) by
// leading-term peeling. Input must be symmetric under q <-> t.
std::map<Partition, BigInt, PartLess> schur_qt_expand(const QtPoly& c);
QtPoly schur_qt_poly(const Partition& ab);

// Theorem: the three combinatorial expansions of nabla_hat_Y e_n at t=1.
CheckReport check_t1_theorem(int n, int k);
// The power-sum analogue over marked-return (gamma,k^n)-Dyck paths.
CheckReport check_power_theorem(int n, int k, const Partition& gamma);
// At k=0, gamma=1^n the square-path model at t=1.
CheckReport check_square_paths(int n);

// Named classical identities; see the dispatcher for the list.
CheckReport check_classical(const std::string& id, int n);

// Positivity experiments.
CheckReport check_positivity_schur_qt(int n, int k);
CheckReport check_e_positivity_q1t1(int n, int k);
CheckReport check_e_positivity_shift(int n, int k);

// E_v positivity experiment for one vector v (n = v.size(), slots = k+1).
CheckReport check_triangular(const std::vector<int>& v, int k);

// Suite driver: t1, power, classical, positivity, all.
std::vector<CheckReport> run_suite(const std::string& suite, int nmax, int kmax);

// The full m-expansion table of nabla_hat_z nabla_hat_y e_3 (entry keyed by
// the three partitions), for the table-reproduction check and the CLI.
std::map<std::vector<Partition>, QtPoly, PartVecLess> m_table_e3_k2();

// e-basis coefficients at q=t=1 folded to slot multisets, with the all-e_{1^n}
// factors stripped from the key (the E_nu bookkeeping of the e-positivity
// tables). Fails if the expansion is not multiset-invariant.
std::map<std::vector<Partition>, QtPoly, PartVecLess> e_multiset_coefficients(
    const TensorSymFunc& tensor_in_e, int n);

} // namespace supernabla
