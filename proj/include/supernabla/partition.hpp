#pragma once

#include "supernabla/bigint.hpp"
#include "supernabla/qtpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supernabla {

// A partition is a weakly decreasing vector of positive ints; {} is the empty
// partition. Cells use French coordinates (col i, row j), both 0-based.
using Partition = std::vector<int>;
using Composition = std::vector<int>;

struct Cell {
    int col = 0, row = 0;
};

bool is_partition(const Partition& p);
int part_size(const Partition& p);
int part_length(const Partition& p);
std::string part_str(const Partition& p); // "[2,1]", "[]" for empty
Partition part_parse(const std::string& s);
Partition conjugate(const Partition& p);
Partition sorted_partition(std::vector<int> parts); // sort desc, drop zeros

// Canonical order: by size, then lexicographic on the part vectors, so for a
// fixed n the order runs (1^n), (2,1^(n-2)), ..., (n). Matches table layouts.
struct PartLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n exactly once, in the canonical order above.
std::vector<Partition> partitions_of(int n);

std::vector<Cell> cells_of(const Partition& p);
int arm(const Partition& p, Cell c);
int leg(const Partition& p, Cell c);
int hook(const Partition& p, Cell c);
int n_stat(const Partition& p); // n(mu) = sum of (row index) over cells

// Cell-statistic polynomials of a partition.
struct CellStats {
    QtPoly B;   // sum q^i t^j
    QtPoly T;   // prod q^i t^j (a monomial)
    QtPoly Pi;  // prod over cells != (0,0) of (1 - q^i t^j)
    QtPoly w;   // prod (q^a - t^(l+1)) (t^l - q^(a+1)); empty partition rejected
    int nmu = 0;
    int nmu_conj = 0;
};
CellStats cell_stats(const Partition& p);
QtPoly B_poly(const Partition& p);
QtPoly T_poly(const Partition& p);
QtPoly Pi_poly(const Partition& p);
QtPoly w_poly(const Partition& p);

BigInt z_of(const Partition& p); // z_mu = prod i^(m_i) m_i!
BigInt factorial(int n);

// Partial sums set Sigma(alpha) = {a1, a1+a2, ...} without the full sum.
std::vector<int> sigma_set(const Composition& alpha);
Composition composition_from_sigma(const std::vector<int>& sigma, int n);

// All compositions of n (2^(n-1) of them), and all distinct rearrangements
// R(mu) of a partition's parts.
std::vector<Composition> compositions_of(int n);
std::vector<Composition> rearrangements(const Partition& mu);
// Distinct rearrangements of an arbitrary multiset of nonnegative ints.
std::vector<std::vector<int>> multiset_permutations(std::vector<int> items);

// PR(eta, beta): sequences of partitions nu^i |- beta_i whose parts together
// rearrange to eta.
std::vector<std::vector<Partition>> partition_fillings(const Partition& eta,
                                                       const Composition& beta);

// Multiplicity vector: m[v] = number of entries equal to v (index 0 kept).
std::vector<int> multiplicities(const std::vector<int>& word);
// Content partition of a word with letters >= 1: lambda_c = multiplicity of c,
// valid (weakly decreasing) only for dominant contents; std::nullopt otherwise.
std::optional<Partition> dominant_content(const std::vector<int>& word);

// Standard Young tableaux of shape mu, each given as the cell list in entry
// order (tab[k] holds the cell labeled k+1).
std::vector<std::vector<Cell>> standard_tableaux(const Partition& mu);

} // namespace supernabla
