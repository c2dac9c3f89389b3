#pragma once

#include "supernabla/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supernabla {

// ---- tuple statistics --------------------------------------------------------

std::vector<int> descent_set(const std::vector<int>& a); // 1-based positions
std::vector<int> ascent_set(const std::vector<int>& a);
int maj_stat(const std::vector<int>& a);
int comaj_stat(const std::vector<int>& a);
int revmaj_stat(const std::vector<int>& a);
int revcomaj_stat(const std::vector<int>& a);
// revmaj_alpha(beta) = sum of revmaj over the alpha-blocks of beta.
int revmaj_alpha(const std::vector<int>& beta, const Composition& alpha);
// Digit-wise sum over the columns of a word of tuples.
int revmaj_alpha_word(const Word& w, const Composition& alpha);

// Content partition of a lattice word, or nullopt when not lattice.
std::optional<Partition> lattice_type(const std::vector<int>& a);

// ---- multi-labeled Dyck paths --------------------------------------------------

// A lattice path in the kn x n grid weakly above ky = x, with a word of
// r-tuples on the north steps. cols[i] is the x-coordinate of north step i+1.
struct MultiLabeledDyckPath {
    int n = 0, k = 1, r = 1;
    std::vector<int> cols;
    Word word;

    bool valid() const;
    int area() const;
    // Weak descent count between letters i and i+1 (0-based), over all digits.
    int weak_descents(int i) const;
    Composition eta() const; // Definition of the e-composition
    std::string step_string() const; // "NEEN..E" over the kn x n grid
    std::string labels_csv() const;  // one comma-separated row per letter
    std::string render() const;
};

// Enumerate LD_{k^n}^r. `contents` fixes the per-digit letter multiset (size r,
// each a partition of n read as multiplicities); empty means letters 1..n are
// free. `lattice` restricts every digit column to lattice words.
std::vector<MultiLabeledDyckPath> enumerate_mld(int n, int k, int r,
                                                const std::vector<Partition>& contents,
                                                bool lattice);

// The area-preserving bijection onto rho-compatible labeled parallelogram
// polyominoes: east steps matching the y-digit weak descents are removed from
// both paths. For r = k+1 the 0th digit is the x-column and is not a shape
// digit; for r = k all digits are.
Polyomino mld_iota(const MultiLabeledDyckPath& p);
MultiLabeledDyckPath mld_iota_inverse(const Polyomino& poly, int n, int k, int r);

// ---- marked-return (gamma, k^n) paths ------------------------------------------

struct MarkedReturnPath {
    int n = 0, k = 0;
    Partition gamma;
    Polyomino poly; // top path and the (gamma,k^n)-staircase; labels = k-digit word
    int mark = 1;   // 1..ret

    int area() const { return poly.area(); }
    Composition eta() const;
};

std::vector<MarkedReturnPath> enumerate_marked(int n, int k, const Partition& gamma,
                                               const std::vector<Partition>& contents,
                                               bool lattice);

// ---- selected rearrangements ----------------------------------------------------

struct SelectedRearrangement {
    Composition alpha;
    int mark; // 1..alpha_1
};
std::vector<SelectedRearrangement> sr_enumerate(const Partition& mu);
long sr_count(const Partition& mu);

// ---- labeled square paths -------------------------------------------------------

struct LabeledSquarePath {
    int n = 0;
    std::vector<int> east;   // per line y=0..n; any path to (n,n) ending east
    std::vector<int> labels; // per north step, increasing up each column
    int area() const;
};
std::vector<LabeledSquarePath> enumerate_lsp_east(int n);

struct MarkedDyck {
    std::vector<int> cols;
    std::vector<int> labels;
    int mark = 1;
};
// Circular rearrangement starting at the right-most, lowest north step.
MarkedDyck square_to_marked(const LabeledSquarePath& L);

// ---- classical Dyck paths and the zeta map --------------------------------------

std::vector<std::vector<int>> dyck_area_words(int n);
int dyck_area(const std::vector<int>& areaword);
int dyck_dinv(const std::vector<int>& areaword);
int dyck_bounce(const std::vector<int>& areaword);
std::vector<int> zeta_map(const std::vector<int>& areaword);
Composition riser_composition(const std::vector<int>& areaword);
int dyck_first_return(const std::vector<int>& areaword);

// ---- permutation tuples ----------------------------------------------------------

// Number of (k+1)-tuples of permutations of n with no common descent position.
long perm_no_common_descent(int n, int k);

} // namespace supernabla
