#pragma once

#include "supernabla/partition.hpp"
#include "supernabla/qtpoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supernabla {

using Letter = std::vector<int>;
using Word = std::vector<Letter>;

// A "looks right" weight: a letter weight (here: which digits contribute to
// the content monomial) plus a local weight depending on adjacent letters
// only. The local weight at the final position of a full word is part of the
// data; it shapes the polyomino image but never the q-weight.
struct LooksRightWeight {
    int arity = 1;             // digits per letter
    int wt_digit_from = 0;     // digits >= this index carry content monomials
    std::vector<int> digit_min; // smallest usable letter value per digit
    std::function<int(const Letter&, const Letter*)> lwt; // next==nullptr at the end

    int lwt_at(const Word& w, std::size_t i) const { // i is 0-based
        const Letter* next = (i + 1 < w.size()) ? &w[i + 1] : nullptr;
        return lwt(w[i], next);
    }
};

// Dyck-path instance: k digit letters (the y labels), local weight = number of
// strict digit ascents, k at the terminal position.
LooksRightWeight mld_weight(int k);
// Variant carrying an extra leading x digit that does not enter the local
// weight (the W_lambda words of the Dyck-path bijection).
LooksRightWeight mld_weight_with_x(int k);
// Power-sum instance: k+1 digit letters whose 0th digit contributes its value
// to the local weight; digits 1..k as above.
LooksRightWeight power_weight(int k);
// Single-digit revmaj weight (ascent indicator), handy in tests.
LooksRightWeight ascent_weight();

// Per-digit dominant content of the wt digits; the key of D_{W,eta} results.
using ContentKey = std::vector<Partition>;
std::optional<ContentKey> word_content(const LooksRightWeight& W, const Word& w);
// rho(w) = prod q^(lwt(w,i)(l-i)); content must be queried separately.
QtPoly rho_eval(const LooksRightWeight& W, const Word& w);

// Column-composition tableau: a composition (the bars) plus weakly increasing
// column heights that jump only at bar positions.
struct CCT {
    Composition comp;          // block sizes, each >= 1
    std::vector<int> heights;  // one per column
    int columns() const { return static_cast<int>(heights.size()); }
    int size() const;          // total cells above the base row
    int bars() const { return static_cast<int>(comp.size()) - 1; }
    Partition type() const;    // sorted comp
    bool valid() const;
};

struct LabeledCCT {
    CCT shape;
    Word word;    // one letter per column
    int circle = -1; // circled column (0-based), -1 if none
};

using CCTSeq = std::vector<LabeledCCT>;

// Combined q-exponent weight of a sequence: q^(sum sizes) * prod rho(w^i).
QtPoly seq_weight(const LooksRightWeight& W, const CCTSeq& seq);
int seq_sign(const CCTSeq& seq); // (-1)^(total bars)
std::optional<ContentKey> seq_content(const LooksRightWeight& W, const CCTSeq& seq);

// Split at the first bar, or at the bar after column r (0-based).
// Throws NoBar when no such bar exists.
std::pair<LabeledCCT, LabeledCCT> split_cct(const LooksRightWeight& W, const LabeledCCT& s);
std::pair<LabeledCCT, LabeledCCT> split_cct_at(const LooksRightWeight& W, const LabeledCCT& s,
                                               int r);
// Join, when c_1(b) >= c_last(a) + sum of local weights across a.
std::optional<LabeledCCT> join_cct(const LooksRightWeight& W, const LabeledCCT& a,
                                   const LabeledCCT& b);

// The sign-reversing involution on tableau sequences and its fixed-point test.
CCTSeq psi(const LooksRightWeight& W, const CCTSeq& seq);
bool psi_fixed(const LooksRightWeight& W, const CCTSeq& seq);

// Parallelogram polyomino as per-line east-step counts of the two paths.
struct Polyomino {
    std::vector<int> peast, qeast; // lines y=0..n
    Word labels;                    // optional, one letter per row
    int mark = 0;                   // marked return row, 0 when unmarked

    int height() const { return static_cast<int>(peast.size()) - 1; }
    int width() const;
    bool valid() const;      // strictly above except at the endpoints
    int area() const;        // cells between, minus (m+n-1)
    Composition north_runs() const; // maximal N-runs of the top path
    int ret() const;         // first near-touching row at/after the first run
    std::string render() const;
};

// The bijection U_{W,eta} <-> rho-compatible labeled polyominoes of type eta.
Polyomino phi(const LooksRightWeight& W, const CCTSeq& fixed_point);
CCTSeq phi_inverse(const LooksRightWeight& W, const Polyomino& p);
bool rho_compatible(const LooksRightWeight& W, const Polyomino& p);

// Enumeration of LC_{W,eta} with the given wt-digit contents, up to total
// weight degree `maxdeg` (the signed sum needs a truncation degree; the
// fixed-point and polyomino sums do not).
std::vector<CCTSeq> enumerate_lc(const LooksRightWeight& W, const Partition& eta,
                                 const ContentKey& contents, int maxdeg);
std::vector<CCTSeq> enumerate_fixed_points(const LooksRightWeight& W, const Partition& eta,
                                           const ContentKey& contents);
std::vector<Polyomino> enumerate_pp(const LooksRightWeight& W, const Partition& eta,
                                    const ContentKey& contents);

enum class DRoute { FixedPoints, Polyominoes, SignedTruncated };
// D_{W,eta}(q) restricted to one content monomial.
QtPoly D_poly(const LooksRightWeight& W, const Partition& eta, const ContentKey& contents,
              DRoute route, int maxdeg = -1);

// ---- selected sequences and the power-sum machinery --------------------------

// Sequence validity for SC^gamma: at least one component with height 0 at its
// first column, exactly one circled column in the first component, 0th digits
// rearranging gamma padded with zeros, other digits positive.
bool sc_valid(const LooksRightWeight& W, const CCTSeq& seq, const Partition& gamma);

// The circular variant of psi used by the selected sequences.
CCTSeq psi_circ(const LooksRightWeight& W, const CCTSeq& seq);
bool psi_circ_fixed(const LooksRightWeight& W, const CCTSeq& seq);

std::vector<CCTSeq> enumerate_sc(const LooksRightWeight& W, const Partition& gamma, int n,
                                 const Partition& eta, const ContentKey& contents, int maxdeg);
std::vector<CCTSeq> enumerate_bsm(const LooksRightWeight& W, const Partition& gamma, int n,
                                  const Partition& eta, const ContentKey& contents);

// phi on a selected fixed point: rotate a zero-height component first, apply
// phi, and inscribe the circle as the marked return row.
Polyomino phi_circ(const LooksRightWeight& W, const CCTSeq& fixed_point);

std::string render_seq(const CCTSeq& seq);

} // namespace supernabla
