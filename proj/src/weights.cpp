#include "supernabla/weights.hpp"

#include "supernabla/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace supernabla {

LooksRightWeight mld_weight(int k) {
    LooksRightWeight W;
    W.arity = k;
    W.wt_digit_from = 0;
    W.digit_min.assign(static_cast<std::size_t>(k), 1);
    W.lwt = [k](const Letter& a, const Letter* next) {
        if (!next) return k;
        int asc = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] < (*next)[j]) ++asc;
        return asc;
    };
    return W;
}

LooksRightWeight mld_weight_with_x(int k) {
    LooksRightWeight W;
    W.arity = k + 1;
    W.wt_digit_from = 1;
    W.digit_min.assign(static_cast<std::size_t>(k) + 1, 1);
    W.lwt = [k](const Letter& a, const Letter* next) {
        if (!next) return k;
        int asc = 0;
        for (std::size_t j = 1; j < a.size(); ++j)
            if (a[j] < (*next)[j]) ++asc;
        return asc;
    };
    return W;
}

LooksRightWeight power_weight(int k) {
    LooksRightWeight W;
    W.arity = k + 1;
    W.wt_digit_from = 1;
    W.digit_min.assign(static_cast<std::size_t>(k) + 1, 1);
    W.digit_min[0] = 0;
    W.lwt = [k](const Letter& a, const Letter* next) {
        int v = a[0];
        if (!next) return v + k;
        for (std::size_t j = 1; j < a.size(); ++j)
            if (a[j] < (*next)[j]) ++v;
        return v;
    };
    return W;
}

LooksRightWeight ascent_weight() {
    LooksRightWeight W;
    W.arity = 1;
    W.wt_digit_from = 0;
    W.digit_min = {1};
    W.lwt = [](const Letter& a, const Letter* next) {
        return (next && a[0] < (*next)[0]) ? 1 : 0;
    };
    return W;
}

std::optional<ContentKey> word_content(const LooksRightWeight& W, const Word& w) {
    ContentKey key;
    for (int d = W.wt_digit_from; d < W.arity; ++d) {
        std::vector<int> col;
        for (const Letter& a : w) col.push_back(a[static_cast<std::size_t>(d)]);
        auto lam = dominant_content(col);
        if (!lam) return std::nullopt;
        key.push_back(*lam);
    }
    return key;
}

QtPoly rho_eval(const LooksRightWeight& W, const Word& w) {
    int l = static_cast<int>(w.size());
    int e = 0;
    for (int i = 0; i + 1 < l; ++i) e += W.lwt_at(w, static_cast<std::size_t>(i)) * (l - 1 - i);
    return QtPoly::q(e);
}

int CCT::size() const { return std::accumulate(heights.begin(), heights.end(), 0); }

Partition CCT::type() const { return sorted_partition(comp); }

bool CCT::valid() const {
    int total = 0;
    for (int b : comp) {
        if (b <= 0) return false;
        total += b;
    }
    if (total != columns()) return false;
    std::vector<int> sig = sigma_set(comp);
    std::set<int> bar(sig.begin(), sig.end());
    for (int i = 0; i < columns(); ++i) {
        if (heights[static_cast<std::size_t>(i)] < 0) return false;
        if (i > 0) {
            int prev = heights[static_cast<std::size_t>(i - 1)];
            int cur = heights[static_cast<std::size_t>(i)];
            if (cur < prev) return false;
            if (cur > prev && bar.find(i) == bar.end()) return false;
        }
    }
    return true;
}

QtPoly seq_weight(const LooksRightWeight& W, const CCTSeq& seq) {
    int cells = 0;
    QtPoly rho(1);
    for (const LabeledCCT& c : seq) {
        cells += c.shape.size();
        rho = rho * rho_eval(W, c.word);
    }
    return rho.mul_term(1, Mono{cells, 0, 0});
}

int seq_sign(const CCTSeq& seq) {
    int bars = 0;
    for (const LabeledCCT& c : seq) bars += c.shape.bars();
    return (bars % 2) ? -1 : 1;
}

std::optional<ContentKey> seq_content(const LooksRightWeight& W, const CCTSeq& seq) {
    Word w;
    for (const LabeledCCT& c : seq) w.insert(w.end(), c.word.begin(), c.word.end());
    return word_content(W, w);
}

std::pair<LabeledCCT, LabeledCCT> split_cct_at(const LooksRightWeight& W, const LabeledCCT& s,
                                               int r) {
    std::vector<int> sig = sigma_set(s.shape.comp);
    if (std::find(sig.begin(), sig.end(), r) == sig.end())
        fail("NoBar", "no bar after column " + std::to_string(r));
    int d = 0;
    for (int i = 0; i < r; ++i) d += W.lwt_at(s.word, static_cast<std::size_t>(i));
    LabeledCCT a, b;
    std::size_t cut = 0;
    for (std::size_t bi = 0; bi < s.shape.comp.size(); ++bi) {
        if (static_cast<int>(cut) < r) {
            a.shape.comp.push_back(s.shape.comp[bi]);
            cut += static_cast<std::size_t>(s.shape.comp[bi]);
        } else {
            b.shape.comp.push_back(s.shape.comp[bi]);
        }
    }
    a.shape.heights.assign(s.shape.heights.begin(), s.shape.heights.begin() + r);
    b.shape.heights.assign(s.shape.heights.begin() + r, s.shape.heights.end());
    for (int& h : b.shape.heights) h += d;
    a.word.assign(s.word.begin(), s.word.begin() + r);
    b.word.assign(s.word.begin() + r, s.word.end());
    if (s.circle >= 0) {
        if (s.circle < r)
            a.circle = s.circle;
        else
            b.circle = s.circle - r;
    }
    return {a, b};
}

std::pair<LabeledCCT, LabeledCCT> split_cct(const LooksRightWeight& W, const LabeledCCT& s) {
    if (s.shape.bars() == 0) fail("NoBar", "split of a bar-free tableau");
    return split_cct_at(W, s, s.shape.comp[0]);
}

std::optional<LabeledCCT> join_cct(const LooksRightWeight& W, const LabeledCCT& a,
                                   const LabeledCCT& b) {
    if (a.word.empty() || b.word.empty()) return std::nullopt;
    Word concat = a.word;
    concat.insert(concat.end(), b.word.begin(), b.word.end());
    int d = 0;
    for (std::size_t i = 0; i < a.word.size(); ++i) d += W.lwt_at(concat, i);
    if (b.shape.heights.front() < a.shape.heights.back() + d) return std::nullopt;
    LabeledCCT out;
    out.shape.comp = a.shape.comp;
    out.shape.comp.insert(out.shape.comp.end(), b.shape.comp.begin(), b.shape.comp.end());
    out.shape.heights = a.shape.heights;
    for (int h : b.shape.heights) out.shape.heights.push_back(h - d);
    out.word = std::move(concat);
    if (a.circle >= 0) out.circle = a.circle;
    if (b.circle >= 0) out.circle = static_cast<int>(a.word.size()) + b.circle;
    return out;
}

CCTSeq psi(const LooksRightWeight& W, const CCTSeq& seq) {
    if (seq.empty()) return seq;
    const LabeledCCT& t1 = seq[0];
    if (t1.shape.bars() > 0) {
        auto [a, b] = split_cct(W, t1);
        CCTSeq out{a, b};
        out.insert(out.end(), seq.begin() + 1, seq.end());
        return out;
    }
    if (seq.size() >= 2) {
        if (auto joined = join_cct(W, t1, seq[1])) {
            CCTSeq out{*joined};
            out.insert(out.end(), seq.begin() + 2, seq.end());
            return out;
        }
    }
    CCTSeq rest(seq.begin() + 1, seq.end());
    CCTSeq sub = psi(W, rest);
    CCTSeq out{t1};
    out.insert(out.end(), sub.begin(), sub.end());
    return out;
}

bool psi_fixed(const LooksRightWeight& W, const CCTSeq& seq) {
    for (const LabeledCCT& c : seq)
        if (c.shape.bars() > 0) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (join_cct(W, seq[i], seq[i + 1])) return false;
    return true;
}

// --- polyominoes --------------------------------------------------------------

int Polyomino::width() const { return std::accumulate(peast.begin(), peast.end(), 0); }

bool Polyomino::valid() const {
    int n = height();
    if (n < 1) return false;
    if (static_cast<int>(qeast.size()) != n + 1) return false;
    int m = width();
    if (m < 1) return false;
    if (std::accumulate(qeast.begin(), qeast.end(), 0) != m) return false;
    for (int v : peast)
        if (v < 0) return false;
    for (int v : qeast)
        if (v < 0) return false;
    // the top path leaves the origin north, the bottom path east
    if (peast[0] != 0 || qeast[0] < 1) return false;
    std::set<std::pair<int, int>> pts;
    auto add_points = [&](const std::vector<int>& east, bool record) {
        int x = 0;
        bool crossed = false;
        for (int y = 0; y <= n; ++y) {
            for (int i = 0; i <= east[static_cast<std::size_t>(y)]; ++i) {
                if (record)
                    pts.insert({x + i, y});
                else if ((x + i != 0 || y != 0) && (x + i != m || y != n) &&
                         pts.count({x + i, y}))
                    crossed = true;
            }
            x += east[static_cast<std::size_t>(y)];
        }
        return crossed;
    };
    add_points(peast, true);
    return !add_points(qeast, false);
}

int Polyomino::area() const {
    int n = height();
    int a = 0;
    for (int y = 0; y <= n; ++y)
        a += y * (peast[static_cast<std::size_t>(y)] - qeast[static_cast<std::size_t>(y)]);
    return a - (width() + n - 1);
}

Composition Polyomino::north_runs() const {
    int n = height();
    Composition runs;
    int cur = 0;
    for (int i = 1; i <= n; ++i) {
        ++cur; // the i-th north step
        if (i == n || peast[static_cast<std::size_t>(i)] > 0) {
            runs.push_back(cur);
            cur = 0;
        }
    }
    return runs;
}

int Polyomino::ret() const {
    int n = height();
    int r = 0;
    while (r < n && peast[static_cast<std::size_t>(r)] == 0) ++r; // leading N-run length
    auto col = [&](const std::vector<int>& east, int i) {
        int x = 0;
        for (int y = 0; y < i; ++y) x += east[static_cast<std::size_t>(y)];
        return x;
    };
    int m = width();
    for (int i = std::max(r, 1); i <= n; ++i) {
        int colp = (i == n) ? m : col(peast, i + 1);
        if (col(qeast, i) - colp <= 1) return i;
    }
    return n;
}

std::string Polyomino::render() const {
    int n = height(), m = width();
    std::ostringstream os;
    auto col = [&](const std::vector<int>& east, int i) {
        int x = 0;
        for (int y = 0; y < i; ++y) x += east[static_cast<std::size_t>(y)];
        return x;
    };
    for (int y = n - 1; y >= 0; --y) {
        int pl = col(peast, y + 1);
        int qr = col(qeast, y + 1);
        os << (mark == y + 1 ? "o" : " ");
        for (int x = 0; x < m; ++x) {
            bool inside = x >= pl && x < qr; // cells between the two paths
            os << (inside ? '#' : '.');
        }
        if (!labels.empty() && y < static_cast<int>(labels.size())) {
            os << "  [";
            for (std::size_t j = 0; j < labels[static_cast<std::size_t>(y)].size(); ++j) {
                if (j) os << ",";
                os << labels[static_cast<std::size_t>(y)][j];
            }
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

// --- phi ----------------------------------------------------------------------

namespace {

Word seq_word(const CCTSeq& seq) {
    Word w;
    for (const LabeledCCT& c : seq) w.insert(w.end(), c.word.begin(), c.word.end());
    return w;
}

std::vector<int> lwt_values(const LooksRightWeight& W, const Word& w) {
    std::vector<int> L(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) L[i] = W.lwt_at(w, i);
    return L;
}

} // namespace

Polyomino phi(const LooksRightWeight& W, const CCTSeq& seq) {
    if (!psi_fixed(W, seq)) fail("NotFixedPoint", "phi needs a psi fixed point");
    Word w = seq_word(seq);
    int n = static_cast<int>(w.size());
    std::vector<int> L = lwt_values(W, w);
    Polyomino p;
    p.peast.assign(static_cast<std::size_t>(n) + 1, 0);
    p.qeast.assign(static_cast<std::size_t>(n) + 1, 0);
    int r = static_cast<int>(seq.size());
    int pos = 0;
    for (int i = 0; i < r; ++i) {
        int beta = seq[static_cast<std::size_t>(i)].shape.columns();
        int c = seq[static_cast<std::size_t>(i)].shape.heights.empty()
                    ? 0
                    : seq[static_cast<std::size_t>(i)].shape.heights[0];
        int cnext = (i + 1 < r) ? seq[static_cast<std::size_t>(i + 1)].shape.heights[0] : 0;
        int lsum = 0;
        for (int j = 0; j < beta; ++j) lsum += L[static_cast<std::size_t>(pos + j)];
        int s = c + lsum - cnext;
        pos += beta;
        p.peast[static_cast<std::size_t>(pos)] += s;
    }
    p.peast[static_cast<std::size_t>(n)] += 1;
    p.qeast[0] = 1 + L[0];
    for (int y = 1; y < n; ++y) p.qeast[static_cast<std::size_t>(y)] = L[static_cast<std::size_t>(y)];
    p.labels = w;
    return p;
}

bool rho_compatible(const LooksRightWeight& W, const Polyomino& p) {
    int n = p.height();
    if (static_cast<int>(p.labels.size()) != n) return false;
    std::vector<int> L = lwt_values(W, p.labels);
    if (p.qeast[0] != 1 + L[0]) return false;
    for (int y = 1; y < n; ++y)
        if (p.qeast[static_cast<std::size_t>(y)] != L[static_cast<std::size_t>(y)]) return false;
    return p.qeast[static_cast<std::size_t>(n)] == 0;
}

CCTSeq phi_inverse(const LooksRightWeight& W, const Polyomino& p) {
    if (!p.valid() || !rho_compatible(W, p))
        fail("NotFixedPoint", "phi_inverse needs a rho-compatible polyomino");
    int n = p.height();
    std::vector<int> L = lwt_values(W, p.labels);
    Composition beta = p.north_runs();
    CCTSeq seq;
    int c = 0, pos = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        LabeledCCT comp;
        comp.shape.comp = {beta[i]};
        comp.shape.heights.assign(static_cast<std::size_t>(beta[i]), c);
        comp.word.assign(p.labels.begin() + pos, p.labels.begin() + pos + beta[i]);
        seq.push_back(comp);
        int lsum = 0;
        for (int j = 0; j < beta[i]; ++j) lsum += L[static_cast<std::size_t>(pos + j)];
        int s = p.peast[static_cast<std::size_t>(pos + beta[i])] -
                ((pos + beta[i] == n) ? 1 : 0);
        c = c + lsum - s;
        pos += beta[i];
    }
    if (c != 0) fail("NotFixedPoint", "polyomino does not close back to height 0");
    if (!psi_fixed(W, seq)) fail("NotFixedPoint", "phi_inverse produced a non-fixed point");
    return seq;
}

// --- enumeration ---------------------------------------------------------------

namespace {

// All words with the prescribed dominant content per wt digit. For weights
// whose digit 0 is special (wt_digit_from == 1) the caller supplies the
// digit-0 column separately.
std::vector<Word> words_for_content(const LooksRightWeight& W, int n, const ContentKey& contents,
                                    const std::vector<int>* digit0) {
    int from = W.wt_digit_from;
    if (static_cast<int>(contents.size()) != W.arity - from)
        fail("UnsupportedExpression", "content arity mismatch");
    std::vector<std::vector<std::vector<int>>> digit_words; // per wt digit
    for (const Partition& lam : contents) {
        if (part_size(lam) != n) fail("DegreeMismatch", "content size mismatch");
        std::vector<int> letters;
        for (std::size_t c = 0; c < lam.size(); ++c)
            for (int r = 0; r < lam[c]; ++r) letters.push_back(static_cast<int>(c) + 1);
        digit_words.push_back(multiset_permutations(letters));
    }
    std::vector<Word> out;
    std::vector<int> pick(digit_words.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t d) {
        if (d == digit_words.size()) {
            Word w(static_cast<std::size_t>(n), Letter(static_cast<std::size_t>(W.arity), 0));
            for (int i = 0; i < n; ++i) {
                if (from == 1) w[static_cast<std::size_t>(i)][0] = (*digit0)[static_cast<std::size_t>(i)];
                for (std::size_t dd = 0; dd < digit_words.size(); ++dd)
                    w[static_cast<std::size_t>(i)][static_cast<std::size_t>(from) + dd] =
                        digit_words[dd][static_cast<std::size_t>(pick[dd])][static_cast<std::size_t>(i)];
            }
            out.push_back(std::move(w));
            return;
        }
        for (std::size_t i = 0; i < digit_words[d].size(); ++i) {
            pick[d] = static_cast<int>(i);
            rec(d + 1);
        }
    };
    rec(0);
    return out;
}

// Block local-weight sums for a word cut into blocks beta; cyclic=false uses
// the word's own terminal convention, cyclic=true wraps block ell to block 1.
std::vector<int> block_lwt_sums(const LooksRightWeight& W, const Word& w,
                                const Composition& beta, bool cyclic) {
    std::vector<int> sums(beta.size(), 0);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < beta.size(); ++b) {
        for (int j = 0; j < beta[b]; ++j) {
            std::size_t i = pos + static_cast<std::size_t>(j);
            const Letter* next = nullptr;
            if (i + 1 < w.size())
                next = &w[i + 1];
            else if (cyclic && !w.empty())
                next = &w[0];
            sums[b] += W.lwt(w[i], next);
        }
        pos += static_cast<std::size_t>(beta[b]);
    }
    return sums;
}

CCTSeq make_flat_seq(const Composition& beta, const std::vector<int>& c, const Word& w) {
    CCTSeq seq;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        LabeledCCT comp;
        comp.shape.comp = {beta[i]};
        comp.shape.heights.assign(static_cast<std::size_t>(beta[i]), c[i]);
        comp.word.assign(w.begin() + static_cast<long>(pos),
                         w.begin() + static_cast<long>(pos) + beta[i]);
        seq.push_back(comp);
        pos += static_cast<std::size_t>(beta[i]);
    }
    return seq;
}

} // namespace

std::vector<CCTSeq> enumerate_fixed_points(const LooksRightWeight& W, const Partition& eta,
                                           const ContentKey& contents) {
    if (W.wt_digit_from != 0)
        fail("UnsupportedExpression", "generic enumeration needs plain content weights");
    int n = part_size(eta);
    std::vector<CCTSeq> out;
    for (const Composition& beta : rearrangements(eta)) {
        for (const Word& w : words_for_content(W, n, contents, nullptr)) {
            std::vector<int> B = block_lwt_sums(W, w, beta, false);
            std::vector<int> c(beta.size(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == beta.size()) {
                    out.push_back(make_flat_seq(beta, c, w));
                    return;
                }
                if (i == 0) {
                    c[0] = 0;
                    rec(1);
                    return;
                }
                for (int h = 0; h < c[i - 1] + B[i - 1]; ++h) {
                    c[i] = h;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    }
    return out;
}

std::vector<Polyomino> enumerate_pp(const LooksRightWeight& W, const Partition& eta,
                                    const ContentKey& contents) {
    if (W.wt_digit_from != 0)
        fail("UnsupportedExpression", "generic enumeration needs plain content weights");
    int n = part_size(eta);
    std::vector<Polyomino> out;
    for (const Word& w : words_for_content(W, n, contents, nullptr)) {
        std::vector<int> L = lwt_values(W, w);
        Polyomino base;
        base.qeast.assign(static_cast<std::size_t>(n) + 1, 0);
        base.qeast[0] = 1 + L[0];
        for (int y = 1; y < n; ++y) base.qeast[static_cast<std::size_t>(y)] = L[static_cast<std::size_t>(y)];
        int m = std::accumulate(base.qeast.begin(), base.qeast.end(), 0);
        for (const Composition& beta : rearrangements(eta)) {
            // distribute m-1 east steps over the run ends, plus the final E
            int runs = static_cast<int>(beta.size());
            std::vector<int> s(static_cast<std::size_t>(runs), 0);
            std::function<void(int, int)> rec = [&](int i, int rem) {
                if (i == runs) {
                    if (rem != 0) return;
                    Polyomino p = base;
                    p.peast.assign(static_cast<std::size_t>(n) + 1, 0);
                    int pos = 0;
                    for (int j = 0; j < runs; ++j) {
                        pos += beta[static_cast<std::size_t>(j)];
                        p.peast[static_cast<std::size_t>(pos)] += s[static_cast<std::size_t>(j)];
                    }
                    p.peast[static_cast<std::size_t>(n)] += 1;
                    p.labels = w;
                    if (p.valid()) out.push_back(std::move(p));
                    return;
                }
                int lo = (i + 1 < runs) ? 1 : 0; // interior gaps keep runs apart
                for (int v = lo; v <= rem; ++v) {
                    s[static_cast<std::size_t>(i)] = v;
                    rec(i + 1, rem - v);
                }
            };
            rec(0, m - 1);
        }
    }
    return out;
}

std::vector<CCTSeq> enumerate_lc(const LooksRightWeight& W, const Partition& eta,
                                 const ContentKey& contents, int maxdeg) {
    if (W.wt_digit_from != 0)
        fail("UnsupportedExpression", "generic enumeration needs plain content weights");
    int n = part_size(eta);
    std::vector<CCTSeq> out;
    for (const Composition& beta : compositions_of(n)) {
        auto fillings = partition_fillings(eta, beta);
        if (fillings.empty()) continue;
        for (const Word& w : words_for_content(W, n, contents, nullptr)) {
            // rho exponent of the whole sequence, independent of bars/heights
            int rho_exp = 0;
            {
                std::size_t pos = 0;
                for (int b : beta) {
                    Word piece(w.begin() + static_cast<long>(pos),
                               w.begin() + static_cast<long>(pos) + b);
                    rho_exp += rho_eval(W, piece).degree(0);
                    pos += static_cast<std::size_t>(b);
                }
            }
            if (rho_exp > maxdeg) continue;
            int cell_budget = maxdeg - rho_exp;
            for (const auto& nus : fillings) {
                // per component: choose a bar composition and heights
                CCTSeq seq(beta.size());
                std::size_t pos = 0;
                for (std::size_t i = 0; i < beta.size(); ++i) {
                    seq[i].word.assign(w.begin() + static_cast<long>(pos),
                                       w.begin() + static_cast<long>(pos) + beta[i]);
                    pos += static_cast<std::size_t>(beta[i]);
                }
                std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
                    if (i == beta.size()) {
                        out.push_back(seq);
                        return;
                    }
                    for (const Composition& alpha : rearrangements(nus[i])) {
                        int blocks = static_cast<int>(alpha.size());
                        std::vector<int> h(static_cast<std::size_t>(blocks), 0);
                        std::function<void(int, int)> pick = [&](int b, int rem) {
                            if (b == blocks) {
                                CCT shape;
                                shape.comp = alpha;
                                for (int bb = 0; bb < blocks; ++bb)
                                    for (int cpy = 0; cpy < alpha[static_cast<std::size_t>(bb)]; ++cpy)
                                        shape.heights.push_back(h[static_cast<std::size_t>(bb)]);
                                seq[i].shape = shape;
                                rec(i + 1, rem);
                                return;
                            }
                            int lo = (b == 0) ? (i == 0 ? 0 : 0) : h[static_cast<std::size_t>(b - 1)];
                            if (i == 0 && b == 0) {
                                // first component is barred: first column height 0
                                h[0] = 0;
                                pick(1, rem);
                                return;
                            }
                            for (int v = lo;; ++v) {
                                int cost = v * alpha[static_cast<std::size_t>(b)];
                                if (cost > rem) break;
                                h[static_cast<std::size_t>(b)] = v;
                                pick(b + 1, rem - cost);
                            }
                        };
                        pick(0, budget);
                    }
                };
                rec(0, cell_budget);
            }
        }
    }
    return out;
}

QtPoly D_poly(const LooksRightWeight& W, const Partition& eta, const ContentKey& contents,
              DRoute route, int maxdeg) {
    QtPoly total;
    switch (route) {
        case DRoute::FixedPoints:
            for (const CCTSeq& t : enumerate_fixed_points(W, eta, contents))
                total += seq_weight(W, t);
            break;
        case DRoute::Polyominoes:
            for (const Polyomino& p : enumerate_pp(W, eta, contents))
                total.add_term(Mono{p.area(), 0, 0}, 1);
            break;
        case DRoute::SignedTruncated: {
            if (maxdeg < 0) fail("BoundExceeded", "signed route needs a truncation degree");
            for (const CCTSeq& t : enumerate_lc(W, eta, contents, maxdeg))
                total += seq_weight(W, t).mul_int(seq_sign(t));
            // truncation is exact per degree: drop anything above maxdeg
            QtPoly cut;
            for (const auto& [m, c] : total.terms())
                if (m.q <= maxdeg) cut.add_term(m, c);
            total = cut;
            break;
        }
    }
    return total;
}

// --- selected sequences ---------------------------------------------------------

bool sc_valid(const LooksRightWeight& W, const CCTSeq& seq, const Partition& gamma) {
    if (seq.empty()) return false;
    int circles = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!seq[i].shape.valid()) return false;
        if (seq[i].circle >= 0) {
            if (i != 0) return false;
            ++circles;
        }
    }
    if (circles != 1) return false;
    // circle sits on some column of the first component
    if (seq[0].circle >= seq[0].shape.columns()) return false;
    bool has_zero = false;
    for (const LabeledCCT& c : seq)
        if (!c.shape.heights.empty() && c.shape.heights.front() == 0) has_zero = true;
    if (!has_zero) return false;
    // 0th digits rearrange gamma padded with zeros; others positive
    Word w = seq_word(seq);
    std::vector<int> d0;
    for (const Letter& a : w) {
        d0.push_back(a[0]);
        for (int j = 1; j < W.arity; ++j)
            if (a[static_cast<std::size_t>(j)] < 1) return false;
    }
    std::vector<int> sorted0 = d0;
    std::sort(sorted0.begin(), sorted0.end(), std::greater<int>());
    Partition padded = gamma;
    while (static_cast<int>(padded.size()) < static_cast<int>(w.size())) padded.push_back(0);
    std::sort(padded.begin(), padded.end(), std::greater<int>());
    return sorted0 == padded;
}

CCTSeq psi_circ(const LooksRightWeight& W, const CCTSeq& seq) {
    if (seq.empty()) return seq;
    const LabeledCCT& s1 = seq[0];
    if (s1.circle < 0) fail("NotFixedPoint", "psi_circ needs a circled first component");
    // case 1: a bar strictly left of the circle
    std::vector<int> sig = sigma_set(s1.shape.comp);
    int rstar = -1;
    for (int r : sig)
        if (r <= s1.circle) rstar = std::max(rstar, r);
    if (rstar > 0) {
        auto [r1, r2] = split_cct_at(W, s1, rstar);
        CCTSeq out{r2};
        out.insert(out.end(), seq.begin() + 1, seq.end());
        out.push_back(r1);
        return out;
    }
    // case 2: the last component joins the first
    if (seq.size() >= 2) {
        if (auto joined = join_cct(W, seq.back(), seq.front())) {
            CCTSeq out{*joined};
            out.insert(out.end(), seq.begin() + 1, seq.end() - 1);
            return out;
        }
    }
    // case 3: the plain involution
    return psi(W, seq);
}

bool psi_circ_fixed(const LooksRightWeight& W, const CCTSeq& seq) {
    if (seq.empty()) return false;
    for (const LabeledCCT& c : seq)
        if (c.shape.bars() > 0) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (join_cct(W, seq[i], seq[i + 1])) return false;
    if (seq.size() >= 2 && join_cct(W, seq.back(), seq.front())) return false;
    return true;
}

std::vector<CCTSeq> enumerate_sc(const LooksRightWeight& W, const Partition& gamma, int n,
                                 const Partition& eta, const ContentKey& contents, int maxdeg) {
    std::vector<CCTSeq> out;
    std::vector<int> padded(gamma.begin(), gamma.end());
    while (static_cast<int>(padded.size()) < n) padded.push_back(0);
    for (const Composition& beta : compositions_of(n)) {
        auto fillings = partition_fillings(eta, beta);
        if (fillings.empty()) continue;
        for (const std::vector<int>& d0 : multiset_permutations(padded)) {
            for (const Word& w : [&] {
                     // splice the digit-0 column into content words
                     return words_for_content(W, n, contents, &d0);
                 }()) {
                int rho_exp = 0;
                {
                    std::size_t pos = 0;
                    for (int b : beta) {
                        Word piece(w.begin() + static_cast<long>(pos),
                                   w.begin() + static_cast<long>(pos) + b);
                        rho_exp += rho_eval(W, piece).degree(0);
                        pos += static_cast<std::size_t>(b);
                    }
                }
                if (rho_exp > maxdeg) continue;
                for (const auto& nus : fillings) {
                    CCTSeq seq(beta.size());
                    std::size_t pos = 0;
                    for (std::size_t i = 0; i < beta.size(); ++i) {
                        seq[i].word.assign(w.begin() + static_cast<long>(pos),
                                           w.begin() + static_cast<long>(pos) + beta[i]);
                        pos += static_cast<std::size_t>(beta[i]);
                    }
                    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
                        if (i == beta.size()) {
                            for (int c0 = 0; c0 < seq[0].shape.columns(); ++c0) {
                                CCTSeq withc = seq;
                                withc[0].circle = c0;
                                if (sc_valid(W, withc, gamma)) out.push_back(withc);
                            }
                            return;
                        }
                        for (const Composition& alpha : rearrangements(nus[i])) {
                            int blocks = static_cast<int>(alpha.size());
                            std::vector<int> h(static_cast<std::size_t>(blocks), 0);
                            std::function<void(int, int)> pick = [&](int b, int rem) {
                                if (b == blocks) {
                                    CCT shape;
                                    shape.comp = alpha;
                                    for (int bb = 0; bb < blocks; ++bb)
                                        for (int cpy = 0; cpy < alpha[static_cast<std::size_t>(bb)]; ++cpy)
                                            shape.heights.push_back(h[static_cast<std::size_t>(bb)]);
                                    seq[i].shape = shape;
                                    rec(i + 1, rem);
                                    return;
                                }
                                int lo = (b == 0) ? 0 : h[static_cast<std::size_t>(b - 1)];
                                for (int v = lo;; ++v) {
                                    int cost = v * alpha[static_cast<std::size_t>(b)];
                                    if (cost > rem) break;
                                    h[static_cast<std::size_t>(b)] = v;
                                    pick(b + 1, rem - cost);
                                }
                            };
                            pick(0, budget);
                        }
                    };
                    rec(0, maxdeg - rho_exp);
                }
            }
        }
    }
    return out;
}

std::vector<CCTSeq> enumerate_bsm(const LooksRightWeight& W, const Partition& gamma, int n,
                                  const Partition& eta, const ContentKey& contents) {
    std::vector<CCTSeq> out;
    std::vector<int> padded(gamma.begin(), gamma.end());
    while (static_cast<int>(padded.size()) < n) padded.push_back(0);
    for (const Composition& beta : rearrangements(eta)) {
        for (const std::vector<int>& d0 : multiset_permutations(padded)) {
            for (const Word& w : words_for_content(W, n, contents, &d0)) {
                std::vector<int> D = block_lwt_sums(W, w, beta, true);
                int bound = std::accumulate(D.begin(), D.end(), 0);
                std::size_t l = beta.size();
                std::vector<int> c(l, 0);
                std::function<void(std::size_t)> rec = [&](std::size_t i) {
                    if (i == l) {
                        // cyclic no-join conditions and at least one zero
                        bool ok = true;
                        if (l > 1)
                            for (std::size_t j = 0; j < l; ++j) {
                                std::size_t nxt = (j + 1) % l;
                                if (!(c[nxt] < c[j] + D[j])) ok = false;
                            }
                        bool zero = false;
                        for (int v : c) zero |= (v == 0);
                        if (!ok || !zero) return;
                        CCTSeq seq = make_flat_seq(beta, c, w);
                        for (int c0 = 0; c0 < beta[0]; ++c0) {
                            CCTSeq withc = seq;
                            withc[0].circle = c0;
                            if (sc_valid(W, withc, gamma)) out.push_back(withc);
                        }
                        return;
                    }
                    for (int v = 0; v <= bound; ++v) {
                        c[i] = v;
                        rec(i + 1);
                    }
                };
                rec(0);
            }
        }
    }
    return out;
}

Polyomino phi_circ(const LooksRightWeight& W, const CCTSeq& seq) {
    if (!psi_circ_fixed(W, seq)) fail("NotFixedPoint", "phi_circ needs a psi_circ fixed point");
    // rotate so that a zero-height component leads (largest such index),
    // unless the first already has height zero
    std::size_t l = seq.size();
    std::size_t jstar = 0;
    if (!seq[0].shape.heights.empty() && seq[0].shape.heights.front() != 0) {
        for (std::size_t j = 1; j < l; ++j)
            if (seq[j].shape.heights.front() == 0) jstar = j;
        if (jstar == 0) fail("NotFixedPoint", "no zero-height component");
    }
    CCTSeq rotated;
    for (std::size_t i = 0; i < l; ++i) rotated.push_back(seq[(jstar + i) % l]);
    // locate the circled column's row in the rotated order
    int circle_row = -1;
    {
        int pos = 0;
        for (std::size_t i = 0; i < l; ++i) {
            const LabeledCCT& comp = rotated[i];
            if (comp.circle >= 0) circle_row = pos + comp.circle + 1;
            pos += comp.shape.columns();
        }
    }
    CCTSeq plain = rotated;
    for (LabeledCCT& c : plain) c.circle = -1;
    Polyomino p = phi(W, plain);
    p.mark = circle_row;
    return p;
}

std::string render_seq(const CCTSeq& seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const LabeledCCT& c = seq[i];
        if (i) os << " | ";
        os << "(";
        for (std::size_t j = 0; j < c.shape.heights.size(); ++j) {
            if (j) os << ",";
            os << c.shape.heights[j];
            if (static_cast<int>(j) == c.circle) os << "o";
        }
        os << " ; ";
        for (std::size_t j = 0; j < c.word.size(); ++j) {
            if (j) os << ",";
            for (std::size_t d = 0; d < c.word[j].size(); ++d) os << c.word[j][d];
        }
        os << ")";
    }
    return os.str();
}

} // namespace supernabla
