#include "supernabla/pathcomb.hpp"

#include "supernabla/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace supernabla {

std::vector<int> descent_set(const std::vector<int>& a) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<int> ascent_set(const std::vector<int>& a) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

int maj_stat(const std::vector<int>& a) {
    int s = 0;
    for (int i : descent_set(a)) s += i;
    return s;
}

int comaj_stat(const std::vector<int>& a) {
    int n = static_cast<int>(a.size()), s = 0;
    for (int i : descent_set(a)) s += n - i;
    return s;
}

int revmaj_stat(const std::vector<int>& a) {
    int n = static_cast<int>(a.size()), s = 0;
    for (int i : ascent_set(a)) s += n - i;
    return s;
}

int revcomaj_stat(const std::vector<int>& a) {
    int s = 0;
    for (int i : ascent_set(a)) s += i;
    return s;
}

int revmaj_alpha(const std::vector<int>& beta, const Composition& alpha) {
    int s = 0;
    std::size_t pos = 0;
    for (int part : alpha) {
        std::vector<int> block(beta.begin() + static_cast<long>(pos),
                               beta.begin() + static_cast<long>(pos) + part);
        s += revmaj_stat(block);
        pos += static_cast<std::size_t>(part);
    }
    return s;
}

int revmaj_alpha_word(const Word& w, const Composition& alpha) {
    if (w.empty()) return 0;
    int s = 0;
    for (std::size_t d = 0; d < w[0].size(); ++d) {
        std::vector<int> col;
        for (const Letter& a : w) col.push_back(a[d]);
        s += revmaj_alpha(col, alpha);
    }
    return s;
}

std::optional<Partition> lattice_type(const std::vector<int>& a) {
    std::vector<int> mult;
    for (int v : a) {
        if (v <= 0) return std::nullopt;
        if (static_cast<std::size_t>(v) > mult.size()) mult.resize(static_cast<std::size_t>(v), 0);
        ++mult[static_cast<std::size_t>(v - 1)];
        for (std::size_t j = 1; j < mult.size(); ++j)
            if (mult[j] > mult[j - 1]) return std::nullopt;
    }
    Partition lam(mult.begin(), mult.end());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return lam;
}

// ---- multi-labeled Dyck paths --------------------------------------------------

bool MultiLabeledDyckPath::valid() const {
    if (static_cast<int>(cols.size()) != n || static_cast<int>(word.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(word[static_cast<std::size_t>(i)].size()) != r) return false;
        for (int v : word[static_cast<std::size_t>(i)])
            if (v < 1) return false;
        if (cols[static_cast<std::size_t>(i)] < 0 || cols[static_cast<std::size_t>(i)] > k * i)
            return false;
        if (i > 0 && cols[static_cast<std::size_t>(i)] < cols[static_cast<std::size_t>(i - 1)])
            return false;
    }
    for (int i = 0; i + 1 < n; ++i)
        if (weak_descents(i) > cols[static_cast<std::size_t>(i + 1)] - cols[static_cast<std::size_t>(i)])
            return false;
    return true;
}

int MultiLabeledDyckPath::area() const {
    int a = 0;
    for (int i = 0; i < n; ++i) a += k * i - cols[static_cast<std::size_t>(i)];
    return a;
}

int MultiLabeledDyckPath::weak_descents(int i) const {
    int c = 0;
    for (int d = 0; d < r; ++d)
        if (word[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] >=
            word[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(d)])
            ++c;
    return c;
}

Composition MultiLabeledDyckPath::eta() const {
    std::vector<int> sigma;
    for (int i = 0; i + 1 < n; ++i)
        if (weak_descents(i) <
            cols[static_cast<std::size_t>(i + 1)] - cols[static_cast<std::size_t>(i)])
            sigma.push_back(i + 1);
    return composition_from_sigma(sigma, n);
}

std::string MultiLabeledDyckPath::step_string() const {
    std::string s;
    int x = 0;
    for (int i = 0; i < n; ++i) {
        while (x < cols[static_cast<std::size_t>(i)]) {
            s += 'E';
            ++x;
        }
        s += 'N';
    }
    while (x < k * n) {
        s += 'E';
        ++x;
    }
    return s;
}

std::string MultiLabeledDyckPath::labels_csv() const {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ";";
        for (int d = 0; d < r; ++d) {
            if (d) s += ",";
            s += std::to_string(word[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
        }
    }
    return s;
}

std::string MultiLabeledDyckPath::render() const {
    std::ostringstream os;
    for (int i = n - 1; i >= 0; --i) {
        for (int x = 0; x < k * n; ++x)
            os << (x < cols[static_cast<std::size_t>(i)] ? ' ' : x < k * i ? '#' : '.');
        os << "  [";
        for (int d = 0; d < r; ++d) {
            if (d) os << ",";
            os << word[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

// All weakly increasing col vectors with cols[0]=0, cols[i] <= k*i.
void all_cols(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        int lo = (i == 0) ? 0 : cur[static_cast<std::size_t>(i - 1)];
        for (int c = lo; c <= k * i; ++c) {
            cur[static_cast<std::size_t>(i)] = c;
            rec(i + 1);
        }
    };
    rec(0);
}

// Per-digit column candidates for a word of length n.
std::vector<std::vector<std::vector<int>>> digit_columns(int n, int r,
                                                         const std::vector<Partition>& contents,
                                                         bool lattice) {
    std::vector<std::vector<std::vector<int>>> out;
    for (int d = 0; d < r; ++d) {
        std::vector<std::vector<int>> cands;
        if (!contents.empty()) {
            std::vector<int> letters;
            const Partition& lam = contents[static_cast<std::size_t>(d)];
            for (std::size_t c = 0; c < lam.size(); ++c)
                for (int rep = 0; rep < lam[c]; ++rep) letters.push_back(static_cast<int>(c) + 1);
            for (auto& w : multiset_permutations(letters))
                if (!lattice || lattice_type(w)) cands.push_back(w);
        } else {
            // letters 1..n, optionally lattice
            std::vector<int> cur(static_cast<std::size_t>(n), 1);
            std::function<void(int)> rec = [&](int i) {
                if (i == n) {
                    if (!lattice || lattice_type(cur)) cands.push_back(cur);
                    return;
                }
                for (int v = 1; v <= n; ++v) {
                    cur[static_cast<std::size_t>(i)] = v;
                    rec(i + 1);
                }
            };
            rec(0);
        }
        out.push_back(std::move(cands));
    }
    return out;
}

} // namespace

std::vector<MultiLabeledDyckPath> enumerate_mld(int n, int k, int r,
                                                const std::vector<Partition>& contents,
                                                bool lattice) {
    if (n < 1 || k < 1 || r < 1) fail("BoundExceeded", "enumerate_mld needs n,k,r >= 1");
    if (!contents.empty() && static_cast<int>(contents.size()) != r)
        fail("DegreeMismatch", "enumerate_mld needs one content per digit");
    std::vector<std::vector<int>> colset;
    all_cols(n, k, colset);
    auto digits = digit_columns(n, r, contents, lattice);
    std::vector<MultiLabeledDyckPath> out;
    std::vector<int> pick(static_cast<std::size_t>(r), 0);
    std::function<void(int, const std::vector<int>&)> assemble = [&](int d,
                                                                     const std::vector<int>& cols) {
        if (d == r) {
            MultiLabeledDyckPath p;
            p.n = n;
            p.k = k;
            p.r = r;
            p.cols = cols;
            p.word.assign(static_cast<std::size_t>(n), Letter(static_cast<std::size_t>(r), 0));
            for (int i = 0; i < n; ++i)
                for (int dd = 0; dd < r; ++dd)
                    p.word[static_cast<std::size_t>(i)][static_cast<std::size_t>(dd)] =
                        digits[static_cast<std::size_t>(dd)]
                              [static_cast<std::size_t>(pick[static_cast<std::size_t>(dd)])]
                              [static_cast<std::size_t>(i)];
            if (p.valid()) out.push_back(std::move(p));
            return;
        }
        for (std::size_t i = 0; i < digits[static_cast<std::size_t>(d)].size(); ++i) {
            pick[static_cast<std::size_t>(d)] = static_cast<int>(i);
            assemble(d + 1, cols);
        }
    };
    for (const auto& cols : colset) assemble(0, cols);
    return out;
}

namespace {

int shape_digit_from(int k, int r) {
    if (r == k + 1) return 1;
    if (r == k) return 0;
    fail("UnsupportedExpression", "iota needs r = k or r = k+1");
}

} // namespace

Polyomino mld_iota(const MultiLabeledDyckPath& p) {
    int n = p.n, k = p.k;
    int from = shape_digit_from(k, p.r);
    auto wd = [&](int i) { // y-digit weak descents between letters i and i+1 (0-based)
        int c = 0;
        for (int d = from; d < p.r; ++d)
            if (p.word[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] >=
                p.word[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(d)])
                ++c;
        return c;
    };
    Polyomino out;
    out.peast.assign(static_cast<std::size_t>(n) + 1, 0);
    out.qeast.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int y = 1; y < n; ++y)
        out.peast[static_cast<std::size_t>(y)] =
            p.cols[static_cast<std::size_t>(y)] - p.cols[static_cast<std::size_t>(y - 1)] - wd(y - 1);
    out.peast[static_cast<std::size_t>(n)] = k * n - p.cols[static_cast<std::size_t>(n - 1)] + 1;
    out.qeast[0] = 1 + k - (n > 1 ? wd(0) : 0);
    for (int y = 1; y < n - 1; ++y) out.qeast[static_cast<std::size_t>(y)] = k - wd(y);
    if (n > 1) out.qeast[static_cast<std::size_t>(n - 1)] = k;
    out.labels = p.word;
    for (int y = 0; y <= n; ++y)
        if (out.peast[static_cast<std::size_t>(y)] < 0 || out.qeast[static_cast<std::size_t>(y)] < 0)
            fail("NotFixedPoint", "iota produced negative east counts");
    return out;
}

MultiLabeledDyckPath mld_iota_inverse(const Polyomino& poly, int n, int k, int r) {
    int from = shape_digit_from(k, r);
    MultiLabeledDyckPath p;
    p.n = n;
    p.k = k;
    p.r = r;
    p.word = poly.labels;
    auto wd = [&](int i) {
        int c = 0;
        for (int d = from; d < r; ++d)
            if (p.word[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] >=
                p.word[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(d)])
                ++c;
        return c;
    };
    p.cols.assign(static_cast<std::size_t>(n), 0);
    for (int y = 1; y < n; ++y)
        p.cols[static_cast<std::size_t>(y)] = p.cols[static_cast<std::size_t>(y - 1)] +
                                              poly.peast[static_cast<std::size_t>(y)] + wd(y - 1);
    if (!p.valid()) fail("NotFixedPoint", "iota_inverse produced an invalid path");
    return p;
}

// ---- marked-return paths -------------------------------------------------------

Composition MarkedReturnPath::eta() const { return poly.north_runs(); }

std::vector<MarkedReturnPath> enumerate_marked(int n, int k, const Partition& gamma,
                                               const std::vector<Partition>& contents,
                                               bool lattice) {
    if (gamma.empty()) fail("EmptyGamma", "marked-return paths need |gamma| > 0");
    if (k < 0 || n < 1) fail("BoundExceeded", "enumerate_marked needs n >= 1, k >= 0");
    std::vector<int> padded(gamma.begin(), gamma.end());
    while (static_cast<int>(padded.size()) < n) padded.push_back(0);
    if (static_cast<int>(padded.size()) != n) fail("BoundExceeded", "gamma longer than n");

    // label candidates: k-digit positive words
    std::vector<Word> words;
    if (k == 0) {
        words.push_back(Word(static_cast<std::size_t>(n), Letter{}));
    } else {
        auto digits = digit_columns(n, k, contents, lattice);
        std::vector<int> pick(static_cast<std::size_t>(k), 0);
        std::function<void(int)> rec = [&](int d) {
            if (d == k) {
                Word w(static_cast<std::size_t>(n), Letter(static_cast<std::size_t>(k), 0));
                for (int i = 0; i < n; ++i)
                    for (int dd = 0; dd < k; ++dd)
                        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(dd)] =
                            digits[static_cast<std::size_t>(dd)]
                                  [static_cast<std::size_t>(pick[static_cast<std::size_t>(dd)])]
                                  [static_cast<std::size_t>(i)];
                words.push_back(std::move(w));
                return;
            }
            for (std::size_t i = 0; i < digits[static_cast<std::size_t>(d)].size(); ++i) {
                pick[static_cast<std::size_t>(d)] = static_cast<int>(i);
                rec(d + 1);
            }
        };
        rec(0);
    }

    auto asc_count = [&](const Word& w, int i, int j) { // strict digit ascents w_i -> w_j
        int c = 0;
        for (int d = 0; d < k; ++d)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] <
                w[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)])
                ++c;
        return c;
    };

    std::vector<MarkedReturnPath> out;
    for (const std::vector<int>& g : multiset_permutations(padded)) {
        for (const Word& w : words) {
            // local weights of the concatenated word; the last position takes
            // the terminal convention g_n + k
            std::vector<int> lwt(static_cast<std::size_t>(n), 0);
            for (int i = 0; i + 1 < n; ++i)
                lwt[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)] + asc_count(w, i, i + 1);
            lwt[static_cast<std::size_t>(n - 1)] = g[static_cast<std::size_t>(n - 1)] + k;
            Polyomino base;
            base.qeast.assign(static_cast<std::size_t>(n) + 1, 0);
            base.qeast[0] = 1 + lwt[0];
            for (int y = 1; y < n; ++y) base.qeast[static_cast<std::size_t>(y)] = lwt[static_cast<std::size_t>(y)];
            base.labels = w;

            for (const Composition& beta : compositions_of(n)) {
                std::size_t l = beta.size();
                // block sums of local weights, plus the cyclic last-block sum
                std::vector<int> L(l, 0);
                std::size_t pos = 0;
                for (std::size_t b = 0; b < l; ++b) {
                    for (int j = 0; j < beta[b]; ++j) L[b] += lwt[pos + static_cast<std::size_t>(j)];
                    pos += static_cast<std::size_t>(beta[b]);
                }
                int Lcyc = L[l - 1] - lwt[static_cast<std::size_t>(n - 1)] +
                           g[static_cast<std::size_t>(n - 1)] + (n > 1 ? asc_count(w, n - 1, 0) : k);
                // heights: c_1 = 0, interior no-join, cyclic wrap for l >= 2
                std::vector<int> c(l, 0);
                std::function<void(std::size_t)> rec = [&](std::size_t i) {
                    if (i == l) {
                        if (l >= 2 && c[l - 1] + Lcyc < 1) return; // last cannot rejoin first
                        Polyomino p = base;
                        p.peast.assign(static_cast<std::size_t>(n) + 1, 0);
                        std::size_t cum = 0;
                        for (std::size_t b = 0; b < l; ++b) {
                            cum += static_cast<std::size_t>(beta[b]);
                            int next = (b + 1 < l) ? c[b + 1] : 0;
                            p.peast[cum] += c[b] + L[b] - next;
                        }
                        p.peast[static_cast<std::size_t>(n)] += 1;
                        if (!p.valid()) return;
                        // marks: rows whose component p satisfies c_i > 0 for 2..p
                        int row = 0;
                        bool open = true;
                        for (std::size_t b = 0; b < l; ++b) {
                            if (b >= 1 && c[b] == 0) open = false;
                            for (int j = 0; j < beta[b] && open; ++j) {
                                MarkedReturnPath mp;
                                mp.n = n;
                                mp.k = k;
                                mp.gamma = gamma;
                                mp.poly = p;
                                mp.mark = row + j + 1;
                                mp.poly.mark = mp.mark;
                                out.push_back(mp);
                            }
                            row += beta[b];
                        }
                        return;
                    }
                    if (i == 0) {
                        c[0] = 0;
                        rec(1);
                        return;
                    }
                    for (int v = 0; v < c[i - 1] + L[i - 1]; ++v) {
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

// ---- selected rearrangements ----------------------------------------------------

std::vector<SelectedRearrangement> sr_enumerate(const Partition& mu) {
    if (mu.empty()) fail("EmptyPartition", "SR needs a nonempty partition");
    std::vector<SelectedRearrangement> out;
    for (const Composition& alpha : rearrangements(mu))
        for (int mk = 1; mk <= alpha[0]; ++mk) out.push_back({alpha, mk});
    return out;
}

long sr_count(const Partition& mu) {
    if (mu.empty()) fail("EmptyPartition", "SR needs a nonempty partition");
    long total = 0;
    for (const Composition& alpha : rearrangements(mu)) total += alpha[0];
    return total;
}

// ---- labeled square paths -------------------------------------------------------

int LabeledSquarePath::area() const {
    // offsets of north-step starts from the diagonal
    std::vector<int> a;
    int x = 0;
    for (int i = 0; i < n; ++i) {
        x += east[static_cast<std::size_t>(i)];
        a.push_back(i - x); // start height i, column x
    }
    int d = 0;
    for (int v : a) d = std::max(d, -v);
    int total = 0;
    for (int v : a) total += v + d;
    return total;
}

std::vector<LabeledSquarePath> enumerate_lsp_east(int n) {
    std::vector<LabeledSquarePath> out;
    std::vector<int> east(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int)> rec = [&](int y, int rem) {
        if (y == n) {
            if (rem < 1) return; // must end with an east step
            east[static_cast<std::size_t>(n)] = rem;
            LabeledSquarePath base;
            base.n = n;
            base.east = east;
            // labelings 1..n, strictly increasing within columns of north steps
            std::vector<int> lab(static_cast<std::size_t>(n), 1);
            std::function<void(int)> lrec = [&](int i) {
                if (i == n) {
                    LabeledSquarePath L = base;
                    L.labels = lab;
                    out.push_back(std::move(L));
                    return;
                }
                for (int v = 1; v <= n; ++v) {
                    if (i > 0 && east[static_cast<std::size_t>(i)] == 0 &&
                        v <= lab[static_cast<std::size_t>(i - 1)])
                        continue;
                    lab[static_cast<std::size_t>(i)] = v;
                    lrec(i + 1);
                }
            };
            lrec(0);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            east[static_cast<std::size_t>(y)] = v;
            rec(y + 1, rem - v);
        }
    };
    rec(0, n);
    return out;
}

MarkedDyck square_to_marked(const LabeledSquarePath& L) {
    int n = L.n;
    // column and diagonal offset of each north step
    std::vector<int> colv(static_cast<std::size_t>(n), 0);
    int x = 0;
    for (int i = 0; i < n; ++i) {
        x += L.east[static_cast<std::size_t>(i)];
        colv[static_cast<std::size_t>(i)] = x;
    }
    int lowest = 0;
    for (int i = 0; i < n; ++i)
        lowest = std::max(lowest, colv[static_cast<std::size_t>(i)] - i);
    int i0 = -1;
    for (int i = 0; i < n; ++i)
        if (colv[static_cast<std::size_t>(i)] - i == lowest) i0 = i; // right-most lowest
    // rotate the step sequence to start at north step i0
    std::vector<int> steps; // 0 = N (with label index), 1 = E
    std::vector<int> nidx;
    for (int y = 0; y <= n; ++y) {
        for (int e = 0; e < L.east[static_cast<std::size_t>(y)]; ++e) steps.push_back(1);
        if (y < n) {
            nidx.push_back(static_cast<int>(steps.size()));
            steps.push_back(0);
        }
    }
    int start = nidx[static_cast<std::size_t>(i0)];
    std::vector<int> rot;
    for (std::size_t j = 0; j < steps.size(); ++j)
        rot.push_back(steps[(start + j) % steps.size()]);
    MarkedDyck out;
    int cx = 0, labels_seen = 0;
    for (int s : rot) {
        if (s == 1) {
            ++cx;
        } else {
            out.cols.push_back(cx);
            ++labels_seen;
        }
    }
    (void)labels_seen;
    for (int j = 0; j < n; ++j) out.labels.push_back(L.labels[static_cast<std::size_t>((i0 + j) % n)]);
    out.mark = n - i0;
    return out;
}

// ---- classical Dyck paths --------------------------------------------------------

std::vector<std::vector<int>> dyck_area_words(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        int hi = (i == 0) ? 0 : a[static_cast<std::size_t>(i - 1)] + 1;
        for (int v = 0; v <= hi; ++v) {
            a[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

int dyck_area(const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0); }

int dyck_dinv(const std::vector<int>& a) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] == a[j]) ++d;
            if (a[i] == a[j] + 1) ++d;
        }
    return d;
}

int dyck_bounce(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    // cols from the area word, then bounce peaks
    std::vector<int> colv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) colv[static_cast<std::size_t>(i)] = i - a[static_cast<std::size_t>(i)];
    auto height_at = [&](int b) { // number of north steps with col <= b
        int h = 0;
        for (int i = 0; i < n; ++i)
            if (colv[static_cast<std::size_t>(i)] <= b) ++h;
        return h;
    };
    int bounce = 0, b = 0;
    while (b < n) {
        b = height_at(b);
        if (b < n) bounce += n - b;
    }
    return bounce;
}

std::vector<int> zeta_map(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    int mx = 0;
    for (int v : a) mx = std::max(mx, v);
    // build the image path as a step string, d-diagonal by d-diagonal
    std::vector<int> steps; // 0 = N, 1 = E
    for (int d = 0; d <= mx + 1; ++d)
        for (int i = 0; i < n; ++i) {
            if (a[static_cast<std::size_t>(i)] == d) steps.push_back(0);
            else if (a[static_cast<std::size_t>(i)] == d - 1) steps.push_back(1);
        }
    std::vector<int> out;
    int x = 0, seen = 0;
    for (int s : steps) {
        if (s == 1) {
            ++x;
        } else {
            out.push_back(seen - x);
            ++seen;
        }
    }
    // out currently holds i - col = area word entries
    return out;
}

Composition riser_composition(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    Composition runs;
    int cur = 1;
    for (int i = 1; i < n; ++i) {
        // same run when no east step between: col(i+1) == col(i)
        int ci = i - a[static_cast<std::size_t>(i)];
        int cp = (i - 1) - a[static_cast<std::size_t>(i - 1)];
        if (ci == cp) {
            ++cur;
        } else {
            runs.push_back(cur);
            cur = 1;
        }
    }
    runs.push_back(cur);
    return runs;
}

int dyck_first_return(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    for (int j = 1; j < n; ++j)
        if (a[static_cast<std::size_t>(j)] == 0) return j;
    return n;
}

// ---- permutation tuples ----------------------------------------------------------

long perm_no_common_descent(int n, int k) {
    if (n < 1) fail("BoundExceeded", "perm_no_common_descent needs n >= 1");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    long count = 0;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k) + 1, 0);
    std::function<void(int)> rec = [&](int slot) {
        if (slot == k + 1) {
            for (int i = 0; i + 1 < n; ++i) {
                bool all_desc = true;
                for (std::size_t s = 0; s < pick.size(); ++s) {
                    const auto& sigma = perms[pick[s]];
                    if (sigma[static_cast<std::size_t>(i)] < sigma[static_cast<std::size_t>(i + 1)]) {
                        all_desc = false;
                        break;
                    }
                }
                if (all_desc) return;
            }
            ++count;
            return;
        }
        for (std::size_t i = 0; i < perms.size(); ++i) {
            pick[static_cast<std::size_t>(slot)] = i;
            rec(slot + 1);
        }
    };
    rec(0);
    return count;
}

} // namespace supernabla
