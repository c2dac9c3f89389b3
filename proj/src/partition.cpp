#include "supernabla/partition.hpp"

#include "supernabla/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace supernabla {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int part_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
int part_length(const Partition& p) { return static_cast<int>(p.size()); }

std::string part_str(const Partition& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << "]";
    return os.str();
}

Partition part_parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') fail("ParseError", "bad partition '" + s + "'");
        body = body.substr(1, body.size() - 2);
    }
    Partition p;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        p.push_back(std::stoi(tok));
    }
    if (!is_partition(p)) fail("ParseError", "not weakly decreasing: '" + s + "'");
    return p;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int col = 0; col < p[0]; ++col) {
        int h = 0;
        for (int part : p)
            if (part > col) ++h;
        c.push_back(h);
    }
    return c;
}

Partition sorted_partition(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

bool PartLess::operator()(const Partition& a, const Partition& b) const {
    int sa = part_size(a), sb = part_size(b);
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) fail("EmptyPartition", "partitions_of negative n");
    std::vector<Partition> out;
    Partition cur;
    // Parts are appended weakly decreasingly, smallest first part first, which
    // yields the canonical (size, then lex) order directly.
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= std::min(rem, maxpart); ++k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(), PartLess{});
    return out;
}

std::vector<Cell> cells_of(const Partition& p) {
    std::vector<Cell> cs;
    for (int row = 0; row < part_length(p); ++row)
        for (int col = 0; col < p[static_cast<std::size_t>(row)]; ++col)
            cs.push_back(Cell{col, row});
    return cs;
}

int arm(const Partition& p, Cell c) { return p[static_cast<std::size_t>(c.row)] - c.col - 1; }

int leg(const Partition& p, Cell c) {
    int l = 0;
    for (int row = c.row + 1; row < part_length(p); ++row)
        if (p[static_cast<std::size_t>(row)] > c.col) ++l;
    return l;
}

int hook(const Partition& p, Cell c) { return arm(p, c) + leg(p, c) + 1; }

int n_stat(const Partition& p) {
    int s = 0;
    for (int row = 0; row < part_length(p); ++row) s += row * p[static_cast<std::size_t>(row)];
    return s;
}

CellStats cell_stats(const Partition& p) {
    CellStats st;
    st.B = QtPoly(0);
    st.T = QtPoly(1);
    st.Pi = QtPoly(1);
    st.w = QtPoly(1);
    st.nmu = n_stat(p);
    st.nmu_conj = n_stat(conjugate(p));
    for (Cell c : cells_of(p)) {
        Mono m{c.col, c.row, 0};
        st.B.add_term(m, 1);
        st.T = st.T.mul_term(1, m);
        if (!(c.col == 0 && c.row == 0)) st.Pi = st.Pi * (QtPoly(1) - QtPoly::monomial(1, m));
        int a = arm(p, c), l = leg(p, c);
        st.w = st.w * (QtPoly::q(a) - QtPoly::t(l + 1)) * (QtPoly::t(l) - QtPoly::q(a + 1));
    }
    if (p.empty()) st.w = QtPoly(0); // w undefined on the empty partition
    return st;
}

QtPoly B_poly(const Partition& p) { return cell_stats(p).B; }
QtPoly T_poly(const Partition& p) { return cell_stats(p).T; }
QtPoly Pi_poly(const Partition& p) { return cell_stats(p).Pi; }

QtPoly w_poly(const Partition& p) {
    if (p.empty()) fail("EmptyPartition", "w_mu undefined for the empty partition");
    return cell_stats(p).w;
}

BigInt factorial(int n) {
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

BigInt z_of(const Partition& p) {
    BigInt z(1);
    int i = 0;
    while (i < part_length(p)) {
        int j = i;
        while (j < part_length(p) && p[static_cast<std::size_t>(j)] == p[static_cast<std::size_t>(i)]) ++j;
        int mult = j - i;
        z *= BigInt(p[static_cast<std::size_t>(i)]).pow(static_cast<unsigned long>(mult));
        z *= factorial(mult);
        i = j;
    }
    return z;
}

std::vector<int> sigma_set(const Composition& alpha) {
    std::vector<int> s;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
        acc += alpha[i];
        s.push_back(acc);
    }
    return s;
}

Composition composition_from_sigma(const std::vector<int>& sigma, int n) {
    Composition alpha;
    int prev = 0;
    for (int s : sigma) {
        alpha.push_back(s - prev);
        prev = s;
    }
    alpha.push_back(n - prev);
    return alpha;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Composition alpha;
        int prev = 0;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) {
                alpha.push_back(i - prev);
                prev = i;
            }
        alpha.push_back(n - prev);
        out.push_back(alpha);
    }
    return out;
}

std::vector<std::vector<int>> multiset_permutations(std::vector<int> items) {
    std::sort(items.begin(), items.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(items);
    } while (std::next_permutation(items.begin(), items.end()));
    return out;
}

std::vector<Composition> rearrangements(const Partition& mu) {
    return multiset_permutations(mu);
}

std::vector<std::vector<Partition>> partition_fillings(const Partition& eta,
                                                       const Composition& beta) {
    // Pool of distinct part values with remaining counts.
    std::vector<int> values;
    std::vector<int> count;
    for (int v : eta) {
        if (!values.empty() && values.back() == v) {
            ++count.back();
        } else {
            values.push_back(v);
            count.push_back(1);
        }
    }
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(beta.size());

    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == beta.size()) {
            for (int c : count)
                if (c != 0) return;
            out.push_back(cur);
            return;
        }
        std::vector<int> chosen(values.size(), 0); // local to this level
        std::function<void(std::size_t, int)> pick = [&](std::size_t vi, int rem) {
            if (rem == 0) {
                Partition nu;
                for (std::size_t k = values.size(); k-- > 0;)
                    for (int r = 0; r < chosen[k]; ++r) nu.push_back(values[k]);
                std::sort(nu.begin(), nu.end(), std::greater<int>());
                cur[i] = nu;
                assign(i + 1);
                return;
            }
            if (vi == values.size()) return;
            int maxtake = std::min(count[vi], rem / values[vi]);
            for (int take = 0; take <= maxtake; ++take) {
                chosen[vi] = take;
                count[vi] -= take;
                pick(vi + 1, rem - take * values[vi]);
                count[vi] += take;
                chosen[vi] = 0;
            }
        };
        pick(0, beta[i]);
    };
    assign(0);
    return out;
}

std::vector<int> multiplicities(const std::vector<int>& word) {
    int mx = 0;
    for (int v : word) mx = std::max(mx, v);
    std::vector<int> m(static_cast<std::size_t>(mx) + 1, 0);
    for (int v : word) ++m[static_cast<std::size_t>(v)];
    return m;
}

std::optional<Partition> dominant_content(const std::vector<int>& word) {
    std::vector<int> m = multiplicities(word);
    Partition lam;
    for (std::size_t v = 1; v < m.size(); ++v) lam.push_back(m[v]);
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (!is_partition(lam)) return std::nullopt;
    return lam;
}

std::vector<std::vector<Cell>> standard_tableaux(const Partition& mu) {
    int n = part_size(mu);
    std::vector<std::vector<Cell>> out;
    std::vector<int> filled(mu.size(), 0); // cells filled per row
    std::vector<Cell> cur;
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (int row = 0; row < part_length(mu); ++row) {
            int col = filled[static_cast<std::size_t>(row)];
            if (col >= mu[static_cast<std::size_t>(row)]) continue;
            if (row > 0 && filled[static_cast<std::size_t>(row - 1)] <= col) continue;
            ++filled[static_cast<std::size_t>(row)];
            cur.push_back(Cell{col, row});
            rec(k + 1);
            cur.pop_back();
            --filled[static_cast<std::size_t>(row)];
        }
    };
    rec(0);
    return out;
}

} // namespace supernabla
