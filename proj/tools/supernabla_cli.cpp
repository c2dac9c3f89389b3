// Command-line surface: compute expansions, enumerate objects, run the
// verification suites, emit tables, and manage the on-disk Macdonald cache.
#include "CLI11.hpp"
#include "supernabla/verify.hpp"
#include "supernabla/weights.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace supernabla;
namespace fs = std::filesystem;

namespace {

// --- cache ---------------------------------------------------------------------

fs::path cache_dir() {
    if (const char* env = std::getenv("SUPERNABLA_CACHE_DIR")) return fs::path(env);
    return fs::path(".supernabla-cache");
}

fs::path cache_path(int n) {
    return cache_dir() / ("macdonald-" + std::to_string(n) + ".table");
}

// Load-then-revalidate; corrupt entries are rejected and recomputed.
void preload_degree(int n) {
    fs::path p = cache_path(n);
    if (fs::exists(p)) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            MacdonaldTable::install(MacdonaldTable::deserialize(ss.str()));
            return;
        } catch (const std::exception& e) {
            std::cerr << "cache entry " << p.string() << " rejected (" << e.what()
                      << "); recomputing\n";
        }
    }
    const MacdonaldTable& t = MacdonaldTable::get(n);
    std::error_code ec;
    fs::create_directories(cache_dir(), ec);
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << t.serialize();
    }
    fs::rename(tmp, p, ec);
    if (ec) std::remove(tmp.string().c_str());
}

// --- rendering -----------------------------------------------------------------

std::string latexify(const QtPoly& p) {
    std::string s = p.str();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '*') continue;
        if (s[i] == '^') {
            out += "^{";
            std::size_t j = i + 1;
            if (j < s.size() && s[j] == '-') out += s[j], ++j;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) out += s[j], ++j;
            out += "}";
            i = j - 1;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::string subscript(const Partition& p) {
    std::string s;
    for (int v : p) s += std::to_string(v);
    return s.empty() ? "0" : s;
}

void emit_latex(const TensorSymFunc& t, int n, std::ostream& os) {
    std::vector<Partition> parts = partitions_of(n);
    const char* b = basis_name(t.bases()[0]);
    if (t.arity() == 1) {
        os << "$";
        bool first = true;
        for (const Partition& mu : parts) {
            QtRat c = t.get({mu});
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << latexify(c.num()) << ")\\," << b << "_{" << subscript(mu) << "}";
        }
        os << "$\n";
        return;
    }
    // one tabular per leading-slot partition beyond the first two slots
    std::vector<TensorSymFunc::Key> prefixes;
    if (t.arity() == 2) {
        prefixes.push_back({});
    } else {
        for (const Partition& mu : parts) prefixes.push_back({mu});
    }
    for (const auto& pre : prefixes) {
        if (!pre.empty())
            os << "% block " << b << "_{" << subscript(pre[0]) << "}(x)\n";
        os << "\\begin{tabular}{|c||";
        for (std::size_t i = 0; i < parts.size(); ++i) os << "l|";
        os << "}\n\\hline\n";
        for (const Partition& cmu : parts) os << " & $" << b << "_{" << subscript(cmu) << "}$";
        os << " \\\\\n\\hline\\hline\n";
        for (const Partition& rmu : parts) {
            os << "$" << b << "_{" << subscript(rmu) << "}$";
            for (const Partition& cmu : parts) {
                TensorSymFunc::Key key = pre;
                key.push_back(rmu);
                key.push_back(cmu);
                QtRat c = t.get(key);
                os << " & $" << (c.is_polynomial() ? latexify(c.num()) : c.str()) << "$";
            }
            os << " \\\\\n\\hline\n";
        }
        os << "\\end{tabular}\n\n";
    }
}

void emit_text(const TensorSymFunc& t, std::ostream& os) {
    for (const auto& [key, c] : t.coeffs()) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << " x ";
            os << part_str(key[i]);
        }
        os << " : " << c.str() << "\n";
    }
}

void emit_json(const TensorSymFunc& t, std::ostream& os) {
    for (const auto& [key, c] : t.coeffs()) {
        os << "{\"key\":[";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << ",";
            os << "\"" << part_str(key[i]) << "\"";
        }
        os << "],\"coeff\":\"" << c.str() << "\"}\n";
    }
}

Partition parse_partition_arg(const std::string& s) { return part_parse(s); }

std::vector<Partition> parse_contents_arg(const std::string& s) {
    std::vector<Partition> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(part_parse(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with the Super Nabla operator on modified Macdonald polynomials"};
    app.require_subcommand(1);

    // ---- expand ----
    auto* expand = app.add_subcommand("expand", "expand nabla_Y images of symmetric functions");
    std::string expr = "e", lambda_s, gamma_s, vvec_s, tmode = "none", format = "text", shift;
    int n = 3, k = 1;
    std::string basis_s = "s";
    expand->add_option("--expr", expr, "one of e, h, p (omega p_n), xi, deltap, ev");
    expand->add_option("--n", n, "degree n");
    expand->add_option("--k", k, "number of extra alphabets");
    expand->add_option("--lambda", lambda_s, "partition for xi, e.g. [2,1]");
    expand->add_option("--gamma", gamma_s, "partition gamma for deltap");
    expand->add_option("--v", vvec_s, "vector v for ev, e.g. 0,1,2");
    expand->add_option("--t", tmode, "specialization: 1, 1/q, 0 or none");
    expand->add_option("--basis", basis_s, "slot basis: s, m, e, h, p");
    expand->add_option("--format", format, "text, structured or latex");
    expand->add_option("--shift", shift, "qp1 for the q->q+1, t->t+1 E-expansion report");

    // ---- enumerate ----
    auto* enumer = app.add_subcommand("enumerate", "enumerate combinatorial families");
    std::string family = "mld", content_s, mu_s;
    int en = 3, ek = 1, er = -1, width = 1, height = 1, bound = 8;
    bool lattice = false, dump = false;
    enumer->add_option("--family", family, "mld, polyomino, cct, marked, square or sr");
    enumer->add_option("--n", en, "n");
    enumer->add_option("--k", ek, "k");
    enumer->add_option("--r", er, "digits per label (default k+1 for mld)");
    enumer->add_option("--gamma", gamma_s, "gamma for marked paths");
    enumer->add_option("--mu", mu_s, "partition for cct or sr");
    enumer->add_option("--content", content_s, "per-digit contents, e.g. [1,1,1];[2,1];[3]");
    enumer->add_option("--width", width, "polyomino width");
    enumer->add_option("--height", height, "polyomino height");
    enumer->add_option("--bound", bound, "size bound for cct enumeration");
    enumer->add_flag("--lattice", lattice, "restrict labels to lattice words");
    enumer->add_flag("--dump", dump, "print each object");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all", logfile;
    int vn = 3, vk = 1;
    verify->add_option("--suite", suite, "t1, power, classical, positivity or all");
    verify->add_option("--n", vn, "degree bound");
    verify->add_option("--k", vk, "alphabet bound");
    verify->add_option("--log", logfile, "write one JSON record per check to this file");
    verify->add_option("--format", format, "text or structured");

    // ---- cache ----
    auto* cache = app.add_subcommand("cache", "manage the on-disk Macdonald table cache");
    std::string cachecmd = "build";
    int cn = 4;
    cache->add_option("cmd", cachecmd, "build, verify or clear");
    cache->add_option("--n", cn, "max degree to build/verify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*expand) {
            Basis basis = basis_from_name(basis_s);
            for (int d = 1; d <= n; ++d) preload_degree(d);
            SymFunc f;
            if (expr == "e") f = sym_term(Basis::e, Partition{n});
            else if (expr == "h") f = sym_term(Basis::h, Partition{n});
            else if (expr == "p") f = sym_term(Basis::p, Partition{n}, QtRat((n % 2) ? 1 : -1));
            else if (expr == "xi") {
                Partition lam = parse_partition_arg(lambda_s);
                n = part_size(lam);
                preload_degree(n);
                f = apply_eigenop(sym_term(Basis::e, lam), EigenOp::xi());
            } else if (expr == "deltap") {
                Partition g = parse_partition_arg(gamma_s);
                preload_degree(n);
                f = apply_eigenop(sym_term(Basis::p, Partition{n}, QtRat((n % 2) ? 1 : -1)),
                                  EigenOp::delta(sym_term(Basis::m, g)));
            } else if (expr == "ev") {
                std::vector<int> v;
                std::stringstream ss(vvec_s);
                std::string tok;
                while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
                n = static_cast<int>(v.size());
                preload_degree(n);
                f = ht_expand(triangular_E(v), Basis::s);
            } else {
                std::cerr << "unknown --expr " << expr << "\n";
                return 2;
            }
            if (!shift.empty()) {
                if (shift != "qp1") {
                    std::cerr << "unknown --shift " << shift << "\n";
                    return 2;
                }
                TensorSymFunc t = specialize_tensor(super_nabla(f, k), QtPoly::q() + QtPoly(1),
                                                    QtPoly::t() + QtPoly(1));
                for (int i = 0; i < t.arity(); ++i) t = tensor_convert_slot(t, i, Basis::e);
                auto cs = e_multiset_coefficients(t, f.degree());
                for (const auto& [nu, c] : cs) {
                    std::cout << "E_(";
                    for (std::size_t i = 0; i < nu.size(); ++i)
                        std::cout << (i ? "," : "") << part_str(nu[i]);
                    std::cout << ") : ";
                    bool first = true;
                    for (const auto& [ab, val] : schur_qt_expand(c)) {
                        if (!first) std::cout << " + ";
                        first = false;
                        if (ab.empty())
                            std::cout << val.str();
                        else if (val.is_one())
                            std::cout << "s" << part_str(ab);
                        else
                            std::cout << val.str() << "*s" << part_str(ab);
                    }
                    std::cout << "\n";
                }
                return 0;
            }
            TensorSymFunc t = super_nabla(f, k, basis);
            if (tmode == "1")
                t = specialize_tensor(t, std::nullopt, QtPoly(1));
            else if (tmode == "1/q")
                t = specialize_tensor(t, std::nullopt, QtPoly::q(-1));
            else if (tmode == "0")
                t = specialize_tensor(t, std::nullopt, QtPoly(0));
            else if (tmode != "none") {
                std::cerr << "unknown --t " << tmode << "\n";
                return 2;
            }
            if (format == "latex")
                emit_latex(t, f.degree(), std::cout);
            else if (format == "structured")
                emit_json(t, std::cout);
            else
                emit_text(t, std::cout);
            return 0;
        }

        if (*enumer) {
            QtPoly gf;
            long count = 0;
            if (family == "mld") {
                if (er < 0) er = ek + 1;
                auto objs = enumerate_mld(en, ek, er, parse_contents_arg(content_s), lattice);
                for (const auto& p : objs) {
                    gf.add_term(Mono{p.area(), 0, 0}, 1);
                    ++count;
                    if (dump)
                        std::cout << p.step_string() << "  " << p.labels_csv() << "\n"
                                  << p.render() << "\n";
                }
            } else if (family == "marked") {
                Partition g = parse_partition_arg(gamma_s);
                auto objs = enumerate_marked(en, ek, g, parse_contents_arg(content_s), lattice);
                for (const auto& p : objs) {
                    gf.add_term(Mono{p.area(), 0, 0}, 1);
                    ++count;
                    if (dump) std::cout << p.poly.render() << "\n";
                }
            } else if (family == "square") {
                for (const auto& L : enumerate_lsp_east(en)) {
                    gf.add_term(Mono{L.area(), 0, 0}, 1);
                    ++count;
                }
            } else if (family == "sr") {
                Partition mu = parse_partition_arg(mu_s);
                for (const auto& sel : sr_enumerate(mu)) {
                    ++count;
                    if (dump) {
                        std::cout << "(";
                        for (std::size_t i = 0; i < sel.alpha.size(); ++i)
                            std::cout << (i ? "," : "") << sel.alpha[i];
                        std::cout << ") mark " << sel.mark << "\n";
                    }
                }
            } else if (family == "polyomino") {
                // all parallelogram polyominoes of the given size
                std::vector<int> pe(static_cast<std::size_t>(height) + 1, 0);
                std::vector<int> qe(static_cast<std::size_t>(height) + 1, 0);
                std::function<void(int, int, bool)> rec = [&](int y, int rem, bool top) {
                    if (y > height) {
                        if (rem != 0) return;
                        if (top) {
                            rec(0, width, false);
                            return;
                        }
                        Polyomino p;
                        p.peast = pe;
                        p.qeast = qe;
                        if (!p.valid()) return;
                        gf.add_term(Mono{p.area(), 0, 0}, 1);
                        ++count;
                        if (dump) std::cout << p.render() << "\n";
                        return;
                    }
                    auto& v = top ? pe : qe;
                    for (int e = 0; e <= rem; ++e) {
                        v[static_cast<std::size_t>(y)] = e;
                        rec(y + 1, rem - e, top);
                    }
                };
                rec(0, width, true);
            } else if (family == "cct") {
                Partition mu = parse_partition_arg(mu_s);
                int cols = part_size(mu);
                for (const Composition& alpha : rearrangements(mu)) {
                    std::vector<int> sig = sigma_set(alpha);
                    std::vector<int> h(static_cast<std::size_t>(cols), 0);
                    std::function<void(int, int)> rec = [&](int i, int total) {
                        if (i == cols) {
                            gf.add_term(Mono{total, 0, 0}, 1);
                            ++count;
                            return;
                        }
                        bool can_jump =
                            std::find(sig.begin(), sig.end(), i) != sig.end();
                        int lo = (i == 0) ? 0 : h[static_cast<std::size_t>(i - 1)];
                        for (int v = lo; total + v <= bound; ++v) {
                            if (i > 0 && v > h[static_cast<std::size_t>(i - 1)] && !can_jump) break;
                            h[static_cast<std::size_t>(i)] = v;
                            rec(i + 1, total + v);
                        }
                    };
                    rec(0, 0);
                }
            } else {
                std::cerr << "unknown --family " << family << "\n";
                return 2;
            }
            std::cout << "count: " << count << "\n";
            if (family != "sr") std::cout << "area GF: " << gf.str() << "\n";
            return 0;
        }

        if (*verify) {
            for (int d = 1; d <= vn; ++d) preload_degree(d);
            auto reports = run_suite(suite, vn, vk);
            std::ofstream log;
            if (!logfile.empty()) log.open(logfile);
            bool mismatch = false;
            for (const CheckReport& r : reports) {
                if (format == "structured")
                    std::cout << r.json() << "\n";
                else
                    std::cout << r.line() << "\n";
                if (log.is_open()) log << r.json() << "\n";
                if (r.verdict == CheckReport::Mismatch) mismatch = true;
            }
            long nonpos = 0;
            for (const CheckReport& r : reports)
                if (r.verdict == CheckReport::Nonpositive) ++nonpos;
            if (format != "structured") {
                std::cout << reports.size() << " checks, "
                          << (mismatch ? "with mismatches" : "all identities hold");
                if (nonpos) std::cout << ", " << nonpos << " nonpositivity findings";
                std::cout << "\n";
            }
            return mismatch ? 1 : 0;
        }

        if (*cache) {
            if (cachecmd == "clear") {
                std::error_code ec;
                fs::remove_all(cache_dir(), ec);
                std::cout << "cleared " << cache_dir().string() << "\n";
                return 0;
            }
            for (int d = 1; d <= cn; ++d) {
                preload_degree(d);
                if (cachecmd == "verify") {
                    std::ifstream in(cache_path(d));
                    std::stringstream ss;
                    ss << in.rdbuf();
                    MacdonaldTable t = MacdonaldTable::deserialize(ss.str());
                    std::cout << "degree " << d << ": ok, hash " << t.content_hash() << "\n";
                } else {
                    std::cout << "degree " << d << ": cached at " << cache_path(d).string()
                              << "\n";
                }
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "ParseError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
