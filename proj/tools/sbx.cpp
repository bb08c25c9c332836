// sbx: command line front end.
// Exit codes: 0 ok, 1 verification failure, 2 usage or precondition error.
#include "CLI11.hpp"
#include "json.hpp"
#include "sbx/blocks.hpp"
#include "sbx/central.hpp"
#include "sbx/checks.hpp"
#include "sbx/gram.hpp"
#include "sbx/oracle.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace sbx;
using json = nlohmann::json;

namespace {

struct Opts {
    int n = 0;
    std::optional<int> m;
    std::string eps;
    std::optional<std::string> w1, w2, theta, q0;
    std::optional<int> ell;
    std::string scheme = "DN";
    std::string basis = "diagram";
    std::string format = "text";
    std::string out;
    std::optional<int> guard;
    std::string det;
    bool compare = false;
    std::vector<std::string> diagrams;
    std::string suite;
};

struct VerifyFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Opts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

bool has_weights(const Opts& o) { return o.w1 || o.w2; }

WeightParams params(const Opts& o) {
    if (!o.w1 || !o.w2) throw ConfigError("--w1 and --w2 are both required");
    if (o.ell && o.q0) throw ConfigError("give at most one of --ell and --q0");
    WeightParams p;
    p.w1 = parse_rat(*o.w1);
    p.w2 = parse_rat(*o.w2);
    if (o.theta) p.theta = parse_rat(*o.theta);
    if (o.ell) {
        if (*o.ell < 1) throw ConfigError("--ell must be >= 1");
        p.spec = RootSpec::root(*o.ell);
    } else if (o.q0) p.spec = RootSpec::point(parse_rat(*o.q0));
    p.scheme = parse_scheme(o.scheme);
    return p;
}

// "--", "-,-", "--,--" (each part doubled) all mean (-,-)
void parse_eps(const std::string& s, int& e1, int& e2) {
    auto c = s.find(',');
    if (c != std::string::npos) {
        auto a = s.substr(0, c), b = s.substr(c + 1);
        if (!a.empty() && !b.empty() && a.find_first_not_of(a[0]) == std::string::npos &&
            b.find_first_not_of(b[0]) == std::string::npos)
            return parse_eps_pair(std::string{a[0], b[0]}, e1, e2), void();
    }
    parse_eps_pair(s, e1, e2);
}

Label label(const Opts& o) {
    if (o.eps == "b") return Label::bmod(o.n);
    if (!o.m || o.eps.empty()) throw ConfigError("a cell label needs --m and --eps (or --eps b)");
    int e1, e2;
    parse_eps(o.eps, e1, e2);
    Label L = Label::dn(o.n, *o.m, e1, e2);
    if (!L.valid()) throw ConfigError("invalid label " + L.str());
    return L;
}

// Runs f on the scalars of the chosen q mode.
template <class F>
auto with_scalars(const WeightParams& p, F&& f) {
    switch (p.spec.mode) {
        case RootSpec::RootOfUnity: return f(cyclo_scalars(p, p.spec.ell));
        case RootSpec::RationalPoint: return f(point_scalars(p, p.spec.x0));
        default: return f(symbolic_scalars(p));
    }
}

std::string mat_str(const std::vector<std::vector<std::string>>& M) {
    size_t w = 1;
    for (auto& r : M)
        for (auto& x : r) w = std::max(w, x.size());
    std::ostringstream os;
    for (auto& r : M) {
        for (size_t j = 0; j < r.size(); ++j) os << (j ? "  " : "") << std::string(w - r[j].size(), ' ') << r[j];
        os << "\n";
    }
    return os.str();
}

std::string eigen_word(const Label& L, const Path& p) {
    std::string s;
    for (auto& mv : tile_sequence(start_path(L), p))
        s += std::string(s.empty() ? "" : " ") + (mv.half() ? "g(" : "f(") + std::to_string(mv.h_prev) + ")";
    return s.empty() ? "1" : s;
}

// ------------------------------------------------------------------ basis

int cmd_basis(const Opts& o) {
    int guard = o.guard.value_or(8);
    if (o.m || !o.eps.empty()) {
        Label L = label(o);
        if (o.n > guard) throw ConfigError("n exceeds guard");
        const auto& M = cached_module(L);
        json j{{"label", L.str()}, {"dim", M.dim()}};
        std::ostringstream os;
        os << L.str() << "  dim " << M.dim() << "\n";
        for (int i = 0; i < M.dim(); ++i) {
            std::string path = M.paths[i].str();
            if (o.basis == "path") {
                os << i + 1 << "  " << path << "  " << eigen_word(L, M.paths[i]) << "\n";
                j["basis"].push_back({{"path", path}, {"eigenvalue", eigen_word(L, M.paths[i])}});
            } else {
                os << i + 1 << "  " << half_str(M.basis[i]) << "  " << path << "\n";
                j["basis"].push_back({{"diagram", half_str(M.basis[i])}, {"path", path}});
            }
        }
        emit(o, o.format == "json" ? j.dump(2) : os.str());
        return 0;
    }
    auto B = enumerate_basis(o.n, guard);
    long sum = 0;
    json dims = json::object();
    for (auto& L : all_labels(o.n)) {
        long d = cell_dim(L);
        sum += d * d;
        dims[L.str()] = d;
    }
    bool ok = sum == static_cast<long>(B.size());
    if (o.format == "json") {
        json j{{"n", o.n}, {"count", B.size()}, {"cell_dims", dims}, {"sum_of_squares", sum}};
        for (auto& d : B) j["diagrams"].push_back(d.key());
        emit(o, j.dump(2));
    } else {
        std::ostringstream os;
        os << "n=" << o.n << "  " << B.size() << " diagrams\n";
        for (auto& d : B) os << d.key() << "\n";
        os << "sum of squared cell dimensions " << sum << (ok ? " = " : " != ") << B.size() << "\n";
        emit(o, os.str());
    }
    if (!ok) throw VerifyFailed("basis count differs from the cellular dimension count");
    return 0;
}

// ------------------------------------------------------------------ mult

int cmd_mult(const Opts& o) {
    if (o.diagrams.size() != 2) throw ConfigError("mult needs two diagrams");
    Piece a = Piece::parse(o.n, o.n, o.diagrams[0]), b = Piece::parse(o.n, o.n, o.diagrams[1]);
    for (auto* d : {&a, &b})
        if (!is_reduced(*d)) throw ConfigError("not a reduced diagram: " + d->key());
    auto c = compose(a, b);
    std::string val;
    if (has_weights(o)) {
        auto p = params(o);
        val = with_scalars(p, [&](const auto& S) {
            auto t = scheme_convert(o.n, S, p.scheme);
            return to_str(eval_mono(c.mono, t));
        });
    }
    if (o.format == "json") {
        json j{{"n", o.n}, {"scalar", c.mono.str()}, {"diagram", c.piece.key()}};
        if (!val.empty()) j["value"] = val;
        emit(o, j.dump(2));
    } else emit(o, c.mono.str() + " * {" + c.piece.key() + "}" + (val.empty() ? "" : "\nscalar = " + val));
    return 0;
}

// ------------------------------------------------------------------ gram

// Finds sign, a, b with ratio = sign dL^a dR^b.
template <class K>
std::optional<std::array<int, 3>> unit_monomial(const std::type_identity_t<K>& ratio, const DeltaTuple<K>& t, int lim) {
    for (int a = -lim; a <= lim; ++a)
        for (int b = -lim; b <= lim; ++b)
            for (int sg : {1, -1})
                if (ratio == K(sg) * power(t.dL(), a) * power(t.dR(), b)) return std::array<int, 3>{sg, a, b};
    return std::nullopt;
}

std::string mono_str(const std::array<int, 3>& u) {
    std::string s = u[0] < 0 ? "-" : "+";
    if (u[1]) s += "dL^" + std::to_string(u[1]);
    if (u[2]) s += std::string(u[1] ? "*" : "") + "dR^" + std::to_string(u[2]);
    return u[1] || u[2] ? s : s + "1";
}

int cmd_gram(const Opts& o) {
    Label L = label(o);
    if (o.n > o.guard.value_or(8)) throw ConfigError("n exceeds guard");
    const auto& M = cached_module(L);
    int N = M.dim();
    json j{{"label", L.str()}, {"dim", N}};
    std::ostringstream os;
    if (o.det.empty()) {
        if (o.basis == "path") {
            os << L.str() << " path basis: <v_p, v_p> / <v_0, v_0>\n";
            for (int i = 0; i < N; ++i) {
                auto w = eigen_word(L, M.paths[i]);
                os << M.paths[i].str() << "  " << w << "\n";
                j["eigenvalues"].push_back({{"path", M.paths[i].str()}, {"value", w}});
            }
        } else {
            std::vector<std::vector<std::string>> G(N, std::vector<std::string>(N));
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < N; ++k) {
                    auto m = M.inner(i, k);
                    G[i][k] = m ? m->str() : "0";
                }
            os << L.str() << " diagram basis\n";
            for (int i = 0; i < N; ++i) os << i + 1 << "  " << half_str(M.basis[i]) << "\n";
            os << mat_str(G);
            for (int i = 0; i < N; ++i) j["basis"].push_back(half_str(M.basis[i]));
            j["matrix"] = G;
        }
        emit(o, o.format == "json" ? j.dump(2) : os.str());
        return 0;
    }
    BoxProduct cf = L.b ? gamma_b(o.n) : closed_form_gram(L);
    if (o.det == "closed-form") {
        os << "closed form" << (L.b ? " (path basis, up to a unit)" : "") << ": " << cf.str() << "\n";
        j["closed_form"] = cf.str();
        if (has_weights(o)) {
            auto p = params(o);
            std::string v = with_scalars(p, [&](const auto& S) { return to_str(cf.eval(S)); });
            os << "value at " << p.str() << ": " << v << "\n";
            j["value"] = v;
        }
        emit(o, o.format == "json" ? j.dump(2) : os.str());
        return 0;
    }
    // direct, compared with the closed form
    if (L.b) throw ConfigError("--det direct compares with the closed form of DN labels only");
    bool ok = true;
    if (has_weights(o)) {
        auto p = params(o);
        with_scalars(p, [&](const auto& S) {
            using K = std::decay_t<decltype(S.s)>;
            auto t = scheme_convert(o.n, S, Scheme::DN);
            K d = determinant(gram_matrix(M, t));
            K c = cf.eval(S);
            os << "direct determinant at " << p.str() << ": " << to_str(d) << "\n";
            j["direct"] = to_str(d);
            if (is_zero(c)) {
                ok = is_zero(d);
                os << "closed form vanishes; direct " << (ok ? "vanishes" : "does not vanish") << "\n";
            } else {
                auto u = unit_monomial(d / c, t, 2 * N);
                ok = u.has_value();
                os << "direct / closed form = " << (u ? mono_str(*u) : "not a unit monomial") << "\n";
                if (u) j["unit"] = mono_str(*u);
            }
            return 0;
        });
    } else {
        std::mt19937_64 rng(17);
        auto rnd = [&]() {
            for (;;) {
                Rat x = frac(long(rng() % 97) + 2, long(rng() % 89) + 2);
                if (x != 1) return x;
            }
        };
        std::optional<std::array<int, 3>> first;
        for (int k = 0; k < 2; ++k) {
            auto S = independent_scalars(rnd(), rnd(), rnd(), rnd());
            auto t = scheme_convert(o.n, S, Scheme::DN);
            auto u = unit_monomial(determinant(gram_matrix(M, t)) / cf.eval(S), t, 2 * N);
            if (!u || (first && *u != *first)) ok = false;
            if (!first) first = u;
        }
        os << "direct / closed form at independent points = "
           << (ok ? mono_str(*first) : std::string("not a unit monomial")) << "\n";
        if (ok) j["unit"] = mono_str(*first);
    }
    j["ok"] = ok;
    os << (ok ? "PASS" : "FAIL") << "\n";
    emit(o, o.format == "json" ? j.dump(2) : os.str());
    if (!ok) throw VerifyFailed("direct determinant differs from the closed form");
    return 0;
}

// ------------------------------------------------------------------ central

int cmd_central(const Opts& o) {
    std::vector<Label> labels;
    if (o.m || !o.eps.empty()) labels.push_back(label(o));
    else labels = dn_labels(o.n);
    std::optional<WeightParams> p;
    if (has_weights(o)) p = params(o);
    json j = json::array();
    std::ostringstream os;
    for (auto& L : labels) {
        if (L.b) throw ConfigError("alpha needs a DN label");
        std::string x = alpha_arg(L).str();
        std::string form = "[" + std::to_string(o.n) + "](q^x + q^-x), x = " + x.substr(1, x.size() - 2);
        json e{{"label", L.str()}, {"alpha", form}};
        os << L.str() << "  " << form;
        if (p) {
            std::string v = with_scalars(*p, [&](const auto& S) { return to_str(alpha(L, S)); });
            e["value"] = v;
            os << "  = " << v;
        }
        os << "\n";
        j.push_back(e);
    }
    emit(o, o.format == "json" ? j.dump(2) : os.str());
    return 0;
}

// ------------------------------------------------------------------ blocks, oracle, plot

std::string partition_text(const BlockPartition& P) {
    std::ostringstream os;
    os << P.str() << "\n";
    for (auto& pr : P.provenance) os << "  " << pr.a.str() << " ~ " << pr.b.str() << "  " << pr.rule << "\n";
    return os.str();
}

std::string render(const Opts& o, const WeightParams& p, const BlockPartition& P) {
    if (o.format == "svg") return plot_weights(o.n, p, P);
    if (o.format == "json") return P.json();
    return partition_text(P);
}

OracleOptions oracle_opts(const Opts& o) {
    OracleOptions opt;
    if (o.guard) opt.guard = *o.guard;
    return opt;
}

int cmd_blocks(const Opts& o) {
    auto p = params(o);
    auto P = p.theta ? classify_bnx(o.n, p) : classify(o.n, p);
    if (!o.compare) {
        emit(o, render(o, p, P));
        return 0;
    }
    auto Q = linkage_blocks(o.n, p, oracle_opts(o));
    bool ok = P == Q;
    if (o.format == "json") {
        json j{{"n", o.n}, {"params", p.str()}, {"agree", ok}, {"classify", json::parse(P.json())},
               {"oracle", json::parse(Q.json())}};
        emit(o, j.dump(2));
    } else if (o.format == "svg") {
        emit(o, plot_weights(o.n, p, P));
    } else {
        emit(o, "regime " + regime_name(regime_of(o.n, p)) + "\nclassify:\n" + partition_text(P) +
                    "oracle:\n" + partition_text(Q) + (ok ? "AGREE" : "DISAGREE"));
    }
    if (!ok) throw VerifyFailed("classify and the oracle disagree");
    return 0;
}

int cmd_oracle(const Opts& o) {
    auto p = params(o);
    emit(o, render(o, p, linkage_blocks(o.n, p, oracle_opts(o))));
    return 0;
}

int cmd_plot(Opts o) {
    o.format = "svg";
    auto p = params(o);
    emit(o, plot_weights(o.n, p, p.theta ? classify_bnx(o.n, p) : classify(o.n, p)));
    return 0;
}

// ------------------------------------------------------------------ verify

const std::vector<std::string> suites = {"gram",          "path",          "closed-form",   "central",
                                         "partitions",    "oracle",        "semisimple",    "confluence",
                                         "associativity", "contravariance", "unitriangular", "functors",
                                         "alpha",         "hom",           "all"};

int cmd_verify(const Opts& o, bool n_given) {
    auto N = [&](int d) { return n_given ? o.n : d; };
    std::vector<CheckResult> res;
    auto want = [&](const std::string& s) { return o.suite == s || o.suite == "all"; };
    if (want("gram")) {
        res.push_back(run_check("gram: W(5,2,-,-) matrix and determinant", check_gram_golden));
        res.push_back(run_check("gram: closed form n<=" + std::to_string(N(5)),
                                [&](CheckLog& l) { check_closed_form(l, N(5)); }));
    }
    if (want("path")) res.push_back(run_check("path: W(5,2,-,-) eigenvalues", check_path_golden));
    if (want("closed-form"))
        res.push_back(run_check("closed-form n<=" + std::to_string(N(7)), [&](CheckLog& l) { check_closed_form(l, N(7)); }));
    if (want("central"))
        res.push_back(run_check("central n<=" + std::to_string(N(4)), [&](CheckLog& l) { check_central(l, N(4), 3); }));
    if (want("partitions")) res.push_back(run_check("reference partitions", check_reference_blocks));
    if (want("oracle")) {
        auto pts = oracle_points();
        if (n_given)
            for (auto& pt : pts) pt.nmax = std::min(pt.nmax, o.n);
        std::vector<std::string> lines;
        res.push_back(run_check("oracle", [&](CheckLog& l) { check_oracle_points(l, pts, lines, 1800); }));
        for (auto& s : lines) std::cout << "  " << s << "\n";
    }
    if (want("semisimple"))
        res.push_back(run_check("semisimple n<=" + std::to_string(N(6)), [&](CheckLog& l) { check_semisimple(l, N(6)); }));
    if (want("confluence")) res.push_back(run_check("confluence", [](CheckLog& l) { check_confluence(l, 200, 10); }));
    if (want("associativity"))
        res.push_back(run_check("associativity", [&](CheckLog& l) { check_associativity(l, 200, N(4)); }));
    if (want("contravariance"))
        res.push_back(run_check("contravariance", [&](CheckLog& l) { check_contravariance(l, N(5)); }));
    if (want("unitriangular"))
        res.push_back(run_check("unitriangular", [&](CheckLog& l) { check_unitriangular(l, N(6)); }));
    if (want("functors")) res.push_back(run_check("functors", [&](CheckLog& l) { check_functors(l, N(8)); }));
    if (want("alpha")) res.push_back(run_check("alpha refinement", [&](CheckLog& l) { check_alpha_refinement(l, N(8)); }));
    if (want("hom")) res.push_back(run_check("hom rules vs oracle", [&](CheckLog& l) { check_hom_oracle(l, N(5)); }));
    bool ok = true;
    json j = json::array();
    std::ostringstream os;
    for (auto& r : res) {
        ok = ok && r.ok;
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", r.seconds);
        os << (r.ok ? "PASS  " : "FAIL  ") << r.name << "  " << t << (r.detail.empty() ? "" : "  [" + r.detail + "]")
           << "\n";
        j.push_back({{"name", r.name}, {"ok", r.ok}, {"seconds", r.seconds}, {"detail", r.detail}});
    }
    emit(o, o.format == "json" ? j.dump(2) : os.str());
    if (!ok) throw VerifyFailed("verification failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sbx: symplectic blob algebra computations"};
    app.require_subcommand(1);
    Opts o;

    auto nopt = [&](CLI::App* c, bool required = true) {
        auto* opt = c->add_option("--n", o.n, "number of strands")->check(CLI::Range(1, 64));
        if (required) opt->required();
        return opt;
    };
    auto label_opts = [&](CLI::App* c) {
        c->add_option("--m", o.m, "propagating lines minus one");
        c->add_option("--eps", o.eps, "sign pair, e.g. -,- or ++; b for W^n(b)");
    };
    auto weight_opts = [&](CLI::App* c) {
        c->add_option("--w1", o.w1, "rational weight w1");
        c->add_option("--w2", o.w2, "rational weight w2");
        c->add_option("--theta", o.theta, "rational theta (b^x_n)");
        c->add_option("--ell", o.ell, "q a primitive 2 ell-th root of unity");
        c->add_option("--q0", o.q0, "rational value of x, q = x^D");
        c->add_option("--scheme", o.scheme, "parameter scheme")->check(CLI::IsMember({"DN", "GMP1", "GMP2"}));
    };
    auto out_opts = [&](CLI::App* c, std::vector<std::string> formats) {
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        c->add_option("--out", o.out, "write output to a file");
        c->add_option("--guard", o.guard, "size guard on n");
    };

    auto* basis = app.add_subcommand("basis", "diagram basis of b^x_n or of a cell module");
    nopt(basis);
    label_opts(basis);
    basis->add_option("--basis", o.basis, "diagram or path")->check(CLI::IsMember({"diagram", "path"}));
    out_opts(basis, {"text", "json"});

    auto* mult = app.add_subcommand("mult", "product of two basis diagrams");
    nopt(mult);
    mult->add_option("diagrams", o.diagrams, "two diagram keys, e.g. \"1-2 3-4\"")->expected(2);
    weight_opts(mult);
    out_opts(mult, {"text", "json"});

    auto* gram = app.add_subcommand("gram", "Gram matrix and determinant of a cell module");
    nopt(gram);
    label_opts(gram);
    weight_opts(gram);
    gram->add_option("--basis", o.basis, "diagram or path")->check(CLI::IsMember({"diagram", "path"}));
    gram->add_option("--det", o.det, "direct or closed-form")->check(CLI::IsMember({"direct", "closed-form"}));
    out_opts(gram, {"text", "json"});

    auto* central = app.add_subcommand("central", "eigenvalues of Z_n on cell modules");
    nopt(central);
    label_opts(central);
    weight_opts(central);
    out_opts(central, {"text", "json"});

    auto* blocks = app.add_subcommand("blocks", "block partition from the classification");
    nopt(blocks);
    weight_opts(blocks);
    blocks->add_flag("--compare-oracle", o.compare, "also run the brute-force oracle");
    out_opts(blocks, {"text", "json", "svg"});

    auto* oracle = app.add_subcommand("oracle", "block partition from Hom spaces");
    nopt(oracle);
    weight_opts(oracle);
    out_opts(oracle, {"text", "json", "svg"});

    auto* plot = app.add_subcommand("plot", "weight-space plot of the blocks (svg)");
    nopt(plot);
    weight_opts(plot);
    plot->add_option("--out", o.out, "write output to a file");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites));
    auto* vn = nopt(verify, false);
    out_opts(verify, {"text", "json"});

    // "--eps --" would otherwise read as the positional separator
    std::vector<std::string> args(argv, argv + argc);
    for (size_t i = 1; i + 1 < args.size(); ++i)
        if (args[i] == "--eps" && !args[i + 1].empty() && args[i + 1].find_first_not_of("+-,") == std::string::npos) {
            args[i] = "--eps=" + args[i + 1];
            args.erase(args.begin() + i + 1);
        }
    std::vector<char*> av;
    for (auto& a : args) av.push_back(a.data());

    try {
        app.parse(static_cast<int>(av.size()), av.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*basis) return cmd_basis(o);
        if (*mult) return cmd_mult(o);
        if (*gram) return cmd_gram(o);
        if (*central) return cmd_central(o);
        if (*blocks) return cmd_blocks(o);
        if (*oracle) return cmd_oracle(o);
        if (*plot) return cmd_plot(o);
        if (*verify) return cmd_verify(o, vn->count() > 0);
    } catch (const VerifyFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
