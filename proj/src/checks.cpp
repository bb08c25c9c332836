#include "sbx/checks.hpp"

#include "sbx/blocks.hpp"
#include "sbx/central.hpp"
#include "sbx/gram.hpp"
#include "sbx/oracle.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace sbx {

void CheckLog::fail(const std::string& msg) {
    ok = false;
    if (++failures <= 5) notes.push_back(msg);
}

std::string CheckLog::summary() const {
    std::string s;
    for (auto& n : notes) s += (s.empty() ? "" : "; ") + n;
    if (failures > 5) s += "; ... " + std::to_string(failures - 5) + " more";
    return s;
}

CheckResult run_check(const std::string& name, const std::function<void(CheckLog&)>& body) {
    CheckResult r;
    r.name = name;
    CheckLog log;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(log);
    } catch (const std::exception& e) {
        log.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.ok = log.ok;
    r.detail = log.ok ? (log.notes.empty() ? "" : log.summary()) : log.summary();
    return r;
}

namespace {

WeightParams wp(const char* a, const char* b, int ell = 0, const char* theta = nullptr) {
    WeightParams p;
    p.w1 = parse_rat(a);
    p.w2 = parse_rat(b);
    if (ell) p.spec = RootSpec::root(ell);
    if (theta) p.theta = parse_rat(theta);
    return p;
}

Rat rnd(std::mt19937_64& rng) {
    for (;;) {
        Rat x = frac(long(rng() % 97) + 2, long(rng() % 89) + 2);
        if (x != 1) return x;
    }
}

Mono mono(std::initializer_list<std::pair<Param, int>> f) {
    Mono m;
    for (auto& [p, e] : f) m.e[p] += e;
    return m;
}

// [w1]^6 [w2]^6 [w1+1]^-8 [w2+1]^-8 [w1-1][w2-1][w1+w2+3]
BoxProduct gamma_52_diagram() {
    BoxProduct P;
    P.mul(BoxArg(0, 1), 6);
    P.mul(BoxArg(0, 0, 1), 6);
    P.mul(BoxArg(1, 1), -8);
    P.mul(BoxArg(1, 0, 1), -8);
    P.mul(BoxArg(-1, 1), 1);
    P.mul(BoxArg(-1, 0, 1), 1);
    P.mul(BoxArg(3, 1, 1), 1);
    return P;
}

// Independent point with theta = x(L), the value the half tile sees.
Scalars<Rat> tied_point(const Label& L, std::mt19937_64& rng) {
    Rat s = rnd(rng), P1 = rnd(rng), P2 = rnd(rng);
    Rat T = power(s, -L.m) * power(P1, L.e1) * power(P2, L.e2);
    return independent_scalars(s, P1, P2, T);
}

BlockPartition expected(int n, const std::vector<std::vector<Label>>& cls, CheckLog& log) {
    LabelUnion U(dn_labels(n));
    for (auto& c : cls)
        for (size_t i = 1; i < c.size(); ++i)
            if (!U.unite(c[0], c[i], "reference")) log.fail("reference data repeats " + c[i].str());
    return U.partition(n, "");
}

Label D(int n, int m, int e1, int e2) { return Label::dn(n, m, e1, e2); }

}  // namespace

std::vector<RegimePoint> oracle_points() {
    return {
        {"semisimple w=(2/7,3/11)", wp("2/7", "3/11")},
        {"qrootofunity w=(1/2,3/4) l=3", wp("1/2", "3/4", 3)},
        {"qrootofunity w=(2/7,3/11) l=3", wp("2/7", "3/11", 3)},
        {"w1int w=(1,3/4)", wp("1", "3/4")},
        {"w1int w=(1,3/4) l=3", wp("1", "3/4", 3)},
        {"w2int w=(-1/4,1)", wp("-1/4", "1")},
        {"w1+w2 w=(1/4,11/4)", wp("1/4", "11/4")},
        {"w1+w2 w=(1/4,3/4) l=2", wp("1/4", "3/4", 2)},
        {"w1-w2 w=(1/4,-7/4)", wp("1/4", "-7/4")},
        {"w1+w2andw1-w2 w=(5/2,-1/2)", wp("5/2", "-1/2")},
        {"w1+w2andw1-w2 w=(1/2,3/2) l=3", wp("1/2", "3/2", 3)},
        {"qnot1w1w2 w=(1,1)", wp("1", "1")},
        {"qnot1w1w2loc w=(3,1)", wp("3", "1")},
        {"qnot1w1w2loc w=(-2,1)", wp("-2", "1")},
        {"qw1w2 w=(1,1) l=3", wp("1", "1", 3)},
        {"qw1w2 w=(-2,1) l=5", wp("-2", "1", 5)},
        {"critical theta w=(1/3,1/5) theta=-22/15", wp("1/3", "1/5", 0, "-22/15")},
        {"critical theta w=(1,3/4) theta=-9/4", wp("1", "3/4", 0, "-9/4")},
        {"critical theta w=(1/4,3/4) theta=1 l=2", wp("1/4", "3/4", 2, "1")},
        {"non-critical theta w=(2/7,3/11) theta=1/3", wp("2/7", "3/11", 0, "1/3")},
    };
}

std::vector<WeightParams> generic_points() {
    // small denominators keep q = x^D cheap
    return {wp("1/2", "1/3"), wp("1/3", "1/5"), wp("-1/3", "1/4"), wp("2/3", "-1/4"), wp("1/5", "1/2")};
}

void check_gram_golden(CheckLog& log) {
    Label L = D(5, 2, -1, -1);
    auto M = build_module(L);
    if (M.dim() != 6) return log.fail("dim " + std::to_string(M.dim()));
    const Param d = P_D, l = P_DL, r = P_DR, kl = P_KL, kr = P_KR;
    std::optional<Mono> z;
    std::vector<std::vector<std::optional<Mono>>> G = {
        {mono({{l, 2}, {r, 1}, {kl, 1}}), mono({{l, 1}, {r, 1}, {kl, 1}}), mono({{l, 2}, {r, 1}}), z, z, z},
        {mono({{l, 1}, {r, 1}, {kl, 1}}), mono({{l, 1}, {r, 1}, {d, 1}}), mono({{l, 1}, {r, 1}}), z, z, z},
        {mono({{l, 2}, {r, 1}}), mono({{l, 1}, {r, 1}}), mono({{l, 1}, {r, 1}, {d, 1}}), mono({{l, 1}, {r, 1}}), z, z},
        {z, z, mono({{l, 1}, {r, 1}}), mono({{l, 1}, {r, 1}, {d, 1}}), mono({{l, 1}, {r, 1}}), mono({{l, 1}, {r, 2}})},
        {z, z, z, mono({{l, 1}, {r, 1}}), mono({{l, 1}, {r, 1}, {d, 1}}), mono({{l, 1}, {r, 1}, {kr, 1}})},
        {z, z, z, mono({{l, 1}, {r, 2}}), mono({{l, 1}, {r, 1}, {kr, 1}}), mono({{l, 1}, {r, 2}, {kr, 1}})},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            auto g = M.inner(i, j);
            bool same = g.has_value() == G[i][j].has_value() && (!g || *g == *G[i][j]);
            log.expect(same, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    // determinant: symbolic in x at two weight choices, then independent points
    auto P = gamma_52_diagram();
    for (auto w : {std::pair<const char*, const char*>{"1/2", "1/3"}, {"1/3", "-1/4"}}) {
        auto S = symbolic_scalars(wp(w.first, w.second));
        auto t = scheme_convert(5, S, Scheme::DN);
        log.expect(determinant(gram_matrix(M, t)) == P.eval(S), std::string("symbolic det at w1=") + w.first);
    }
    std::mt19937_64 rng(101);
    for (int k = 0; k < 5; ++k) {
        auto S = independent_scalars(rnd(rng), rnd(rng), rnd(rng), rnd(rng));
        auto t = scheme_convert(5, S, Scheme::DN);
        log.expect(determinant(gram_matrix(M, t)) == P.eval(S), "det at independent point");
    }
}

void check_path_golden(CheckLog& log) {
    Label L = D(5, 2, -1, -1);
    auto M = build_module(L);
    // [w1]^2 [w1+1]^-4 [w2+1]^-2 [w1-1][w2-1][w1+w2+3]
    BoxProduct P;
    P.mul(BoxArg(0, 1), 2);
    P.mul(BoxArg(1, 1), -4);
    P.mul(BoxArg(1, 0, 1), -2);
    P.mul(BoxArg(-1, 1), 1);
    P.mul(BoxArg(-1, 0, 1), 1);
    P.mul(BoxArg(3, 1, 1), 1);
    std::mt19937_64 rng(202);
    for (int k = 0; k < 5; ++k) {
        auto S = tied_point(L, rng);
        auto t = scheme_convert(5, S, Scheme::DN);
        std::vector<Rat> want = {1,
                                 f_of(S, 0),
                                 f_of(S, -1),
                                 f_of(S, -1) * f_of(S, -2),
                                 f_of(S, -1) * f_of(S, -2) * f_of(S, -3),
                                 f_of(S, -1) * f_of(S, -2) * f_of(S, -3) * g_of(S, -4)};
        auto G = gram_matrix(M, t);
        auto C = path_change_matrix(M, t, S);
        auto H = matmul(transpose(C), matmul(G, C));
        Rat prod = 1;
        for (int i = 0; i < 6; ++i) {
            Rat lam = path_eigenvalue(L, M.paths[i], S);
            log.expect(lam == want[i], "eigenvalue " + std::to_string(i));
            log.expect(H[i][i] == G[0][0] * lam, "path Gram diagonal " + std::to_string(i));
            for (int j = 0; j < 6; ++j)
                if (i != j) log.expect(is_zero(H[i][j]), "path Gram off-diagonal");
            prod *= lam;
        }
        log.expect(prod == P.eval(S), "eigenvalue product");
        log.expect(path_gram_product(L).eval(S) == prod, "path product from tiles");
    }
}

void check_closed_form(CheckLog& log, int nmax) {
    std::mt19937_64 rng(303);
    int labels = 0;
    for (int n = 1; n <= nmax; ++n)
        for (auto& L : dn_labels(n)) {
            const auto& M = cached_module(L);
            auto cf = closed_form_gram(L);
            // exponents of dL, dR fixed at the first point, confirmed at the second
            std::optional<std::array<int, 3>> found;
            for (int k = 0; k < 2; ++k) {
                auto S = independent_scalars(rnd(rng), rnd(rng), rnd(rng), rnd(rng));
                auto t = scheme_convert(n, S, Scheme::DN);
                Rat ratio = determinant(gram_matrix(M, t)) / cf.eval(S);
                bool hit = false;
                int lim = 2 * M.dim();
                auto test = [&](int a, int b, int sg) { return ratio == sg * power(t.dL(), a) * power(t.dR(), b); };
                if (found) hit = test((*found)[0], (*found)[1], (*found)[2]);
                else
                    for (int a = -lim; a <= lim && !hit; ++a)
                        for (int b = -lim; b <= lim && !hit; ++b)
                            for (int sg : {1, -1})
                                if (test(a, b, sg)) {
                                    found = std::array<int, 3>{a, b, sg};
                                    hit = true;
                                    break;
                                }
                log.expect(hit, L.str() + ": ratio is not a signed monomial in dL, dR");
            }
            ++labels;
        }
    log.notes.push_back(std::to_string(labels) + " labels");
}

void check_central(CheckLog& log, int nmax, int points) {
    std::mt19937_64 rng(404);
    for (int k = 0; k < points; ++k) {
        auto S = independent_scalars(rnd(rng), rnd(rng), rnd(rng), rnd(rng));
        for (int n = 1; n <= nmax; ++n) {
            auto t = scheme_convert(n, S, Scheme::DN);
            Multiplier mul;
            auto Z = z_n(n, S, t, &mul);
            for (auto& g : generators(n))
                log.expect(commutator(Z, Element<Rat>::single(g), t, &mul).zero(),
                           "Z_" + std::to_string(n) + " not central");
            for (auto& L : dn_labels(n)) {
                auto A = cached_module(L).element_matrix(Z, t);
                Rat a = alpha_expanded(L, S);
                log.expect(a == alpha_quotient(L, S), L.str() + ": quotient and expanded alpha differ");
                for (size_t i = 0; i < A.size(); ++i)
                    for (size_t j = 0; j < A.size(); ++j)
                        log.expect(A[i][j] == (i == j ? a : Rat(0)), L.str() + ": Z_n is not alpha I");
            }
        }
    }
}

void check_reference_blocks(CheckLog& log) {
    auto cmp = [&](const std::string& name, int n, const WeightParams& p, const std::vector<std::vector<Label>>& cls) {
        auto P = classify(n, p);
        auto E = expected(n, cls, log);
        if (!(P == E)) log.fail(name + ": got " + P.str());
    };
    cmp("cgl1", 8, wp("1/2", "3/4", 3),
        {{D(8, 7, 1, 1), D(8, 1, 1, 1)}, {D(8, 7, -1, 1), D(8, 1, -1, 1)}, {D(8, 7, 1, -1), D(8, 1, 1, -1)}});
    cmp("w1orw2(i)", 8, wp("1", "3/4"),
        {{D(8, 3, 1, 1), D(8, 1, -1, 1)},
         {D(8, 5, 1, 1), D(8, 3, -1, 1)},
         {D(8, 7, 1, 1), D(8, 5, -1, 1)},
         {D(8, 5, 1, -1), D(8, 3, -1, -1)},
         {D(8, 7, 1, -1), D(8, 5, -1, -1)}});
    cmp("w1orw2(ii)", 9, wp("-1/4", "1"),
        {{D(9, 4, 1, 1), D(9, 2, 1, -1)},
         {D(9, 6, 1, 1), D(9, 4, 1, -1)},
         {D(9, 8, 1, 1), D(9, 6, 1, -1)},
         {D(9, 4, -1, 1), D(9, 2, -1, -1)},
         {D(9, 6, -1, 1), D(9, 4, -1, -1)},
         {D(9, 8, -1, 1), D(9, 6, -1, -1)}});
    cmp("w1+w2orw1-w2(i)", 9, wp("1/4", "11/4"), {{D(9, 4, 1, 1), D(9, 2, 1, 1)}, {D(9, 6, 1, 1), D(9, 0, 1, 1)}});
    cmp("w1+w2orw1-w2(ii)", 8, wp("1/4", "-7/4"), {{D(8, 3, 1, -1), D(8, 1, 1, -1)}});
    cmp("w1+w2andw1-w2", 8, wp("5/2", "-1/2"), {{D(8, 5, 1, -1), D(8, 1, 1, -1)}, {D(8, 3, 1, 1), D(8, 1, 1, 1)}});
    cmp("w1andw2", 13, wp("3", "1"),
        {{D(13, 4, 1, 1), D(13, 2, 1, -1)},
         {D(13, 6, 1, 1), D(13, 4, 1, -1), D(13, 2, 1, 1)},
         {D(13, 8, 1, 1), D(13, 6, 1, -1), D(13, 2, -1, 1), D(13, 0, 1, 1)},
         {D(13, 10, 1, 1), D(13, 8, 1, -1), D(13, 4, -1, 1), D(13, 2, -1, -1)},
         {D(13, 12, 1, 1), D(13, 10, 1, -1), D(13, 6, -1, 1), D(13, 4, -1, -1)},
         {D(13, 12, 1, -1), D(13, 8, -1, 1), D(13, 6, -1, -1)},
         {D(13, 10, -1, 1), D(13, 8, -1, -1)},
         {D(13, 12, -1, 1), D(13, 10, -1, -1)}});
}

void check_oracle_points(CheckLog& log, const std::vector<RegimePoint>& pts, std::vector<std::string>& lines,
                         double max_seconds) {
    for (auto& pt : pts) {
        int agree = 0, total = 0;
        double worst = 0;
        std::string first_diff;
        for (int n = 1; n <= pt.nmax; ++n) {
            auto t0 = std::chrono::steady_clock::now();
            auto O = linkage_blocks(n, pt.p);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            worst = std::max(worst, dt);
            auto C = pt.p.theta ? classify_bnx(n, pt.p) : classify(n, pt.p);
            ++total;
            if (C == O) ++agree;
            else if (first_diff.empty()) first_diff = "n=" + std::to_string(n) + " classify " + C.str() + " oracle " + O.str();
            if (dt > max_seconds) log.fail(pt.name + ": oracle run n=" + std::to_string(n) + " took " + std::to_string(dt) + "s");
        }
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(2);
        os << (agree == total ? "PASS" : "FAIL") << "  " << pt.name << "  n=1.." << pt.nmax << "  agree " << agree
           << "/" << total << "  slowest oracle run " << worst << "s";
        lines.push_back(os.str());
        if (agree != total) log.fail(pt.name + ": " + first_diff);
    }
}

void check_semisimple(CheckLog& log, int nmax) {
    for (auto& p : generic_points()) {
        if (regime_of(nmax, p) != Regime::Semisimple) {
            log.fail(p.str() + " is not a semisimple point");
            continue;
        }
        for (int n = 1; n <= nmax; ++n) {
            // symbolic determinants: nonzero as rational functions
            // q generic: a box [t] vanishes only when t = 0
            for (auto& L : dn_labels(n))
                for (auto& [a, e] : closed_form_gram(L).boxes)
                    log.expect(sgn(a.value(p)) != 0, L.str() + ": closed form has " + a.str() + " = [0] at " + p.str());
            // nonzero at one value of q is enough for the direct determinant
            auto X = point_scalars(p, Rat(7, 5));
            auto t = scheme_convert(n, X, Scheme::DN);
            for (auto& L : dn_labels(n))
                log.expect(!is_zero(determinant(gram_matrix(cached_module(L), t))),
                           L.str() + " Gram determinant vanishes at " + p.str());
            log.expect(gram_rank_semisimple(n, p), "rank deficient Gram matrix at " + p.str());
            log.expect(linkage_blocks(n, p).nontrivial().empty(), "oracle links labels at " + p.str());
        }
    }
}

void check_confluence(CheckLog& log, int stacks, int orders) {
    std::mt19937_64 pick(505);
    std::vector<std::vector<Piece>> bases;
    for (int n = 1; n <= 4; ++n) bases.push_back(enumerate_basis(n));
    for (int k = 0; k < stacks; ++k) {
        int n = 1 + int(pick() % 4);
        auto& B = bases[n - 1];
        auto gens = generators(n);
        std::vector<Piece> stack;
        int len = 2 + int(pick() % 4);
        for (int i = 0; i < len; ++i) stack.push_back(pick() % 2 ? B[pick() % B.size()] : gens[pick() % gens.size()]);
        Composite ref{Mono{}, stack[0]};
        for (size_t i = 1; i < stack.size(); ++i) {
            auto c = compose(ref.piece, stack[i]);
            ref = {ref.mono * c.mono, c.piece};
        }
        for (int o = 0; o < orders; ++o) {
            std::mt19937_64 rng(7919 * k + o);
            auto c = straighten_random(stack, rng);
            log.expect(is_reduced(c.piece), "unreduced result");
            log.expect(c.piece == ref.piece && c.mono == ref.mono, "orders disagree on stack " + std::to_string(k));
        }
    }
}

void check_associativity(CheckLog& log, int triples, int nmax) {
    std::mt19937_64 rng(606);
    for (int n = 1; n <= nmax; ++n) {
        auto B = enumerate_basis(n);
        for (int k = 0; k < triples; ++k) {
            auto& a = B[rng() % B.size()];
            auto& b = B[rng() % B.size()];
            auto& c = B[rng() % B.size()];
            auto ab = compose(a, b);
            auto l = compose(ab.piece, c);
            auto bc = compose(b, c);
            auto r = compose(a, bc.piece);
            log.expect(l.piece == r.piece && l.mono * ab.mono == r.mono * bc.mono,
                       "(ab)c != a(bc) at n=" + std::to_string(n));
        }
    }
}

void check_contravariance(CheckLog& log, int nmax) {
    for (int n = 1; n <= nmax; ++n) {
        auto gens = generators(n);
        for (auto& L : all_labels(n)) {
            const auto& M = cached_module(L);
            for (auto& g : gens) {
                Piece sg = flip(g);
                for (int i = 0; i < M.dim(); ++i)
                    for (int j = 0; j < M.dim(); ++j) {
                        auto a = M.act(g, i);
                        auto b = M.act(sg, j);
                        std::optional<Mono> lhs, rhs;
                        if (a)
                            if (auto x = M.inner(a->index, j)) lhs = *x * a->mono;
                        if (b)
                            if (auto x = M.inner(i, b->index)) rhs = *x * b->mono;
                        log.expect(lhs.has_value() == rhs.has_value() && (!lhs || *lhs == *rhs),
                                   L.str() + ": <g u, v> != <u, g* v>");
                    }
            }
        }
    }
}

void check_unitriangular(CheckLog& log, int nmax) {
    std::mt19937_64 rng(707);
    for (int n = 1; n <= nmax; ++n)
        for (auto& L : dn_labels(n)) {
            const auto& M = cached_module(L);
            auto S = tied_point(L, rng);
            auto t = scheme_convert(n, S, Scheme::DN);
            auto G = gram_matrix(M, t);
            auto C = path_change_matrix(M, t, S);
            auto H = matmul(transpose(C), matmul(G, C));
            int N = M.dim();
            Rat diag = 1, cdet = 1;
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < i; ++j) log.expect(is_zero(C[i][j]), L.str() + ": change matrix not triangular");
                log.expect(C[i][i] == eval_mono(M.wp_mono[i], t), L.str() + ": diagonal is not the w_p monomial");
                cdet *= C[i][i];
                for (int j = 0; j < N; ++j)
                    if (i != j) log.expect(is_zero(H[i][j]), L.str() + ": path Gram not diagonal");
                diag *= H[i][i];
            }
            log.expect(determinant(G) * cdet * cdet == diag, L.str() + ": det(G) (det C)^2 != path product");
        }
}

void check_functors(CheckLog& log, int nmax) {
    for (int n = 1; n <= nmax; ++n)
        for (auto& A : dn_labels(n)) {
            for (auto [up, down] : {std::pair{Functor::G, Functor::F}, std::pair{Functor::Gp, Functor::Fp}}) {
                auto g = functor_map(up, A);
                if (!g || !g->valid()) {
                    log.fail(functor_name(up) + " " + A.str());
                    continue;
                }
                auto f = functor_map(down, *g);
                log.expect(f && *f == A, functor_name(down) + functor_name(up) + " != id on " + A.str());
            }
            if (A.m == n - 1) {
                if (A.e1 == 1) log.expect(!functor_map(Functor::F, A), "F keeps " + A.str());
                if (A.e2 == 1) log.expect(!functor_map(Functor::Fp, A), "F' keeps " + A.str());
            }
        }
}

void check_alpha_refinement(CheckLog& log, int nmax) {
    std::vector<WeightParams> pts;
    for (auto& r : oracle_points()) pts.push_back(r.p);
    for (auto p : {wp("1/2", "3/4", 3), wp("3", "1"), wp("1", "2", 5), wp("1/4", "5/4", 2)}) pts.push_back(p);
    int pairs = 0;
    for (auto& p : pts) {
        int ell = p.spec.ell_or_zero();
        for (int n = 1; n <= nmax; ++n) {
            auto P = p.theta ? classify_bnx(n, p) : classify(n, p);
            auto same = [&](const Label& a, const Label& b) {
                if (ell) return same_eigenvalue(a, b, cyclo_scalars(p, ell));
                return same_eigenvalue(a, b, symbolic_scalars(p));
            };
            for (auto& c : P.classes) {
                std::vector<Label> dn;
                for (auto& L : c)
                    if (!L.b) dn.push_back(L);
                for (size_t i = 1; i < dn.size(); ++i) {
                    ++pairs;
                    log.expect(same(dn[0], dn[i]), dn[0].str() + " ~ " + dn[i].str() + " with different alpha at " + p.str());
                }
            }
        }
    }
    log.notes.push_back(std::to_string(pairs) + " linked pairs");
}

void check_hom_oracle(CheckLog& log, int nmax) {
    std::vector<WeightParams> pts = {wp("1", "3/4"), wp("-1/4", "1"), wp("1/4", "11/4"), wp("1/4", "-7/4"),
                                     wp("3", "1"),   wp("1", "1"),    wp("1/2", "3/4", 2), wp("1", "1", 3)};
    int edges = 0, pairs = 0;
    for (auto& p : pts)
        for (int n = 1; n <= nmax; ++n)
            for (auto& e : hom_graph(n, p.w1, p.w2, p.spec.ell_or_zero())) {
                ++edges;
                log.expect(hom_dim(e.src, e.dst, p) >= 1, e.rule + " " + e.src.str() + " -> " + e.dst.str() + " at " + p.str());
            }
    for (auto p : {wp("3", "1"), wp("2", "2"), wp("1", "2"), wp("2", "3")})
        for (int n = 1; n <= nmax; ++n)
            for (auto& a : dn_labels(n))
                for (auto& b : dn_labels(n))
                    if (nohom_pair(a, b, p.w1, p.w2)) {
                        ++pairs;
                        log.expect(hom_dim(a, b, p) == 0, "nohom pair " + a.str() + " -> " + b.str() + " at " + p.str());
                    }
    if (!edges || !pairs) log.fail("empty sample");
    log.notes.push_back(std::to_string(edges) + " hom edges, " + std::to_string(pairs) + " nohom pairs");
}

}  // namespace sbx
