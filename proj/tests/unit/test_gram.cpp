#include "doctest.h"
#include "sbx/gram.hpp"

#include <random>

using namespace sbx;

namespace {
// random rational away from 1
Rat rnd(std::mt19937_64& rng) {
    for (;;) {
        Rat x = frac(long(rng() % 97) + 2, long(rng() % 89) + 2);
        if (x != 1) return x;
    }
}
Scalars<Rat> random_point(std::mt19937_64& rng) {
    auto r = [&]() { return rnd(rng); };
    return independent_scalars(r(), r(), r(), r());
}
}  // namespace

TEST_CASE("W(5,2,-,-) determinant at independent points") {
    std::mt19937_64 rng(11);
    auto M = build_module(Label::dn(5, 2, -1, -1));
    for (int trial = 0; trial < 3; ++trial) {
        auto S = random_point(rng);
        auto t = scheme_convert(5, S, Scheme::DN);
        Rat det = determinant(gram_matrix(M, t));
        BoxProduct P;
        P.mul(BoxArg(0, 1), 6);
        P.mul(BoxArg(0, 0, 1), 6);
        P.mul(BoxArg(1, 1), -8);
        P.mul(BoxArg(1, 0, 1), -8);
        P.mul(BoxArg(-1, 1), 1);
        P.mul(BoxArg(-1, 0, 1), 1);
        P.mul(BoxArg(3, 1, 1), 1);
        CHECK(det == P.eval(S));
        // the product as printed carries [-w1+1][-w2+1][-w1-w2-3]
        CHECK(det == -closed_form_gram(M.label).eval(S));
    }
}

TEST_CASE("path basis of W(5,2,-,-)") {
    std::mt19937_64 rng(5);
    Label L = Label::dn(5, 2, -1, -1);
    auto M = build_module(L);
    for (int trial = 0; trial < 2; ++trial) {
        auto r = [&]() { return rnd(rng); };
        Rat s = r(), P1 = r(), P2 = r();
        // theta = -m + e1 w1 + e2 w2: q^{theta/2} = s^{-2} P1^{-1} P2^{-1}
        Rat T = 1 / (s * s * P1 * P2);
        auto S = independent_scalars(s, P1, P2, T);
        auto t = scheme_convert(5, S, Scheme::DN);
        auto G = gram_matrix(M, t);
        auto C = path_change_matrix(M, t, S);
        auto H = matmul(transpose(C), matmul(G, C));
        std::vector<Rat> want = {1, f_of(S, 0), f_of(S, -1), f_of(S, -1) * f_of(S, -2),
                                 f_of(S, -1) * f_of(S, -2) * f_of(S, -3),
                                 f_of(S, -1) * f_of(S, -2) * f_of(S, -3) * g_of(S, -4)};
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j)
                if (i != j) CHECK(is_zero(H[i][j]));
            CHECK(H[i][i] / H[0][0] == want[i]);
            CHECK(path_eigenvalue(L, M.paths[i], S) == want[i]);
            CHECK(C[i][i] == eval_mono(M.wp_mono[i], t));
            for (int j = 0; j < i; ++j) CHECK(is_zero(C[i][j]));
        }
    }
}

TEST_CASE("b-cell path basis and Gamma_b") {
    for (int n = 1; n <= 4; ++n) {
        const auto& M = cached_module(Label::bmod(n));
        Rat ratio[2];
        Rat thetas[2] = {Rat(2, 9), Rat(-7, 4)};
        for (int k = 0; k < 2; ++k) {
            auto S = independent_scalars(Rat(3, 2), Rat(5, 7), Rat(-4, 3), thetas[k]);
            auto t = scheme_convert(n, S, Scheme::DN);
            auto G = gram_matrix(M, t);
            auto C = path_change_matrix(M, t, S);
            auto D = matmul(transpose(C), matmul(G, C));
            for (int i = 0; i < M.dim(); ++i)
                for (int j = 0; j < M.dim(); ++j)
                    if (i != j) CHECK(is_zero(D[i][j]));
            Rat prod = 1;
            for (int i = 0; i < M.dim(); ++i) {
                CHECK(D[i][i] == D[0][0] * path_eigenvalue(M.label, M.paths[i], S));
                prod *= D[i][i] / D[0][0];
            }
            ratio[k] = prod / gamma_b(n).eval(S);
        }
        // the unit prefactor does not involve theta
        CHECK(ratio[0] == ratio[1]);
    }
}

TEST_CASE("unitriangular change to the path basis") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 5; ++n)
        for (auto& L : dn_labels(n)) {
            auto M = build_module(L);
            auto r = [&]() { return rnd(rng); };
            Rat s = r(), P1 = r(), P2 = r();
            Rat T = power(s, -L.m) * power(P1, L.e1) * power(P2, L.e2);
            auto S = independent_scalars(s, P1, P2, T);
            auto t = scheme_convert(n, S, Scheme::DN);
            auto G = gram_matrix(M, t);
            auto C = path_change_matrix(M, t, S);
            auto H = matmul(transpose(C), matmul(G, C));
            int N = M.dim();
            Rat diag = 1, cdet = 1;
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < i; ++j) CHECK(is_zero(C[i][j]));
                CHECK(C[i][i] == eval_mono(M.wp_mono[i], t));
                cdet *= C[i][i];
                for (int j = 0; j < N; ++j)
                    if (i != j) CHECK(is_zero(H[i][j]));
                CHECK(H[i][i] == G[0][0] * path_eigenvalue(L, M.paths[i], S));
                diag *= H[i][i];
            }
            CHECK(determinant(G) * cdet * cdet == diag);
        }
}

TEST_CASE("closed form against direct determinants") {
    // ratio is a signed monomial in dL, dR
    std::mt19937_64 rng(31);
    auto r = [&]() { return rnd(rng); };
    for (int n = 1; n <= 5; ++n)
        for (auto& L : dn_labels(n)) {
            auto M = build_module(L);
            auto S = independent_scalars(r(), r(), r(), r());
            auto t = scheme_convert(n, S, Scheme::DN);
            Rat d = determinant(gram_matrix(M, t));
            Rat c = closed_form_gram(L).eval(S);
            REQUIRE(!is_zero(c));
            Rat ratio = d / c;
            bool ok = false;
            for (int a = -2 * M.dim(); a <= 2 * M.dim() && !ok; ++a)
                for (int b = -2 * M.dim(); b <= 2 * M.dim() && !ok; ++b)
                    for (int sg : {1, -1})
                        if (ratio == sg * power(t.dL(), a) * power(t.dR(), b)) ok = true;
            CHECK_MESSAGE(ok, L.str());
        }
}
