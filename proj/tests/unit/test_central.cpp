#include "doctest.h"
#include "sbx/central.hpp"

#include <random>

using namespace sbx;

namespace {
std::vector<Scalars<Rat>> points() {
    return {independent_scalars(Rat(3, 2), Rat(5, 7), Rat(-4, 3), Rat(2, 9)),
            independent_scalars(Rat(-2, 5), Rat(7, 3), Rat(9, 11), Rat(3, 4)),
            independent_scalars(Rat(5, 3), Rat(-6, 5), Rat(2, 7), Rat(-5, 2))};
}
}  // namespace

TEST_CASE("hecke images: inverses and quadratic relations") {
    for (auto& S : points())
        for (int n = 1; n <= 4; ++n) {
            auto t = scheme_convert(n, S, Scheme::DN);
            auto I = Element<Rat>::identity(n);
            Rat q = S.q();
            for (int i = 0; i <= n; ++i) {
                auto g = hecke_image(n, i, 1, S), gi = hecke_image(n, i, -1, S);
                CHECK(multiply(g, gi, t) == I);
                CHECK(multiply(gi, g, t) == I);
                if (i > 0 && i < n) {
                    CHECK(multiply(g - I.scaled(q), g + I.scaled(1 / q), t).zero());
                } else {
                    // eigenvalues Q and Q^-1
                    Rat Q = i == 0 ? S.Q1() : S.Q2();
                    CHECK(multiply(g - I.scaled(Q), g - I.scaled(1 / Q), t).zero());
                    CHECK_FALSE(multiply(g - I.scaled(Q), g + I.scaled(1 / Q), t).zero());
                }
            }
        }
}

TEST_CASE("murphy elements: commuting relations") {
    auto S = points()[0];
    for (int n = 1; n <= 4; ++n) {
        auto t = scheme_convert(n, S, Scheme::DN);
        Multiplier mul;
        auto M = murphy_elements(n, S, t, &mul);
        auto I = Element<Rat>::identity(n);
        for (int i = 0; i < n; ++i) {
            CHECK(multiply(M.J[i], M.Jinv[i], t, &mul) == I);
            for (int j = i + 1; j < n; ++j) CHECK(commutator(M.J[i], M.J[j], t, &mul).zero());
        }
        auto g0 = hecke_image(n, 0, 1, S);
        for (int j = 1; j < n; ++j) CHECK(commutator(g0, M.J[j], t, &mul).zero());
        CHECK(commutator(g0, M.J[0] + M.Jinv[0], t, &mul).zero());
        for (int i = 1; i < n; ++i) {
            auto g = hecke_image(n, i, 1, S);
            for (int j = 0; j < n; ++j)
                if (j != i - 1 && j != i) CHECK(commutator(g, M.J[j], t, &mul).zero());
            CHECK(commutator(g, multiply(M.J[i - 1], M.J[i], t, &mul), t, &mul).zero());
            CHECK(commutator(g, M.J[i - 1] + M.J[i], t, &mul).zero());
        }
    }
}

TEST_CASE("Z_n is central and acts by alpha on cell modules") {
    for (auto& S : points())
        for (int n = 1; n <= 4; ++n) {
            auto t = scheme_convert(n, S, Scheme::DN);
            Multiplier mul;
            auto Z = z_n(n, S, t, &mul);
            for (auto& g : generators(n)) CHECK(commutator(Z, Element<Rat>::single(g), t, &mul).zero());
            for (auto& L : dn_labels(n)) {
                auto A = cached_module(L).element_matrix(Z, t);
                Rat a = alpha(L, S);
                CHECK(a == alpha_quotient(L, S));
                for (size_t i = 0; i < A.size(); ++i)
                    for (size_t j = 0; j < A.size(); ++j) CHECK(A[i][j] == (i == j ? a : Rat(0)));
            }
        }
}

TEST_CASE("Z_n central with symbolic weights") {
    WeightParams p;
    p.w1 = Rat(1, 3);
    p.w2 = Rat(-2, 5);
    auto S = symbolic_scalars(p);
    for (int n = 1; n <= 3; ++n) {
        auto t = scheme_convert(n, S, Scheme::DN);
        Multiplier mul;
        auto Z = z_n(n, S, t, &mul);
        for (auto& g : generators(n)) CHECK(commutator(Z, Element<RatFn>::single(g), t, &mul).zero());
    }
}

TEST_CASE("alpha edge cases") {
    WeightParams p;
    p.w1 = 1;
    p.w2 = 1;
    auto S = symbolic_scalars(p);
    Label L = Label::dn(3, 2, 1, 1);
    CHECK(alpha(L, S) == S.qint(3) * RatFn(2));
    CHECK_THROWS_AS(alpha_quotient(L, S), ArithmeticError);
    CHECK(same_eigenvalue(L, L, S));

    // [n] = 0 at a root of unity
    auto C = cyclo_scalars(p, 3);
    for (auto& M : dn_labels(3)) CHECK(is_zero(alpha(M, C)));
}

TEST_CASE("equal alpha iff weight coords related by axis reflections") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        WeightParams p;
        p.w1 = frac(long(rng() % 9) * 2 + 1, 5 + 2 * trial);
        p.w2 = frac(-long(rng() % 7) * 2 - 1, 7 + 2 * trial);
        auto S = symbolic_scalars(p);
        for (int n = 1; n <= 8; ++n) {
            auto labels = dn_labels(n);
            for (auto& a : labels)
                for (auto& b : labels) {
                    auto [x1, y1] = weight_coords(a, p.w1, p.w2);
                    auto [x2, y2] = weight_coords(b, p.w1, p.w2);
                    bool refl = (x1 == x2 || x1 == -x2) && (y1 == y2 || y1 == -y2);
                    CHECK(same_eigenvalue(a, b, S) == refl);
                }
        }
    }
}
