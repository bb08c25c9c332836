#include "doctest.h"
#include "sbx/cellmod.hpp"

using namespace sbx;

namespace {
Mono mono(std::initializer_list<std::pair<Param, int>> f) {
    Mono m;
    for (auto& [p, e] : f) m.e[p] += e;
    return m;
}
}  // namespace

TEST_CASE("W(5,2,-,-) basis order and monomial Gram matrix") {
    auto M = build_module(Label::dn(5, 2, -1, -1));
    REQUIRE(M.dim() == 6);
    CHECK(M.basis[0].key() == "1-2:L 3-6:L 4-7 5-8:R");
    CHECK(M.basis[1].key() == "1-2 3-6:L 4-7 5-8:R");
    CHECK(M.basis[2].key() == "1-6:L 2-3 4-7 5-8:R");
    CHECK(M.basis[3].key() == "1-6:L 2-7 3-4 5-8:R");
    CHECK(M.basis[4].key() == "1-6:L 2-7 3-8:R 4-5");
    CHECK(M.basis[5].key() == "1-6:L 2-7 3-8:R 4-5:R");
    const Param D = P_D, L = P_DL, R = P_DR, KL = P_KL, KR = P_KR;
    std::optional<Mono> z;
    std::vector<std::vector<std::optional<Mono>>> G = {
        {mono({{L, 2}, {R, 1}, {KL, 1}}), mono({{L, 1}, {R, 1}, {KL, 1}}), mono({{L, 2}, {R, 1}}), z, z, z},
        {mono({{L, 1}, {R, 1}, {KL, 1}}), mono({{L, 1}, {R, 1}, {D, 1}}), mono({{L, 1}, {R, 1}}), z, z, z},
        {mono({{L, 2}, {R, 1}}), mono({{L, 1}, {R, 1}}), mono({{L, 1}, {R, 1}, {D, 1}}), mono({{L, 1}, {R, 1}}), z, z},
        {z, z, mono({{L, 1}, {R, 1}}), mono({{L, 1}, {R, 1}, {D, 1}}), mono({{L, 1}, {R, 1}}), mono({{L, 1}, {R, 2}})},
        {z, z, z, mono({{L, 1}, {R, 1}}), mono({{L, 1}, {R, 1}, {D, 1}}), mono({{L, 1}, {R, 1}, {KR, 1}})},
        {z, z, z, mono({{L, 1}, {R, 2}}), mono({{L, 1}, {R, 1}, {KR, 1}}), mono({{L, 1}, {R, 2}, {KR, 1}})},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            auto g = M.inner(i, j);
            CHECK(g.has_value() == G[i][j].has_value());
            if (g && G[i][j]) CHECK(*g == *G[i][j]);
        }
}

TEST_CASE("module dimensions and contravariance") {
    for (int n = 1; n <= 5; ++n) {
        auto gens = generators(n);
        for (auto& L : all_labels(n)) {
            auto M = build_module(L);
            CHECK(M.dim() == cell_dim(L));
            for (auto& g : gens) {
                Piece sg = flip(g);
                for (int i = 0; i < M.dim(); ++i)
                    for (int j = 0; j < M.dim(); ++j) {
                        // <g u_i, u_j> = <u_i, sigma(g) u_j>
                        auto a = M.act(g, i);
                        auto b = M.act(sg, j);
                        std::optional<Mono> lhs, rhs;
                        if (a) {
                            auto x = M.inner(a->index, j);
                            if (x) lhs = *x * a->mono;
                        }
                        if (b) {
                            auto x = M.inner(i, b->index);
                            if (x) rhs = *x * b->mono;
                        }
                        CHECK(lhs.has_value() == rhs.has_value());
                        if (lhs && rhs) CHECK(*lhs == *rhs);
                    }
            }
        }
    }
}

TEST_CASE("restriction content") {
    CHECK(restriction_content(Label::dn(5, 2, -1, 1), true) == std::vector<int>{-5, -3});
    CHECK(restriction_content(Label::dn(6, 1, 1, -1), false) == std::vector<int>{-6, -4, -2});
}
