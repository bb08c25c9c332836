#include "doctest.h"
#include "sbx/oracle.hpp"

using namespace sbx;

namespace {
WeightParams wp(const char* a, const char* b, int ell = 0) {
    WeightParams p;
    p.w1 = parse_rat(a);
    p.w2 = parse_rat(b);
    if (ell) p.spec = RootSpec::root(ell);
    return p;
}
}  // namespace

TEST_CASE("endomorphisms are scalars at a semisimple point") {
    auto p = wp("2/7", "3/11");
    for (int n = 1; n <= 4; ++n)
        for (auto& a : dn_labels(n))
            for (auto& b : dn_labels(n)) CHECK(hom_dim(a, b, p) == (a == b ? 1 : 0));
    CHECK(gram_rank_semisimple(5, p));
    CHECK(linkage_blocks(5, p).nontrivial().empty());
}

TEST_CASE("hom images are intertwiners") {
    auto p = wp("1", "3/4");
    auto S = point_scalars(p, Rat(7, 5));
    auto t = scheme_convert(5, S, Scheme::DN);
    for (int e : {1, -1})
        for (int m : {4, 2}) {
            Label src = Label::dn(5, m, 1, e), dst = Label::dn(5, m - 2, -1, e);
            if (!dst.valid()) continue;
            auto A = module_rep(src, t), B = module_rep(dst, t);
            auto H = hom_space(A, B);
            CHECK(H.dim >= 1);
            for (auto& v : H.images) CHECK(is_intertwiner(A, B, hom_matrix(A, B, v)));
        }
}

TEST_CASE("two base points agree") {
    auto p = wp("1", "3/4");
    OracleOptions o;
    auto P = linkage_blocks(5, p, o);
    WeightParams a = p, b = p;
    a.spec = RootSpec::point(o.x0a);
    b.spec = RootSpec::point(o.x0b);
    CHECK(linkage_blocks(5, a, o) == P);
    CHECK(linkage_blocks(5, b, o) == P);
    CHECK(P.nontrivial().size() == 2);
}

TEST_CASE("gram rank detects non-semisimple points") {
    CHECK_FALSE(gram_rank_semisimple(5, wp("1", "3/4")));
    CHECK_FALSE(gram_rank_semisimple(7, wp("1/2", "3/4", 3)));
    CHECK(gram_rank_semisimple(1, wp("1/3", "1/5")));
}
