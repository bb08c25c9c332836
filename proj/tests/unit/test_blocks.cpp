#include "doctest.h"
#include "json.hpp"
#include "sbx/blocks.hpp"
#include "sbx/central.hpp"
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

Label L(int n, int m, int e1, int e2) { return Label::dn(n, m, e1, e2); }

BlockPartition expected(int n, const std::vector<std::vector<Label>>& cls) {
    LabelUnion U(dn_labels(n));
    for (auto& c : cls)
        for (size_t i = 1; i < c.size(); ++i) REQUIRE(U.unite(c[0], c[i], "reference"));
    return U.partition(n, "");
}

// every same-class pair has equal alpha
template <class K>
void check_refines(const BlockPartition& P, const Scalars<K>& S) {
    for (auto& c : P.classes)
        for (size_t i = 1; i < c.size(); ++i)
            if (!c[0].b && !c[i].b) CHECK_MESSAGE(same_eigenvalue(c[0], c[i], S), c[0].str() << " " << c[i].str());
}
void check_refines(const BlockPartition& P, const WeightParams& p) {
    int ell = p.spec.ell_or_zero();
    if (ell) check_refines(P, cyclo_scalars(p, ell));
    else check_refines(P, symbolic_scalars(p));
}
}  // namespace

TEST_CASE("reference partitions") {
    SUBCASE("cgl1") {
        auto P = classify(8, wp("1/2", "3/4", 3));
        CHECK(P == expected(8, {{L(8, 7, 1, 1), L(8, 1, 1, 1)},
                                {L(8, 7, -1, 1), L(8, 1, -1, 1)},
                                {L(8, 7, 1, -1), L(8, 1, 1, -1)}}));
    }
    SUBCASE("w1orw2 (i)") {
        auto P = classify(8, wp("1", "3/4"));
        CHECK(P == expected(8, {{L(8, 3, 1, 1), L(8, 1, -1, 1)},
                                {L(8, 5, 1, 1), L(8, 3, -1, 1)},
                                {L(8, 7, 1, 1), L(8, 5, -1, 1)},
                                {L(8, 5, 1, -1), L(8, 3, -1, -1)},
                                {L(8, 7, 1, -1), L(8, 5, -1, -1)}}));
    }
    SUBCASE("w1orw2 (ii)") {
        auto P = classify(9, wp("-1/4", "1"));
        CHECK(P == expected(9, {{L(9, 4, 1, 1), L(9, 2, 1, -1)},
                                {L(9, 6, 1, 1), L(9, 4, 1, -1)},
                                {L(9, 8, 1, 1), L(9, 6, 1, -1)},
                                {L(9, 4, -1, 1), L(9, 2, -1, -1)},
                                {L(9, 6, -1, 1), L(9, 4, -1, -1)},
                                {L(9, 8, -1, 1), L(9, 6, -1, -1)}}));
    }
    SUBCASE("w1+w2 or w1-w2") {
        CHECK(classify(9, wp("1/4", "11/4")) == expected(9, {{L(9, 4, 1, 1), L(9, 2, 1, 1)},
                                                             {L(9, 6, 1, 1), L(9, 0, 1, 1)}}));
        CHECK(classify(8, wp("1/4", "-7/4")) == expected(8, {{L(8, 3, 1, -1), L(8, 1, 1, -1)}}));
    }
    SUBCASE("w1+w2 and w1-w2") {
        CHECK(classify(8, wp("5/2", "-1/2")) == expected(8, {{L(8, 5, 1, -1), L(8, 1, 1, -1)},
                                                             {L(8, 3, 1, 1), L(8, 1, 1, 1)}}));
    }
    SUBCASE("w1 and w2") {
        auto P = classify(13, wp("3", "1"));
        auto E = expected(13, {{L(13, 4, 1, 1), L(13, 2, 1, -1)},
                               {L(13, 6, 1, 1), L(13, 4, 1, -1), L(13, 2, 1, 1)},
                               {L(13, 8, 1, 1), L(13, 6, 1, -1), L(13, 2, -1, 1), L(13, 0, 1, 1)},
                               {L(13, 10, 1, 1), L(13, 8, 1, -1), L(13, 4, -1, 1), L(13, 2, -1, -1)},
                               {L(13, 12, 1, 1), L(13, 10, 1, -1), L(13, 6, -1, 1), L(13, 4, -1, -1)},
                               {L(13, 12, 1, -1), L(13, 8, -1, 1), L(13, 6, -1, -1)},
                               {L(13, 10, -1, 1), L(13, 8, -1, -1)},
                               {L(13, 12, -1, 1), L(13, 10, -1, -1)}});
        CHECK(P == E);
        CHECK(E.classes.size() == 9);
    }
}

TEST_CASE("master equations") {
    Rat w1(1), w2(3, 4);
    auto s = master_solutions(L(6, 3, 1, 1), L(6, 3, 1, 1), w1, w2, 0);
    REQUIRE(!s.empty());
    CHECK(s[0].eq == MasterEq::Trivial);
    s = master_solutions(L(6, 5, 1, 1), L(6, 3, -1, 1), w1, w2, 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0].eq == MasterEq::W1Neg);
    // the impossible equation never holds at l = 0
    for (int n = 2; n <= 8; ++n)
        for (auto& a : dn_labels(n))
            for (auto& b : dn_labels(n))
                for (auto& x : master_solutions(a, b, Rat(3), Rat(1), 0)) CHECK(x.eq != MasterEq::Impossible);
}

TEST_CASE("functors") {
    for (int n = 1; n <= 8; ++n)
        for (auto& A : dn_labels(n)) {
            auto g = functor_map(Functor::G, A);
            REQUIRE(g);
            CHECK(g->valid());
            auto f = functor_map(Functor::F, *g);
            REQUIRE(f);
            CHECK(*f == A);
            auto gp = functor_map(Functor::Gp, A);
            REQUIRE(gp);
            CHECK(gp->valid());
            auto fp = functor_map(Functor::Fp, *gp);
            REQUIRE(fp);
            CHECK(*fp == A);
            if (A.m == n - 1 && A.e1 == 1) CHECK_FALSE(functor_map(Functor::F, A));
            if (A.e1 == 1 && A.e2 == 1) CHECK(*gp == L(n + 1, A.m + 1, 1, -1));
        }
    auto [a, b] = functor_params(Functor::G, Rat(2), Rat(5));
    CHECK(a == -3);
    CHECK(b == 5);
}

TEST_CASE("unsupported loci") {
    CHECK_THROWS_AS(classify(4, wp("0", "1/3")), ConfigError);
    CHECK_THROWS_AS(classify(4, wp("-1", "1/3")), ConfigError);
    CHECK_THROWS_AS(classify(4, wp("1/3", "2", 3)), ConfigError);
    CHECK_NOTHROW(classify(4, wp("1/3", "2")));
}

TEST_CASE("alpha refinement of every partition") {
    std::vector<std::pair<WeightParams, int>> pts = {
        {wp("2/7", "3/11"), 10}, {wp("1/2", "3/4", 3), 10}, {wp("1", "3/4"), 10},  {wp("-1/4", "1"), 10},
        {wp("1/4", "11/4"), 10}, {wp("1/4", "-7/4"), 10},   {wp("5/2", "-1/2"), 10}, {wp("3", "1"), 10},
        {wp("1", "1", 3), 8},    {wp("-2", "1", 5), 8},     {wp("1/4", "3/4", 2), 8}, {wp("1", "3/4", 3), 8}};
    for (auto& [p, nmax] : pts)
        for (int n = 2; n <= nmax; ++n) check_refines(classify(n, p), p);
}

TEST_CASE("localisation consistency") {
    // classify at n refines the F F image of classify at n + 2
    for (auto p : {wp("3", "1"), wp("-2", "1"), wp("2", "-3"), wp("1", "1", 3), wp("-2", "1", 5)})
        for (int n = 2; n <= 7; ++n) {
            auto P = classify(n + 2, p);
            LabelUnion U(dn_labels(n));
            for (auto& c : P.classes) {
                std::vector<Label> img;
                for (auto& A : c) {
                    auto f1 = functor_map(Functor::F, A);
                    if (!f1) continue;
                    auto f2 = functor_map(Functor::F, *f1);
                    if (f2) img.push_back(*f2);
                }
                for (size_t i = 1; i < img.size(); ++i) U.unite(img[0], img[i], "image");
            }
            auto Q = classify(n, p);
            auto I = U.partition(n, "");
            // blocks below sit inside images of blocks above; images may split
            for (auto& c : Q.classes)
                for (size_t i = 1; i < c.size(); ++i) CHECK(I.same_block(c[0], c[i]));
        }
}

TEST_CASE("hom rules against the oracle") {
    OracleOptions opt;
    std::vector<WeightParams> pts = {wp("1", "3/4"), wp("-1/4", "1"), wp("1/4", "11/4"), wp("3", "1"),
                                     wp("1", "1"),   wp("1/2", "3/4", 2), wp("1", "1", 3)};
    int found = 0;
    for (auto& p : pts)
        for (int n = 2; n <= 5; ++n)
            for (auto& e : hom_graph(n, p.w1, p.w2, p.spec.ell_or_zero())) {
                ++found;
                CHECK_MESSAGE(hom_dim(e.src, e.dst, p, opt) >= 1, e.src.str() << " -> " << e.dst.str() << " " << e.rule);
            }
    CHECK(found > 10);
    // nohom pairs at integral positive weights
    int pairs = 0;
    for (auto p : {wp("3", "1"), wp("2", "2"), wp("1", "2")})
        for (int n = 2; n <= 5; ++n)
            for (auto& a : dn_labels(n))
                for (auto& b : dn_labels(n))
                    if (nohom_pair(a, b, p.w1, p.w2)) {
                        ++pairs;
                        CHECK(hom_dim(a, b, p, opt) == 0);
                    }
    CHECK(pairs > 0);
}

TEST_CASE("b^x_n extension") {
    WeightParams p = wp("1/3", "1/5");
    p.theta = Rat(-22, 15);  // -2 + w1 + w2
    auto w = critical_theta(5, p);
    REQUIRE(w);
    CHECK(w->label == L(5, 2, 1, 1));
    auto P = classify_bnx(5, p);
    auto nt = P.nontrivial();
    REQUIRE(nt.size() == 1);
    CHECK(nt[0] == std::vector<Label>{L(5, 2, 1, 1), Label::bmod(5)});
    p.theta = Rat(1, 3);
    CHECK_FALSE(critical_theta(5, p));
    auto Q = classify_bnx(5, p);
    CHECK(Q.nontrivial().empty());
    CHECK(Q.classes.size() == dn_labels(5).size() + 1);
}

TEST_CASE("partition json and plot") {
    auto p = wp("1/2", "3/4", 3);
    auto P = classify(8, p);
    auto j = nlohmann::json::parse(P.json());
    CHECK(j["n"] == 8);
    CHECK(j["classes"].size() == P.classes.size());
    CHECK(j["provenance"].size() == 3);
    CHECK(j["provenance"][0]["pair"].size() == 2);
    auto svg = plot_weights(8, p, P);
    CHECK(svg == plot_weights(8, p, P));
    auto count = [&](const std::string& s, const std::string& k) {
        size_t c = 0;
        for (size_t i = s.find(k); i != std::string::npos; i = s.find(k, i + 1)) ++c;
        return c;
    };
    CHECK(count(svg, "<circle") == dn_labels(8).size());
    CHECK(count(svg, "class=\"block\"") == 3);
    CHECK(count(svg, "</text>") == 4);
    auto S = plot_weights(6, wp("2/7", "3/11"), classify(6, wp("2/7", "3/11")));
    CHECK(count(S, "class=\"block\"") == 0);
}
