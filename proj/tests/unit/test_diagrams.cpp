#include "doctest.h"
#include "sbx/diagrams.hpp"

#include <random>

using namespace sbx;

TEST_CASE("basis counts match cellular dimensions") {
    for (int n = 1; n <= 5; ++n) {
        auto B = enumerate_basis(n);
        long expect = 0;
        for (auto& L : all_labels(n)) expect += cell_dim(L) * cell_dim(L);
        CHECK((long)B.size() == expect);
        long ideal = 0;
        for (auto& d : B) {
            CHECK(is_reduced(d));
            ideal += in_d0_ideal(d);
        }
        CHECK(ideal == (1L << (2 * n)));
    }
    CHECK(enumerate_basis(1).size() == 5);
    CHECK(enumerate_basis(2).size() == 19);
    CHECK(enumerate_basis(4).size() == 335);
}

TEST_CASE("associativity of basis products") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 4; ++n) {
        auto B = enumerate_basis(n);
        for (int t = 0; t < 200; ++t) {
            auto& a = B[rng() % B.size()];
            auto& b = B[rng() % B.size()];
            auto& c = B[rng() % B.size()];
            auto ab = compose(a, b);
            auto l = compose(ab.piece, c);
            auto bc = compose(b, c);
            auto r = compose(a, bc.piece);
            CHECK(l.piece == r.piece);
            CHECK((l.mono * ab.mono) == (r.mono * bc.mono));
        }
    }
}

TEST_CASE("straightening is confluent") {
    std::mt19937_64 pick(3);
    std::vector<std::vector<Piece>> bases;
    for (int n = 1; n <= 4; ++n) bases.push_back(enumerate_basis(n));
    for (int t = 0; t < 200; ++t) {
        int n = 1 + int(pick() % 4);
        auto& B = bases[n - 1];
        auto gens = generators(n);
        std::vector<Piece> stack;
        int len = 2 + int(pick() % 4);
        for (int k = 0; k < len; ++k) stack.push_back(pick() % 2 ? B[pick() % B.size()] : gens[pick() % gens.size()]);
        Composite ref{Mono{}, stack[0]};
        for (size_t k = 1; k < stack.size(); ++k) {
            auto c = compose(ref.piece, stack[k]);
            ref = {ref.mono * c.mono, c.piece};
        }
        for (int order = 0; order < 10; ++order) {
            std::mt19937_64 rng(1000 * t + order);
            auto c = straighten_random(stack, rng);
            CHECK(c.piece == ref.piece);
            CHECK(c.mono == ref.mono);
        }
    }
}
