#include "sbx/gram.hpp"

#include <sstream>

namespace sbx {

std::string BoxProduct::str() const {
    std::ostringstream os;
    os << (sign < 0 ? "-" : "");
    bool first = true;
    for (auto& [a, e] : boxes) {
        if (!first) os << "*";
        first = false;
        os << a.str();
        if (e != 1) os << "^" << e;
    }
    if (first) os << "1";
    return os.str();
}

BoxProduct closed_form_gram(const Label& L) {
    if (L.b || !L.valid()) throw ConfigError("closed form needs a DN label");
    const int n = L.n, m = L.m, e1 = L.e1, e2 = L.e2;
    BoxProduct P;
    long dim = cell_dim(L);
    if (e1 < 0) {
        P.mul(BoxArg(0, 1), dim);   // [w1]
        P.mul(BoxArg(1, 1), -dim);  // [w1+1]
    }
    if (e2 < 0) {
        P.mul(BoxArg(0, 0, 1), dim);
        P.mul(BoxArg(1, 0, 1), -dim);
    }
    for (int k = 0; 2 * k <= n - m - 3; ++k) {
        long d = cell_dim(Label::dn(n, n - 1 - 2 * k, e1, e2));
        Rat c = half(-n + m + 2 * k + 1);
        P.mul(BoxArg(half(n - m - 2 * k - 1)), d);
        P.mul(BoxArg(-c, e1), d);
        P.mul(BoxArg(-c, 0, e2), d);
        P.mul(BoxArg(half(-(n + m - 2 * k - 1)), e1, e2), d);
        P.mul(BoxArg(1, 1), -2 * d);
        P.mul(BoxArg(1, 0, 1), -2 * d);
    }
    return P;
}

namespace {
// r(u) = [u+1]/[u], u = s(w1-h)
void mul_r(BoxProduct& P, int s, int h) {
    P.mul(BoxArg(Rat(-s * h + 1), Rat(s)), 1);
    P.mul(BoxArg(Rat(-s * h), Rat(s)), -1);
}
void mul_k(BoxProduct& P, int s, int h) {
    P.sign = -P.sign;
    P.mul(BoxArg(half(-s * h), half(s), Rat(-1, 2), Rat(1, 2)), 1);
    P.mul(BoxArg(half(-s * h), half(s), Rat(-1, 2), Rat(-1, 2)), 1);
    P.mul(BoxArg(Rat(-s * h), Rat(s)), -1);
    P.mul(BoxArg(1, 0, 1), -1);
}
}  // namespace

BoxProduct path_gram_product(const Label& L) {
    BoxProduct P;
    Path s = start_path(L);
    for (auto& p : enumerate_paths(L.n)) {
        if (!in_window(L, p)) continue;
        for (auto& mv : tile_sequence(s, p)) {
            for (int sg : {1, -1}) {
                if (mv.half()) mul_k(P, sg, mv.h_prev);
                else mul_r(P, sg, mv.h_prev);
            }
        }
    }
    return P;
}

BoxProduct gamma_b(int n) {
    BoxProduct P;
    auto eight = [&](Rat c0, long e) {
        for (int a : {1, -1})
            for (int b : {1, -1})
                for (int c : {1, -1}) P.mul(BoxArg(c0 / 2, half(a), half(b), half(c)), e);
    };
    if (n % 2 == 0) {
        for (int m = 0; m <= (n - 2) / 2; ++m) {
            long ex = 0;
            for (int i = 1; i <= (n - 2 * m) / 2; ++i) ex += binom(n, (n - 2 * m - 2 * i) / 2);
            eight(Rat(1 + 2 * m), ex);
        }
    } else {
        for (int b : {1, -1})
            for (int c : {1, -1}) P.mul(BoxArg(0, Rat(1, 2), half(b), half(c)), 1L << (n - 1));
        for (int m = 1; m <= (n - 1) / 2; ++m) {
            long ex = 0;
            for (int i = 1; i <= (n - 2 * m + 1) / 2; ++i) ex += binom(n, (n - 2 * m - 2 * i + 1) / 2);
            eight(Rat(2 * m), ex);
        }
    }
    return P;
}

}  // namespace sbx
