// Hecke images, Murphy elements, the central element Z_n and its
// eigenvalues on cell modules.
#pragma once

#include "sbx/cellmod.hpp"
#include "sbx/linalg.hpp"

#include <vector>

namespace sbx {

// pi(g_i^{+-1}) in b^x_n.  i = 0 and i = n use Q1 and Q2.
template <class K>
Element<K> hecke_image(int n, int i, int sign, const Scalars<K>& S) {
    auto gens = generators(n);
    K q = S.q();
    K qi = K(1) / q;
    if (i > 0 && i < n) {
        auto r = Element<K>::single(gens[i]);
        r -= Element<K>::scalar(n, sign > 0 ? qi : q);
        return r;
    }
    K Q = i == 0 ? S.Q1() : S.Q2();
    K Qi = K(1) / Q;
    K Qs = sign > 0 ? Q : Qi;
    K c = sign > 0 ? q * Q - qi * Qi : qi * Qi - q * Q;
    auto r = Element<K>::scalar(n, Qs);
    r -= Element<K>::single(gens[i], c);
    return r;
}

template <class K>
struct Murphy {
    std::vector<Element<K>> J, Jinv;
    Element<K> Z;
};

// Products are taken in b^x_n with the DeltaTuple t (DN row for pi).
template <class K>
Murphy<K> murphy_elements(int n, const Scalars<K>& S, const DeltaTuple<K>& t, Multiplier* mul = nullptr,
                          int guard = 6) {
    if (n > guard) throw ConfigError("murphy: n exceeds guard");
    Multiplier local;
    if (!mul) mul = &local;
    auto g = [&](int i, int s) { return hecke_image(n, i, s, S); };
    auto prod = [&](const Element<K>& a, const Element<K>& b) { return multiply(a, b, t, mul); };
    // J_0 = g_1^-1 .. g_{n-1}^-1 g_n g_{n-1} .. g_1 g_0
    Element<K> J0 = Element<K>::identity(n), J0i = Element<K>::identity(n);
    for (int i = 1; i < n; ++i) J0 = prod(J0, g(i, -1));
    J0 = prod(J0, g(n, 1));
    for (int i = n - 1; i >= 1; --i) J0 = prod(J0, g(i, 1));
    J0 = prod(J0, g(0, 1));
    // inverse: g_0^-1 g_1^-1 .. g_{n-1}^-1 g_n^-1 g_{n-1} .. g_1
    J0i = prod(J0i, g(0, -1));
    for (int i = 1; i < n; ++i) J0i = prod(J0i, g(i, -1));
    J0i = prod(J0i, g(n, -1));
    for (int i = n - 1; i >= 1; --i) J0i = prod(J0i, g(i, 1));
    Murphy<K> M;
    M.J.push_back(J0);
    M.Jinv.push_back(J0i);
    for (int i = 1; i < n; ++i) {
        M.J.push_back(prod(prod(g(i, 1), M.J.back()), g(i, 1)));
        M.Jinv.push_back(prod(prod(g(i, -1), M.Jinv.back()), g(i, -1)));
    }
    M.Z.n = n;
    for (int i = 0; i < n; ++i) {
        M.Z += M.J[i];
        M.Z += M.Jinv[i];
    }
    return M;
}

template <class K>
Element<K> z_n(int n, const Scalars<K>& S, const DeltaTuple<K>& t, Multiplier* mul = nullptr, int guard = 6) {
    return murphy_elements(n, S, t, mul, guard).Z;
}

template <class K>
Element<K> commutator(const Element<K>& a, const Element<K>& b, const DeltaTuple<K>& t, Multiplier* mul = nullptr) {
    return multiply(a, b, t, mul) - multiply(b, a, t, mul);
}

// x = -m + e1 w1 + e2 w2 as a box argument.
inline BoxArg alpha_arg(const Label& L) { return BoxArg(Rat(-L.m), Rat(L.e1), Rat(L.e2)); }

// [n](q^x + q^-x): total.
template <class K>
K alpha_expanded(const Label& L, const Scalars<K>& S) {
    if (L.b) throw ConfigError("alpha needs a DN label");
    long m = L.m;
    K a = S.qpow2(-2 * m, 2 * L.e1, 2 * L.e2, 0);
    return S.qint(L.n) * (a + S.qpow2(2 * m, -2 * L.e1, -2 * L.e2, 0));
}

// [n][2x]/[x]; throws when [x] vanishes.
template <class K>
K alpha_quotient(const Label& L, const Scalars<K>& S) {
    if (L.b) throw ConfigError("alpha needs a DN label");
    BoxArg x = alpha_arg(L);
    K den = S.box(x);
    if (is_zero(den)) throw ArithmeticError("alpha quotient: " + x.str() + " vanishes");
    BoxArg x2(2 * x.c0, 2 * x.c1, 2 * x.c2);
    return S.qint(L.n) * S.box(x2) / den;
}

template <class K>
K alpha(const Label& L, const Scalars<K>& S) {
    return alpha_expanded(L, S);
}

template <class K>
bool same_eigenvalue(const Label& a, const Label& b, const Scalars<K>& S) {
    return a == b || alpha(a, S) == alpha(b, S);
}

}  // namespace sbx
