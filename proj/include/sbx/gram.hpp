// Gram matrices, path bases and Gram determinants.
#pragma once

#include "sbx/cellmod.hpp"
#include "sbx/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace sbx {

// r(u) and k(u) with u = s*(w1 - h), s = +-1.
template <class K>
K r_of(const Scalars<K>& S, int s, int h) {
    BoxArg u(Rat(-s * h), Rat(s));
    K den = S.box(u);
    if (is_zero(den)) throw ArithmeticError("genericity: " + u.str() + " vanishes in r");
    BoxArg u1 = u;
    u1.c0 += 1;
    return S.box(u1) / den;
}

template <class K>
K k_of(const Scalars<K>& S, int s, int h) {
    BoxArg u(Rat(-s * h), Rat(s));
    K den = S.box(u) * S.box(BoxArg(1, 0, 1));
    if (is_zero(den)) throw ArithmeticError("genericity: " + u.str() + " or [w2+1] vanishes in k");
    BoxArg a(half(-s * h), half(s), Rat(-1, 2), Rat(1, 2));
    BoxArg b(half(-s * h), half(s), Rat(-1, 2), Rat(-1, 2));
    return -(S.box(a) * S.box(b)) / den;
}

template <class K>
K f_of(const Scalars<K>& S, int h) {
    return r_of(S, 1, h) * r_of(S, -1, h);
}
template <class K>
K g_of(const Scalars<K>& S, int h) {
    return k_of(S, 1, h) * k_of(S, -1, h);
}

template <class K>
Mat<K> gram_matrix(const CellModule& M, const DeltaTuple<K>& t) {
    int N = M.dim();
    auto G = zero_mat<K>(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            auto m = M.inner(i, j);
            if (m) G[i][j] = G[j][i] = eval_mono(*m, t);
        }
    return G;
}

// Columns: v_p expressed in the half-diagram basis, p in module path order.
// The X operators start from the module generator.
template <class K>
Mat<K> path_change_matrix(const CellModule& M, const DeltaTuple<K>& t, const Scalars<K>& S) {
    int N = M.dim();
    auto gens = generators(M.n());
    auto C = zero_mat<K>(N, N);
    Path s = start_path(M.label);
    std::map<int, Mat<K>> act;
    auto act_of = [&](int i) -> const Mat<K>& {
        auto it = act.find(i);
        if (it == act.end()) it = act.emplace(i, M.action_matrix(gens[i], t)).first;
        return it->second;
    };
    for (int col = 0; col < N; ++col) {
        std::vector<K> v(N, K(0));
        v[0] = K(1);
        for (auto& mv : tile_sequence(s, M.paths[col])) {
            int sg = mv.above ? 1 : -1;
            K c = mv.half() ? k_of(S, sg, mv.h_prev) : r_of(S, sg, mv.h_prev);
            const Mat<K>& A = act_of(mv.pos);
            std::vector<K> w(N, K(0));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    if (!is_zero(A[i][j]) && !is_zero(v[j])) w[i] += A[i][j] * v[j];
            for (int i = 0; i < N; ++i) w[i] -= c * v[i];
            v = std::move(w);
        }
        for (int i = 0; i < N; ++i) C[i][col] = v[i];
    }
    return C;
}

// Eigenvalue recursion relative to the module's start path.
template <class K>
K path_eigenvalue(const Label& L, const Path& p, const Scalars<K>& S) {
    K lam(1);
    for (auto& mv : tile_sequence(start_path(L), p)) lam *= mv.half() ? g_of(S, mv.h_prev) : f_of(S, mv.h_prev);
    return lam;
}

// Box factors with integer exponents times a sign.
struct BoxProduct {
    int sign = 1;
    std::map<BoxArg, long> boxes;
    void mul(BoxArg a, long e) {
        if (e == 0) return;
        int s = a.normalize();
        if (s < 0 && (e % 2 != 0)) sign = -sign;
        auto& x = boxes[a];
        x += e;
        if (x == 0) boxes.erase(a);
    }
    std::string str() const;
    template <class K>
    K eval(const Scalars<K>& S) const {
        K r(sign);
        for (auto& [a, e] : boxes) r *= power(S.box(a), e);
        return r;
    }
};

// Closed-form determinant of a DN cell module (DN normalisation).
BoxProduct closed_form_gram(const Label& L);
// Product of the path-basis eigenvalues for a DN label (eigenvalue list
// relative to the start path), as boxes.
BoxProduct path_gram_product(const Label& L);
// Determinant of W^n(b) in the path basis, without the unit prefactor.
BoxProduct gamma_b(int n);

}  // namespace sbx
