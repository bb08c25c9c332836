// Brute-force blocks: Hom spaces between cell modules and the connected
// components of the Hom quiver.
#pragma once

#include "sbx/gram.hpp"
#include "sbx/partition.hpp"

#include <memory>

namespace sbx {

// Action data of one cell module at a specialisation.
template <class K>
struct ModuleRep {
    const CellModule* M = nullptr;
    std::vector<Mat<K>> A;  // A[i] = action of e_i, i = 0..n
    std::vector<K> wp;      // w_p scalars
};

template <class K>
ModuleRep<K> module_rep(const Label& L, const DeltaTuple<K>& t) {
    ModuleRep<K> R;
    R.M = &cached_module(L);
    for (auto& g : generators(L.n)) R.A.push_back(R.M->action_matrix(g, t));
    for (auto& m : R.M->wp_mono) {
        K v = eval_mono(m, t);
        if (is_zero(v)) throw ArithmeticError("oracle: path-basis scalar vanishes in " + L.str());
        R.wp.push_back(v);
    }
    return R;
}

template <class K>
std::vector<K> mat_vec(const Mat<K>& A, const std::vector<K>& v) {
    std::vector<K> r(A.size(), K(0));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!is_zero(A[i][j]) && !is_zero(v[j])) r[i] += A[i][j] * v[j];
    return r;
}

// Incremental row echelon form; stops growing at full column rank.
template <class K>
class Echelon {
public:
    explicit Echelon(int cols) : cols_(cols) {}
    void add(std::vector<K> r) {
        if (full()) return;
        for (size_t k = 0; k < rows_.size(); ++k) {
            int c = piv_[k];
            if (is_zero(r[c])) continue;
            K f = r[c];
            for (int j = c; j < cols_; ++j)
                if (!is_zero(rows_[k][j])) r[j] -= f * rows_[k][j];
        }
        int c = 0;
        while (c < cols_ && is_zero(r[c])) ++c;
        if (c == cols_) return;
        K inv = K(1) / r[c];
        for (int j = c; j < cols_; ++j)
            if (!is_zero(r[j])) r[j] *= inv;
        // keep rows reduced at the new pivot
        for (auto& row : rows_) {
            if (is_zero(row[c])) continue;
            K f = row[c];
            for (int j = c; j < cols_; ++j)
                if (!is_zero(r[j])) row[j] -= f * r[j];
        }
        rows_.push_back(std::move(r));
        piv_.push_back(c);
    }
    bool full() const { return static_cast<int>(rows_.size()) == cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    Mat<K> rows() const { return rows_; }

private:
    int cols_;
    Mat<K> rows_;
    std::vector<int> piv_;
};

// Hom(source, target).  A hom is fixed by v = phi(generator); phi(u_j) is
// then w_p^-1 times the tile word applied to v.  The conditions are
// phi(e_i u_j) = e_i phi(u_j) for all generators and basis elements.
template <class K>
struct HomResult {
    int dim = 0;
    std::vector<std::vector<K>> images;  // basis of generator images v
};

template <class K>
HomResult<K> hom_space(const ModuleRep<K>& src, const ModuleRep<K>& dst) {
    const CellModule& S = *src.M;
    int Na = S.dim(), Nb = dst.M->dim();
    int n = S.n();
    Path s0 = start_path(S.label);
    // W[j] = matrix taking v to phi(u_j)
    std::vector<Mat<K>> W(Na);
    for (int j = 0; j < Na; ++j) {
        Mat<K> P = identity_mat<K>(Nb);
        for (auto& mv : tile_sequence(s0, S.paths[j])) P = matmul(dst.A[mv.pos], P);
        K inv = K(1) / src.wp[j];
        for (auto& row : P)
            for (auto& x : row)
                if (!is_zero(x)) x *= inv;
        W[j] = std::move(P);
    }
    Echelon<K> E(Nb);
    for (int i = 0; i <= n && !E.full(); ++i) {
        const Mat<K>& Aa = src.A[i];
        for (int j = 0; j < Na && !E.full(); ++j) {
            Mat<K> lhs = matmul(dst.A[i], W[j]);
            for (int k = 0; k < Na; ++k)
                if (!is_zero(Aa[k][j]))
                    for (int r = 0; r < Nb; ++r)
                        for (int c = 0; c < Nb; ++c)
                            if (!is_zero(W[k][r][c])) lhs[r][c] -= Aa[k][j] * W[k][r][c];
            for (auto& row : lhs) E.add(row);
        }
    }
    HomResult<K> H;
    H.dim = Nb - E.rank();
    if (H.dim > 0) H.images = nullspace(E.rows(), Nb);
    return H;
}

// Full intertwiner check for a generator image (used in tests).
template <class K>
bool is_intertwiner(const ModuleRep<K>& src, const ModuleRep<K>& dst, const Mat<K>& Phi) {
    for (size_t i = 0; i < src.A.size(); ++i)
        if (matmul(Phi, src.A[i]) != matmul(dst.A[i], Phi)) return false;
    return true;
}

template <class K>
Mat<K> hom_matrix(const ModuleRep<K>& src, const ModuleRep<K>& dst, const std::vector<K>& v) {
    const CellModule& S = *src.M;
    int Na = S.dim(), Nb = dst.M->dim();
    Path s0 = start_path(S.label);
    auto Phi = zero_mat<K>(Nb, Na);
    for (int j = 0; j < Na; ++j) {
        auto w = v;
        for (auto& mv : tile_sequence(s0, S.paths[j])) w = mat_vec(dst.A[mv.pos], w);
        K inv = K(1) / src.wp[j];
        for (int r = 0; r < Nb; ++r) Phi[r][j] = w[r] * inv;
    }
    return Phi;
}

template <class K>
BlockPartition linkage_blocks_at(int n, const std::vector<Label>& labels, const DeltaTuple<K>& t,
                                 const std::string& params) {
    std::vector<ModuleRep<K>> reps;
    for (auto& L : labels) reps.push_back(module_rep(L, t));
    LabelUnion U(labels);
    for (size_t a = 0; a < labels.size(); ++a)
        for (size_t b = 0; b < labels.size(); ++b) {
            if (a == b || U.same(labels[a], labels[b])) continue;
            auto H = hom_space(reps[a], reps[b]);
            if (H.dim > 0) U.unite(labels[a], labels[b], "hom dim " + std::to_string(H.dim));
        }
    return U.partition(n, params);
}

template <class K>
bool gram_rank_full(const Label& L, const DeltaTuple<K>& t) {
    auto G = gram_matrix(cached_module(L), t);
    return rank(G) == static_cast<int>(G.size());
}

struct OracleOptions {
    int guard = 6;
    bool include_b = true;  // when theta is given
    Rat x0a = Rat(7, 5), x0b = Rat(11, 13);  // generic q: two base points
};

// Dispatches on the q mode of p.  Generic q runs two rational points and
// throws if they disagree.
BlockPartition linkage_blocks(int n, const WeightParams& p, const OracleOptions& opt = {});
// Hom dimension at the specialisation of p (generic: the first point).
int hom_dim(const Label& a, const Label& b, const WeightParams& p, const OracleOptions& opt = {});
bool gram_rank_semisimple(int n, const WeightParams& p, const OracleOptions& opt = {});

}  // namespace sbx
