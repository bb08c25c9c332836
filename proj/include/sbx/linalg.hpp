// Dense exact linear algebra over a field K.
#pragma once

#include "sbx/exact.hpp"

#include <vector>

namespace sbx {

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
Mat<K> zero_mat(int r, int c) {
    return Mat<K>(r, std::vector<K>(c, K(0)));
}

template <class K>
Mat<K> identity_mat(int n) {
    auto M = zero_mat<K>(n, n);
    for (int i = 0; i < n; ++i) M[i][i] = K(1);
    return M;
}

template <class K>
Mat<K> matmul(const Mat<K>& A, const Mat<K>& B) {
    int r = static_cast<int>(A.size());
    int m = static_cast<int>(B.size());
    int c = m ? static_cast<int>(B[0].size()) : 0;
    auto C = zero_mat<K>(r, c);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < m; ++k) {
            if (is_zero(A[i][k])) continue;
            for (int j = 0; j < c; ++j)
                if (!is_zero(B[k][j])) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

template <class K>
Mat<K> transpose(const Mat<K>& A) {
    int r = static_cast<int>(A.size());
    int c = r ? static_cast<int>(A[0].size()) : 0;
    auto T = zero_mat<K>(c, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) T[j][i] = A[i][j];
    return T;
}

template <class K>
bool mat_equal(const Mat<K>& A, const Mat<K>& B) {
    return A == B;
}

template <class K>
K determinant(Mat<K> A) {
    int n = static_cast<int>(A.size());
    K det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(A[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return K(0);
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col];
        K inv = K(1) / A[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (is_zero(A[r][col])) continue;
            K f = A[r][col] * inv;
            for (int c = col; c < n; ++c)
                if (!is_zero(A[col][c])) A[r][c] -= f * A[col][c];
        }
    }
    return det;
}

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& A) {
    int rows = static_cast<int>(A.size());
    int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(A[i][c])) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[p], A[r]);
        K inv = K(1) / A[r][c];
        for (int j = c; j < cols; ++j)
            if (!is_zero(A[r][j])) A[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(A[i][c])) continue;
            K f = A[i][c];
            for (int j = c; j < cols; ++j)
                if (!is_zero(A[r][j])) A[i][j] -= f * A[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class K>
int rank(Mat<K> A) {
    return static_cast<int>(rref(A).size());
}

// Basis of the null space {x : A x = 0}.
template <class K>
std::vector<std::vector<K>> nullspace(Mat<K> A, int cols) {
    auto piv = rref(A);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<K>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<K> x(cols, K(0));
        x[f] = K(1);
        for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -A[r][f];
        out.push_back(x);
    }
    return out;
}

}  // namespace sbx
