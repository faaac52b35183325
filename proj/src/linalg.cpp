#include "skw/linalg.hpp"

#include "skw/error.hpp"
#include "skw/kernels.hpp"

#include <algorithm>

namespace skw {

bool Matrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::identity(std::size_t n) {
    Matrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix M(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), M.row(i));
    return M;
}

Sparse Sparse::from_dense(const Matrix& A) {
    Sparse S;
    S.rows = A.rows;
    S.cols = A.cols;
    S.start.reserve(A.rows + 1);
    S.start.push_back(0);
    for (std::size_t i = 0; i < A.rows; ++i) {
        const Elem* r = A.row(i);
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (r[j]) {
                S.col.push_back(static_cast<std::uint32_t>(j));
                S.val.push_back(r[j]);
            }
        }
        S.start.push_back(static_cast<std::uint32_t>(S.val.size()));
    }
    return S;
}

Matrix matmul(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw UsageError("matmul: shape mismatch");
    Matrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        const Elem* a = A.row(i);
        Elem* c = C.row(i);
        for (std::size_t k = 0; k < A.cols; ++k)
            if (a[k]) kern::axpy(F, c, B.row(k), a[k], B.cols);
    }
    return C;
}

Matrix matmul(const Field& F, const Matrix& A, const Sparse& S) {
    if (A.cols != S.rows) throw UsageError("matmul: shape mismatch");
    Matrix C(A.rows, S.cols);
    for (std::size_t i = 0; i < A.rows; ++i) vecmat_into(F, A.row(i), S, C.row(i));
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

void add_scaled(const Field& F, Matrix& dst, const Matrix& src, Elem c) {
    if (dst.rows != src.rows || dst.cols != src.cols) throw UsageError("add_scaled: shape mismatch");
    kern::axpy(F, dst.data.data(), src.data.data(), c, dst.data.size());
}

Matrix scaled(const Field& F, const Matrix& A, Elem c) {
    Matrix B = A;
    kern::scale(F, B.data.data(), c, B.data.size());
    return B;
}

Vec vecmat(const Field& F, const Vec& v, const Matrix& A) {
    Vec out(A.cols, 0);
    for (std::size_t k = 0; k < A.rows; ++k)
        if (v[k]) kern::axpy(F, out.data(), A.row(k), v[k], A.cols);
    return out;
}

void vecmat_into(const Field& F, const Elem* v, const Sparse& S, Elem* out) {
    for (std::size_t k = 0; k < S.rows; ++k) {
        Elem c = v[k];
        if (!c) continue;
        for (std::uint32_t t = S.start[k]; t < S.start[k + 1]; ++t)
            out[S.col[t]] = F.add(out[S.col[t]], F.mul(c, S.val[t]));
    }
}

Vec vecmat(const Field& F, const Vec& v, const Sparse& S) {
    Vec out(S.cols, 0);
    vecmat_into(F, v.data(), S, out.data());
    return out;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

bool Echelon::reduce(Vec& v) const {
    const Field& F = *F_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Elem c = v[piv_[r]];
        if (c) {
            std::size_t p = piv_[r];
            kern::axpy(F, v.data() + p, rows_[r].data() + p, F.neg(c), dim_ - p);
        }
    }
    return !is_zero(v);
}

bool Echelon::insert(Vec v) {
    if (!reduce(v)) return false;
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    kern::scale(*F_, v.data() + p, F_->inv(v[p]), dim_ - p);
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

std::size_t rank(const Field& F, Matrix A) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::size_t piv = r;
        while (piv < A.rows && A.at(piv, c) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != r) std::swap_ranges(A.row(piv), A.row(piv) + A.cols, A.row(r));
        Elem inv = F.inv(A.at(r, c));
        kern::scale(F, A.row(r) + c, inv, A.cols - c);
        for (std::size_t i = r + 1; i < A.rows; ++i) {
            Elem f = A.at(i, c);
            if (f) kern::axpy(F, A.row(i) + c, A.row(r) + c, F.neg(f), A.cols - c);
        }
        ++r;
    }
    return r;
}

Matrix left_nullspace(const Field& F, const Matrix& A) {
    // Reduce the rows of [A | I]; rows whose A-part vanishes give null vectors.
    const std::size_t n = A.rows, m = A.cols, w = m + n;
    Matrix W(n, w);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(A.row(i), A.row(i) + m, W.row(i));
        W.at(i, m + i) = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && W.at(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != r) std::swap_ranges(W.row(piv), W.row(piv) + w, W.row(r));
        Elem inv = F.inv(W.at(r, c));
        kern::scale(F, W.row(r) + c, inv, w - c);
        for (std::size_t i = r + 1; i < n; ++i) {
            Elem f = W.at(i, c);
            if (f) kern::axpy(F, W.row(i) + c, W.row(r) + c, F.neg(f), w - c);
        }
        ++r;
    }
    Matrix N(n - r, n);
    for (std::size_t i = r; i < n; ++i) std::copy(W.row(i) + m, W.row(i) + w, N.row(i - r));
    return N;
}

Matrix right_nullspace(const Field& F, const Matrix& A) {
    return left_nullspace(F, transpose(A));
}

std::optional<Matrix> inverse(const Field& F, const Matrix& A) {
    if (A.rows != A.cols) throw UsageError("inverse: not square");
    const std::size_t n = A.rows, w = 2 * n;
    Matrix W(n, w);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(A.row(i), A.row(i) + n, W.row(i));
        W.at(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && W.at(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) std::swap_ranges(W.row(piv), W.row(piv) + w, W.row(c));
        kern::scale(F, W.row(c), F.inv(W.at(c, c)), w);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            Elem f = W.at(i, c);
            if (f) kern::axpy(F, W.row(i), W.row(c), F.neg(f), w);
        }
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) std::copy(W.row(i) + n, W.row(i) + w, inv.row(i));
    return inv;
}

Elem determinant(const Field& F, Matrix A) {
    if (A.rows != A.cols) throw UsageError("determinant: not square");
    const std::size_t n = A.rows;
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && A.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap_ranges(A.row(piv), A.row(piv) + n, A.row(c));
            det = F.neg(det);
        }
        Elem d = A.at(c, c);
        det = F.mul(det, d);
        Elem inv = F.inv(d);
        for (std::size_t i = c + 1; i < n; ++i) {
            Elem f = A.at(i, c);
            if (f) kern::axpy(F, A.row(i) + c, A.row(c) + c, F.neg(F.mul(f, inv)), n - c);
        }
    }
    return det;
}

std::optional<Vec> solve_left(const Field& F, const Matrix& A, const Vec& b) {
    // x * A = b  <=>  A^T x^T = b^T; eliminate on [A^T | b^T].
    const std::size_t n = A.rows, m = A.cols;
    Matrix W(m, n + 1);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) W.at(j, i) = A.at(i, j);
        W.at(j, n) = b[j];
    }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && W.at(piv, c) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r) std::swap_ranges(W.row(piv), W.row(piv) + n + 1, W.row(r));
        kern::scale(F, W.row(r), F.inv(W.at(r, c)), n + 1);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            Elem f = W.at(i, c);
            if (f) kern::axpy(F, W.row(i), W.row(r), F.neg(f), n + 1);
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (W.at(i, n)) return std::nullopt;
    Vec x(n, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = W.at(i, n);
    return x;
}

} // namespace skw
