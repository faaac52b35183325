#pragma once

#include "skw/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace skw {

// Dense row-major matrix of field codes.  Vectors act on the left: the
// image of row vector v is v * A, so row j of an action matrix is the image
// of basis vector j.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    Vec data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Elem* row(std::size_t i) { return data.data() + i * cols; }
    const Elem* row(std::size_t i) const { return data.data() + i * cols; }
    Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && data == o.data; }

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
};

// Compressed sparse rows, built from a dense matrix.
struct Sparse {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> start;
    std::vector<std::uint32_t> col;
    Vec val;

    static Sparse from_dense(const Matrix& A);
    std::size_t nnz() const { return val.size(); }
};

Matrix matmul(const Field& F, const Matrix& A, const Matrix& B);
// A * S with S sparse
Matrix matmul(const Field& F, const Matrix& A, const Sparse& S);
Matrix transpose(const Matrix& A);
// dst += c * src
void add_scaled(const Field& F, Matrix& dst, const Matrix& src, Elem c);
Matrix scaled(const Field& F, const Matrix& A, Elem c);

Vec vecmat(const Field& F, const Vec& v, const Matrix& A);
Vec vecmat(const Field& F, const Vec& v, const Sparse& S);
void vecmat_into(const Field& F, const Elem* v, const Sparse& S, Elem* out);
bool is_zero(const Vec& v);

std::size_t rank(const Field& F, Matrix A);
// Rows v with v * A = 0.
Matrix left_nullspace(const Field& F, const Matrix& A);
// Rows v with A * v^T = 0.
Matrix right_nullspace(const Field& F, const Matrix& A);
std::optional<Matrix> inverse(const Field& F, const Matrix& A);
Elem determinant(const Field& F, Matrix A);
// Some x with x * A = b, if any.
std::optional<Vec> solve_left(const Field& F, const Matrix& A, const Vec& b);

// Semi-echelon basis of a growing subspace.  Each stored row has a leading 1
// at its pivot and zeros at the pivots of earlier rows.
class Echelon {
public:
    Echelon(const Field& F, std::size_t dim) : F_(&F), dim_(dim) {}

    // Reduce v in place against the basis; returns true if something remains.
    bool reduce(Vec& v) const;
    // Insert v if independent (v is consumed); returns whether it grew.
    bool insert(Vec v);
    bool contains(Vec v) const { return !reduce(v); }
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }
    Matrix matrix() const { return Matrix::from_rows(rows_, dim_); }

private:
    const Field* F_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> piv_;
};

} // namespace skw
