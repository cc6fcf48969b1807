#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bifrob/field.hpp"

namespace bifrob {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix transpose() const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool is_identity() const;

    Vec column(std::size_t j) const;
    void set_column(std::size_t j, const Vec& v);

private:
    FieldSpec field_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Dense rank-3 tensor, entry (i,j,k) stored at i*d1*d2 + j*d2 + k.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(const FieldSpec& field, std::size_t d0, std::size_t d1, std::size_t d2);

    std::size_t dim(int axis) const;
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return entries_[(i * d1_ + j) * d2_ + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return entries_[(i * d1_ + j) * d2_ + k];
    }

    bool operator==(const Tensor3& rhs) const;

private:
    FieldSpec field_{};
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> entries_;
};

// --- vector helpers -------------------------------------------------------

Vec zero_vec(const FieldSpec& field, std::size_t n);
Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t index);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
std::string vec_str(const Vec& v);
std::string matrix_str(const Matrix& m);

// --- elimination kernel ---------------------------------------------------

/// Reduced row echelon form plus pivot bookkeeping. Elimination over the
/// rationals first scales rows to integer entries and runs fraction-free
/// (Bareiss) forward steps; prime fields use plain Gauss-Jordan. Pivot
/// selection is the first nonzero entry scanning each column top-down, so
/// results are identical across runs.
struct EchelonForm {
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

EchelonForm reduced_echelon(const Matrix& a);

/// One solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent. Throws std::invalid_argument on a shape mismatch.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Basis of the null space in reduced-echelon normal form: free columns in
/// ascending order, each basis vector has its leading free variable set to 1.
std::vector<Vec> kernel_basis(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Trace of a square matrix. Throws std::invalid_argument when non-square.
Scalar trace(const Matrix& a);

} // namespace bifrob
