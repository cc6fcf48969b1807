#include "bifrob/linalg.hpp"

#include <stdexcept>

namespace bifrob {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

Vec Matrix::column(std::size_t j) const {
    Vec out = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Tensor3::Tensor3(const FieldSpec& field, std::size_t d0, std::size_t d1, std::size_t d2)
    : field_(field), d0_(d0), d1_(d1), d2_(d2), entries_(d0 * d1 * d2, Scalar::zero(field)) {}

std::size_t Tensor3::dim(int axis) const {
    switch (axis) {
        case 0: return d0_;
        case 1: return d1_;
        case 2: return d2_;
        default: throw std::invalid_argument("tensor axis out of range");
    }
}

bool Tensor3::operator==(const Tensor3& rhs) const {
    return d0_ == rhs.d0_ && d1_ == rhs.d1_ && d2_ == rhs.d2_ && entries_ == rhs.entries_;
}

Vec zero_vec(const FieldSpec& field, std::size_t n) {
    return Vec(n, Scalar::zero(field));
}

Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t index) {
    Vec v = zero_vec(field, n);
    v.at(index) = Scalar::one(field);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum length mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference length mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x = c * x;
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("dot product length mismatch");
    Scalar acc = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string vec_str(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

std::string matrix_str(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m.at(i, j).str();
        }
    }
    return out + "]";
}

namespace {

// Scale each rational row to integer entries so the Bareiss divisions below
// stay exact. Row scaling by a nonzero constant changes neither the row
// space nor the null space.
void clear_denominators(Matrix& m) {
    if (!m.field().is_rational()) return;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rational().get_den_mpz_t());
        if (l == 1) continue;
        auto factor = Scalar::parse(m.field(), l.get_str());
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= *factor;
    }
}

} // namespace

EchelonForm reduced_echelon(const Matrix& a) {
    Matrix m = a;
    clear_denominators(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    Scalar prev = Scalar::one(m.field());

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t r = pivot_row;
        while (r < rows && m.at(r, col).is_zero()) ++r;
        if (r == rows) continue;
        if (r != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot_row, j), m.at(r, j));
        const Scalar p = m.at(pivot_row, col);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            const Scalar f = m.at(i, col);
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * p - f * m.at(pivot_row, j)) / prev;
        }
        prev = p;
        pivots.push_back(col);
        ++pivot_row;
    }

    // Jordan pass: unit pivots, zeros above.
    for (std::size_t idx = pivots.size(); idx-- > 0;) {
        const std::size_t r = idx, c = pivots[idx];
        const Scalar p = m.at(r, c);
        for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = m.at(r, j) / p;
        for (std::size_t i = 0; i < r; ++i) {
            const Scalar f = m.at(i, c);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
    }
    return EchelonForm{std::move(m), std::move(pivots)};
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    EchelonForm ech = reduced_echelon(aug);
    for (std::size_t c : ech.pivot_cols)
        if (c == a.cols()) return std::nullopt; // pivot in the rhs column
    Vec x = zero_vec(a.field(), a.cols());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
        x[ech.pivot_cols[i]] = ech.rref.at(i, a.cols());
    return x;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
    EchelonForm ech = reduced_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(a.field(), a.cols());
        v[f] = Scalar::one(a.field());
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            v[ech.pivot_cols[i]] = -ech.rref.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& a) {
    return reduced_echelon(a).rank();
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar::one(a.field());
    }
    EchelonForm ech = reduced_echelon(aug);
    if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = ech.rref.at(i, n + j);
    return inv;
}

Scalar trace(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace of non-square matrix");
    Scalar acc = Scalar::zero(a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a.at(i, i);
    return acc;
}

} // namespace bifrob
