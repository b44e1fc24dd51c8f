// Exact fraction-free linear algebra over Scalar entries.
#pragma once

#include <optional>
#include <vector>

#include "wbr/scalar.hpp"

namespace wbr {

class Matrix {
public:
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    static Matrix identity(size_t n);
    /// Stack a below b... (all with the same column count).
    static Matrix vstack(const std::vector<Matrix>& blocks);

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Exact determinant by Bareiss fraction-free elimination. Throws NotSquare.
Scalar determinant(const Matrix& m);

size_t rank(const Matrix& m);

/// Exact basis of {v : Mv = 0}. Pivots are chosen as the first nonzero entry
/// in column order; basis vectors are cleared of denominators and content so
/// polynomial inputs give primitive polynomial vectors.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Solves Mx = b exactly; std::nullopt when the system is inconsistent.
/// Requires the columns of M to be linearly independent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Scales a vector so that entries are primitive polynomials (or coprime
/// integers) with the first nonzero entry having positive leading sign.
void normalize_vector(std::vector<Scalar>& v);

} // namespace wbr
