#ifndef FCALG_MATRIX_HPP
#define FCALG_MATRIX_HPP

#include <optional>
#include <vector>

#include "fcalg/field.hpp"
#include "fcalg/poly.hpp"

namespace fcalg {

/// Dense exact matrix over a FieldSpec, row major.
class Matrix {
  public:
    Matrix(FieldPtr field, int rows, int cols);
    static Matrix identity(const FieldPtr& field, int n);
    static Matrix from_rows(const FieldPtr& field, const std::vector<std::vector<ScalarValue>>& rows);
    /// Stack a list of row vectors of equal length.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ScalarValue& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const ScalarValue& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::vector<ScalarValue> row(int r) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const ScalarValue& s) const;
    Matrix transposed() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    std::vector<ScalarValue> apply(const std::vector<ScalarValue>& v) const;  // this * v

    /// In-place reduced row echelon form; returns the pivot columns.
    /// The result is the canonical basis of the row space.
    std::vector<int> rref();
    int rank() const;
    /// Canonical kernel basis: one vector per free column of the RREF,
    /// ordered by that column, each with a 1 in its free position.
    std::vector<std::vector<ScalarValue>> nullspace() const;
    std::optional<Matrix> inverse() const;
    ScalarValue det() const;
    ScalarValue trace() const;

    /// Monic characteristic polynomial det(xI - A) via Hessenberg reduction.
    Poly charpoly() const;

  private:
    FieldPtr field_;
    int rows_;
    int cols_;
    std::vector<ScalarValue> a_;
};

}  // namespace fcalg

#endif
