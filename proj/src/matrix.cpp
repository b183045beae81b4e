#include "fcalg/matrix.hpp"

#include <algorithm>

namespace fcalg {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field_->zero()) {
    if (rows < 0 || cols < 0) fail(ErrorCode::internal_error, "negative matrix dimension");
}

Matrix Matrix::identity(const FieldPtr& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& field, const std::vector<std::vector<ScalarValue>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            fail(ErrorCode::internal_error, "ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_) fail(ErrorCode::internal_error, "vstack width mismatch");
    Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.a_.begin(), top.a_.end(), m.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), m.a_.begin() + top.a_.size());
    return m;
}

std::vector<ScalarValue> Matrix::row(int r) const {
    return std::vector<ScalarValue>(a_.begin() + static_cast<std::size_t>(r) * cols_,
                                    a_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::internal_error, "shape mismatch in +");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_->add(a_[i], o.a_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::internal_error, "shape mismatch in -");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_->sub(a_[i], o.a_[i]);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(ErrorCode::internal_error, "shape mismatch in *");
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const ScalarValue& v = at(i, k);
            if (field_->is_zero(v)) continue;
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) = field_->add(m.at(i, j), field_->mul(v, o.at(k, j)));
        }
    return m;
}

Matrix Matrix::scaled(const ScalarValue& s) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_->mul(a_[i], s);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!field_->eq(a_[i], o.a_[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (auto& v : a_)
        if (!field_->is_zero(v)) return false;
    return true;
}

std::vector<ScalarValue> Matrix::apply(const std::vector<ScalarValue>& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(ErrorCode::internal_error, "vector length mismatch");
    std::vector<ScalarValue> out(static_cast<std::size_t>(rows_), field_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (field_->is_zero(at(i, j))) continue;
            out[static_cast<std::size_t>(i)] =
                field_->add(out[static_cast<std::size_t>(i)], field_->mul(at(i, j), v[static_cast<std::size_t>(j)]));
        }
    return out;
}

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!field_->is_zero(at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        ScalarValue inv = field_->inv(at(r, c));
        for (int j = c; j < cols_; ++j) at(r, j) = field_->mul(at(r, j), inv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || field_->is_zero(at(i, c))) continue;
            ScalarValue t = at(i, c);
            for (int j = c; j < cols_; ++j)
                at(i, j) = field_->sub(at(i, j), field_->mul(t, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<std::vector<ScalarValue>> Matrix::nullspace() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<ScalarValue>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<ScalarValue> v(static_cast<std::size_t>(cols_), field_->zero());
        v[static_cast<std::size_t>(f)] = field_->one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = field_->neg(m.at(static_cast<int>(i), f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) fail(ErrorCode::internal_error, "inverse of a non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_->one();
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
        return std::nullopt;
    for (int p : pivots)
        if (p >= cols_) return std::nullopt;
    Matrix inv(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

ScalarValue Matrix::det() const {
    if (rows_ != cols_) fail(ErrorCode::internal_error, "determinant of a non-square matrix");
    Matrix m = *this;
    ScalarValue d = field_->one();
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (!field_->is_zero(m.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) return field_->zero();
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = field_->neg(d);
        }
        d = field_->mul(d, m.at(c, c));
        ScalarValue inv = field_->inv(m.at(c, c));
        for (int i = c + 1; i < rows_; ++i) {
            if (field_->is_zero(m.at(i, c))) continue;
            ScalarValue t = field_->mul(m.at(i, c), inv);
            for (int j = c; j < cols_; ++j)
                m.at(i, j) = field_->sub(m.at(i, j), field_->mul(t, m.at(c, j)));
        }
    }
    return d;
}

ScalarValue Matrix::trace() const {
    if (rows_ != cols_) fail(ErrorCode::internal_error, "trace of a non-square matrix");
    ScalarValue t = field_->zero();
    for (int i = 0; i < rows_; ++i) t = field_->add(t, at(i, i));
    return t;
}

Poly Matrix::charpoly() const {
    if (rows_ != cols_) fail(ErrorCode::internal_error, "charpoly of a non-square matrix");
    int n = rows_;
    if (n == 0) return Poly::one(field_);
    Matrix h = *this;

    // similarity reduction to upper Hessenberg form
    for (int c = 0; c + 2 < n; ++c) {
        int p = -1;
        for (int i = c + 1; i < n; ++i)
            if (!field_->is_zero(h.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != c + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.at(p, j), h.at(c + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h.at(i, p), h.at(i, c + 1));
        }
        ScalarValue inv = field_->inv(h.at(c + 1, c));
        for (int r = c + 2; r < n; ++r) {
            if (field_->is_zero(h.at(r, c))) continue;
            ScalarValue t = field_->mul(h.at(r, c), inv);
            for (int j = 0; j < n; ++j)
                h.at(r, j) = field_->sub(h.at(r, j), field_->mul(t, h.at(c + 1, j)));
            for (int i = 0; i < n; ++i)
                h.at(i, c + 1) = field_->add(h.at(i, c + 1), field_->mul(t, h.at(i, r)));
        }
    }

    // p_m(x) = (x - h[m][m]) p_{m-1}(x) - sum_i h[i][m] (prod of subdiagonal) p_{i-1}(x)
    std::vector<Poly> p;
    p.push_back(Poly::one(field_));
    for (int m = 0; m < n; ++m) {
        Poly pm = p.back() * Poly::linear_root(field_, h.at(m, m));
        ScalarValue prod = field_->one();
        for (int i = m - 1; i >= 0; --i) {
            prod = field_->mul(prod, h.at(i + 1, i));
            ScalarValue coeff = field_->mul(h.at(i, m), prod);
            if (!field_->is_zero(coeff))
                pm = pm - p[static_cast<std::size_t>(i)].scaled(coeff);
        }
        p.push_back(std::move(pm));
    }
    return p.back();
}

}  // namespace fcalg
