#include "fcalg/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "fcalg/fast.hpp"

namespace fcalg {

// --- AlgElement --------------------------------------------------------------

AlgElement::AlgElement(AlgebraPtr algebra, std::vector<ScalarValue> coords)
    : alg_(std::move(algebra)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != alg_->dim())
        fail(ErrorCode::invalid_algebra, "coordinate length " + std::to_string(c_.size()) +
                                             " does not match dimension " + std::to_string(alg_->dim()));
}

void AlgElement::check_same(const AlgElement& o) const {
    if (alg_.get() != o.alg_.get())
        fail(ErrorCode::algebra_mismatch,
             "elements of " + alg_->name() + " and " + o.alg_->name() + " combined");
}

bool AlgElement::is_zero() const {
    const FieldPtr& F = alg_->field();
    for (auto& v : c_)
        if (!F->is_zero(v)) return false;
    return true;
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    check_same(o);
    const FieldPtr& F = alg_->field();
    std::vector<ScalarValue> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->add(r[i], o.c_[i]);
    return AlgElement(alg_, std::move(r));
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    check_same(o);
    const FieldPtr& F = alg_->field();
    std::vector<ScalarValue> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->sub(r[i], o.c_[i]);
    return AlgElement(alg_, std::move(r));
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    check_same(o);
    return AlgElement(alg_, alg_->multiply_coords(c_, o.c_));
}

AlgElement AlgElement::operator-() const {
    const FieldPtr& F = alg_->field();
    std::vector<ScalarValue> r(c_);
    for (auto& v : r) v = F->neg(v);
    return AlgElement(alg_, std::move(r));
}

AlgElement AlgElement::scaled(const ScalarValue& s) const {
    const FieldPtr& F = alg_->field();
    std::vector<ScalarValue> r(c_);
    for (auto& v : r) v = F->mul(v, s);
    return AlgElement(alg_, std::move(r));
}

bool AlgElement::operator==(const AlgElement& o) const {
    check_same(o);
    const FieldPtr& F = alg_->field();
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!F->eq(c_[i], o.c_[i])) return false;
    return true;
}

AlgElement AlgElement::pow(std::int64_t e) const {
    AlgElement base = e < 0 ? invert(*this) : *this;
    std::uint64_t exp = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    AlgElement result = alg_->one();
    while (exp > 0) {
        if (exp & 1) result = result * base;
        exp >>= 1;
        if (exp) base = base * base;
    }
    return result;
}

std::string AlgElement::str() const {
    const FieldPtr& F = alg_->field();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (F->is_zero(c_[i])) continue;
        if (!first) os << " + ";
        if (F->is_one(c_[i]))
            os << alg_->basis_names()[i];
        else
            os << F->str(c_[i]) << "*" << alg_->basis_names()[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// --- Subspace ----------------------------------------------------------------

Subspace Subspace::span(AlgebraPtr algebra, const std::vector<std::vector<ScalarValue>>& vectors) {
    Matrix m = Matrix::from_rows(algebra->field(), vectors);
    if (m.rows() == 0) m = Matrix(algebra->field(), 0, algebra->dim());
    if (m.cols() != algebra->dim() && m.rows() > 0)
        fail(ErrorCode::invalid_algebra, "span vector length mismatch");
    std::vector<int> pivots = m.rref();
    Matrix basis(algebra->field(), static_cast<int>(pivots.size()), algebra->dim());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < basis.cols(); ++j) basis.at(i, j) = m.at(i, j);
    return Subspace(std::move(algebra), std::move(basis));
}

Subspace Subspace::span_elements(const std::vector<AlgElement>& elements, AlgebraPtr algebra) {
    std::vector<std::vector<ScalarValue>> rows;
    rows.reserve(elements.size());
    for (auto& e : elements) {
        if (e.algebra().get() != algebra.get()) fail(ErrorCode::algebra_mismatch, "span across algebras");
        rows.push_back(e.coords());
    }
    return span(std::move(algebra), rows);
}

Subspace Subspace::zero(AlgebraPtr algebra) {
    Matrix basis(algebra->field(), 0, algebra->dim());
    return Subspace(std::move(algebra), std::move(basis));
}

Subspace Subspace::full(AlgebraPtr algebra) {
    Matrix basis = Matrix::identity(algebra->field(), algebra->dim());
    return Subspace(std::move(algebra), std::move(basis));
}

std::vector<AlgElement> Subspace::basis_elements() const {
    std::vector<AlgElement> out;
    out.reserve(static_cast<std::size_t>(basis_.rows()));
    for (int i = 0; i < basis_.rows(); ++i) out.emplace_back(alg_, basis_.row(i));
    return out;
}

bool Subspace::contains_vector(const std::vector<ScalarValue>& v) const {
    const FieldPtr& F = alg_->field();
    std::vector<ScalarValue> w(v);
    // eliminate with the RREF rows; leading columns are pivots
    int col = 0;
    for (int r = 0; r < basis_.rows(); ++r) {
        while (col < basis_.cols() && !F->is_one(basis_.at(r, col))) ++col;
        if (col >= basis_.cols()) break;
        ScalarValue c = w[static_cast<std::size_t>(col)];
        if (!F->is_zero(c)) {
            for (int j = 0; j < basis_.cols(); ++j)
                w[static_cast<std::size_t>(j)] = F->sub(w[static_cast<std::size_t>(j)], F->mul(c, basis_.at(r, j)));
        }
        ++col;
    }
    for (auto& x : w)
        if (!F->is_zero(x)) return false;
    return true;
}

bool Subspace::contains(const AlgElement& x) const {
    if (x.algebra().get() != alg_.get()) fail(ErrorCode::algebra_mismatch, "containment across algebras");
    return contains_vector(x.coords());
}

bool Subspace::operator==(const Subspace& o) const {
    return alg_.get() == o.alg_.get() && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    if (a.alg_.get() != b.alg_.get()) fail(ErrorCode::algebra_mismatch, "sum across algebras");
    std::vector<std::vector<ScalarValue>> rows;
    for (int i = 0; i < a.basis_.rows(); ++i) rows.push_back(a.basis_.row(i));
    for (int i = 0; i < b.basis_.rows(); ++i) rows.push_back(b.basis_.row(i));
    return span(a.alg_, rows);
}

std::optional<std::vector<ScalarValue>> Subspace::coordinates_of(const AlgElement& x) const {
    if (x.algebra().get() != alg_.get()) fail(ErrorCode::algebra_mismatch, "coordinates across algebras");
    const FieldPtr& F = alg_->field();
    // pivot columns determine the coefficients directly (basis is RREF)
    std::vector<ScalarValue> w(x.coords());
    std::vector<ScalarValue> coeffs;
    int col = 0;
    for (int r = 0; r < basis_.rows(); ++r) {
        while (col < basis_.cols() && !F->is_one(basis_.at(r, col))) ++col;
        if (col >= basis_.cols()) break;
        ScalarValue c = w[static_cast<std::size_t>(col)];
        coeffs.push_back(c);
        if (!F->is_zero(c))
            for (int j = 0; j < basis_.cols(); ++j)
                w[static_cast<std::size_t>(j)] = F->sub(w[static_cast<std::size_t>(j)], F->mul(c, basis_.at(r, j)));
        ++col;
    }
    for (auto& v : w)
        if (!F->is_zero(v)) return std::nullopt;
    coeffs.resize(static_cast<std::size_t>(basis_.rows()), F->zero());
    return coeffs;
}

// --- Algebra -----------------------------------------------------------------

AlgebraPtr Algebra::create(FieldPtr field, std::vector<std::string> basis_names,
                           std::vector<std::vector<std::vector<ScalarValue>>> structure,
                           std::vector<ScalarValue> unity, std::string name, bool trusted,
                           AlgebraOrigin origin) {
    int n = static_cast<int>(structure.size());
    if (n < 1) fail(ErrorCode::invalid_algebra, "dimension must be at least 1");
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->field_ = std::move(field);
    a->n_ = n;
    a->name_ = std::move(name);
    if (basis_names.empty()) {
        for (int i = 0; i < n; ++i) basis_names.push_back("b" + std::to_string(i));
    }
    if (static_cast<int>(basis_names.size()) != n)
        fail(ErrorCode::invalid_algebra, "expected " + std::to_string(n) + " basis labels");
    a->basis_names_ = std::move(basis_names);
    a->sc_.reserve(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(structure[static_cast<std::size_t>(i)].size()) != n)
            fail(ErrorCode::invalid_algebra, "structure constant row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            auto& v = structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (static_cast<int>(v.size()) != n)
                fail(ErrorCode::invalid_algebra,
                     "product coordinates at (" + std::to_string(i) + "," + std::to_string(j) + ") have wrong length");
            for (auto& s : v) a->sc_.push_back(std::move(s));
        }
    }
    if (static_cast<int>(unity.size()) != n)
        fail(ErrorCode::invalid_algebra, "unity coordinate length mismatch");
    a->one_ = std::move(unity);
    a->origin_ = std::move(origin);
    if (!trusted) {
        a->validate_unity();
        a->validate_associativity();
    }
    return a;
}

void Algebra::validate_unity() const {
    for (int i = 0; i < n_; ++i) {
        std::vector<ScalarValue> basis_vec(static_cast<std::size_t>(n_), field_->zero());
        basis_vec[static_cast<std::size_t>(i)] = field_->one();
        auto left = multiply_coords(one_, basis_vec);
        auto right = multiply_coords(basis_vec, one_);
        for (int k = 0; k < n_; ++k) {
            const ScalarValue& expect = basis_vec[static_cast<std::size_t>(k)];
            if (!field_->eq(left[static_cast<std::size_t>(k)], expect) ||
                !field_->eq(right[static_cast<std::size_t>(k)], expect))
                fail(ErrorCode::invalid_algebra,
                     "declared unity fails on basis element " + std::to_string(i));
        }
    }
}

void Algebra::validate_associativity() const {
    // (b_i b_j) b_k vs b_i (b_j b_k), expanded through the structure constants
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const ScalarValue* ij = product_coords(i, j);
            for (int k = 0; k < n_; ++k) {
                std::vector<ScalarValue> lhs(static_cast<std::size_t>(n_), field_->zero());
                for (int l = 0; l < n_; ++l) {
                    if (field_->is_zero(ij[l])) continue;
                    const ScalarValue* lk = product_coords(l, k);
                    for (int m = 0; m < n_; ++m)
                        lhs[static_cast<std::size_t>(m)] =
                            field_->add(lhs[static_cast<std::size_t>(m)], field_->mul(ij[l], lk[m]));
                }
                const ScalarValue* jk = product_coords(j, k);
                std::vector<ScalarValue> rhs(static_cast<std::size_t>(n_), field_->zero());
                for (int l = 0; l < n_; ++l) {
                    if (field_->is_zero(jk[l])) continue;
                    const ScalarValue* il = product_coords(i, l);
                    for (int m = 0; m < n_; ++m)
                        rhs[static_cast<std::size_t>(m)] =
                            field_->add(rhs[static_cast<std::size_t>(m)], field_->mul(jk[l], il[m]));
                }
                for (int m = 0; m < n_; ++m)
                    if (!field_->eq(lhs[static_cast<std::size_t>(m)], rhs[static_cast<std::size_t>(m)]))
                        fail(ErrorCode::invalid_algebra,
                             "associativity fails on basis triple (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
}

std::optional<std::uint64_t> Algebra::element_count() const {
    auto q = field_->order();
    if (!q) return std::nullopt;
    std::uint64_t total = 1;
    for (int i = 0; i < n_; ++i) {
        if (total > (std::uint64_t(1) << 62) / *q) return std::nullopt;
        total *= *q;
    }
    return total;
}

AlgElement Algebra::element(std::vector<ScalarValue> coords) const {
    return AlgElement(shared_from_this(), std::move(coords));
}

AlgElement Algebra::zero() const {
    return element(std::vector<ScalarValue>(static_cast<std::size_t>(n_), field_->zero()));
}

AlgElement Algebra::one() const {
    return element(std::vector<ScalarValue>(one_));
}

AlgElement Algebra::basis_element(int i) const {
    if (i < 0 || i >= n_) fail(ErrorCode::invalid_algebra, "basis index out of range");
    std::vector<ScalarValue> c(static_cast<std::size_t>(n_), field_->zero());
    c[static_cast<std::size_t>(i)] = field_->one();
    return element(std::move(c));
}

AlgElement Algebra::from_integer(std::int64_t v) const {
    std::vector<ScalarValue> c(one_);
    ScalarValue s = field_->from_integer(v);
    for (auto& x : c) x = field_->mul(x, s);
    return element(std::move(c));
}

std::vector<ScalarValue> Algebra::multiply_coords(const std::vector<ScalarValue>& x,
                                                  const std::vector<ScalarValue>& y) const {
    std::vector<ScalarValue> out(static_cast<std::size_t>(n_), field_->zero());
    for (int i = 0; i < n_; ++i) {
        if (field_->is_zero(x[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j < n_; ++j) {
            if (field_->is_zero(y[static_cast<std::size_t>(j)])) continue;
            ScalarValue xy = field_->mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
            const ScalarValue* c = product_coords(i, j);
            for (int k = 0; k < n_; ++k) {
                if (field_->is_zero(c[k])) continue;
                out[static_cast<std::size_t>(k)] =
                    field_->add(out[static_cast<std::size_t>(k)], field_->mul(xy, c[k]));
            }
        }
    }
    return out;
}

Matrix Algebra::left_mult_matrix(const std::vector<ScalarValue>& x) const {
    Matrix m(field_, n_, n_);
    for (int j = 0; j < n_; ++j) {
        // column j = x * b_j
        for (int i = 0; i < n_; ++i) {
            if (field_->is_zero(x[static_cast<std::size_t>(i)])) continue;
            const ScalarValue* c = product_coords(i, j);
            for (int k = 0; k < n_; ++k) {
                if (field_->is_zero(c[k])) continue;
                m.at(k, j) = field_->add(m.at(k, j), field_->mul(x[static_cast<std::size_t>(i)], c[k]));
            }
        }
    }
    return m;
}

Matrix Algebra::right_mult_matrix(const std::vector<ScalarValue>& x) const {
    Matrix m(field_, n_, n_);
    for (int j = 0; j < n_; ++j) {
        // column j = b_j * x
        for (int i = 0; i < n_; ++i) {
            if (field_->is_zero(x[static_cast<std::size_t>(i)])) continue;
            const ScalarValue* c = product_coords(j, i);
            for (int k = 0; k < n_; ++k) {
                if (field_->is_zero(c[k])) continue;
                m.at(k, j) = field_->add(m.at(k, j), field_->mul(x[static_cast<std::size_t>(i)], c[k]));
            }
        }
    }
    return m;
}

// --- operations --------------------------------------------------------------

AlgElement multiply(const AlgElement& a, const AlgElement& b) { return a * b; }

AlgElement lie_commutator(const AlgElement& x, const AlgElement& y) { return x * y - y * x; }

std::optional<AlgElement> try_invert(const AlgElement& u) {
    const AlgebraPtr& A = u.algebra();
    Matrix L = A->left_mult_matrix(u.coords());
    // solve L v = one by augmenting; left inverse is two-sided in finite dimension
    Matrix aug(A->field(), A->dim(), A->dim() + 1);
    for (int i = 0; i < A->dim(); ++i) {
        for (int j = 0; j < A->dim(); ++j) aug.at(i, j) = L.at(i, j);
        aug.at(i, A->dim()) = A->one().coord(i);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != A->dim()) return std::nullopt;
    for (int p : pivots)
        if (p >= A->dim()) return std::nullopt;
    std::vector<ScalarValue> v;
    v.reserve(static_cast<std::size_t>(A->dim()));
    for (int i = 0; i < A->dim(); ++i) v.push_back(aug.at(i, A->dim()));
    AlgElement inv = A->element(std::move(v));
    if (!((u * inv) == A->one()) || !((inv * u) == A->one()))
        fail(ErrorCode::internal_error, "inverse verification failed");
    return inv;
}

AlgElement invert(const AlgElement& u) {
    auto v = try_invert(u);
    if (!v) fail(ErrorCode::not_a_unit, u.str() + " is not a unit");
    return *v;
}

Subspace centralizer(const std::vector<AlgElement>& sample) {
    if (sample.empty()) fail(ErrorCode::invalid_algebra, "centralizer of an empty set");
    const AlgebraPtr& A = sample.front().algebra();
    int n = A->dim();
    Matrix stacked(A->field(), 0, n);
    for (auto& s : sample) {
        if (s.algebra().get() != A.get()) fail(ErrorCode::algebra_mismatch, "centralizer across algebras");
        Matrix d = A->left_mult_matrix(s.coords()) - A->right_mult_matrix(s.coords());
        // rows of d, as conditions on x: (L_s - R_s) x = 0 means [s, x] = 0... note
        // [x, s] = 0 iff (L_s - R_s) applied to x is zero, since L_s x = s*x and R_s x = x*s
        stacked = Matrix::vstack(stacked, d);
    }
    auto kernel = stacked.nullspace();
    return Subspace::span(A, kernel);
}

Subspace center(const AlgebraPtr& algebra) {
    std::vector<AlgElement> basis;
    for (int i = 0; i < algebra->dim(); ++i) basis.push_back(algebra->basis_element(i));
    return centralizer(basis);
}

Subspace left_annihilator(const AlgElement& z) {
    const AlgebraPtr& A = z.algebra();
    // x*z = R_z x
    Matrix R = A->right_mult_matrix(z.coords());
    return Subspace::span(A, R.nullspace());
}

namespace {

// trace of the left-regular representation per basis element:
// tr(L_{b_i}) = sum_k c[i][k][k]
std::vector<ScalarValue> regular_traces(const AlgebraPtr& A) {
    const FieldPtr& F = A->field();
    std::vector<ScalarValue> tau(static_cast<std::size_t>(A->dim()), F->zero());
    for (int i = 0; i < A->dim(); ++i)
        for (int k = 0; k < A->dim(); ++k)
            tau[static_cast<std::size_t>(i)] =
                F->add(tau[static_cast<std::size_t>(i)], A->product_coords(i, k)[k]);
    return tau;
}

Subspace radical_char0(const AlgebraPtr& A) {
    const FieldPtr& F = A->field();
    int n = A->dim();
    std::vector<ScalarValue> tau = regular_traces(A);
    Matrix gram(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const ScalarValue* c = A->product_coords(i, j);
            ScalarValue g = F->zero();
            for (int l = 0; l < n; ++l) {
                if (F->is_zero(c[l])) continue;
                g = F->add(g, F->mul(c[l], tau[static_cast<std::size_t>(l)]));
            }
            gram.at(i, j) = g;
        }
    return Subspace::span(A, gram.nullspace());
}

// prime-restricted copy of a finite-field algebra: basis b_i t^j over GF(p)
struct RestrictedAlgebra {
    FieldPtr fp;                     // GF(p)
    int N;                           // n * k
    std::vector<std::int64_t> sc;    // structure constants as residues, [(a*N+b)*N+c]
};

RestrictedAlgebra restrict_scalars(const AlgebraPtr& A) {
    const FieldPtr& F = A->field();
    std::int64_t p = F->characteristic();
    int k = F->degree();
    int n = A->dim();
    RestrictedAlgebra R;
    R.fp = k == 1 ? F : FieldSpec::prime(p);
    R.N = n * k;
    R.sc.assign(static_cast<std::size_t>(R.N) * R.N * R.N, 0);
    // powers of the field generator t up to t^(2k-2)
    std::vector<ScalarValue> tpow;
    tpow.push_back(F->one());
    if (k > 1) {
        ScalarValue t = F->element_at(static_cast<std::uint64_t>(p));  // the generator [0,1,0,...]
        for (int m = 1; m <= 2 * (k - 1); ++m) tpow.push_back(F->mul(tpow.back(), t));
    }
    auto coeff_of = [&](const ScalarValue& s, int j) -> std::int64_t {
        if (k == 1) return std::get<std::int64_t>(s);
        return std::get<GFCoeffs>(s)[static_cast<std::size_t>(j)];
    };
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < k; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < k; ++j2) {
                    const ScalarValue* c = A->product_coords(i1, i2);
                    int a = i1 * k + j1, b = i2 * k + j2;
                    for (int i3 = 0; i3 < n; ++i3) {
                        if (F->is_zero(c[i3])) continue;
                        ScalarValue s = F->mul(c[i3], tpow[static_cast<std::size_t>(j1 + j2)]);
                        for (int j3 = 0; j3 < k; ++j3) {
                            std::int64_t v = coeff_of(s, j3);
                            if (v != 0)
                                R.sc[(static_cast<std::size_t>(a) * R.N + b) * R.N + i3 * k + j3] = v;
                        }
                    }
                }
    return R;
}

// left-multiplication matrix of x (F_p coordinates) in the restricted algebra
Matrix restricted_left_mult(const RestrictedAlgebra& R, const std::vector<ScalarValue>& x) {
    Matrix m(R.fp, R.N, R.N);
    for (int a = 0; a < R.N; ++a) {
        std::int64_t xa = std::get<std::int64_t>(x[static_cast<std::size_t>(a)]);
        if (xa == 0) continue;
        for (int b = 0; b < R.N; ++b)
            for (int c = 0; c < R.N; ++c) {
                std::int64_t v = R.sc[(static_cast<std::size_t>(a) * R.N + b) * R.N + c];
                if (v == 0) continue;
                m.at(c, b) = R.fp->add(m.at(c, b), R.fp->from_integer(xa * v));
            }
    }
    return m;
}

// iterated characteristic-coefficient chain over GF(p); returns the radical
// as F_p row vectors of length N
std::vector<std::vector<ScalarValue>> radical_chain_fp(const RestrictedAlgebra& R) {
    const FieldPtr& fp = R.fp;
    std::int64_t p = fp->characteristic();
    int N = R.N;
    // current basis of the stage subspace, RREF rows
    Matrix basis = Matrix::identity(fp, N);
    std::int64_t pk = 1;
    while (pk <= N) {
        int r = basis.rows();
        if (r == 0) break;
        // rows: one linear condition per basis vector y; columns: coefficients of x over the stage basis
        Matrix cond(fp, r, r);
        for (int yi = 0; yi < r; ++yi) {
            std::vector<ScalarValue> y = basis.row(yi);
            for (int xi = 0; xi < r; ++xi) {
                std::vector<ScalarValue> x = basis.row(xi);
                // z = x * y in the restricted algebra
                std::vector<ScalarValue> z(static_cast<std::size_t>(N), fp->zero());
                for (int a = 0; a < N; ++a) {
                    std::int64_t xa = std::get<std::int64_t>(x[static_cast<std::size_t>(a)]);
                    if (xa == 0) continue;
                    for (int b = 0; b < N; ++b) {
                        std::int64_t yb = std::get<std::int64_t>(y[static_cast<std::size_t>(b)]);
                        if (yb == 0) continue;
                        for (int c = 0; c < N; ++c) {
                            std::int64_t v = R.sc[(static_cast<std::size_t>(a) * N + b) * N + c];
                            if (v == 0) continue;
                            z[static_cast<std::size_t>(c)] =
                                fp->add(z[static_cast<std::size_t>(c)], fp->from_integer(xa * yb % p * v));
                        }
                    }
                }
                Poly cp = restricted_left_mult(R, z).charpoly();
                // coefficient of x^(N - p^j) in the characteristic polynomial
                cond.at(yi, xi) = cp.coeff(N - static_cast<int>(pk));
            }
        }
        auto kernel = cond.nullspace();
        // next basis = kernel combinations of current rows
        std::vector<std::vector<ScalarValue>> next;
        for (auto& coeffs : kernel) {
            std::vector<ScalarValue> v(static_cast<std::size_t>(N), fp->zero());
            for (int i = 0; i < r; ++i) {
                const ScalarValue& ci = coeffs[static_cast<std::size_t>(i)];
                if (fp->is_zero(ci)) continue;
                for (int j = 0; j < N; ++j)
                    v[static_cast<std::size_t>(j)] =
                        fp->add(v[static_cast<std::size_t>(j)], fp->mul(ci, basis.at(i, j)));
            }
            next.push_back(std::move(v));
        }
        Matrix nb = Matrix::from_rows(fp, next);
        if (nb.rows() == 0) nb = Matrix(fp, 0, N);
        std::vector<int> piv = nb.rref();
        Matrix reduced(fp, static_cast<int>(piv.size()), N);
        for (int i = 0; i < reduced.rows(); ++i)
            for (int j = 0; j < N; ++j) reduced.at(i, j) = nb.at(i, j);
        basis = std::move(reduced);
        pk *= p;
    }
    std::vector<std::vector<ScalarValue>> rows;
    for (int i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
    return rows;
}

Subspace radical_charp(const AlgebraPtr& A) {
    const FieldPtr& F = A->field();
    int k = F->degree();
    RestrictedAlgebra R = restrict_scalars(A);
    auto fp_rows = radical_chain_fp(R);
    // convert F_p rows of length n*k back to coordinates over GF(p^k)
    std::vector<std::vector<ScalarValue>> rows;
    for (auto& v : fp_rows) {
        std::vector<ScalarValue> w;
        w.reserve(static_cast<std::size_t>(A->dim()));
        for (int i = 0; i < A->dim(); ++i) {
            if (k == 1) {
                w.push_back(v[static_cast<std::size_t>(i)]);
            } else {
                GFCoeffs c(static_cast<std::size_t>(k), 0);
                for (int j = 0; j < k; ++j)
                    c[static_cast<std::size_t>(j)] = std::get<std::int64_t>(v[static_cast<std::size_t>(i * k + j)]);
                w.push_back(std::move(c));
            }
        }
        rows.push_back(std::move(w));
    }
    return Subspace::span(A, rows);
}

}  // namespace

Subspace jacobson_radical_bruteforce(const AlgebraPtr& algebra, std::uint64_t cap) {
    auto count = algebra->element_count();
    if (!count || *count > cap)
        fail(ErrorCode::enumeration_too_large,
             "brute-force radical needs an enumerable algebra within the cap of " + std::to_string(cap));
    FastAlgebra fast(algebra);
    std::uint64_t total = fast.element_count();
    int n = fast.dim();
    // unit membership table over all element indices
    std::vector<bool> is_unit(total, false);
    std::vector<std::uint32_t> inv(static_cast<std::size_t>(n));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto x = fast.decode(idx);
        if (fast.try_invert(x.data(), inv.data())) is_unit[idx] = true;
    }
    // x is radical iff 1 + a*x is a unit for every a; the a = 1 test filters first
    std::vector<std::vector<std::uint32_t>> members;
    std::vector<std::uint32_t> ax(static_cast<std::size_t>(n)), probe(static_cast<std::size_t>(n));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto x = fast.decode(idx);
        // 1 + x
        for (int i = 0; i < n; ++i) probe[static_cast<std::size_t>(i)] =
            fast.s_add(fast.one()[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
        if (!is_unit[fast.encode(probe.data())]) continue;
        bool radical = true;
        for (std::uint64_t aidx = 0; aidx < total && radical; ++aidx) {
            auto a = fast.decode(aidx);
            fast.mul(a.data(), x.data(), ax.data());
            for (int i = 0; i < n; ++i) ax[static_cast<std::size_t>(i)] =
                fast.s_add(fast.one()[static_cast<std::size_t>(i)], ax[static_cast<std::size_t>(i)]);
            if (!is_unit[fast.encode(ax.data())]) radical = false;
        }
        if (radical) members.push_back(std::move(x));
    }
    std::vector<std::vector<ScalarValue>> rows;
    for (auto& m : members) rows.push_back(fast.to_exact(m).coords());
    Subspace J = Subspace::span(algebra, rows);
    // sanity: the member set must be exactly the subspace
    std::uint64_t expect = 1;
    for (int i = 0; i < J.dim(); ++i) expect *= fast.q();
    if (expect != members.size())
        fail(ErrorCode::internal_error, "quasi-regular set is not a subspace");
    return J;
}

Subspace jacobson_radical(const AlgebraPtr& algebra, const RadicalOptions& opt) {
    const FieldPtr& F = algebra->field();
    if (!F->is_finite()) return radical_char0(algebra);
    int restricted_dim = algebra->dim() * F->degree();
    if (restricted_dim <= opt.iterated_trace_cap) return radical_charp(algebra);
    auto count = algebra->element_count();
    if (count && *count <= opt.enumeration_cap)
        return jacobson_radical_bruteforce(algebra, opt.enumeration_cap);
    fail(ErrorCode::unsupported_characteristic,
         "no radical method applies: restricted dimension " + std::to_string(restricted_dim) +
             " exceeds the iterated-trace cap of " + std::to_string(opt.iterated_trace_cap) +
             " and the algebra is not enumerable within " + std::to_string(opt.enumeration_cap));
}

const char* radical_method(const AlgebraPtr& algebra, const RadicalOptions& opt) {
    const FieldPtr& F = algebra->field();
    if (!F->is_finite()) return "trace_form";
    if (algebra->dim() * F->degree() <= opt.iterated_trace_cap) return "iterated_coefficient_chain";
    auto count = algebra->element_count();
    if (count && *count <= opt.enumeration_cap) return "unit_enumeration";
    return "none";
}

bool is_ideal(const Subspace& s) {
    const AlgebraPtr& A = s.algebra();
    for (auto& v : s.basis_elements())
        for (int i = 0; i < A->dim(); ++i) {
            AlgElement b = A->basis_element(i);
            if (!s.contains(b * v) || !s.contains(v * b)) return false;
        }
    return true;
}

QuotientResult quotient(const AlgebraPtr& algebra, const Subspace& ideal) {
    if (ideal.algebra().get() != algebra.get()) fail(ErrorCode::algebra_mismatch, "quotient across algebras");
    if (!is_ideal(ideal)) fail(ErrorCode::not_an_ideal, "subspace is not a two-sided ideal");
    const FieldPtr& F = algebra->field();
    int n = algebra->dim();
    const Matrix& I = ideal.basis();
    // pivot columns of the ideal basis
    std::vector<int> pivots;
    int col = 0;
    for (int r = 0; r < I.rows(); ++r) {
        while (col < n && !F->is_one(I.at(r, col))) ++col;
        pivots.push_back(col);
        ++col;
    }
    std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_piv[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_piv[static_cast<std::size_t>(j)]) free_cols.push_back(j);
    int m = static_cast<int>(free_cols.size());
    if (m == 0) fail(ErrorCode::not_an_ideal, "cannot quotient by the whole algebra");

    // projection: eliminate pivot coordinates with ideal rows, read free coordinates
    auto project = [&](const std::vector<ScalarValue>& v) {
        std::vector<ScalarValue> w(v);
        for (int r = 0; r < I.rows(); ++r) {
            const ScalarValue& c = w[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])];
            if (F->is_zero(c)) continue;
            ScalarValue t = c;
            for (int j = 0; j < n; ++j)
                w[static_cast<std::size_t>(j)] = F->sub(w[static_cast<std::size_t>(j)], F->mul(t, I.at(r, j)));
        }
        std::vector<ScalarValue> out;
        out.reserve(static_cast<std::size_t>(m));
        for (int j : free_cols) out.push_back(w[static_cast<std::size_t>(j)]);
        return out;
    };

    Matrix projection(F, m, n);
    for (int j = 0; j < n; ++j) {
        std::vector<ScalarValue> e(static_cast<std::size_t>(n), F->zero());
        e[static_cast<std::size_t>(j)] = F->one();
        auto img = project(e);
        for (int i = 0; i < m; ++i) projection.at(i, j) = img[static_cast<std::size_t>(i)];
    }
    Matrix section(F, n, m);
    for (int i = 0; i < m; ++i) section.at(free_cols[static_cast<std::size_t>(i)], i) = F->one();

    std::vector<std::vector<std::vector<ScalarValue>>> structure(
        static_cast<std::size_t>(m),
        std::vector<std::vector<ScalarValue>>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a) {
        std::vector<ScalarValue> ea(static_cast<std::size_t>(n), F->zero());
        ea[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(a)])] = F->one();
        for (int b = 0; b < m; ++b) {
            std::vector<ScalarValue> eb(static_cast<std::size_t>(n), F->zero());
            eb[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(b)])] = F->one();
            structure[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                project(algebra->multiply_coords(ea, eb));
        }
    }
    std::vector<std::string> names;
    for (int j : free_cols) names.push_back("[" + algebra->basis_names()[static_cast<std::size_t>(j)] + "]");
    auto one_img = project(algebra->one().coords());
    AlgebraPtr Q = Algebra::create(F, std::move(names), std::move(structure), std::move(one_img),
                                   algebra->name() + "/I", true);
    return {Q, std::move(projection), std::move(section)};
}

Subspace generated_subalgebra(const AlgebraPtr& algebra, const std::vector<AlgElement>& gens) {
    std::vector<std::vector<ScalarValue>> rows;
    rows.push_back(algebra->one().coords());
    for (auto& g : gens) {
        if (g.algebra().get() != algebra.get()) fail(ErrorCode::algebra_mismatch, "generators across algebras");
        rows.push_back(g.coords());
    }
    Subspace current = Subspace::span(algebra, rows);
    while (true) {
        auto basis = current.basis_elements();
        std::vector<std::vector<ScalarValue>> expanded;
        for (auto& b : basis) expanded.push_back(b.coords());
        bool grew = false;
        for (auto& u : basis)
            for (auto& v : basis) {
                AlgElement w = u * v;
                if (!current.contains(w)) {
                    expanded.push_back(w.coords());
                    grew = true;
                }
            }
        if (!grew) return current;
        current = Subspace::span(algebra, expanded);
    }
}

CommutativityResult is_commutative(const AlgebraPtr& algebra) {
    for (int i = 0; i < algebra->dim(); ++i)
        for (int j = i + 1; j < algebra->dim(); ++j) {
            AlgElement bi = algebra->basis_element(i);
            AlgElement bj = algebra->basis_element(j);
            if (!(bi * bj == bj * bi)) return {false, std::make_pair(bi, bj)};
        }
    return {true, std::nullopt};
}

CommutativityResult is_commutative(const Subspace& subspace) {
    auto basis = subspace.basis_elements();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!(basis[i] * basis[j] == basis[j] * basis[i]))
                return {false, std::make_pair(basis[i], basis[j])};
    return {true, std::nullopt};
}

AlgElement eval_poly(const Poly& f, const AlgElement& g) {
    const AlgebraPtr& A = g.algebra();
    if (!f.field()->same(*A->field()))
        fail(ErrorCode::field_mismatch, "polynomial field differs from algebra field");
    AlgElement acc = A->zero();
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * g;
        ScalarValue c = f.coeff(i);
        if (!A->field()->is_zero(c)) {
            AlgElement term = A->one().scaled(c);
            acc = acc + term;
        }
    }
    return acc;
}

}  // namespace fcalg
