#include "fcalg/fast.hpp"

#include "fcalg/errors.hpp"

namespace fcalg {

FastAlgebra::FastAlgebra(AlgebraPtr algebra) : alg_(std::move(algebra)) {
    const FieldPtr& F = alg_->field();
    if (!F->is_finite()) fail(ErrorCode::unsupported_field, "fast kernel requires a finite field");
    n_ = alg_->dim();
    q_ = *F->order();
    count_ = 1;
    for (int i = 0; i < n_; ++i) {
        if (count_ > (std::uint64_t(1) << 62) / q_)
            fail(ErrorCode::enumeration_too_large,
                 "element count q^dim exceeds 2^62 for " + alg_->name());
        count_ *= q_;
    }
    if (F->degree() == 1) {
        mode_ = Mode::prime;
    } else if (q_ <= 1024) {
        mode_ = Mode::table;
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        neg_tab_.resize(q_);
        inv_tab_.assign(q_, 0);
        std::vector<ScalarValue> elems;
        elems.reserve(q_);
        for (std::uint64_t i = 0; i < q_; ++i) elems.push_back(F->element_at(i));
        for (std::uint64_t a = 0; a < q_; ++a) {
            neg_tab_[a] = static_cast<std::uint32_t>(F->index_of(F->neg(elems[a])));
            if (a != 0) inv_tab_[a] = static_cast<std::uint32_t>(F->index_of(F->inv(elems[a])));
            for (std::uint64_t b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = static_cast<std::uint32_t>(F->index_of(F->add(elems[a], elems[b])));
                mul_tab_[a * q_ + b] = static_cast<std::uint32_t>(F->index_of(F->mul(elems[a], elems[b])));
            }
        }
    } else {
        mode_ = Mode::generic;
    }
    terms_.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const ScalarValue* c = alg_->product_coords(i, j);
            auto& list = terms_[static_cast<std::size_t>(i) * n_ + j];
            for (int k = 0; k < n_; ++k) {
                if (F->is_zero(c[k])) continue;
                list.push_back({static_cast<std::uint32_t>(k),
                                static_cast<std::uint32_t>(F->index_of(c[k]))});
            }
        }
    one_ = from_exact(alg_->one());
}

std::uint32_t FastAlgebra::generic_add(std::uint32_t a, std::uint32_t b) const {
    const FieldPtr& F = alg_->field();
    return static_cast<std::uint32_t>(F->index_of(F->add(F->element_at(a), F->element_at(b))));
}

std::uint32_t FastAlgebra::generic_mul(std::uint32_t a, std::uint32_t b) const {
    const FieldPtr& F = alg_->field();
    return static_cast<std::uint32_t>(F->index_of(F->mul(F->element_at(a), F->element_at(b))));
}

std::uint32_t FastAlgebra::generic_neg(std::uint32_t a) const {
    const FieldPtr& F = alg_->field();
    return static_cast<std::uint32_t>(F->index_of(F->neg(F->element_at(a))));
}

std::uint32_t FastAlgebra::s_inv(std::uint32_t a) const {
    if (a == 0) fail(ErrorCode::division_by_zero, "scalar inverse of zero");
    if (mode_ == Mode::table) return inv_tab_[a];
    if (mode_ == Mode::prime) {
        // extended Euclid on (a, q)
        std::int64_t t = 0, newt = 1, r = static_cast<std::int64_t>(q_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t qq = r / newr;
            std::int64_t tmp = t - qq * newt;
            t = newt;
            newt = tmp;
            tmp = r - qq * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(q_);
        return static_cast<std::uint32_t>(t);
    }
    const FieldPtr& F = alg_->field();
    return static_cast<std::uint32_t>(F->index_of(F->inv(F->element_at(a))));
}

void FastAlgebra::mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const {
    for (int k = 0; k < n_; ++k) out[k] = 0;
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            std::uint32_t s = s_mul(x[i], y[j]);
            for (const Term& t : terms_[static_cast<std::size_t>(i) * n_ + j])
                out[t.target] = s_add(out[t.target], s_mul(s, t.scalar));
        }
    }
}

std::vector<std::uint32_t> FastAlgebra::mul(const std::vector<std::uint32_t>& x,
                                            const std::vector<std::uint32_t>& y) const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n_));
    mul(x.data(), y.data(), out.data());
    return out;
}

void FastAlgebra::sub_into(std::uint32_t* x, const std::uint32_t* y) const {
    for (int i = 0; i < n_; ++i) x[i] = s_add(x[i], s_neg(y[i]));
}

bool FastAlgebra::is_zero(const std::uint32_t* x) const {
    for (int i = 0; i < n_; ++i)
        if (x[i] != 0) return false;
    return true;
}

bool FastAlgebra::is_one(const std::uint32_t* x) const {
    for (int i = 0; i < n_; ++i)
        if (x[i] != one_[static_cast<std::size_t>(i)]) return false;
    return true;
}

bool FastAlgebra::try_invert(const std::uint32_t* x, std::uint32_t* y) const {
    // Gaussian elimination on [L_x | 1]; column j of L_x is x * b_j
    int n = n_;
    std::vector<std::uint32_t> aug(static_cast<std::size_t>(n) * (n + 1), 0);
    auto at = [&](int r, int c) -> std::uint32_t& { return aug[static_cast<std::size_t>(r) * (n + 1) + c]; };
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            for (const Term& t : terms_[static_cast<std::size_t>(i) * n_ + j])
                at(static_cast<int>(t.target), j) =
                    s_add(at(static_cast<int>(t.target), j), s_mul(x[i], t.scalar));
    }
    for (int i = 0; i < n; ++i) at(i, n) = one_[static_cast<std::size_t>(i)];
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;  // singular
        if (piv != rank)
            for (int c = col; c <= n; ++c) std::swap(at(piv, c), at(rank, c));
        std::uint32_t inv = s_inv(at(rank, col));
        for (int c = col; c <= n; ++c) at(rank, c) = s_mul(at(rank, c), inv);
        for (int r = 0; r < n; ++r) {
            if (r == rank || at(r, col) == 0) continue;
            std::uint32_t f = at(r, col);
            for (int c = col; c <= n; ++c)
                at(r, c) = s_add(at(r, c), s_neg(s_mul(f, at(rank, c))));
        }
        ++rank;
    }
    if (rank < n) return false;
    for (int i = 0; i < n; ++i) y[i] = at(i, n);
    return true;
}

std::uint64_t FastAlgebra::encode(const std::uint32_t* x) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < n_; ++i) idx = idx * q_ + x[i];
    return idx;
}

std::vector<std::uint32_t> FastAlgebra::decode(std::uint64_t index) const {
    std::vector<std::uint32_t> x(static_cast<std::size_t>(n_));
    for (int i = n_ - 1; i >= 0; --i) {
        x[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % q_);
        index /= q_;
    }
    return x;
}

std::vector<std::uint32_t> FastAlgebra::from_exact(const AlgElement& e) const {
    if (e.algebra().get() != alg_.get()) fail(ErrorCode::algebra_mismatch, "element from another algebra");
    const FieldPtr& F = alg_->field();
    std::vector<std::uint32_t> x(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        x[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(F->index_of(e.coord(i)));
    return x;
}

AlgElement FastAlgebra::to_exact(const std::uint32_t* x) const {
    const FieldPtr& F = alg_->field();
    std::vector<ScalarValue> c;
    c.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) c.push_back(F->element_at(x[i]));
    return alg_->element(std::move(c));
}

}  // namespace fcalg
