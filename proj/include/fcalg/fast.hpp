#ifndef FCALG_FAST_HPP
#define FCALG_FAST_HPP

#include <cstdint>
#include <vector>

#include "fcalg/algebra.hpp"

namespace fcalg {

/// Machine-word kernel for algebras over finite fields. Scalars are field
/// enumeration indices (0 = zero, 1 = one); elements are uint32 coordinate
/// vectors of length dim. Used by unit enumeration, conjugacy scans, and
/// the brute-force radical oracle, where exact GMP arithmetic would drown.
class FastAlgebra {
  public:
    explicit FastAlgebra(AlgebraPtr algebra);

    const AlgebraPtr& source() const { return alg_; }
    int dim() const { return n_; }
    std::uint64_t q() const { return q_; }
    /// q^dim; construction fails above 2^62.
    std::uint64_t element_count() const { return count_; }
    const std::vector<std::uint32_t>& one() const { return one_; }

    std::uint32_t s_add(std::uint32_t a, std::uint32_t b) const {
        if (mode_ == Mode::prime) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % q_);
        if (mode_ == Mode::table) return add_tab_[a * q_ + b];
        return generic_add(a, b);
    }
    std::uint32_t s_mul(std::uint32_t a, std::uint32_t b) const {
        if (mode_ == Mode::prime) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
        if (mode_ == Mode::table) return mul_tab_[a * q_ + b];
        return generic_mul(a, b);
    }
    std::uint32_t s_neg(std::uint32_t a) const {
        if (mode_ == Mode::prime) return a == 0 ? 0 : static_cast<std::uint32_t>(q_ - a);
        if (mode_ == Mode::table) return neg_tab_[a];
        return generic_neg(a);
    }
    std::uint32_t s_inv(std::uint32_t a) const;  // a != 0

    /// out = x * y via the sparse structure constants. out must not alias x or y.
    void mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& x,
                                   const std::vector<std::uint32_t>& y) const;
    void sub_into(std::uint32_t* x, const std::uint32_t* y) const;  // x -= y

    bool is_zero(const std::uint32_t* x) const;
    bool is_one(const std::uint32_t* x) const;

    /// Solve x * y = one; false when x is not a unit. y must have length dim.
    bool try_invert(const std::uint32_t* x, std::uint32_t* y) const;

    /// Index in lexicographic coordinate order (coordinate 0 most significant).
    std::uint64_t encode(const std::uint32_t* x) const;
    std::vector<std::uint32_t> decode(std::uint64_t index) const;

    std::vector<std::uint32_t> from_exact(const AlgElement& e) const;
    AlgElement to_exact(const std::uint32_t* x) const;
    AlgElement to_exact(const std::vector<std::uint32_t>& x) const { return to_exact(x.data()); }

  private:
    enum class Mode { prime, table, generic };

    std::uint32_t generic_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t generic_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t generic_neg(std::uint32_t a) const;

    struct Term {
        std::uint32_t target;  // basis index k
        std::uint32_t scalar;  // scalar index of c[i][j][k]
    };

    AlgebraPtr alg_;
    int n_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t count_ = 0;
    Mode mode_ = Mode::prime;
    std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
    std::vector<std::vector<Term>> terms_;  // n*n entries, index i*n+j
    std::vector<std::uint32_t> one_;
};

}  // namespace fcalg

#endif
