#include "fcalg/element.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace fcalg {

namespace {

// minimal polynomial of g - c for constant c: mu_g(x + c)
Poly shift_variable(const Poly& f, const ScalarValue& c) {
    const FieldPtr& F = f.field();
    Poly acc = Poly::zero(F);
    Poly lin = Poly::x(F) + Poly::constant(F, c);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * lin;
        acc = acc + Poly::constant(F, f.coeff(i));
    }
    return acc;
}

bool is_power_of_x(const Poly& f) {
    for (int i = 0; i < f.degree(); ++i)
        if (!f.field()->is_zero(f.coeff(i))) return false;
    return f.degree() >= 1;
}

// torsion order over a characteristic-0 field: g is torsion iff mu is
// squarefree and every irreducible factor divides some x^d - 1; the order is
// the lcm of the minimal such d per factor. Factors are peeled off by gcd
// with x^d - 1 for ascending d, so no factorization is needed.
std::optional<mpz_class> torsion_order_char0(const Poly& mu) {
    const FieldPtr& F = mu.field();
    if (Poly::gcd(mu, mu.derivative()).degree() != 0) return std::nullopt;
    Poly remaining = mu.monic();
    mpz_class m = 1;
    int n = mu.degree();
    int bound = 2 * n * n + 4;
    for (int d = 1; d <= bound && remaining.degree() > 0; ++d) {
        Poly g = Poly::gcd(remaining, Poly::xn_minus_one(F, d));
        if (g.degree() > 0) {
            mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), mpz_class(d).get_mpz_t());
            remaining = remaining.divexact(g);
        }
    }
    if (remaining.degree() > 0) return std::nullopt;
    return m;
}

// prime factors of M by trial division, with a primality certificate for the
// remainder; nullopt when the remainder resists both
std::optional<std::vector<mpz_class>> prime_factors(mpz_class M) {
    std::vector<mpz_class> primes;
    auto push = [&](const mpz_class& p) {
        if (primes.empty() || primes.back() != p) primes.push_back(p);
    };
    for (mpz_class d = 2; d * d <= M && d <= 1'000'000; d += (d == 2 ? 1 : 2)) {
        if (M % d == 0) {
            push(d);
            while (M % d == 0) M /= d;
        }
    }
    if (M > 1) {
        if (mpz_probab_prime_p(M.get_mpz_t(), 30) == 0) return std::nullopt;
        push(M);
    }
    return primes;
}

// order of x in GF(q)[x]/(f^e) for irreducible f; nullopt when the field
// order q^deg(f) - 1 cannot be factored
std::optional<mpz_class> component_order_gf(const Poly& f, int e) {
    const FieldPtr& F = f.field();
    mpz_class q(std::to_string(*F->order()));
    mpz_class M;
    mpz_pow_ui(M.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(f.degree()));
    M -= 1;
    mpz_class ord = M;
    if (M > 1) {
        auto primes = prime_factors(M);
        if (!primes) return std::nullopt;
        Poly x = Poly::x(F);
        for (const mpz_class& p : *primes)
            while (ord % p == 0 && Poly::pow_mod(x, ord / p, f).is_one()) ord /= p;
    }
    // lift through the multiplicity: multiply by p until x^ord = 1 mod f^e
    Poly fe = f.pow(e);
    mpz_class char_p(std::to_string(F->characteristic()));
    Poly t = Poly::pow_mod(Poly::x(F), ord, fe);
    int guard = 0;
    while (!t.is_one()) {
        t = Poly::pow_mod(t, char_p, fe);
        ord *= char_p;
        if (++guard > 64) fail(ErrorCode::internal_error, "torsion lift failed to terminate");
    }
    return ord;
}

std::optional<mpz_class> torsion_order_gf(const Poly& mu, const FactorOptions& fopt) {
    Factorization fac = factor_poly(mu, fopt);
    mpz_class m = 1;
    for (const FactorTerm& t : fac.factors) {
        auto ord = component_order_gf(t.factor, t.multiplicity);
        if (!ord) return std::nullopt;
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), ord->get_mpz_t());
    }
    return m;
}

}  // namespace

Poly minimal_polynomial(const AlgElement& g) {
    const AlgebraPtr& A = g.algebra();
    const FieldPtr& F = A->field();
    int n = A->dim();
    // echelon rows of the Krylov span, each with the polynomial that produced it
    std::vector<std::vector<ScalarValue>> rows;
    std::vector<std::vector<ScalarValue>> combos;
    std::vector<int> lead_cols;
    AlgElement power = A->one();
    for (int k = 0; k <= n; ++k) {
        std::vector<ScalarValue> v = power.coords();
        std::vector<ScalarValue> combo(static_cast<std::size_t>(k + 1), F->zero());
        combo[static_cast<std::size_t>(k)] = F->one();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const ScalarValue& pivot_val = v[static_cast<std::size_t>(lead_cols[r])];
            if (F->is_zero(pivot_val)) continue;
            ScalarValue c = pivot_val;  // rows are normalized to leading 1
            for (int j = 0; j < n; ++j)
                v[static_cast<std::size_t>(j)] =
                    F->sub(v[static_cast<std::size_t>(j)], F->mul(c, rows[r][static_cast<std::size_t>(j)]));
            for (std::size_t j = 0; j < combos[r].size(); ++j)
                combo[j] = F->sub(combo[j], F->mul(c, combos[r][j]));
        }
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (!F->is_zero(v[static_cast<std::size_t>(j)])) {
                lead = j;
                break;
            }
        if (lead < 0) return Poly(F, combo).monic();
        ScalarValue inv = F->inv(v[static_cast<std::size_t>(lead)]);
        for (int j = 0; j < n; ++j)
            v[static_cast<std::size_t>(j)] = F->mul(v[static_cast<std::size_t>(j)], inv);
        for (auto& c : combo) c = F->mul(c, inv);
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        lead_cols.push_back(lead);
        power = power * g;
    }
    fail(ErrorCode::internal_error, "no dependence among dim+1 Krylov vectors");
}

ElementProfile classify(const AlgElement& g, const ClassifyOptions& opt) {
    const FieldPtr& F = g.algebra()->field();
    ElementProfile p{.minimal_polynomial = minimal_polynomial(g)};
    p.torsion_bound = opt.torsion_cap;
    p.is_nilpotent = is_power_of_x(p.minimal_polynomial);
    p.nilpotency_index = p.is_nilpotent ? p.minimal_polynomial.degree() : 0;
    p.is_unipotent = is_power_of_x(shift_variable(p.minimal_polynomial, F->one()));
    p.is_unit = !F->is_zero(p.minimal_polynomial.eval(F->zero()));
    if (p.is_unit) {
        std::optional<mpz_class> m = F->is_finite()
                                         ? torsion_order_gf(p.minimal_polynomial, FactorOptions{})
                                         : torsion_order_char0(p.minimal_polynomial);
        if (m && *m <= opt.torsion_cap) {
            p.torsion_order = static_cast<std::int64_t>(m->get_si());
            if (!(g.pow(*p.torsion_order) == g.algebra()->one()))
                fail(ErrorCode::internal_error, "computed torsion order does not annihilate");
        }
    }
    return p;
}

bool is_unipotent_element(const AlgElement& g) {
    const FieldPtr& F = g.algebra()->field();
    return is_power_of_x(shift_variable(minimal_polynomial(g), F->one()));
}

AlgElement torsion_shift_inverse(const AlgElement& g, const ScalarValue& alpha) {
    const AlgebraPtr& A = g.algebra();
    const FieldPtr& F = A->field();
    ElementProfile p = classify(g);
    if (!p.torsion_order)
        fail(ErrorCode::not_torsion, "element has no finite multiplicative order within the bound");
    std::int64_t m = *p.torsion_order;
    ScalarValue am = F->pow(alpha, m);
    if (F->is_one(am))
        fail(ErrorCode::shift_not_unit, "alpha^m = 1, so g - alpha is not invertible by the closed form");
    ScalarValue lead = F->inv(F->sub(F->one(), am));
    // sum_{i=0}^{m-1} alpha^{m-1-i} g^i, Horner style from the top power
    AlgElement acc = A->zero();
    for (std::int64_t i = m - 1; i >= 0; --i) {
        acc = acc * g;
        acc = acc + A->one().scaled(F->pow(alpha, m - 1 - i));
    }
    AlgElement result = acc.scaled(lead);
    AlgElement shifted = g - A->one().scaled(alpha);
    if (!(shifted * result == A->one()) || !(result * shifted == A->one()))
        fail(ErrorCode::internal_error, "torsion shift inverse failed verification");
    return result;
}

std::vector<ScalarValue> unit_shifts(const AlgElement& g, int count) {
    const FieldPtr& F = g.algebra()->field();
    Poly mu = minimal_polynomial(g);
    std::vector<ScalarValue> out;
    FieldSpec::ShiftEnumerator en(F);
    while (static_cast<int>(out.size()) < count) {
        auto alpha = en.next();
        if (!alpha)
            fail(ErrorCode::exhausted_field,
                 "only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                     " requested unit shifts exist over " + F->name());
        if (!F->is_zero(mu.eval(*alpha))) out.push_back(*alpha);
    }
    return out;
}

LocalDecomposition local_decomposition(const AlgElement& g, const FactorOptions& opt) {
    const AlgebraPtr& A = g.algebra();
    LocalDecomposition out{.minimal_polynomial = minimal_polynomial(g), .components = {}};
    Factorization fac = factor_poly(out.minimal_polynomial, opt);
    int s = static_cast<int>(fac.factors.size());
    std::vector<AlgElement> idempotents;
    for (int i = 0; i < s; ++i) {
        const Poly& pi = fac.factors[static_cast<std::size_t>(i)].factor;
        int ei = fac.factors[static_cast<std::size_t>(i)].multiplicity;
        Poly primary = pi.pow(ei);
        if (s == 1) {
            idempotents.push_back(A->one());
        } else {
            Poly rest = out.minimal_polynomial.monic().divexact(primary);
            auto [d, u, v] = Poly::xgcd(rest, primary);
            if (!d.is_one()) fail(ErrorCode::internal_error, "primary components are not coprime");
            // e_i = (u * rest)(g) is 1 mod primary and 0 mod the rest
            idempotents.push_back(eval_poly(u * rest, g));
        }
    }
    // verify the orthogonal system
    AlgElement total = A->zero();
    for (auto& e : idempotents) total = total + e;
    if (!(total == A->one())) fail(ErrorCode::internal_error, "idempotents do not sum to 1");
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            AlgElement prod = idempotents[static_cast<std::size_t>(i)] * idempotents[static_cast<std::size_t>(j)];
            AlgElement expect = i == j ? idempotents[static_cast<std::size_t>(i)] : A->zero();
            if (!(prod == expect)) fail(ErrorCode::internal_error, "idempotents are not orthogonal");
        }
    int mu_deg = out.minimal_polynomial.degree();
    for (int i = 0; i < s; ++i) {
        LocalComponent comp{idempotents[static_cast<std::size_t>(i)],
                            fac.factors[static_cast<std::size_t>(i)].factor,
                            fac.factors[static_cast<std::size_t>(i)].multiplicity,
                            Subspace::zero(A),
                            Subspace::zero(A),
                            fac.factors[static_cast<std::size_t>(i)].factor.degree()};
        std::vector<AlgElement> span_vecs;
        AlgElement gp = comp.idempotent;
        for (int j = 0; j < mu_deg; ++j) {
            span_vecs.push_back(gp);
            gp = gp * g;
        }
        comp.component = Subspace::span_elements(span_vecs, A);
        AlgElement rad_gen = eval_poly(comp.prime, g) * comp.idempotent;
        std::vector<AlgElement> rad_vecs;
        AlgElement rp = rad_gen;
        for (int j = 0; j < mu_deg; ++j) {
            rad_vecs.push_back(rp);
            rp = rp * g;
        }
        comp.radical = Subspace::span_elements(rad_vecs, A);
        out.components.push_back(std::move(comp));
    }
    return out;
}

AlgElement unipotent_inverse(const AlgElement& x, const AlgElement& f) {
    const AlgebraPtr& A = x.algebra();
    ElementProfile p = classify(x);
    if (!p.is_nilpotent) fail(ErrorCode::not_nilpotent, "series inverse needs a nilpotent element");
    if (!(x * f == f * x)) fail(ErrorCode::not_commuting, "factor does not commute with the nilpotent element");
    int k = p.nilpotency_index;
    AlgElement xf = x * f;
    AlgElement term = A->one();
    AlgElement acc = A->zero();
    for (int i = 0; i < k; ++i) {
        acc = i % 2 == 0 ? acc + term : acc - term;
        term = term * xf;
    }
    AlgElement y = A->one() + xf;
    if (!(y * acc == A->one()) || !(acc * y == A->one()))
        fail(ErrorCode::internal_error, "geometric series inverse failed verification");
    return acc;
}

}  // namespace fcalg
