#include "fcalg/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace fcalg {

Poly::Poly(FieldPtr field, std::vector<ScalarValue> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
    if (!field_->same(*o.field_))
        fail(ErrorCode::field_mismatch,
             "polynomials over " + field_->name() + " and " + o.field_->name());
}

Poly Poly::constant(const FieldPtr& field, const ScalarValue& c) {
    return Poly(field, std::vector<ScalarValue>{c});
}

Poly Poly::x(const FieldPtr& field) {
    return Poly(field, {field->zero(), field->one()});
}

Poly Poly::linear_root(const FieldPtr& field, const ScalarValue& r) {
    return Poly(field, {field->neg(r), field->one()});
}

Poly Poly::xn_minus_one(const FieldPtr& field, std::int64_t n) {
    if (n < 1) fail(ErrorCode::internal_error, "xn_minus_one needs n >= 1");
    std::vector<ScalarValue> c(static_cast<std::size_t>(n) + 1, field->zero());
    c[0] = field->from_integer(-1);
    c.back() = field->one();
    return Poly(field, std::move(c));
}

bool Poly::is_one() const { return c_.size() == 1 && field_->is_one(c_[0]); }

bool Poly::is_monic() const { return !c_.empty() && field_->is_one(c_.back()); }

ScalarValue Poly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return field_->zero();
    return c_[static_cast<std::size_t>(i)];
}

const ScalarValue& Poly::lead() const {
    if (c_.empty()) fail(ErrorCode::internal_error, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(o);
    std::vector<ScalarValue> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_->add(r[i], o.c_[i]);
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(o);
    std::vector<ScalarValue> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_->sub(r[i], o.c_[i]);
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(o);
    if (c_.empty() || o.c_.empty()) return Poly(field_);
    std::vector<ScalarValue> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (field_->is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<ScalarValue> r(c_);
    for (auto& v : r) v = field_->neg(v);
    return Poly(field_, std::move(r));
}

Poly Poly::scaled(const ScalarValue& s) const {
    std::vector<ScalarValue> r(c_);
    for (auto& v : r) v = field_->mul(v, s);
    return Poly(field_, std::move(r));
}

Poly Poly::shifted(int n) const {
    if (c_.empty() || n == 0) return n < 0 ? Poly(field_) : *this;
    if (n < 0) fail(ErrorCode::internal_error, "negative shift");
    std::vector<ScalarValue> r(static_cast<std::size_t>(n), field_->zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    check_same_field(o);
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!field_->eq(c_[i], o.c_[i])) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same_field(d);
    if (d.is_zero()) fail(ErrorCode::division_by_zero, "polynomial division by zero");
    if (degree() < d.degree()) return {Poly(field_), *this};
    ScalarValue lead_inv = field_->inv(d.lead());
    std::vector<ScalarValue> rem(c_);
    std::vector<ScalarValue> quo(c_.size() - d.c_.size() + 1, field_->zero());
    for (std::size_t top = c_.size(); top >= d.c_.size(); --top) {
        std::size_t ri = top - 1;
        if (field_->is_zero(rem[ri])) continue;
        ScalarValue q = field_->mul(rem[ri], lead_inv);
        std::size_t shift = top - d.c_.size();
        quo[shift] = q;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            rem[shift + i] = field_->sub(rem[shift + i], field_->mul(q, d.c_[i]));
    }
    return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

bool Poly::divides(const Poly& f) const {
    if (is_zero()) return f.is_zero();
    return f.rem(*this).is_zero();
}

Poly Poly::divexact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorCode::internal_error, "division expected to be exact");
    return q;
}

Poly Poly::monic() const {
    if (c_.empty() || is_monic()) return *this;
    return scaled(field_->inv(c_.back()));
}

Poly Poly::derivative() const {
    if (c_.size() < 2) return Poly(field_);
    std::vector<ScalarValue> r(c_.size() - 1, field_->zero());
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = field_->mul(c_[i], field_->from_integer(static_cast<std::int64_t>(i)));
    return Poly(field_, std::move(r));
}

ScalarValue Poly::eval(const ScalarValue& x) const {
    ScalarValue acc = field_->zero();
    for (std::size_t i = c_.size(); i > 0; --i) acc = field_->add(field_->mul(acc, x), c_[i - 1]);
    return acc;
}

Poly Poly::pow(std::int64_t e) const {
    if (e < 0) fail(ErrorCode::internal_error, "negative polynomial power");
    Poly result = one(field_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::pow_mod(const Poly& base0, const mpz_class& e, const Poly& mod) {
    if (e < 0) fail(ErrorCode::internal_error, "negative exponent in pow_mod");
    Poly result = one(base0.field());
    Poly base = base0.rem(mod);
    mpz_class exp = e;
    // process exponent bits from the top
    std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return result;
    for (std::size_t i = bits; i > 0; --i) {
        result = (result * result).rem(mod);
        if (mpz_tstbit(exp.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 1)))
            result = (result * base).rem(mod);
    }
    return result;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.rem(y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly& a, const Poly& b) {
    const FieldPtr& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = one(F), s1 = zero(F);
    Poly t0 = zero(F), t1 = one(F);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    ScalarValue scale = F->inv(r0.lead());
    return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const FieldPtr& F = a.field();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        int c = F->cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Poly::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << field_->str(c_[i]);
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

namespace {

using PolyMult = std::vector<std::pair<Poly, int>>;

// p-th root of f, valid when f is a p-th power: f(x) = g(x)^p with
// g recovered from the coefficients at exponents divisible by p.
Poly pth_root(const Poly& f, std::int64_t p, int field_degree) {
    const FieldPtr& F = f.field();
    std::int64_t root_exp = 1;
    for (int i = 0; i < field_degree - 1; ++i) root_exp *= p;  // inverse Frobenius is ^(p^(k-1))
    std::vector<ScalarValue> out;
    for (int i = 0; i * p <= f.degree(); ++i) {
        ScalarValue c = f.coeff(i * static_cast<int>(p));
        out.push_back(F->pow(c, root_exp));
    }
    return Poly(F, std::move(out));
}

// squarefree decomposition of a monic polynomial; works in characteristic
// zero and p alike. Result terms are pairwise coprime, not sorted.
PolyMult squarefree_decomposition(const Poly& f) {
    const FieldPtr& F = f.field();
    PolyMult result;
    if (f.degree() < 1) return result;
    std::int64_t p = F->characteristic();
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        // only possible in characteristic p: f is a p-th power
        Poly g = pth_root(f, p, F->degree());
        for (auto& [h, m] : squarefree_decomposition(g)) result.emplace_back(h, m * static_cast<int>(p));
        return result;
    }
    Poly c = Poly::gcd(f, fp);
    Poly w = f.divexact(c);
    int i = 1;
    while (!w.is_one()) {
        Poly y = Poly::gcd(w, c);
        Poly z = w.divexact(y);
        if (z.degree() > 0) result.emplace_back(z.monic(), i);
        w = std::move(y);
        c = c.divexact(w);
        ++i;
    }
    if (!c.is_one() && c.degree() > 0) {
        Poly g = pth_root(c, p, F->degree());
        for (auto& [h, m] : squarefree_decomposition(g)) result.emplace_back(h, m * static_cast<int>(p));
    }
    return result;
}

// ----- finite fields -------------------------------------------------------

// distinct-degree decomposition of a monic squarefree f: list of
// (product of irreducible factors of degree d, d)
PolyMult distinct_degree(const Poly& f) {
    const FieldPtr& F = f.field();
    mpz_class q(static_cast<unsigned long>(*F->order()));
    PolyMult parts;
    Poly rest = f;
    Poly h = Poly::x(F);
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (rest.degree() < 2 * d) {
            parts.emplace_back(rest, rest.degree());
            break;
        }
        h = Poly::pow_mod(h, q, rest);
        Poly g = Poly::gcd(h - Poly::x(F), rest);
        if (g.degree() > 0) {
            parts.emplace_back(g, d);
            rest = rest.divexact(g);
            h = h.rem(rest);
        }
    }
    return parts;
}

class EqualDegreeSplitter {
  public:
    EqualDegreeSplitter(FieldPtr field, std::uint64_t seed) : F_(std::move(field)), rng_(seed) {
        q_ = *F_->order();
    }

    void split(const Poly& g, int d, std::vector<Poly>& out) {
        if (g.degree() == d) {
            out.push_back(g.monic());
            return;
        }
        Poly u = find_splitter(g, d);
        split(u, d, out);
        split(g.divexact(u), d, out);
    }

  private:
    Poly random_poly(int deg_bound) {
        std::vector<ScalarValue> c;
        c.reserve(static_cast<std::size_t>(deg_bound));
        for (int i = 0; i < deg_bound; ++i) c.push_back(F_->element_at(rng_() % q_));
        return Poly(F_, std::move(c));
    }

    // proper monic divisor of g (product of degree-d irreducibles, >= 2 of them)
    Poly find_splitter(const Poly& g, int d) {
        int n = g.degree();
        while (true) {
            Poly a = random_poly(n);
            if (a.degree() < 1) continue;
            Poly u = Poly::gcd(a, g);
            if (u.degree() > 0 && u.degree() < n) return u;
            Poly b(F_);
            if (q_ % 2 == 1) {
                mpz_class e;
                mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(q_), static_cast<unsigned long>(d));
                e = (e - 1) / 2;
                b = Poly::pow_mod(a, e, g) - Poly::one(F_);
            } else {
                // absolute trace into GF(2): a + a^2 + ... + a^(2^(kd-1))
                int rounds = F_->degree() * d;
                Poly t = a.rem(g);
                b = t;
                for (int i = 1; i < rounds; ++i) {
                    t = (t * t).rem(g);
                    b = b + t;
                }
            }
            u = Poly::gcd(b, g);
            if (u.degree() > 0 && u.degree() < n) return u;
        }
    }

    FieldPtr F_;
    std::mt19937_64 rng_;
    std::uint64_t q_;
};

std::vector<Poly> factor_squarefree_gf(const Poly& f, const FactorOptions& opt) {
    std::vector<Poly> irreducibles;
    EqualDegreeSplitter splitter(f.field(), opt.seed);
    for (auto& [part, d] : distinct_degree(f)) {
        if (part.degree() == d) {
            irreducibles.push_back(part.monic());
        } else {
            splitter.split(part, d, irreducibles);
        }
    }
    return irreducibles;
}

// ----- rationals -----------------------------------------------------------

mpq_class q_of(const ScalarValue& v) { return std::get<mpq_class>(v); }

// signed divisor list is derived from the positive ones; caller handles signs
std::vector<mpz_class> positive_divisors(const mpz_class& n0, const FactorOptions& opt) {
    mpz_class n = abs(n0);
    if (n == 0) fail(ErrorCode::internal_error, "divisors of zero requested");
    std::map<mpz_class, int> primes;
    for (std::int64_t d = 2; d <= opt.trial_division_bound && mpz_class(d) * d <= n; ++d) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
            ++primes[mpz_class(static_cast<long>(d))];
            n /= static_cast<long>(d);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            fail(ErrorCode::unsupported_factorization,
                 "coefficient " + n.get_str() + " resists divisor enumeration");
        ++primes[n];
    }
    std::vector<mpz_class> divisors{mpz_class(1)};
    std::uint64_t count = 1;
    for (auto& [p, e] : primes) {
        count *= static_cast<std::uint64_t>(e) + 1;
        if (count > opt.max_candidates)
            fail(ErrorCode::unsupported_factorization, "divisor set too large");
        std::vector<mpz_class> next;
        next.reserve(divisors.size() * (static_cast<std::size_t>(e) + 1));
        for (auto& d : divisors) {
            mpz_class pw(1);
            for (int i = 0; i <= e; ++i) {
                next.push_back(d * pw);
                pw *= p;
            }
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

// integer-coefficient image of a rational polynomial: primitive, positive lead
std::vector<mpz_class> to_primitive_z(const Poly& f) {
    mpz_class den(1);
    for (auto& c : f.coeffs()) den = lcm(den, q_of(c).get_den());
    std::vector<mpz_class> z;
    z.reserve(f.coeffs().size());
    mpz_class content(0);
    for (auto& c : f.coeffs()) {
        mpq_class scaled = q_of(c) * den;
        z.push_back(scaled.get_num());
        content = gcd(content, z.back());
    }
    if (content == 0) return {};
    if (z.back() < 0) content = -content;
    for (auto& c : z) c /= content;
    return z;
}

Poly from_z(const FieldPtr& F, const std::vector<mpz_class>& z) {
    std::vector<ScalarValue> c;
    c.reserve(z.size());
    for (auto& v : z) c.push_back(mpq_class(v));
    return Poly(F, std::move(c));
}

mpz_class eval_z(const std::vector<mpz_class>& z, std::int64_t x) {
    mpz_class acc(0);
    for (std::size_t i = z.size(); i > 0; --i) acc = acc * x + z[i - 1];
    return acc;
}

// rational roots of a squarefree integer polynomial with nonzero constant term
std::vector<mpq_class> rational_roots(const std::vector<mpz_class>& z, const FactorOptions& opt) {
    std::vector<mpq_class> roots;
    auto nums = positive_divisors(z.front(), opt);
    auto dens = positive_divisors(z.back(), opt);
    Poly f = from_z(FieldSpec::rationals(), z);
    for (auto& r : nums)
        for (auto& s : dens) {
            if (gcd(r, s) != 1) continue;
            for (int sign : {1, -1}) {
                mpq_class cand(sign > 0 ? r : mpz_class(-r), s);
                cand.canonicalize();
                if (FieldSpec::rationals()->is_zero(f.eval(cand))) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end(), [](const mpq_class& a, const mpq_class& b) { return a < b; });
    return roots;
}

// Kronecker search: smallest-degree factor of a squarefree integer polynomial
// with no rational roots; empty result means irreducible.
std::vector<mpz_class> kronecker_factor(const std::vector<mpz_class>& z, const FactorOptions& opt) {
    const FieldPtr F = FieldSpec::rationals();
    int n = static_cast<int>(z.size()) - 1;
    Poly f = from_z(F, z);
    for (int d = 2; d <= n / 2; ++d) {
        // sample points 0, 1, -1, 2, -2, ...; an extra one is kept as a value filter
        std::vector<std::int64_t> pts;
        for (std::int64_t s = 0; static_cast<int>(pts.size()) < d + 2; ++s)
            pts.push_back(s % 2 == 0 ? -(s / 2) : (s + 1) / 2);
        std::int64_t x_extra = pts.back();
        pts.pop_back();

        std::vector<std::vector<mpz_class>> divs(static_cast<std::size_t>(d) + 1);
        std::uint64_t tuples = 1;
        bool too_big = false;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
            divs[i] = positive_divisors(eval_z(z, pts[i]), opt);
            std::uint64_t options = static_cast<std::uint64_t>(divs[i].size()) * (i == 0 ? 1 : 2);
            if (tuples > opt.max_candidates / options + 1) {
                too_big = true;
                break;
            }
            tuples *= options;
        }
        if (too_big || tuples > opt.max_candidates)
            fail(ErrorCode::unsupported_factorization,
                 "factor search budget exceeded at degree " + std::to_string(d));

        // Lagrange basis for the chosen points
        std::vector<Poly> basis;
        for (int i = 0; i <= d; ++i) {
            Poly L = Poly::one(F);
            mpq_class denom(1);
            for (int j = 0; j <= d; ++j) {
                if (j == i) continue;
                L = L * Poly::linear_root(F, mpq_class(static_cast<long>(pts[static_cast<std::size_t>(j)])));
                denom *= mpq_class(static_cast<long>(pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]));
            }
            basis.push_back(L.scaled(mpq_class(1) / denom));
        }
        std::vector<mpq_class> basis_at_extra;
        for (auto& L : basis) basis_at_extra.push_back(q_of(L.eval(mpq_class(static_cast<long>(x_extra)))));
        mpz_class f_extra = eval_z(z, x_extra);

        // odometer over (sign, divisor) choices; position 0 stays positive
        std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1, 0);
        auto value_at = [&](std::size_t i) {
            std::size_t raw = idx[i];
            if (i == 0) return divs[0][raw];
            mpz_class v = divs[i][raw / 2];
            return raw % 2 ? mpz_class(-v) : v;
        };
        while (true) {
            // value filter at the extra point before any polynomial work
            mpq_class g_extra(0);
            for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i)
                g_extra += basis_at_extra[i] * mpq_class(value_at(i));
            if (g_extra != 0 && g_extra.get_den() == 1 &&
                mpz_divisible_p(f_extra.get_mpz_t(), g_extra.get_num().get_mpz_t())) {
                Poly g = Poly::zero(F);
                for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i)
                    g = g + basis[i].scaled(mpq_class(value_at(i)));
                if (g.degree() == d) {
                    bool integral = true;
                    for (auto& c : g.coeffs())
                        if (q_of(c).get_den() != 1) {
                            integral = false;
                            break;
                        }
                    if (integral && g.divides(f)) {
                        std::vector<mpz_class> out;
                        for (auto& c : g.coeffs()) out.push_back(q_of(c).get_num());
                        return out;
                    }
                }
            }
            // advance odometer
            std::size_t pos = 0;
            while (pos <= static_cast<std::size_t>(d)) {
                std::size_t limit = divs[pos].size() * (pos == 0 ? 1 : 2);
                if (++idx[pos] < limit) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos > static_cast<std::size_t>(d)) break;
        }
    }
    return {};
}

void factor_squarefree_q_rec(const std::vector<mpz_class>& z, const FactorOptions& opt,
                             std::vector<Poly>& out) {
    const FieldPtr F = FieldSpec::rationals();
    if (static_cast<int>(z.size()) - 1 <= 0) return;
    if (static_cast<int>(z.size()) - 1 == 1) {
        out.push_back(from_z(F, z).monic());
        return;
    }
    std::vector<mpz_class> g = kronecker_factor(z, opt);
    if (g.empty()) {
        out.push_back(from_z(F, z).monic());
        return;
    }
    Poly quotient = from_z(F, z).divexact(from_z(F, g));
    factor_squarefree_q_rec(to_primitive_z(quotient), opt, out);
    factor_squarefree_q_rec(g, opt, out);
}

std::vector<Poly> factor_squarefree_q(const Poly& f, const FactorOptions& opt) {
    const FieldPtr F = FieldSpec::rationals();
    std::vector<Poly> irreducibles;
    Poly rest = f.monic();
    // powers of x
    int v = 0;
    while (rest.degree() > 0 && F->is_zero(rest.coeff(0))) {
        ++v;
        std::vector<ScalarValue> c(rest.coeffs().begin() + 1, rest.coeffs().end());
        rest = Poly(F, std::move(c));
    }
    if (v > 1) fail(ErrorCode::internal_error, "squarefree input expected");
    if (v == 1) irreducibles.push_back(Poly::x(F));
    if (rest.degree() == 0) return irreducibles;

    std::vector<mpz_class> z = to_primitive_z(rest);
    for (auto& r : rational_roots(z, opt)) {
        Poly lin = Poly::linear_root(F, r);
        rest = rest.divexact(lin);
        irreducibles.push_back(lin);
    }
    if (rest.degree() == 0) return irreducibles;
    if (rest.degree() > opt.max_degree_rationals)
        fail(ErrorCode::unsupported_factorization,
             "degree " + std::to_string(rest.degree()) + " exceeds the rational factorization cap of " +
                 std::to_string(opt.max_degree_rationals));
    factor_squarefree_q_rec(to_primitive_z(rest), opt, irreducibles);
    return irreducibles;
}

}  // namespace

Factorization factor_poly(const Poly& f, const FactorOptions& opt) {
    if (f.is_zero())
        fail(ErrorCode::unsupported_factorization, "the zero polynomial has no factorization");
    const FieldPtr& F = f.field();
    Factorization result{f.lead(), {}};
    if (f.degree() == 0) return result;
    Poly m = f.monic();

    std::vector<std::pair<Poly, int>> square_parts = squarefree_decomposition(m);
    std::vector<FactorTerm> terms;
    for (auto& [part, mult] : square_parts) {
        std::vector<Poly> irr = F->is_finite() ? factor_squarefree_gf(part, opt)
                                               : factor_squarefree_q(part, opt);
        for (auto& g : irr) terms.push_back({g, mult});
    }
    std::sort(terms.begin(), terms.end(),
              [](const FactorTerm& a, const FactorTerm& b) { return Poly::compare(a.factor, b.factor) < 0; });
    // merged sanity check: degrees must add up
    int total = 0;
    for (auto& t : terms) total += t.factor.degree() * t.multiplicity;
    if (total != f.degree()) fail(ErrorCode::internal_error, "factorization degree mismatch");
    result.factors = std::move(terms);
    return result;
}

Poly squarefree_part(const Poly& f, const FactorOptions&) {
    if (f.is_zero()) return f;
    Poly m = f.monic();
    if (m.degree() == 0) return m;
    Poly result = Poly::one(f.field());
    for (auto& [part, mult] : squarefree_decomposition(m)) result = result * part;
    return result;
}

}  // namespace fcalg
