#include "fcalg/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fcalg {

namespace {

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_i64(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t inv_mod_i64(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return mod_i64(old_s, p);
}

// dense polynomials over GF(p), lowest degree first, trimmed
using ZpPoly = std::vector<std::int64_t>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(c);
    return c;
}

// remainder of a by monic-leading m
ZpPoly zp_rem(ZpPoly a, const ZpPoly& m, std::int64_t p) {
    std::int64_t lead_inv = inv_mod_i64(m.back(), p);
    while (a.size() >= m.size()) {
        std::int64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - m.size();
        if (c != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = mod_i64(a[shift + i] - c * m[i], p);
        a.pop_back();
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZpPoly zp_powmod(ZpPoly base, std::int64_t e, const ZpPoly& m, std::int64_t p) {
    ZpPoly result{1};
    base = zp_rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = zp_rem(zp_mul(result, base, p), m, p);
        e >>= 1;
        if (e) base = zp_rem(zp_mul(base, base, p), m, p);
    }
    return result;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t s = inv_mod_i64(a.back(), p);
        for (auto& c : a) c = c * s % p;
    }
    return a;
}

// irreducible over GF(p) iff no irreducible factor of degree <= deg/2;
// x^(p^d) - x is the product of all irreducibles of degree dividing d
bool zp_irreducible(const ZpPoly& m, std::int64_t p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    ZpPoly xp{0, 1};
    for (int d = 1; d <= k / 2; ++d) {
        xp = zp_powmod(std::move(xp), p, m, p);
        ZpPoly probe = xp;
        if (probe.size() < 2) probe.resize(2, 0);
        probe[1] = mod_i64(probe[1] - 1, p);
        zp_trim(probe);
        if (probe.empty()) return false;  // m divides x^(p^d) - x, so m splits into degree <= d pieces
        if (zp_gcd(probe, m, p).size() > 1) return false;
    }
    return true;
}

}  // namespace

FieldPtr FieldSpec::rationals() {
    static FieldPtr instance = [] {
        auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
        f->kind_ = FieldKind::rationals;
        f->p_ = 0;
        f->k_ = 1;
        return FieldPtr(f);
    }();
    return instance;
}

FieldPtr FieldSpec::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        fail(ErrorCode::invalid_field, "characteristic must be a prime below 2^31, got " + std::to_string(p));
    if (!is_prime_i64(p))
        fail(ErrorCode::invalid_field, std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
    f->kind_ = FieldKind::prime_field;
    f->p_ = p;
    f->k_ = 1;
    return f;
}

FieldPtr FieldSpec::extension(std::int64_t p, const std::vector<std::int64_t>& modulus) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        fail(ErrorCode::invalid_field, "characteristic must be a prime below 2^31, got " + std::to_string(p));
    if (!is_prime_i64(p))
        fail(ErrorCode::invalid_field, std::to_string(p) + " is not prime");
    if (modulus.size() < 2)
        fail(ErrorCode::invalid_field, "modulus must have degree at least 1");
    std::vector<std::int64_t> m(modulus.size());
    for (std::size_t i = 0; i < modulus.size(); ++i) m[i] = mod_i64(modulus[i], p);
    if (m.back() != 1)
        fail(ErrorCode::invalid_field, "modulus must be monic");
    int k = static_cast<int>(m.size()) - 1;
    if (k == 1) return prime(p);  // GF(p)[t]/(t+c) is GF(p)
    double bits = k * std::log2(static_cast<double>(p));
    if (bits > 62.0)
        fail(ErrorCode::invalid_field, "field order p^k exceeds 2^62");
    if (!zp_irreducible(m, p))
        fail(ErrorCode::invalid_field, "modulus is reducible over GF(" + std::to_string(p) + ")");
    auto f = std::shared_ptr<FieldSpec>(new FieldSpec());
    f->kind_ = FieldKind::extension_field;
    f->p_ = p;
    f->k_ = k;
    f->modulus_ = std::move(m);
    return f;
}

std::optional<std::uint64_t> FieldSpec::order() const {
    if (kind_ == FieldKind::rationals) return std::nullopt;
    std::uint64_t q = 1;
    for (int i = 0; i < k_; ++i) q *= static_cast<std::uint64_t>(p_);
    return q;
}

bool FieldSpec::same(const FieldSpec& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

std::string FieldSpec::name() const {
    switch (kind_) {
        case FieldKind::rationals: return "QQ";
        case FieldKind::prime_field: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::extension_field:
            return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
    }
    return "?";
}

std::int64_t FieldSpec::residue(std::int64_t v) const { return mod_i64(v, p_); }

const GFCoeffs& FieldSpec::coeffs(const ScalarValue& a) const { return std::get<GFCoeffs>(a); }

ScalarValue FieldSpec::zero() const { return from_integer(0); }

ScalarValue FieldSpec::one() const { return from_integer(1); }

ScalarValue FieldSpec::from_integer(std::int64_t n) const {
    switch (kind_) {
        case FieldKind::rationals: return mpq_class(static_cast<long>(n));
        case FieldKind::prime_field: return residue(n);
        case FieldKind::extension_field: {
            GFCoeffs c(static_cast<std::size_t>(k_), 0);
            c[0] = residue(n);
            return c;
        }
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

ScalarValue FieldSpec::from_mpq(const mpq_class& q) const {
    if (kind_ != FieldKind::rationals)
        fail(ErrorCode::invalid_field, "rational literal given for " + name());
    mpq_class c(q);
    c.canonicalize();
    return c;
}

ScalarValue FieldSpec::parse(const std::string& text) const {
    try {
        if (kind_ == FieldKind::rationals) {
            mpq_class q(text);
            if (q.get_den() == 0) fail(ErrorCode::parse_error, "zero denominator in " + text);
            q.canonicalize();
            return q;
        }
        std::size_t pos = 0;
        long long v = std::stoll(text, &pos);
        if (pos != text.size()) fail(ErrorCode::parse_error, "trailing characters in " + text);
        return from_integer(static_cast<std::int64_t>(v));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::parse_error, "cannot read scalar from \"" + text + "\" for " + name());
    }
}

ScalarValue FieldSpec::add(const ScalarValue& a, const ScalarValue& b) const {
    switch (kind_) {
        case FieldKind::rationals: return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
        case FieldKind::prime_field: return (std::get<std::int64_t>(a) + std::get<std::int64_t>(b)) % p_;
        case FieldKind::extension_field: {
            GFCoeffs c = coeffs(a);
            const GFCoeffs& d = coeffs(b);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + d[i]) % p_;
            return c;
        }
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

ScalarValue FieldSpec::sub(const ScalarValue& a, const ScalarValue& b) const {
    switch (kind_) {
        case FieldKind::rationals: return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
        case FieldKind::prime_field: return mod_i64(std::get<std::int64_t>(a) - std::get<std::int64_t>(b), p_);
        case FieldKind::extension_field: {
            GFCoeffs c = coeffs(a);
            const GFCoeffs& d = coeffs(b);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_i64(c[i] - d[i], p_);
            return c;
        }
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

GFCoeffs FieldSpec::ext_mul(const GFCoeffs& a, const GFCoeffs& b) const {
    ZpPoly prod(2 * static_cast<std::size_t>(k_) - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < k_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p_;
    }
    ZpPoly r = zp_rem(std::move(prod), modulus_, p_);
    r.resize(static_cast<std::size_t>(k_), 0);
    return r;
}

GFCoeffs FieldSpec::ext_inv(const GFCoeffs& a) const {
    // extended Euclid: s*a + t*modulus = gcd, gcd constant since modulus irreducible
    ZpPoly r0 = modulus_, r1 = a;
    zp_trim(r1);
    ZpPoly s0{}, s1{1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        ZpPoly q;
        ZpPoly rem = r0;
        std::int64_t lead_inv = inv_mod_i64(r1.back(), p_);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::int64_t c = rem.back() * lead_inv % p_;
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_i64(rem[shift + i] - c * r1[i], p_);
            zp_trim(rem);
            if (rem.empty()) break;
            if (rem.size() < r1.size()) break;
        }
        ZpPoly s2_sub = zp_mul(q, s1, p_);
        ZpPoly s2 = s0;
        if (s2.size() < s2_sub.size()) s2.resize(s2_sub.size(), 0);
        for (std::size_t i = 0; i < s2_sub.size(); ++i) s2[i] = mod_i64(s2[i] - s2_sub[i], p_);
        zp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    std::int64_t scale = inv_mod_i64(r0[0], p_);
    GFCoeffs out(static_cast<std::size_t>(k_), 0);
    for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] * scale % p_;
    return out;
}

ScalarValue FieldSpec::mul(const ScalarValue& a, const ScalarValue& b) const {
    switch (kind_) {
        case FieldKind::rationals: return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
        case FieldKind::prime_field: return std::get<std::int64_t>(a) * std::get<std::int64_t>(b) % p_;
        case FieldKind::extension_field: return ext_mul(coeffs(a), coeffs(b));
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

ScalarValue FieldSpec::neg(const ScalarValue& a) const {
    switch (kind_) {
        case FieldKind::rationals: return mpq_class(-std::get<mpq_class>(a));
        case FieldKind::prime_field: return mod_i64(-std::get<std::int64_t>(a), p_);
        case FieldKind::extension_field: {
            GFCoeffs c = coeffs(a);
            for (auto& v : c) v = mod_i64(-v, p_);
            return c;
        }
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

ScalarValue FieldSpec::inv(const ScalarValue& a) const {
    if (is_zero(a)) fail(ErrorCode::division_by_zero, "inverse of zero in " + name());
    switch (kind_) {
        case FieldKind::rationals: return mpq_class(1 / std::get<mpq_class>(a));
        case FieldKind::prime_field: return inv_mod_i64(std::get<std::int64_t>(a), p_);
        case FieldKind::extension_field: return ext_inv(coeffs(a));
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

ScalarValue FieldSpec::div(const ScalarValue& a, const ScalarValue& b) const {
    return mul(a, inv(b));
}

ScalarValue FieldSpec::pow(const ScalarValue& a, std::int64_t e) const {
    ScalarValue base = e < 0 ? inv(a) : a;
    std::uint64_t exp = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    ScalarValue result = one();
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        exp >>= 1;
        if (exp) base = mul(base, base);
    }
    return result;
}

bool FieldSpec::is_zero(const ScalarValue& a) const {
    switch (kind_) {
        case FieldKind::rationals: return std::get<mpq_class>(a) == 0;
        case FieldKind::prime_field: return std::get<std::int64_t>(a) == 0;
        case FieldKind::extension_field: {
            for (auto v : coeffs(a))
                if (v != 0) return false;
            return true;
        }
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

bool FieldSpec::is_one(const ScalarValue& a) const { return eq(a, one()); }

bool FieldSpec::eq(const ScalarValue& a, const ScalarValue& b) const {
    switch (kind_) {
        case FieldKind::rationals: return std::get<mpq_class>(a) == std::get<mpq_class>(b);
        case FieldKind::prime_field: return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
        case FieldKind::extension_field: return coeffs(a) == coeffs(b);
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

int FieldSpec::cmp(const ScalarValue& a, const ScalarValue& b) const {
    if (kind_ == FieldKind::rationals) {
        int c = ::cmp(std::get<mpq_class>(a), std::get<mpq_class>(b));
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    std::uint64_t ia = index_of(a), ib = index_of(b);
    return ia < ib ? -1 : (ia > ib ? 1 : 0);
}

std::uint64_t FieldSpec::index_of(const ScalarValue& a) const {
    switch (kind_) {
        case FieldKind::rationals:
            fail(ErrorCode::invalid_field, "rationals are not enumerable");
        case FieldKind::prime_field:
            return static_cast<std::uint64_t>(std::get<std::int64_t>(a));
        case FieldKind::extension_field: {
            const GFCoeffs& c = coeffs(a);
            std::uint64_t idx = 0;
            for (int i = k_ - 1; i >= 0; --i)
                idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(c[static_cast<std::size_t>(i)]);
            return idx;
        }
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

ScalarValue FieldSpec::element_at(std::uint64_t index) const {
    auto q = order();
    if (!q) fail(ErrorCode::invalid_field, "rationals are not enumerable");
    if (index >= *q) fail(ErrorCode::invalid_field, "field index out of range");
    if (kind_ == FieldKind::prime_field) return static_cast<std::int64_t>(index);
    GFCoeffs c(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p_));
        index /= static_cast<std::uint64_t>(p_);
    }
    return c;
}

std::string FieldSpec::str(const ScalarValue& a) const {
    switch (kind_) {
        case FieldKind::rationals: return std::get<mpq_class>(a).get_str();
        case FieldKind::prime_field: return std::to_string(std::get<std::int64_t>(a));
        case FieldKind::extension_field: {
            std::ostringstream os;
            os << "[";
            const GFCoeffs& c = coeffs(a);
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) os << ",";
                os << c[i];
            }
            os << "]";
            return os.str();
        }
    }
    fail(ErrorCode::internal_error, "bad field kind");
}

FieldSpec::ShiftEnumerator::ShiftEnumerator(FieldPtr field) : field_(std::move(field)) {}

std::optional<ScalarValue> FieldSpec::ShiftEnumerator::next() {
    if (field_->kind() == FieldKind::rationals) {
        std::int64_t s = step_ % 2 == 0 ? -(step_ / 2) : (step_ + 1) / 2;
        ++step_;
        return field_->from_integer(s);
    }
    std::uint64_t q = *field_->order();
    if (emitted_ >= q) return std::nullopt;
    ++emitted_;
    if (field_->kind() == FieldKind::extension_field) {
        // index order: 0, 1, then the remaining elements
        return field_->element_at(emitted_ - 1);
    }
    // 0, 1, p-1, 2, p-2, ...: distinct until the field is exhausted
    std::int64_t s = step_ % 2 == 0 ? -(step_ / 2) : (step_ + 1) / 2;
    ++step_;
    return field_->from_integer(s);
}

}  // namespace fcalg
