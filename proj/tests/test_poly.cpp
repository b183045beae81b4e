#include "doctest.h"
#include "fcalg/poly.hpp"
#include "helpers.hpp"

using namespace fcalg;
using fcalg::testing::error_of;
using fcalg::testing::Rng;

namespace {

Poly random_poly(const FieldPtr& F, int max_degree, Rng& rng) {
    int deg = static_cast<int>(rng.below(max_degree + 1));
    std::vector<ScalarValue> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.push_back(F->element_at(rng.below(*F->order())));
    return Poly(F, coeffs);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("division, gcd, and extended gcd over the rationals") {
    auto Q = FieldSpec::rationals();
    Poly f(Q, {Q->parse("-1"), Q->parse("0"), Q->parse("1")});  // x^2 - 1
    Poly g(Q, {Q->parse("1"), Q->parse("1")});                  // x + 1
    CHECK(Poly::gcd(f, g) == g.monic());
    auto [d, s, t] = Poly::xgcd(f, g);
    CHECK(s * f + t * g == d);

    auto [q, r] = Poly::divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(error_of([&] { Poly::divmod(f, Poly(Q, {})); }) == ErrorCode::division_by_zero);
}

TEST_CASE("rational factorization anchors") {
    auto Q = FieldSpec::rationals();
    Poly f(Q, {Q->parse("-1"), Q->parse("0"), Q->parse("1")});
    auto fact = factor_poly(f);
    REQUIRE(fact.factors.size() == 2);
    CHECK(fact.factors[0].factor == Poly(Q, {Q->parse("-1"), Q->parse("1")}));
    CHECK(fact.factors[1].factor == Poly(Q, {Q->parse("1"), Q->parse("1")}));

    // x^n - 1 over the rationals has one irreducible factor per divisor of n
    CHECK(factor_poly(Poly::xn_minus_one(Q, 4)).factors.size() == 3);
    CHECK(factor_poly(Poly::xn_minus_one(Q, 6)).factors.size() == 4);
    CHECK(factor_poly(Poly::xn_minus_one(Q, 12)).factors.size() == 6);

    // multiplicities: (x-1)^2 (x+2)^3
    Poly m1 = Poly::linear_root(Q, Q->from_integer(1));
    Poly m2 = Poly::linear_root(Q, Q->from_integer(-2));
    auto fm = factor_poly(m1 * m1 * m2 * m2 * m2);
    REQUIRE(fm.factors.size() == 2);
    CHECK(fm.factors[0].multiplicity == 2);
    CHECK(fm.factors[1].multiplicity == 3);

    // irreducible quartic stays whole; x^4 + 4 splits into two quadratics
    Poly quart(Q, {Q->parse("1"), Q->parse("1"), Q->parse("0"), Q->parse("0"), Q->parse("1")});
    auto fq = factor_poly(quart);
    CHECK(fq.factors.size() == 1);
    CHECK(fq.factors[0].factor == quart);
    Poly x44(Q, {Q->parse("4"), Q->parse("0"), Q->parse("0"), Q->parse("0"), Q->parse("1")});
    auto fx = factor_poly(x44);
    REQUIRE(fx.factors.size() == 2);
    CHECK(fx.factors[0].factor.degree() == 2);
    CHECK(fx.factors[1].factor.degree() == 2);

    // the degree cap is enforced
    FactorOptions tight;
    tight.max_degree_rationals = 3;
    CHECK(error_of([&] { factor_poly(Poly::xn_minus_one(Q, 6), tight); }) ==
          ErrorCode::unsupported_factorization);
}

TEST_CASE("finite field factorization anchors") {
    auto F2 = FieldSpec::prime(2);
    auto F3 = FieldSpec::prime(3);
    auto F4 = FieldSpec::extension(2, {1, 1, 1});
    auto F9 = FieldSpec::extension(3, {1, 0, 1});

    // x^4 + x = x (x+1) (x^2+x+1) over GF(2)
    Poly gf(F2, {F2->zero(), F2->one(), F2->zero(), F2->zero(), F2->one()});
    CHECK(factor_poly(gf).factors.size() == 3);

    // (x^2+x+1)^2 = x^4 + x^2 + 1: the p-th-power path
    Poly sq(F2, {F2->one(), F2->zero(), F2->one(), F2->zero(), F2->one()});
    auto fsq = factor_poly(sq);
    REQUIRE(fsq.factors.size() == 1);
    CHECK(fsq.factors[0].multiplicity == 2);

    CHECK(factor_poly(Poly::xn_minus_one(F3, 4)).factors.size() == 3);

    // GF(4) contains the cube roots of unity; GF(9) the eighth roots
    auto f34 = factor_poly(Poly::xn_minus_one(F4, 3));
    REQUIRE(f34.factors.size() == 3);
    for (const auto& ft : f34.factors) CHECK(ft.factor.degree() == 1);
    CHECK(factor_poly(Poly::xn_minus_one(F9, 8)).factors.size() == 8);

    auto F101 = FieldSpec::prime(101);
    CHECK(factor_poly(Poly::xn_minus_one(F101, 100)).factors.size() == 100);
}

TEST_CASE("random factorizations multiply back to the input") {
    Rng rng(0x5eed2);
    for (std::int64_t p : {2, 3, 5, 7}) {
        auto F = FieldSpec::prime(p);
        for (int trial = 0; trial < 40; ++trial) {
            Poly f = random_poly(F, 8, rng);
            if (f.degree() < 1) continue;
            auto fact = factor_poly(f);
            Poly prod(F, {fact.unit});
            for (const auto& ft : fact.factors) {
                CHECK(ft.factor.monic() == ft.factor);
                for (int m = 0; m < ft.multiplicity; ++m) prod = prod * ft.factor;
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("evaluation is multiplicative on random pairs") {
    Rng rng(0x5eed3);
    auto F7 = FieldSpec::prime(7);
    for (int trial = 0; trial < 100; ++trial) {
        Poly f = random_poly(F7, 6, rng);
        Poly g = random_poly(F7, 6, rng);
        ScalarValue alpha = F7->element_at(rng.below(7));
        CHECK(F7->eq((f * g).eval(alpha), F7->mul(f.eval(alpha), g.eval(alpha))));
    }
    auto Q = FieldSpec::rationals();
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ScalarValue> fc, gc;
        for (int i = 0; i <= 4; ++i) fc.push_back(Q->from_integer(rng.small_int(9)));
        for (int i = 0; i <= 4; ++i) gc.push_back(Q->from_integer(rng.small_int(9)));
        Poly f(Q, fc), g(Q, gc);
        ScalarValue alpha = Q->from_integer(rng.small_int(9));
        CHECK(Q->eq((f * g).eval(alpha), Q->mul(f.eval(alpha), g.eval(alpha))));
    }
}

TEST_CASE("field mismatch is rejected") {
    auto Q = FieldSpec::rationals();
    auto F2 = FieldSpec::prime(2);
    Poly f(Q, {Q->one(), Q->one()});
    Poly g(F2, {F2->one(), F2->one()});
    CHECK(error_of([&] { f * g; }) == ErrorCode::field_mismatch);
}

}  // TEST_SUITE
