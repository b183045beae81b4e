#include "doctest.h"
#include "fcalg/field.hpp"
#include "helpers.hpp"

using namespace fcalg;
using fcalg::testing::error_of;
using fcalg::testing::Rng;

TEST_SUITE("field") {

TEST_CASE("rational arithmetic is exact") {
    auto Q = FieldSpec::rationals();
    CHECK(Q->kind() == FieldKind::rationals);
    CHECK(Q->characteristic() == 0);
    CHECK_FALSE(Q->is_finite());
    CHECK_FALSE(Q->order().has_value());
    CHECK(Q->is_zero(Q->sub(Q->parse("3/6"), Q->parse("1/2"))));
    CHECK(Q->eq(Q->mul(Q->parse("2/3"), Q->parse("3/2")), Q->one()));
    CHECK(Q->str(Q->parse("-10/4")) == "-5/2");
    CHECK(Q->str(Q->from_integer(7)) == "7");
}

TEST_CASE("prime field arithmetic") {
    auto F2 = FieldSpec::prime(2);
    CHECK(F2->eq(F2->add(F2->one(), F2->one()), F2->zero()));
    CHECK(F2->order() == std::uint64_t(2));

    auto F7 = FieldSpec::prime(7);
    for (std::int64_t a = 1; a < 7; ++a) {
        ScalarValue x = F7->from_integer(a);
        CHECK(F7->eq(F7->mul(x, F7->inv(x)), F7->one()));
    }
    CHECK(error_of([&] { F7->inv(F7->zero()); }) == ErrorCode::division_by_zero);
}

TEST_CASE("extension field arithmetic and indexing") {
    auto F4 = FieldSpec::extension(2, {1, 1, 1});  // x^2 + x + 1
    CHECK(F4->degree() == 2);
    CHECK(F4->order() == std::uint64_t(4));
    ScalarValue t = F4->element_at(2);
    CHECK(F4->eq(F4->mul(t, t), F4->add(t, F4->one())));  // t^2 = t + 1
    CHECK(F4->eq(F4->mul(t, F4->inv(t)), F4->one()));

    auto F9 = FieldSpec::extension(3, {1, 0, 1});  // x^2 + 1 over GF(3)
    CHECK(F9->order() == std::uint64_t(9));
    for (std::uint64_t i = 0; i < 9; ++i) {
        ScalarValue e = F9->element_at(i);
        CHECK(F9->index_of(e) == i);
        if (i) CHECK(F9->eq(F9->mul(e, F9->inv(e)), F9->one()));
    }
    // index convention: 0 -> 0, 1 -> 1
    CHECK(F9->is_zero(F9->element_at(0)));
    CHECK(F9->is_one(F9->element_at(1)));
}

TEST_CASE("invalid constructions are rejected") {
    CHECK(error_of([] { FieldSpec::prime(4); }) == ErrorCode::invalid_field);
    CHECK(error_of([] { FieldSpec::extension(2, {0, 0, 1}); }) == ErrorCode::invalid_field);
    // x^2 + 1 = (x+1)^2 over GF(2): reducible modulus
    CHECK(error_of([] { FieldSpec::extension(2, {1, 0, 1}); }) == ErrorCode::invalid_field);
    CHECK(error_of([] {
        auto Q = FieldSpec::rationals();
        Q->parse("1.5");
    }) == ErrorCode::parse_error);
    CHECK(error_of([] {
        auto Q = FieldSpec::rationals();
        Q->parse("1/0");
    }) == ErrorCode::parse_error);
}

TEST_CASE("shift enumerator order and exhaustion") {
    auto F2 = FieldSpec::prime(2);
    FieldSpec::ShiftEnumerator se(F2);
    auto s0 = se.next();
    auto s1 = se.next();
    REQUIRE(s0.has_value());
    REQUIRE(s1.has_value());
    CHECK(F2->is_zero(*s0));
    CHECK(F2->is_one(*s1));
    CHECK_FALSE(se.next().has_value());

    auto F5 = FieldSpec::prime(5);
    FieldSpec::ShiftEnumerator s5(F5);
    std::vector<std::int64_t> got;
    while (auto v = s5.next()) got.push_back(std::get<std::int64_t>(*v));
    CHECK(got == std::vector<std::int64_t>{0, 1, 4, 2, 3});

    // over the rationals: 0, 1, -1, 2, -2, ...
    auto Q = FieldSpec::rationals();
    FieldSpec::ShiftEnumerator sq(Q);
    std::vector<std::string> first;
    for (int i = 0; i < 5; ++i) first.push_back(Q->str(*sq.next()));
    CHECK(first == std::vector<std::string>{"0", "1", "-1", "2", "-2"});
}

TEST_CASE("1000 random nonzero scalars per field satisfy a * inv(a) = 1") {
    Rng rng(0x5eed1);
    std::vector<FieldPtr> finite = {
        FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(7),
        FieldSpec::extension(2, {1, 1, 1}), FieldSpec::extension(3, {1, 0, 1})};
    for (const FieldPtr& F : finite) {
        std::uint64_t n = *F->order();
        for (int i = 0; i < 1000; ++i) {
            ScalarValue a = F->element_at(1 + rng.below(n - 1));
            CHECK(F->eq(F->mul(a, F->inv(a)), F->one()));
        }
    }
    auto Q = FieldSpec::rationals();
    for (int i = 0; i < 1000; ++i) {
        std::int64_t num = rng.small_int(50);
        if (num == 0) num = 1;
        std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(50));
        ScalarValue a = Q->div(Q->from_integer(num), Q->from_integer(den));
        CHECK(Q->eq(Q->mul(a, Q->inv(a)), Q->one()));
    }
}

}  // TEST_SUITE
