#include <doctest.h>

#include "potalg/parse.hpp"

using namespace potalg;

TEST_CASE("field specs parse and reject bad moduli") {
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("cyclo72") == FieldSpec::cyclotomic72());
    CHECK(FieldSpec::parse("fp:1009") == FieldSpec::prime(1009));
    CHECK_THROWS_AS(FieldSpec::prime(1000), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(1013), std::invalid_argument);  // prime, but not 1 mod 72
    CHECK_THROWS(FieldSpec::parse("gf(7)"));
}

TEST_CASE("roots of unity satisfy their defining identities in every backend") {
    for (auto spec : {FieldSpec::cyclotomic72(), FieldSpec::prime(1009), FieldSpec::prime(433)}) {
        CAPTURE(spec.to_string());
        auto one = Scalar::one(spec);
        auto theta = named_constant(spec, "theta");
        auto i = named_constant(spec, "i");
        auto xi8 = named_constant(spec, "xi8");
        auto xi9 = named_constant(spec, "xi9");
        CHECK((theta * theta + theta + one).is_zero());
        CHECK(i * i == -one);
        CHECK(xi8.pow(4) == -one);
        CHECK(xi8 * xi8 == i);
        CHECK(xi9.pow(3) == theta);
        CHECK(xi9.pow(9) == one);
        CHECK(xi9.pow(-1) == xi9.pow(8));
    }
}

TEST_CASE("rationals have no nontrivial roots of unity") {
    CHECK_THROWS_AS(named_constant(FieldSpec::rationals(), "theta"), UnsupportedOrder);
    CHECK_THROWS_AS(parse_scalar("1 + i", FieldSpec::rationals()), UnsupportedOrder);
}

TEST_CASE("arithmetic errors") {
    auto q = FieldSpec::rationals();
    CHECK_THROWS_AS(Scalar::zero(q).inv(), DivisionByZero);
    CHECK_THROWS_AS(parse_scalar("1/0", q), DivisionByZero);
    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(FieldSpec::prime()), MixedBackends);
    CHECK_THROWS_AS(parse_scalar("foo + 1", q), UnknownConstant);
}

TEST_CASE("scalar expressions evaluate exactly") {
    auto q = FieldSpec::rationals();
    CHECK(parse_scalar("(1+2)*3/4 - 1/4", q) == Scalar::from_mpq(q, mpq_class(2)));
    CHECK(parse_scalar("2^-3", q) == Scalar::from_mpq(q, mpq_class(1, 8)));
    ParamMap pm{{"a", Scalar::from_int(q, 3)}};
    CHECK(parse_scalar("a^2 - 1/a", q, pm) == Scalar::from_mpq(q, mpq_class(26, 3)));
    auto p = FieldSpec::prime();
    CHECK(parse_scalar("1/2", p) * Scalar::from_int(p, 2) == Scalar::one(p));
    CHECK(Scalar::from_int(p, -1) == Scalar::from_int(p, 1008));
}

TEST_CASE("printed scalars parse back to themselves") {
    auto c = FieldSpec::cyclotomic72();
    for (const char* s : {"theta", "1 - theta/3", "xi8 + 2*xi9^5", "zeta72^7 - 5/7", "-i"}) {
        auto v = parse_scalar(s, c);
        CHECK(parse_scalar(v.to_string(), c) == v);
    }
    auto q = FieldSpec::rationals();
    auto v = parse_scalar("-22/6", q);
    CHECK(v.to_string() == "-11/3");
}

TEST_CASE("field inverse is a two-sided inverse") {
    auto c = FieldSpec::cyclotomic72();
    auto v = parse_scalar("1 + 2*zeta72 - zeta72^13", c);
    CHECK(v * v.inv() == Scalar::one(c));
    auto p = FieldSpec::prime();
    for (int a = 1; a < 1009; a += 37) CHECK(Scalar::from_int(p, a) * Scalar::from_int(p, a).inv() == Scalar::one(p));
}
