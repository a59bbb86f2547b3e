#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "potalg/errors.hpp"
#include "potalg/parse.hpp"

using namespace potalg;
using testing_support::random_homogeneous;

namespace {

NcPoly P(const std::string& s, int n = 3, const FieldSpec& spec = FieldSpec::rationals()) {
    return parse_ncpoly(s, n, spec);
}

}  // namespace

TEST_CASE("cyclic shift and cyclicization") {
    CHECK(cyclic_shift(P("xyz")) == P("yzx"));
    CHECK(cyclicize(P("xxy", 2)) == P("xxy + xyx + yxx", 2));
    CHECK(cyclicize(P("xyxy", 2)) == P("xyxy + yxyx + xyxy + yxyx", 2));
    CHECK(P("cyc(xyz)") == P("xyz + yzx + zxy"));
    CHECK(is_cyclicly_invariant(cyclicize(P("xxyz - 3*zzy"))));
    CHECK_FALSE(is_cyclicly_invariant(P("xxy", 2)));
}

TEST_CASE("left and right derivatives") {
    auto f = P("xyz + 2*xxy - zyx");
    CHECK(left_derivative(f, 0) == P("yz + 2*xy"));
    CHECK(left_derivative(f, 2) == P("-yx"));
    CHECK(right_derivative(f, 1) == P("2*xx"));
    CHECK(right_derivative(f, 2) == P("xy"));
    CHECK(left_derivative(P("7"), 0).is_zero());
}

TEST_CASE("a homogeneous polynomial is recovered from its derivatives") {
    auto q = FieldSpec::rationals();
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3, k = 2 + trial % 4;
        auto f = random_homogeneous(rng, n, k, q, 6);
        NcPoly left(n, q), right(n, q);
        for (int j = 0; j < n; ++j) {
            auto xj = NcPoly::generator(n, q, j);
            left += xj * left_derivative(f, j);
            right += right_derivative(f, j) * xj;
        }
        CHECK(left == f);
        CHECK(right == f);
    }
}

TEST_CASE("substitution composes and inverts") {
    auto q = FieldSpec::rationals();
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_homogeneous(rng, 3, 3, q, 5);
        LinearSub s{testing_support::random_invertible(rng, 3, q)};
        LinearSub t{testing_support::random_invertible(rng, 3, q)};
        CHECK(apply_substitution(apply_substitution(f, s), s.inverse()) == f);
        // x -> S(x), then x -> T(x): the combined image of x_j is S(T(x_j)) = (S T)_j
        CHECK(apply_substitution(apply_substitution(f, s), t) == apply_substitution(f, LinearSub{t.m * s.m}));
    }
    auto swap = LinearSub{Matrix::from_rows({{Scalar::zero(q), Scalar::one(q)}, {Scalar::one(q), Scalar::zero(q)}})};
    CHECK(apply_substitution(P("xxy", 2), swap) == P("yyx", 2));
    LinearSub singular{Matrix(2, 2, q)};
    CHECK_THROWS_AS(singular.inverse(), SingularSubstitution);
    CHECK_THROWS_AS(apply_substitution(P("xy", 2), singular), SingularSubstitution);
}

TEST_CASE("word basis round trip") {
    auto q = FieldSpec::rationals();
    CHECK(word_index(3, Word{2, 0, 1}) == 2 * 9 + 1);
    CHECK(word_from_index(3, 3, 19) == Word{2, 0, 1});
    auto f = P("xyz - 3*zzz + 1/2*yxy");
    CHECK(from_row(3, 3, q, to_row(f)) == f);
}

TEST_CASE("parser grammar") {
    CHECK(P("yx^3", 2) == P("yxyxyx", 2));
    CHECK(P("y*x^3", 2) == P("yxxx", 2));
    CHECK(P("(x+y)^2", 2) == P("xx + xy + yx + yy", 2));
    CHECK(P("x1*x2 - x2*x1", 4).coeff(Word{1, 0}) == Scalar::from_int(FieldSpec::rationals(), -1));
    CHECK_THROWS_AS(P("x1 x2", 4), SyntaxError);
    CHECK(P("2/4*xy") == P("1/2*xy"));
    ParamMap params{{"a", Scalar::from_int(FieldSpec::rationals(), 3)}};
    CHECK(parse_ncpoly("a^2*x - a^-1*y", 2, FieldSpec::rationals(), params) == P("9*x - 1/3*y", 2));
    CHECK(print_ncpoly(P("xy - 1/2*yx", 2)) == "x*y - (1/2)*y*x");
    auto f = P("cyc(xxy) - 2/3*zzz + 5");
    CHECK(P(print_ncpoly(f)) == f);

    try {
        P("x + * y");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(P("xw", 2), UnknownGenerator);
    CHECK_THROWS_AS(P("x + foo", 2), UnknownConstant);
    CHECK_THROWS_AS(P("x / y", 2), SyntaxError);
    CHECK_THROWS_AS(P("theta*x", 2), UnsupportedOrder);
    CHECK_NOTHROW(parse_ncpoly("theta*x", 2, FieldSpec::cyclotomic72()));
}
