#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "potalg/homology.hpp"
#include "potalg/parse.hpp"
#include "potalg/series.hpp"

using namespace potalg;
using namespace testing_support;

namespace {

struct Presented {
    NcPoly f;
    std::vector<NcPoly> relations;
    GrobnerBasis gb;
};

Presented present(const std::string& potential, int n, int degree, const FieldSpec& spec = FieldSpec::prime()) {
    Presented p{parse_ncpoly(potential, n, spec), {}, {}};
    p.relations = derivative_relations(p.f);
    p.gb = buchberger_truncated(p.relations, MonomialOrder::standard(n), degree, spec);
    return p;
}

std::optional<int> first_inexact(const std::vector<ComplexSliceReport>& slices) {
    for (const auto& s : slices)
        if (!s.exact_here()) return s.degree;
    return std::nullopt;
}

}  // namespace

TEST_CASE("target series of the complex") {
    CHECK(exact_target_dims(3, 3, 6) == taylor(RationalSeries::parse("(1-t)^-3"), 6));
    CHECK(exact_target_dims(2, 4, 8) == taylor(RationalSeries::parse("(1+t)^-1(1-t)^-3"), 8));
}

TEST_CASE("skew polynomial potential is exact") {
    auto p = present("cyc(xyz) + 2*cyc(xzy)", 3, 8);
    CHECK(exactness_by_criterion(p.f, p.gb, 8));
    auto slices = build_complex_slices(p.f, p.gb, 8);
    CHECK(slices.size() == 9);
    CHECK_FALSE(first_inexact(slices));
}

TEST_CASE("monomial potential fails exactness at the first slice past the relations") {
    auto p = present("cyc(xyz)", 3, 7);
    CHECK_FALSE(exactness_by_criterion(p.f, p.gb, 7));
    auto slices = build_complex_slices(p.f, p.gb, 7);
    CHECK(first_inexact(slices) == 3);
    for (const auto& s : slices) CHECK(s.compositions_vanish);
}

TEST_CASE("quartic potentials") {
    auto exact = present("x^4 + 2*cyc(xxyy) + 5*cyc(xyxy) + y^4", 2, 10);
    CHECK(exactness_by_criterion(exact.f, exact.gb, 10));
    CHECK_FALSE(first_inexact(build_complex_slices(exact.f, exact.gb, 10)));
    auto inexact = present("x^4 + 1/2*cyc(xyxy)", 2, 10);
    CHECK_FALSE(exactness_by_criterion(inexact.f, inexact.gb, 10));
}

TEST_CASE("complex differentials compose to zero on random twisted potentials") {
    auto fp = FieldSpec::prime(1009);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = Scalar::from_int(fp, 2 + trial);
        auto f = trial % 2 ? random_twisted(rng, 3, 3, Matrix::diagonal({a, a.inv(), Scalar::one(fp)}))
                           : random_twisted(rng, 2, 4, Matrix::diagonal({a, a.inv()}));
        if (f.is_zero()) continue;
        auto gb = buchberger_truncated(derivative_relations(f), MonomialOrder::standard(f.n()), 6, fp);
        for (const auto& s : build_complex_slices(f, gb, 6)) CHECK(s.compositions_vanish);
    }
}

TEST_CASE("quadratic dual and Koszul duality") {
    auto q = FieldSpec::rationals();
    auto skew = derivative_relations(parse_ncpoly("cyc(xyz) + 2*cyc(xzy)", 3, q));
    auto dual = koszul_dual(skew, 3, q);
    CHECK(dual.dual_relations.size() == 6);
    auto probe = koszul_duality_probe(skew, 3, q, 8);
    CHECK(probe.holds);
    CHECK(probe.dual_dims == std::vector<long long>{1, 3, 3, 1, 0, 0, 0, 0, 0});
    CHECK(koszul_verdict(skew, 3, q, 6).verdict == KoszulVerdict::ProvedByPBW);

    // non-proper and proper cubic potentials whose duality fails by degree 6
    auto p14 = derivative_relations(parse_ncpoly("z^3 + cyc(xyz)", 3, q));
    auto f14 = koszul_duality_probe(p14, 3, q, 6);
    CHECK_FALSE(f14.holds);
    CHECK(f14.first_failure_degree.value_or(99) <= 6);
    CHECK(f14.dual_dims == std::vector<long long>{1, 3, 3, 2, 0, 0, 0});

    auto p9 = derivative_relations(parse_ncpoly("(y+z)^3 + cyc(xyz)", 3, q));
    auto f9 = koszul_duality_probe(p9, 3, q, 6);
    CHECK_FALSE(f9.holds);
    CHECK(f9.first_failure_degree.value_or(99) <= 6);
    CHECK(f9.dual_dims == std::vector<long long>{1, 3, 3, 1, 0, 0, 0});
    CHECK(koszul_verdict(p9, 3, q, 6).verdict == KoszulVerdict::RefutedByDuality);
}
