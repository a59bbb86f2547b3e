#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "potalg/grobner.hpp"
#include "potalg/parse.hpp"
#include "potalg/series.hpp"

using namespace potalg;
using testing_support::random_homogeneous;

namespace {

std::vector<NcPoly> rels(const std::string& text, int n, const FieldSpec& spec = FieldSpec::rationals()) {
    std::vector<NcPoly> out;
    std::size_t start = 0;
    for (;;) {
        auto semi = text.find(';', start);
        out.push_back(parse_ncpoly(text.substr(start, semi - start), n, spec));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

std::vector<std::string> sorted_text(const std::vector<NcPoly>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(print_ncpoly(e));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("reduced basis of a non-proper cubic potential") {
    auto gb = buchberger_truncated(rels("yz ; zx ; xy + zz", 3), MonomialOrder::standard(3), 8);
    CHECK(sorted_text(gb.elements()) == sorted_text(rels("yz ; zx ; xy + zz ; zzz", 3)));
    CHECK(gb.complete());
    CHECK(graded_dims(gb, 8) == taylor(RationalSeries::parse("(1+t+t^2+t^3+t^4)/(1-2t+t^2-t^3-t^4)"), 8));
}

TEST_CASE("reduced basis of a quartic potential with a parameter") {
    auto q = FieldSpec::rationals();
    ParamMap p{{"q", Scalar::from_int(q, 3)}};
    std::vector<NcPoly> r{parse_ncpoly("x^3 - yxy", 2, q, p), parse_ncpoly("xyx - q*y^3", 2, q, p)};
    auto gb = buchberger_truncated(r, MonomialOrder::standard(2), 10);
    std::vector<NcPoly> golden;
    for (const char* g : {"x^3 - yxy", "xyx - q*y^3", "xyyyy - yyyyx", "xxyyy - q^-1*yxyyx", "xyyxy - q*yyyxx"}) {
        golden.push_back(parse_ncpoly(g, 2, q, p));
    }
    // compare as sets of monic elements
    auto monic = [](NcPoly e) {
        Word lead;
        for (const auto& [w, c] : e.terms())
            if (lead.empty() || MonomialOrder::standard(2).less(lead, w)) lead = w;
        return e.scaled(e.coeff(lead).inv());
    };
    std::vector<NcPoly> a, b;
    for (const auto& e : gb.elements()) a.push_back(monic(e));
    for (const auto& e : golden) b.push_back(monic(e));
    CHECK(sorted_text(a) == sorted_text(b));
}

TEST_CASE("graded dimensions agree with slice ranks on random relations") {
    auto fp = FieldSpec::prime(1009);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + trial % 2, deg = 2 + (trial / 2) % 2, count = 1 + trial % 3;
        std::vector<NcPoly> r;
        for (int j = 0; j < count; ++j) r.push_back(random_homogeneous(rng, n, deg, fp, 1 + (trial + j) % 4));
        int top = n == 2 ? 7 : 5;
        for (const auto& order : MonomialOrder::all(n)) {
            auto gb = buchberger_truncated(r, order, top, fp);
            CHECK(graded_dims(gb, top) == brute_force_dims(r, n, top));
        }
    }
}

TEST_CASE("word-truncated dimensions agree with slice ranks on inhomogeneous relations") {
    auto fp = FieldSpec::prime(1009);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2, top = 6;
        std::vector<NcPoly> r;
        for (int j = 0; j < 2; ++j) {
            auto e = random_homogeneous(rng, n, 3, fp, 3) + random_homogeneous(rng, n, 2, fp, 1 + trial % 3);
            if (trial % 2) e += random_homogeneous(rng, n, 1, fp, 1);
            r.push_back(e);
        }
        CHECK(pseries_dims(r, n, MonomialOrder::standard(n), top) == brute_force_pseries_dims(r, n, top));
    }
    auto hand = rels("xxx - y ; yyy - x", 2, fp);
    CHECK(pseries_dims(hand, 2, MonomialOrder::standard(2), 5) == brute_force_pseries_dims(hand, 2, 5));
}

TEST_CASE("normal forms and normal words") {
    auto r = rels("xy - 2*yx ; zx - 3*xz ; zy - 5*yz", 3);
    auto gb = buchberger_truncated(r, MonomialOrder::standard(3), 6);
    for (const auto& e : r) CHECK(gb.normal_form(e).is_zero());
    CHECK(gb.normal_form(parse_ncpoly("xy", 3, FieldSpec::rationals())) ==
          parse_ncpoly("2*yx", 3, FieldSpec::rationals()));
    auto dims = graded_dims(gb, 5);
    for (int d = 0; d <= 5; ++d) CHECK(static_cast<long long>(gb.normal_words(d).size()) == dims[d]);
    CHECK(dims == std::vector<long long>{1, 3, 6, 10, 15, 21});
    CHECK(right_annihilator_free(gb, 5));
}

TEST_CASE("PBW detection") {
    auto skew = rels("xy - 2*yx ; zx - 3*xz ; zy - 5*yz", 3);
    for (const auto& order : MonomialOrder::all(3)) CHECK(pbw_with_order(skew, order).is_quadratic_gb);
    auto nonpbw = rels("yz ; zx ; xy + zz", 3);
    for (const auto& order : MonomialOrder::all(3)) CHECK_FALSE(pbw_with_order(nonpbw, order).is_quadratic_gb);
    CHECK(MonomialOrder::all(3).size() == 6);
    CHECK(MonomialOrder::standard(3).to_string() == "x>y>z");
}
