#include <doctest.h>

#include <numeric>

#include "potalg/series.hpp"

using namespace potalg;

namespace {

// m = (4 + 9 + .. + l^2) + any non-negative combination of those squares.
bool representable_oracle(int m) {
    for (int l = 2; ; ++l) {
        int base = 0;
        for (int j = 2; j <= l; ++j) base += j * j;
        if (base > m) return false;
        std::vector<bool> reach(m - base + 1, false);
        reach[0] = true;
        for (int v = 1; v <= m - base; ++v)
            for (int j = 2; j <= l && !reach[v]; ++j)
                if (v >= j * j && reach[v - j * j]) reach[v] = true;
        if (reach[m - base]) return true;
    }
}

}  // namespace

TEST_CASE("series parsing and expansion") {
    CHECK(taylor(RationalSeries::parse("(1-t)^-3"), 5) == std::vector<long long>{1, 3, 6, 10, 15, 21});
    CHECK(taylor(RationalSeries::parse("(1+t)^{-1}(1-t)^{-3}"), 5) == std::vector<long long>{1, 2, 4, 6, 9, 12});
    CHECK(taylor(RationalSeries::parse("(1+t)/(1-2t)"), 4) == std::vector<long long>{1, 3, 6, 12, 24});
    CHECK(taylor(RationalSeries::parse("1+3t+3t^2+t^3"), 5) == std::vector<long long>{1, 3, 3, 1, 0, 0});
    CHECK(RationalSeries::parse("(1-t^2)/(1-t)^3") == RationalSeries::parse("(1+t)(1-t)^-2"));
    CHECK(RationalSeries::parse("(1+t)/(1-t-t^2)").to_string() == "(1+t)/(1-t-t^2)");
    CHECK_THROWS(RationalSeries::parse("(1+t"));
}

TEST_CASE("rational fitting recovers the generating function") {
    for (const char* text : {"(1-t)^-3", "(1+t)/(1-t-t^2)", "(1+t+t^2+t^3+t^4)/(1-2t+t^2-t^3-t^4)",
                             "(1+t)^-1(1-t)^-3", "(1+t)/(1-2t)"}) {
        auto rs = RationalSeries::parse(text);
        auto fit = fit_rational(taylor(rs, 14), 4);
        REQUIRE(fit);
        CHECK(*fit == rs);
    }
    CHECK_FALSE(fit_rational({1, 1, 2, 6, 24, 120, 720, 5040}, 2));
}

TEST_CASE("series inverse") {
    CHECK(series_inverse({1, -1}, 4) == std::vector<long long>{1, 1, 1, 1, 1});
    auto h = taylor(RationalSeries::parse("(1-t)^-3"), 6);
    CHECK(series_inverse(h, 6) == std::vector<long long>{1, -3, 3, -1, 0, 0, 0});
}

TEST_CASE("sums of consecutive squares") {
    std::vector<int> missing;
    for (int m = 1; m <= 200; ++m) {
        auto r = gv_representable(m);
        CHECK(r.representable == representable_oracle(m));
        if (!r.representable) {
            missing.push_back(m);
            continue;
        }
        CHECK(std::accumulate(r.witness.begin(), r.witness.end(), 0) == m);
    }
    CHECK(missing == std::vector<int>{1, 2, 3, 5, 6, 7, 9, 10, 11, 14, 15, 18, 19, 23, 27});
}

TEST_CASE("generic samples reach the minimal series") {
    auto r = generic_sample_series(2, 3, 3, 8, FieldSpec::prime(1009), 1);
    CHECK(r.matches_target);
    CHECK(r.never_below_target);
    CHECK(r.minima == taylor(RationalSeries::parse("(1+t)/(1-t)"), 8));
    auto r3 = generic_sample_series(3, 3, 2, 6, FieldSpec::prime(1009), 5);
    CHECK(r3.matches_target);
    CHECK(r3.minima == taylor(RationalSeries::parse("(1-t)^-3"), 6));
}
