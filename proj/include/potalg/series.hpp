#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potalg/scalar.hpp"

namespace potalg {

using IntPoly = std::vector<long long>;  // coefficients from t^0 upward, no trailing zeros

// num/den with integer coefficients, gcd-reduced, den(0) = 1.
struct RationalSeries {
    IntPoly num{1};
    IntPoly den{1};

    // "(1+t)/(1-2t)", "(1-t)^-3", "(1+t)^{-1}(1-t)^{-3}", products, quotients and powers.
    static RationalSeries parse(const std::string& text);
    // Normalizes; throws std::invalid_argument when the expansion is not integral.
    static RationalSeries make(const IntPoly& num, const IntPoly& den);
    std::string to_string() const;
    bool operator==(const RationalSeries& o) const { return num == o.num && den == o.den; }
};

std::vector<long long> taylor(const RationalSeries& rs, int up_to);

// Smallest deg(num)+deg(den) fit with deg(den) <= max_den_degree, keeping at
// least one equation beyond the unknowns. Absent when nothing fits.
std::optional<RationalSeries> fit_rational(const std::vector<long long>& coeffs, int max_den_degree);

// Coefficients of 1 / p as a power series (p(0) = +-1).
std::vector<long long> series_inverse(const std::vector<long long>& p, int up_to);

struct SampleReport {
    std::vector<long long> minima;
    std::vector<long long> target;
    std::string target_text;
    bool matches_target = false;
    bool never_below_target = true;
    int trials = 0;
    std::uint64_t seed = 0;
};
// Random F in P_{n,k} (uniform coefficient per cyclic class), coordinatewise minimal dims.
SampleReport generic_sample_series(int n, int k, int trials, int up_to, const FieldSpec& spec, std::uint64_t seed);

struct GvResult {
    bool representable = false;
    std::vector<int> witness;  // squares summing to m, each of 4, 9, .., l^2 at least once
};
GvResult gv_representable(int m);

}  // namespace potalg
