#pragma once

#include <optional>
#include <vector>

#include "potalg/grobner.hpp"

namespace potalg {

// Degree-m slice of 0 -> A -> A^n -> A^n -> A -> K -> 0:
// A_{m-k} -d3-> A^n_{m-k+1} -d2-> A^n_{m-1} -d1-> A_m.
struct ComplexSliceReport {
    int degree = 0;
    long long rank_d3 = 0, rank_d2 = 0, rank_d1 = 0;
    long long dim_left = 0, dim_mid_left = 0, dim_mid_right = 0, dim_right = 0;  // a_{m-k}, n a_{m-k+1}, n a_{m-1}, a_m
    bool compositions_vanish = true;  // d1 d2 = 0 and d2 d3 = 0 on this slice
    bool exact_left = true, exact_mid_left = true, exact_mid_right = true, exact_right = true;
    bool exact_here() const {
        return compositions_vanish && exact_left && exact_mid_left && exact_mid_right && exact_right;
    }
};

// gb must present A_F and be valid up to degree up_to.
std::vector<ComplexSliceReport> build_complex_slices(const NcPoly& f, const GrobnerBasis& gb, int up_to);

// Taylor coefficients of (1 - n t + n t^{k-1} - t^k)^{-1}.
std::vector<long long> exact_target_dims(int n, int k, int up_to);

// Series of A equals the target above and A has no right annihilators.
bool exactness_by_criterion(const NcPoly& f, const GrobnerBasis& gb, int up_to);

struct QuadraticDual {
    int n = 0;
    std::vector<NcPoly> dual_relations;  // basis of R^perp under b(u, v) = delta_{u,v}
};
QuadraticDual koszul_dual(const std::vector<NcPoly>& relations, int n, const FieldSpec& spec);

struct DualityProbe {
    bool holds = true;
    std::optional<int> first_failure_degree;
    std::vector<long long> dims, dual_dims;
};
// Checks H_A(-t) H_{A^!}(t) = 1 through degree up_to.
DualityProbe koszul_duality_probe(const std::vector<NcPoly>& relations, int n, const FieldSpec& spec, int up_to);

enum class KoszulVerdict { RefutedByDuality, ConsistentUpToDegree, ProvedByPBW };

struct KoszulReport {
    KoszulVerdict verdict = KoszulVerdict::ConsistentUpToDegree;
    int degree = 0;                      // failure degree or checked degree
    std::optional<MonomialOrder> order;  // when proved by PBW
    std::string to_string() const;
};
KoszulReport koszul_verdict(const std::vector<NcPoly>& relations, int n, const FieldSpec& spec, int up_to);

}  // namespace potalg
