#pragma once

#include <optional>
#include <vector>

#include "potalg/ncpoly.hpp"

namespace potalg {

struct TwistReport {
    bool is_twisted = false;
    bool is_potential = false;
    bool nondegenerate = false;
    std::optional<bool> proper;        // filled by properness_check
    std::optional<Matrix> twist;       // (dR_1 F..dR_n F)^T = M (d_1 F..d_n F)^T
    int relation_rank = 0;
};

// Relations d_{x_j} F, j = 1..n.
std::vector<NcPoly> derivative_relations(const NcPoly& f);
std::vector<NcPoly> right_derivative_relations(const NcPoly& f);

TwistReport twist_detect(const NcPoly& f);

// Basis of homogeneous degree-k F with dR F = M dF.
std::vector<NcPoly> twisted_space(int n, int k, const Matrix& m);

struct Properness {
    bool nondegenerate = false;
    bool proper = false;
};
// dim A_{k-1} = n^{k-1} - n and dim A_k = n^k - 2n^2 + 1.
Properness properness_check(int n, int k, long long dim_k_minus_1, long long dim_k);

// sum_j x_j (d_j F) == sum_j (dR_j F) x_j in the free algebra.
bool syzygy_identity_check(const NcPoly& f);

}  // namespace potalg
