#pragma once

#include <random>

#include "potalg/ncpoly.hpp"
#include "potalg/twist.hpp"

namespace testing_support {

using namespace potalg;

inline Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& spec, int range = 7) {
    std::uniform_int_distribution<int> d(-range, range);
    return Scalar::from_int(spec, d(rng));
}

inline NcPoly random_homogeneous(std::mt19937_64& rng, int n, int degree, const FieldSpec& spec, int terms) {
    NcPoly p(n, spec);
    std::uniform_int_distribution<int> letter(0, n - 1);
    for (int t = 0; t < terms; ++t) {
        Word w;
        for (int j = 0; j < degree; ++j) w.push_back(static_cast<Letter>(letter(rng)));
        p.add_term(w, random_scalar(rng, spec));
    }
    return p;
}

inline Matrix random_invertible(std::mt19937_64& rng, int n, const FieldSpec& spec) {
    for (;;) {
        Matrix m(n, n, spec);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, spec, 3);
        if (!m.det().is_zero()) return m;
    }
}

// Random element of the twisted space of M, or zero when it is trivial.
inline NcPoly random_twisted(std::mt19937_64& rng, int n, int k, const Matrix& m) {
    NcPoly f(n, m.spec());
    for (const auto& b : twisted_space(n, k, m)) f += b.scaled(random_scalar(rng, m.spec()));
    return f;
}

}  // namespace testing_support
