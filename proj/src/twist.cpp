#include "potalg/twist.hpp"

namespace potalg {

std::vector<NcPoly> derivative_relations(const NcPoly& f) {
    std::vector<NcPoly> out;
    for (int j = 0; j < f.n(); ++j) out.push_back(left_derivative(f, j));
    return out;
}

std::vector<NcPoly> right_derivative_relations(const NcPoly& f) {
    std::vector<NcPoly> out;
    for (int j = 0; j < f.n(); ++j) out.push_back(right_derivative(f, j));
    return out;
}

namespace {

std::uint64_t ipow(int n, int m) {
    std::uint64_t r = 1;
    for (int k = 0; k < m; ++k) r *= static_cast<std::uint64_t>(n);
    return r;
}

}  // namespace

TwistReport twist_detect(const NcPoly& f) {
    if (!f.is_homogeneous()) throw NotHomogeneous("twist detection needs a homogeneous polynomial");
    TwistReport rep;
    const int n = f.n();
    const FieldSpec& spec = f.spec();
    rep.is_potential = is_cyclicly_invariant(f);
    if (f.is_zero()) {
        rep.is_twisted = true;
        return rep;
    }
    const int d = f.max_degree() - 1;
    const auto cols = static_cast<std::uint32_t>(ipow(n, d));
    SparseMatrix left(cols), right(cols);
    std::vector<SparseRow> lrows, rrows;
    for (int j = 0; j < n; ++j) {
        lrows.push_back(to_row(left_derivative(f, j)));
        rrows.push_back(to_row(right_derivative(f, j)));
        left.add_row(lrows.back());
        right.add_row(rrows.back());
    }
    SparseMatrix both(cols);
    for (const auto& r : lrows) both.add_row(r);
    for (const auto& r : rrows) both.add_row(r);
    std::size_t rl = rank(left), rr = rank(right), rb = rank(both);
    rep.relation_rank = static_cast<int>(rl);
    rep.is_twisted = rl == rr && rl == rb;
    rep.nondegenerate = static_cast<int>(rl) == n;
    if (!rep.is_twisted || !rep.nondegenerate) return rep;

    // Restrict to pivot columns where the left rows are invertible.
    auto piv = rref(left).pivots;
    auto restrict = [&](const std::vector<SparseRow>& rows) {
        Matrix m(n, n, spec);
        for (int i = 0; i < n; ++i)
            for (const auto& [c, v] : rows[i])
                for (int k = 0; k < n; ++k)
                    if (piv[k] == c) m.at(i, k) = v;
        return m;
    };
    Matrix dl = restrict(lrows), dr = restrict(rrows);
    Matrix m = dr * *dl.inverse();
    // M D = D^R must hold on every column, not just the pivots
    for (int i = 0; i < n; ++i) {
        SparseRow acc;
        for (int j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero()) acc = axpy(acc, m.at(i, j), lrows[j]);
        if (acc != rrows[i]) {
            rep.is_twisted = false;
            return rep;
        }
    }
    rep.twist = m;
    return rep;
}

std::vector<NcPoly> twisted_space(int n, int k, const Matrix& m) {
    const FieldSpec& spec = m.spec();
    const auto cols = static_cast<std::uint32_t>(ipow(n, k));
    const std::uint64_t shorter = ipow(n, k - 1);
    SparseMatrix eq(cols);
    // coefficient of u in dR_i F is f(u x_i); in d_j F it is f(x_j u)
    for (int i = 0; i < n; ++i)
        for (std::uint64_t u = 0; u < shorter; ++u) {
            SparseRow row;
            row.emplace_back(static_cast<std::uint32_t>(u * n + i), Scalar::one(spec));
            for (int j = 0; j < n; ++j)
                if (!m.at(i, j).is_zero())
                    row.emplace_back(static_cast<std::uint32_t>(j * shorter + u), -m.at(i, j));
            eq.add_row(std::move(row));
        }
    std::vector<NcPoly> out;
    for (const auto& v : kernel_basis(eq, spec)) {
        NcPoly p(n, spec);
        for (std::uint32_t c = 0; c < cols; ++c)
            if (!v[c].is_zero()) p.add_term(word_from_index(n, k, c), v[c]);
        out.push_back(std::move(p));
    }
    return out;
}

Properness properness_check(int n, int k, long long dim_k_minus_1, long long dim_k) {
    auto p = [](long long b, int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    Properness out;
    out.nondegenerate = dim_k_minus_1 == p(n, k - 1) - n;
    out.proper = dim_k == p(n, k) - 2LL * n * n + 1;
    return out;
}

bool syzygy_identity_check(const NcPoly& f) {
    NcPoly lhs(f.n(), f.spec()), rhs(f.n(), f.spec());
    for (int j = 0; j < f.n(); ++j) {
        NcPoly x = NcPoly::generator(f.n(), f.spec(), j);
        lhs += x * left_derivative(f, j);
        rhs += right_derivative(f, j) * x;
    }
    return lhs == rhs;
}

}  // namespace potalg
