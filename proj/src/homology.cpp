#include "potalg/homology.hpp"

#include <map>

namespace potalg {

namespace {

using Basis = std::vector<Word>;

struct Coords {
    Basis words;
    std::map<Word, std::uint32_t> index;
    explicit Coords(Basis w) : words(std::move(w)) {
        for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = static_cast<std::uint32_t>(k);
    }
};

// Row of a tuple (p_1..p_r) of normal forms in the block basis.
SparseRow tuple_row(const std::vector<NcPoly>& parts, const Coords& c) {
    SparseRow row;
    for (std::size_t b = 0; b < parts.size(); ++b)
        for (const auto& [w, s] : parts[b].terms())
            row.emplace_back(static_cast<std::uint32_t>(b * c.words.size() + c.index.at(w)), s);
    return normalize_row(std::move(row));
}

long long rank_of(const std::vector<SparseRow>& rows, std::size_t cols) {
    Echelon e(static_cast<std::uint32_t>(cols));
    for (const auto& r : rows) e.insert(r);
    return static_cast<long long>(e.rank());
}

}  // namespace

std::vector<ComplexSliceReport> build_complex_slices(const NcPoly& f, const GrobnerBasis& gb, int up_to) {
    if (!f.is_homogeneous() || f.min_degree() < 2)
        throw NotHomogeneous("complex slices need a homogeneous twisted potential of degree >= 2");
    const int n = f.n();
    const int k = f.max_degree();
    const FieldSpec& spec = f.spec();
    if (!gb.complete() && up_to > gb.truncation_degree())
        throw TruncationExceeded("complex slices to degree " + std::to_string(up_to) + " need a basis to that degree");

    // c[j][l] = d_{x_j} dR_{x_l} F
    std::vector<std::vector<NcPoly>> c(n, std::vector<NcPoly>(n));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) c[j][l] = left_derivative(right_derivative(f, l), j);

    std::map<int, Coords> cache;
    auto coords = [&](int d) -> const Coords& {
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, Coords(d < 0 ? Basis{} : gb.normal_words(d))).first;
        return it->second;
    };
    auto nf = [&](const NcPoly& p) { return gb.normal_form(p); };
    auto word_poly = [&](const Word& w) { return NcPoly::monomial(n, w, Scalar::one(spec)); };
    auto gen = [&](int j) { return NcPoly::generator(n, spec, j); };
    auto d3 = [&](const NcPoly& u) {
        std::vector<NcPoly> out;
        for (int j = 0; j < n; ++j) out.push_back(nf(gen(j) * u));
        return out;
    };
    auto d2 = [&](const std::vector<NcPoly>& u) {
        std::vector<NcPoly> out;
        for (int j = 0; j < n; ++j) {
            NcPoly s(n, spec);
            for (int l = 0; l < n; ++l) s += c[j][l] * u[l];
            out.push_back(nf(s));
        }
        return out;
    };
    auto d1 = [&](const std::vector<NcPoly>& u) {
        NcPoly s(n, spec);
        for (int j = 0; j < n; ++j) s += gen(j) * u[j];
        return nf(s);
    };
    auto all_zero = [](const std::vector<NcPoly>& v) {
        for (const auto& p : v)
            if (!p.is_zero()) return false;
        return true;
    };

    std::vector<ComplexSliceReport> out;
    for (int m = 0; m <= up_to; ++m) {
        ComplexSliceReport rep;
        rep.degree = m;
        const Coords& cl = coords(m - k);
        const Coords& cml = coords(m - k + 1);
        const Coords& cmr = coords(m - 1);
        const Coords& cr = coords(m);
        rep.dim_left = static_cast<long long>(cl.words.size());
        rep.dim_mid_left = n * static_cast<long long>(cml.words.size());
        rep.dim_mid_right = n * static_cast<long long>(cmr.words.size());
        rep.dim_right = static_cast<long long>(cr.words.size());

        std::vector<SparseRow> r3, r2, r1;
        for (const auto& u : cl.words) {
            auto img = d3(word_poly(u));
            r3.push_back(tuple_row(img, cml));
            if (!all_zero(d2(img))) rep.compositions_vanish = false;
        }
        for (int b = 0; b < n; ++b)
            for (const auto& u : cml.words) {
                std::vector<NcPoly> e(n, NcPoly(n, spec));
                e[b] = word_poly(u);
                auto img = d2(e);
                r2.push_back(tuple_row(img, cmr));
                if (!d1(img).is_zero()) rep.compositions_vanish = false;
            }
        for (int b = 0; b < n; ++b)
            for (const auto& u : cmr.words) {
                std::vector<NcPoly> e(n, NcPoly(n, spec));
                e[b] = word_poly(u);
                r1.push_back(tuple_row({d1(e)}, cr));
            }
        rep.rank_d3 = rank_of(r3, rep.dim_mid_left);
        rep.rank_d2 = rank_of(r2, rep.dim_mid_right);
        rep.rank_d1 = rank_of(r1, rep.dim_right);
        rep.exact_left = rep.rank_d3 == rep.dim_left;
        rep.exact_mid_left = rep.dim_mid_left - rep.rank_d2 == rep.rank_d3;
        rep.exact_mid_right = rep.dim_mid_right - rep.rank_d1 == rep.rank_d2;
        rep.exact_right = rep.rank_d1 == rep.dim_right - (m == 0 ? 1 : 0);
        out.push_back(rep);
    }
    return out;
}

std::vector<long long> exact_target_dims(int n, int k, int up_to) {
    std::vector<long long> a(up_to + 1, 0);
    for (int m = 0; m <= up_to; ++m) {
        long long v = m == 0 ? 1 : 0;
        if (m >= 1) v += n * a[m - 1];
        if (m >= k - 1) v -= n * a[m - k + 1];
        if (m >= k) v += a[m - k];
        a[m] = v;
    }
    return a;
}

bool exactness_by_criterion(const NcPoly& f, const GrobnerBasis& gb, int up_to) {
    auto dims = graded_dims(gb, up_to);
    if (dims != exact_target_dims(f.n(), f.max_degree(), up_to)) return false;
    return right_annihilator_free(gb, up_to);
}

QuadraticDual koszul_dual(const std::vector<NcPoly>& relations, int n, const FieldSpec& spec) {
    SparseMatrix m(static_cast<std::uint32_t>(n * n));
    for (const auto& r : relations) {
        if (r.is_zero()) continue;
        if (r.min_degree() != 2 || r.max_degree() != 2) throw NotQuadratic("Koszul dual needs quadratic relations");
        m.add_row(to_row(r));
    }
    QuadraticDual d;
    d.n = n;
    for (const auto& v : kernel_basis(m, spec)) {
        NcPoly p(n, spec);
        for (int c = 0; c < n * n; ++c)
            if (!v[c].is_zero()) p.add_term(word_from_index(n, 2, c), v[c]);
        d.dual_relations.push_back(std::move(p));
    }
    return d;
}

DualityProbe koszul_duality_probe(const std::vector<NcPoly>& relations, int n, const FieldSpec& spec, int up_to) {
    DualityProbe p;
    auto order = MonomialOrder::standard(n);
    p.dims = graded_dims(buchberger_truncated(relations, order, up_to, spec), up_to);
    auto dual = koszul_dual(relations, n, spec);
    p.dual_dims = graded_dims(buchberger_truncated(dual.dual_relations, order, up_to, spec), up_to);
    for (int m = 1; m <= up_to; ++m) {
        long long s = 0;
        for (int i = 0; i <= m; ++i) s += (i % 2 ? -1 : 1) * p.dims[i] * p.dual_dims[m - i];
        if (s != 0) {
            p.holds = false;
            p.first_failure_degree = m;
            break;
        }
    }
    return p;
}

std::string KoszulReport::to_string() const {
    switch (verdict) {
        case KoszulVerdict::RefutedByDuality: return "refuted by duality at degree " + std::to_string(degree);
        case KoszulVerdict::ProvedByPBW: return "proved by PBW (" + (order ? order->to_string() : "") + ")";
        default: return "consistent up to degree " + std::to_string(degree);
    }
}

KoszulReport koszul_verdict(const std::vector<NcPoly>& relations, int n, const FieldSpec& spec, int up_to) {
    KoszulReport r;
    auto probe = koszul_duality_probe(relations, n, spec, up_to);
    if (!probe.holds) {
        r.verdict = KoszulVerdict::RefutedByDuality;
        r.degree = *probe.first_failure_degree;
        return r;
    }
    for (const auto& o : MonomialOrder::all(n))
        if (pbw_with_order(relations, o).is_quadratic_gb) {
            r.verdict = KoszulVerdict::ProvedByPBW;
            r.order = o;
            return r;
        }
    r.verdict = KoszulVerdict::ConsistentUpToDegree;
    r.degree = up_to;
    return r;
}

}  // namespace potalg
