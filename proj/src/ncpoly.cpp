#include "potalg/ncpoly.hpp"

#include <algorithm>

namespace potalg {

NcPoly NcPoly::constant(int n, const Scalar& c) {
    NcPoly p(n, c.spec());
    p.add_term({}, c);
    return p;
}

NcPoly NcPoly::monomial(int n, const Word& w, const Scalar& c) {
    NcPoly p(n, c.spec());
    p.add_term(w, c);
    return p;
}

NcPoly NcPoly::generator(int n, const FieldSpec& spec, int j) {
    return monomial(n, Word{static_cast<Letter>(j)}, Scalar::one(spec));
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.bound()) spec_ = c.spec();
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(spec_) : it->second;
}

std::set<int> NcPoly::degrees() const {
    std::set<int> d;
    for (const auto& [w, c] : terms_) d.insert(static_cast<int>(w.size()));
    return d;
}

int NcPoly::max_degree() const {
    auto d = degrees();
    return d.empty() ? -1 : *d.rbegin();
}

int NcPoly::min_degree() const {
    auto d = degrees();
    return d.empty() ? -1 : *d.begin();
}

NcPoly NcPoly::homogeneous_component(int d) const {
    NcPoly r(n_, spec_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == d) r.terms_.emplace(w, c);
    return r;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r(*this);
    r += o;
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    n_ = std::max(n_, o.n_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly NcPoly::operator-() const {
    NcPoly r(n_, spec_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly r(std::max(n_, o.n_), is_zero() ? o.spec_ : spec_);
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : o.terms_) {
            Word w(u);
            w.insert(w.end(), v.begin(), v.end());
            r.add_term(w, a * b);
        }
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly r(n_, spec_);
    if (c.is_zero()) return r;
    for (const auto& [w, a] : terms_) r.terms_.emplace(w, a * c);
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    for (; i != terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second != j->second) return false;
    return true;
}

std::string generator_name(int n, int j) {
    if (n <= 3) return std::string(1, "xyz"[j]);
    return "x" + std::to_string(j + 1);
}

// ---------------------------------------------------------- cyclic maps

NcPoly cyclic_shift(const NcPoly& p) {
    NcPoly r(p.n(), p.spec());
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) {
            r.add_term(w, c);
            continue;
        }
        Word s(w.begin() + 1, w.end());
        s.push_back(w.front());
        r.add_term(s, c);
    }
    return r;
}

NcPoly cyclicize(const NcPoly& p) {
    NcPoly r(p.n(), p.spec());
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) {
            r.add_term(w, c);
            continue;
        }
        Word s(w);
        for (std::size_t k = 0; k < w.size(); ++k) {
            r.add_term(s, c);
            std::rotate(s.begin(), s.begin() + 1, s.end());
        }
    }
    return r;
}

NcPoly left_derivative(const NcPoly& p, int j) {
    NcPoly r(p.n(), p.spec());
    for (const auto& [w, c] : p.terms())
        if (!w.empty() && w.front() == j) r.add_term(Word(w.begin() + 1, w.end()), c);
    return r;
}

NcPoly right_derivative(const NcPoly& p, int j) {
    NcPoly r(p.n(), p.spec());
    for (const auto& [w, c] : p.terms())
        if (!w.empty() && w.back() == j) r.add_term(Word(w.begin(), w.end() - 1), c);
    return r;
}

bool is_cyclicly_invariant(const NcPoly& p) {
    for (int j = 0; j < p.n(); ++j)
        if (left_derivative(p, j) != right_derivative(p, j)) return false;
    return true;
}

// --------------------------------------------------------- substitution

LinearSub LinearSub::inverse() const {
    auto inv = m.inverse();
    if (!inv) throw SingularSubstitution("substitution matrix is singular");
    return {*inv};
}

NcPoly apply_substitution(const NcPoly& p, const LinearSub& s) {
    int n = p.n();
    if (static_cast<int>(s.m.rows()) != n || static_cast<int>(s.m.cols()) != n)
        throw SingularSubstitution("substitution size does not match generator count");
    if (s.m.det().is_zero()) throw SingularSubstitution("substitution matrix is singular");
    std::vector<NcPoly> image(n, NcPoly(n, p.spec()));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (!s.m.at(k, j).is_zero()) image[j].add_term(Word{static_cast<Letter>(k)}, s.m.at(k, j));
    NcPoly r(n, p.spec());
    for (const auto& [w, c] : p.terms()) {
        NcPoly t = NcPoly::constant(n, c);
        for (Letter l : w) t = t * image[l];
        r += t;
    }
    return r;
}

// ----------------------------------------------------- word-index rows

std::uint64_t word_index(int n, const Word& w) {
    std::uint64_t idx = 0;
    for (Letter l : w) idx = idx * static_cast<std::uint64_t>(n) + l;
    return idx;
}

Word word_from_index(int n, int degree, std::uint64_t idx) {
    Word w(degree);
    for (int k = degree - 1; k >= 0; --k) {
        w[k] = static_cast<Letter>(idx % n);
        idx /= n;
    }
    return w;
}

SparseRow to_row(const NcPoly& p) {
    if (!p.is_homogeneous()) throw NotHomogeneous("coefficient rows need a homogeneous polynomial");
    SparseRow r;
    for (const auto& [w, c] : p.terms()) r.emplace_back(static_cast<std::uint32_t>(word_index(p.n(), w)), c);
    return normalize_row(std::move(r));
}

NcPoly from_row(int n, int degree, const FieldSpec& spec, const SparseRow& row) {
    NcPoly p(n, spec);
    for (const auto& [c, v] : row) p.add_term(word_from_index(n, degree, c), v);
    return p;
}

}  // namespace potalg
