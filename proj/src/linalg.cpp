#include "potalg/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace potalg {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec), data_(rows * cols, Scalar(spec)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& spec) {
    Matrix m(n, n, spec);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    FieldSpec spec = d.empty() ? FieldSpec{} : d[0].spec();
    Matrix m(d.size(), d.size(), spec);
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    FieldSpec spec = rows.empty() || rows[0].empty() ? FieldSpec{} : rows[0][0].spec();
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), spec);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_, spec_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r(*this);
    for (auto& x : r.data_) x *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, spec_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::size_t n = rows_;
    Matrix a(*this), inv = identity(n, spec_);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) { piv = r; break; }
        if (piv == n) return std::nullopt;
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(a.at(piv, k), a.at(c, k));
            std::swap(inv.at(piv, k), inv.at(c, k));
        }
        Scalar f = a.at(c, c).inv();
        for (std::size_t k = 0; k < n; ++k) {
            a.at(c, k) *= f;
            inv.at(c, k) *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            Scalar g = a.at(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                a.at(r, k) -= g * a.at(c, k);
                inv.at(r, k) -= g * inv.at(c, k);
            }
        }
    }
    return inv;
}

Scalar Matrix::det() const {
    std::size_t n = rows_;
    Matrix a(*this);
    Scalar d = Scalar::one(spec_);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) { piv = r; break; }
        if (piv == n) return Scalar(spec_);
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a.at(piv, k), a.at(c, k));
            d = -d;
        }
        d *= a.at(c, c);
        Scalar f = a.at(c, c).inv();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Scalar g = a.at(r, c) * f;
            for (std::size_t k = c; k < n; ++k) a.at(r, k) -= g * a.at(c, k);
        }
    }
    return d;
}

std::size_t Matrix::rank() const { return potalg::rank(SparseMatrix::from_dense(*this)); }

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------ SparseRow

SparseRow normalize_row(SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    out.reserve(row.size());
    for (auto& e : row) {
        if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
        else out.push_back(std::move(e));
        if (out.back().second.is_zero()) out.pop_back();
    }
    // a merged entry may have vanished mid-run; drop any leftovers
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
    return out;
}

SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(static_cast<std::uint32_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseRow r;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r.emplace_back(static_cast<std::uint32_t>(j), m.at(i, j));
        s.rows_.push_back(std::move(r));
    }
    return s;
}

void SparseMatrix::add_row(SparseRow row) { rows_.push_back(normalize_row(std::move(row))); }

Matrix SparseMatrix::to_dense(const FieldSpec& spec) const {
    Matrix m(rows_.size(), ncols_, spec);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [c, v] : rows_[i]) m.at(i, c) = v;
    return m;
}

// --------------------------------------------------------------- Echelon

SparseRow Echelon::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) break;
        Scalar c = -row.front().second;
        row = axpy(row, c, it->second);
    }
    return row;
}

bool Echelon::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Scalar f = row.front().second.inv();
    for (auto& e : row) e.second *= f;
    std::uint32_t lead = row.front().first;
    rows_.emplace(lead, std::move(row));
    return true;
}

// ------------------------------------------------------------------ rref

RrefResult rref(const SparseMatrix& m) {
    Echelon e(m.ncols());
    for (const auto& r : m.rows()) e.insert(r);
    // back substitution from the rightmost pivot leftwards
    std::map<std::uint32_t, SparseRow> rows = e.pivot_rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        std::uint32_t p = it->first;
        for (auto& [q, row] : rows) {
            if (q >= p) break;
            auto pos = std::lower_bound(row.begin(), row.end(), p,
                                        [](const auto& a, std::uint32_t c) { return a.first < c; });
            if (pos == row.end() || pos->first != p) continue;
            Scalar c = -pos->second;
            row = axpy(row, c, it->second);
        }
    }
    RrefResult res;
    res.reduced = SparseMatrix(m.ncols());
    for (auto& [p, row] : rows) {
        res.pivots.push_back(p);
        res.reduced.add_row(row);
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const SparseMatrix& m) {
    Echelon e(m.ncols());
    for (const auto& r : m.rows()) e.insert(r);
    return e.rank();
}

std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& m, const FieldSpec& spec) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::uint32_t f = 0; f < m.ncols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.ncols(), Scalar(spec));
        v[f] = Scalar::one(spec);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            const SparseRow& row = r.reduced.rows()[i];
            for (const auto& [c, val] : row)
                if (c == f) v[r.pivots[i]] = -val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ------------------------------------------------------------- spectra

namespace {

UPoly poly_mul(const UPoly& a, const UPoly& b, const FieldSpec& spec) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, Scalar(spec));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

UPoly poly_add(const UPoly& a, const UPoly& b, const FieldSpec& spec) {
    UPoly c(std::max(a.size(), b.size()), Scalar(spec));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

// Laplace expansion over polynomial entries; matrices here are at most 4x4.
UPoly poly_det(const std::vector<std::vector<UPoly>>& m, const FieldSpec& spec) {
    std::size_t n = m.size();
    if (n == 0) return {Scalar::one(spec)};
    if (n == 1) return m[0][0];
    UPoly acc{Scalar(spec)};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<UPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<UPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        UPoly term = poly_mul(m[0][j], poly_det(minor, spec), spec);
        if (j % 2 == 1)
            for (auto& c : term) c = -c;
        acc = poly_add(acc, term, spec);
    }
    return acc;
}

}  // namespace

UPoly charpoly(const Matrix& m) {
    const FieldSpec& spec = m.spec();
    std::size_t n = m.rows();
    std::vector<std::vector<UPoly>> t(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = {-m.at(i, j)};
            if (i == j) t[i][j].push_back(Scalar::one(spec));
        }
    UPoly p = poly_det(t, spec);
    while (p.size() > n + 1) p.pop_back();
    return p;
}

UPoly poly_from_roots(const std::vector<Scalar>& roots, const FieldSpec& spec) {
    UPoly p{Scalar::one(spec)};
    for (const auto& r : roots) p = poly_mul(p, UPoly{-r, Scalar::one(spec)}, spec);
    return p;
}

bool poly_equal(const UPoly& a, const UPoly& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Scalar x = i < a.size() ? a[i] : Scalar();
        Scalar y = i < b.size() ? b[i] : Scalar();
        if (x != y) return false;
    }
    return true;
}

bool verify_eigenvalues(const Matrix& m, const std::vector<Scalar>& claimed) {
    if (claimed.size() != m.rows()) return false;
    return poly_equal(charpoly(m), poly_from_roots(claimed, m.spec()));
}

std::size_t geometric_multiplicity(const Matrix& m, const Scalar& lambda) {
    Matrix s = m - Matrix::identity(m.rows(), m.spec()).scaled(lambda);
    return m.rows() - s.rank();
}

std::vector<int> jordan_block_sizes(const Matrix& m, const Scalar& lambda) {
    std::size_t n = m.rows();
    Matrix s = m - Matrix::identity(n, m.spec()).scaled(lambda);
    // r[j] = rank (m - lambda)^j
    std::vector<std::size_t> r{n};
    Matrix p = Matrix::identity(n, m.spec());
    for (std::size_t j = 1; j <= n + 1; ++j) {
        p = p * s;
        r.push_back(p.rank());
    }
    // number of blocks of size >= j is r[j-1] - r[j]
    std::vector<int> sizes;
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t at_least = r[j - 1] - r[j];
        std::size_t at_least_next = r[j] - r[j + 1];
        for (std::size_t c = at_least_next; c < at_least; ++c) sizes.push_back(static_cast<int>(j));
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool verify_jordan(const Matrix& m, const std::vector<std::pair<Scalar, int>>& blocks) {
    std::vector<Scalar> roots;
    for (const auto& [v, s] : blocks)
        for (int k = 0; k < s; ++k) roots.push_back(v);
    if (!verify_eigenvalues(m, roots)) return false;
    // group claimed blocks by eigenvalue value
    std::vector<std::pair<Scalar, std::vector<int>>> groups;
    for (const auto& [v, s] : blocks) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == v; });
        if (it == groups.end()) groups.push_back({v, {s}});
        else it->second.push_back(s);
    }
    for (auto& [v, sizes] : groups) {
        std::sort(sizes.rbegin(), sizes.rend());
        if (jordan_block_sizes(m, v) != sizes) return false;
    }
    return true;
}

}  // namespace potalg
