#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potalg/scalar.hpp"

namespace potalg {

// Small dense matrix (twists, substitutions).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& spec);
    static Matrix identity(std::size_t n, const FieldSpec& spec);
    static Matrix diagonal(const std::vector<Scalar>& d);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    std::optional<Matrix> inverse() const;
    Scalar det() const;
    std::size_t rank() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec spec_{};
    std::vector<Scalar> data_;
};

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;  // sorted by column, no zeros

// Sparse row-major matrix.
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(std::uint32_t ncols) : ncols_(ncols) {}
    static SparseMatrix from_dense(const Matrix& m);

    std::uint32_t ncols() const { return ncols_; }
    std::size_t nrows() const { return rows_.size(); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    // Sorts, merges duplicate columns and drops zeros.
    void add_row(SparseRow row);
    Matrix to_dense(const FieldSpec& spec) const;

private:
    std::uint32_t ncols_ = 0;
    std::vector<SparseRow> rows_;
};

SparseRow normalize_row(SparseRow row);
// a + c*b
SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b);

// Incremental echelon form keyed by leading column. Rows are stored monic.
class Echelon {
public:
    explicit Echelon(std::uint32_t ncols = 0) : ncols_(ncols) {}
    // Reduces by leading columns; returns true if the row was independent.
    bool insert(SparseRow row);
    SparseRow reduce(SparseRow row) const;
    bool in_span(const SparseRow& row) const { return reduce(row).empty(); }
    std::size_t rank() const { return rows_.size(); }
    const std::map<std::uint32_t, SparseRow>& pivot_rows() const { return rows_; }

private:
    std::uint32_t ncols_;
    std::map<std::uint32_t, SparseRow> rows_;
};

struct RrefResult {
    SparseMatrix reduced;               // rows ordered by pivot column
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivots;  // ascending
};

RrefResult rref(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);
// Basis of the right null space, one dense vector (length ncols) per free column.
std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& m, const FieldSpec& spec);

// Univariate polynomial, coefficients from degree 0 upward.
using UPoly = std::vector<Scalar>;
UPoly charpoly(const Matrix& m);  // det(t*I - m), monic
UPoly poly_from_roots(const std::vector<Scalar>& roots, const FieldSpec& spec);
bool poly_equal(const UPoly& a, const UPoly& b);

// Characteristic polynomial equals prod (t - c_i).
bool verify_eigenvalues(const Matrix& m, const std::vector<Scalar>& claimed);
std::size_t geometric_multiplicity(const Matrix& m, const Scalar& lambda);
// Jordan block sizes for eigenvalue lambda, descending.
std::vector<int> jordan_block_sizes(const Matrix& m, const Scalar& lambda);
// Claimed Jordan structure: list of (eigenvalue, block size).
bool verify_jordan(const Matrix& m, const std::vector<std::pair<Scalar, int>>& blocks);

}  // namespace potalg
