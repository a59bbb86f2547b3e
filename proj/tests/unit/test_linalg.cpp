#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "potalg/linalg.hpp"

using namespace potalg;
using testing_support::random_scalar;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const FieldSpec& spec, int range) {
    Matrix m(r, c, spec);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(rng, spec, range);
    return m;
}

// Null-space size by enumerating every vector of F_p^3.
long long kernel_count(const Matrix& m, std::uint32_t p) {
    long long count = 0;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c) {
                bool zero = true;
                for (std::size_t i = 0; i < m.rows() && zero; ++i) {
                    Scalar s = m.at(i, 0) * Scalar::from_int(m.spec(), a) + m.at(i, 1) * Scalar::from_int(m.spec(), b) +
                               m.at(i, 2) * Scalar::from_int(m.spec(), c);
                    zero = s.is_zero();
                }
                count += zero;
            }
    return count;
}

}  // namespace

TEST_CASE("rank agrees with exhaustive null-space count over F_73") {
    auto spec = FieldSpec::prime(73);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        Matrix m = random_matrix(rng, 3, 3, spec, trial % 3 == 0 ? 1 : 40);
        if (trial % 4 == 1)  // force a dependency
            for (int j = 0; j < 3; ++j) m.at(2, j) = m.at(0, j) + m.at(1, j);
        long long expected = 1;
        for (std::size_t d = 0; d < 3 - rank(SparseMatrix::from_dense(m)); ++d) expected *= 73;
        CHECK(kernel_count(m, 73) == expected);
    }
}

TEST_CASE("kernel basis vectors are independent and annihilated") {
    auto q = FieldSpec::rationals();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 3, 6, q, 2);
        auto sm = SparseMatrix::from_dense(m);
        auto ker = kernel_basis(sm, q);
        CHECK(ker.size() + rank(sm) == 6);
        Matrix k(6, ker.size(), q);
        for (std::size_t c = 0; c < ker.size(); ++c)
            for (std::size_t r = 0; r < 6; ++r) k.at(r, c) = ker[c][r];
        auto prod = m * k;
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j).is_zero());
        CHECK(k.rank() == ker.size());
    }
}

TEST_CASE("echelon tracks span membership") {
    auto q = FieldSpec::rationals();
    auto one = Scalar::one(q), two = Scalar::from_int(q, 2);
    Echelon e(4);
    CHECK(e.insert({{0, one}, {2, two}}));
    CHECK(e.insert({{1, one}, {2, one}}));
    CHECK_FALSE(e.insert({{0, two}, {1, two}, {2, Scalar::from_int(q, 6)}}));
    CHECK(e.in_span({{0, one}, {1, one}, {2, Scalar::from_int(q, 3)}}));
    CHECK_FALSE(e.in_span({{3, one}}));
    CHECK(e.rank() == 2);
}

TEST_CASE("inverse and determinant are consistent") {
    auto q = FieldSpec::rationals();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = testing_support::random_invertible(rng, 3, q);
        auto inv = m.inverse();
        REQUIRE(inv.has_value());
        CHECK(m * *inv == Matrix::identity(3, q));
        CHECK(m.det() * inv->det() == Scalar::one(q));
    }
    Matrix singular = Matrix::from_rows({{Scalar::one(q), Scalar::one(q)}, {Scalar::one(q), Scalar::one(q)}});
    CHECK_FALSE(singular.inverse().has_value());
}

TEST_CASE("characteristic polynomial and claimed spectra") {
    auto q = FieldSpec::rationals();
    auto s = [&](long v) { return Scalar::from_int(q, v); };
    auto half = Scalar::from_mpq(q, mpq_class(1, 2));
    auto quarter = Scalar::from_mpq(q, mpq_class(1, 4));
    Matrix d = Matrix::diagonal({s(2), half, s(1)});
    CHECK(verify_eigenvalues(d, {s(2), half, s(1)}));
    CHECK(verify_eigenvalues(d, {s(1), s(2), half}));
    CHECK_FALSE(verify_eigenvalues(d, {s(2), quarter, s(1)}));
    CHECK(verify_eigenvalues(Matrix::identity(3, q), {s(1), s(1), s(1)}));

    // conjugating changes nothing
    std::mt19937_64 rng(8);
    Matrix c = testing_support::random_invertible(rng, 3, q);
    Matrix conj = c * d * *c.inverse();
    CHECK(poly_equal(charpoly(conj), charpoly(d)));
    CHECK(verify_eigenvalues(conj, {s(2), half, s(1)}));
}

TEST_CASE("Jordan structure from kernel ranks") {
    auto q = FieldSpec::rationals();
    auto s = [&](long v) { return Scalar::from_int(q, v); };
    Matrix j = Matrix::from_rows({{s(1), s(0), s(0)}, {s(1), s(1), s(0)}, {s(0), s(0), s(1)}});
    CHECK(jordan_block_sizes(j, s(1)) == std::vector<int>{2, 1});
    CHECK(geometric_multiplicity(j, s(1)) == 2);
    CHECK(verify_jordan(j, {{s(1), 2}, {s(1), 1}}));
    CHECK_FALSE(verify_jordan(j, {{s(1), 3}}));
    Matrix k3 = Matrix::from_rows({{s(1), s(1), s(0)}, {s(0), s(1), s(1)}, {s(0), s(0), s(1)}});
    CHECK(verify_jordan(k3, {{s(1), 3}}));
    Matrix mixed = Matrix::from_rows({{s(-1), s(1), s(0)}, {s(0), s(-1), s(0)}, {s(0), s(0), s(1)}});
    CHECK(verify_jordan(mixed, {{s(-1), 2}, {s(1), 1}}));
    CHECK_FALSE(verify_jordan(mixed, {{s(-1), 1}, {s(-1), 1}, {s(1), 1}}));
}
