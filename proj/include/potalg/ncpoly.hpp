#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "potalg/linalg.hpp"
#include "potalg/scalar.hpp"

namespace potalg {

using Letter = std::uint8_t;      // 0-based generator index
using Word = std::vector<Letter>;

// Noncommutative polynomial: sparse Word -> Scalar, zero coefficients never stored.
// Iteration order is lexicographic on words (std::vector comparison).
class NcPoly {
public:
    using Terms = std::map<Word, Scalar>;

    NcPoly() = default;
    NcPoly(int n, const FieldSpec& spec) : n_(n), spec_(spec) {}
    static NcPoly constant(int n, const Scalar& c);
    static NcPoly monomial(int n, const Word& w, const Scalar& c);
    static NcPoly generator(int n, const FieldSpec& spec, int j);

    int n() const { return n_; }
    const FieldSpec& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    std::set<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    int max_degree() const;  // -1 for zero
    int min_degree() const;  // -1 for zero
    NcPoly homogeneous_component(int d) const;

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly scaled(const Scalar& c) const;
    NcPoly& operator+=(const NcPoly& o);
    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

private:
    int n_ = 0;
    FieldSpec spec_{};
    Terms terms_;
};

std::string generator_name(int n, int j);

// C(x_j u) = u x_j, extended linearly.
NcPoly cyclic_shift(const NcPoly& p);
// u -> u + Cu + ... + C^{d-1}u per term.
NcPoly cyclicize(const NcPoly& p);
// Strip a leading (left) or trailing (right) x_j; other terms vanish.
NcPoly left_derivative(const NcPoly& p, int j);
NcPoly right_derivative(const NcPoly& p, int j);
bool is_cyclicly_invariant(const NcPoly& p);

// Linear change of generators; column j of `m` is the image of generator j.
struct LinearSub {
    Matrix m;
    static LinearSub identity(int n, const FieldSpec& spec) { return {Matrix::identity(n, spec)}; }
    LinearSub inverse() const;  // throws SingularSubstitution
};

NcPoly apply_substitution(const NcPoly& p, const LinearSub& s);

// Coefficient vector of a homogeneous degree-d polynomial in the n^d word basis
// (word index = base-n number, first letter most significant).
std::uint64_t word_index(int n, const Word& w);
Word word_from_index(int n, int degree, std::uint64_t idx);
SparseRow to_row(const NcPoly& p);  // homogeneous only; columns are word indices
NcPoly from_row(int n, int degree, const FieldSpec& spec, const SparseRow& row);

}  // namespace potalg
