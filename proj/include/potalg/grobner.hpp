#pragma once

#include <memory>
#include <string>
#include <vector>

#include "potalg/ncpoly.hpp"

namespace potalg {

// Degree-lexicographic order; precedence[0] is the largest generator.
struct MonomialOrder {
    std::vector<int> precedence;

    static MonomialOrder standard(int n);                // x > y > z > ...
    static std::vector<MonomialOrder> all(int n);        // every precedence permutation
    int n() const { return static_cast<int>(precedence.size()); }
    bool less(const Word& a, const Word& b) const;
    std::string to_string() const;                      // e.g. "x>y>z"
};

namespace detail {
struct GbImpl;
}

class GrobnerBasis {
public:
    GrobnerBasis() = default;

    const MonomialOrder& order() const;
    int n() const;
    const FieldSpec& spec() const;
    // Monic, tail-reduced, sorted by increasing leading word.
    const std::vector<NcPoly>& elements() const { return elements_; }
    std::vector<Word> leading_words() const;
    int truncation_degree() const;
    // True when every ambiguity resolves: the basis is finite and closed.
    bool complete() const;
    // Words longer than truncation_degree() are treated as zero; leading words
    // then come from the lowest-degree part.
    bool word_truncated() const;

    NcPoly normal_form(const NcPoly& p) const;
    bool is_normal(const Word& w) const;
    std::vector<Word> normal_words(int degree) const;  // increasing order
    // Header line with order/truncation, then one element per line.
    std::string serialize() const;

private:
    friend GrobnerBasis run_buchberger(const std::vector<NcPoly>&, const MonomialOrder&, int, bool,
                                       const FieldSpec&);
    std::shared_ptr<const detail::GbImpl> impl_;
    std::vector<NcPoly> elements_;
};

// Buchberger with overlaps processed up to `max_degree`; higher overlaps are
// only examined afterwards to decide completeness.
GrobnerBasis buchberger_truncated(const std::vector<NcPoly>& relations, const MonomialOrder& order,
                                  int max_degree, const FieldSpec& spec = FieldSpec::rationals());
// Basis of I + (all words of length > max_word): always finite. Computed in the
// truncated algebra with shorter words ranked higher (ties by precedence), so
// leading words are taken from the lowest-degree part of each element.
GrobnerBasis buchberger_word_truncated(const std::vector<NcPoly>& relations, const MonomialOrder& order,
                                       int max_word, const FieldSpec& spec = FieldSpec::rationals());

std::vector<long long> graded_dims(const GrobnerBasis& gb, int up_to);
// d_k = dim of K<X>/(I + words of degree > k), k = 0..up_to.
std::vector<long long> pseries_dims(const std::vector<NcPoly>& relations, int n, const MonomialOrder& order,
                                    int up_to);
// Slice-rank oracles without any rewriting.
std::vector<long long> brute_force_dims(const std::vector<NcPoly>& relations, int n, int up_to);
std::vector<long long> brute_force_pseries_dims(const std::vector<NcPoly>& relations, int n, int up_to);

bool right_annihilator_free(const GrobnerBasis& gb, int up_to);

struct PbwResult {
    bool is_quadratic_gb = false;
    std::vector<Word> leading_words;
};
PbwResult pbw_with_order(const std::vector<NcPoly>& relations, const MonomialOrder& order);

}  // namespace potalg
