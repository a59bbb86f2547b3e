#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "potalg/grobner.hpp"
#include "potalg/parse.hpp"
#include "potalg/series.hpp"

namespace potalg {

enum class Flag { Yes, No, NotApplicable };
enum class ProperClass { Proper, NonProper, Degenerate };

std::string to_string(Flag f);
std::string to_string(ProperClass c);

// Textual parameter assignment, e.g. {"a" -> "2", "b" -> "1/2"}; values are
// scalar expressions evaluated in the verifying field.
using Sample = std::map<std::string, std::string>;

struct TwistBlock {
    std::string eigenvalue;  // scalar expression in the parameters
    int size = 1;
};

// Sequence of linear substitutions applied left to right; each maps some
// generators to linear forms, the rest stay fixed.
using SubstitutionChain = std::vector<std::map<int, std::string>>;

struct IsoSpec {
    SubstitutionChain substitution;
    Sample action;  // new parameter values in terms of the old ones
    std::string text;
};

struct CatalogEntry {
    std::string label;
    int n = 0;
    int k = 0;
    std::vector<std::string> params;
    bool twisted = false;  // kind = twisted: a non-potential twisted row
    std::string potential;
    std::vector<std::string> relations;
    std::vector<std::string> exceptions;  // "lhs != rhs", either side may be a tuple
    std::vector<Sample> samples;          // empty when params is empty
    RationalSeries series;
    std::string series_text;
    std::optional<RationalSeries> dual_series;
    Flag koszul = Flag::NotApplicable;
    Flag pbw = Flag::NotApplicable;
    Flag exact = Flag::NotApplicable;
    ProperClass properness = ProperClass::Proper;
    std::vector<TwistBlock> twist;
    SubstitutionChain pbw_sub;
    std::vector<IsoSpec> isos;
    std::optional<MonomialOrder> gb_order;
    std::vector<std::string> gb;
    std::vector<std::string> errata;  // where the entry departs from its original listing, and why
};

// Parses and validates: every potential, relation and golden element parses
// for every sample in `spec`, and every sample satisfies the exceptions.
// Throws SchemaError naming the entry and field.
std::vector<CatalogEntry> parse_catalog(const std::string& text, const FieldSpec& spec = FieldSpec::prime());
std::vector<CatalogEntry> load_catalog(const std::string& path, const FieldSpec& spec = FieldSpec::prime());
// Directory compiled in for the shipped catalog.
std::string default_catalog_path();

ParamMap evaluate_sample(const Sample& s, const FieldSpec& spec);
// True when no exception predicate is violated.
bool sample_admissible(const CatalogEntry& e, const ParamMap& params, const FieldSpec& spec);
// One parameter map per sample, or a single empty map for rigid rows.
std::vector<Sample> samples_of(const CatalogEntry& e);
std::string sample_text(const Sample& s);

NcPoly entry_potential(const CatalogEntry& e, const ParamMap& params, const FieldSpec& spec);
std::vector<NcPoly> entry_relations(const CatalogEntry& e, const ParamMap& params, const FieldSpec& spec);
NcPoly substitute(const NcPoly& p, const SubstitutionChain& chain, const ParamMap& params);

// ------------------------------------------------------------ verification

// Note carries an erratum; it never fails a row.
enum class CheckStatus { Pass, Fail, NotApplicable, Note };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

struct EntryReport {
    std::string label;
    std::string sample;
    int degree = 0;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool pass() const;
    const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
    FieldSpec spec = FieldSpec::prime();
    int degree = 0;         // 0: 8 for n = 3, 10 for n = 2, 6 otherwise
    int oracle_degree = 0;  // 0: 6 for n = 3, 7 for n = 2, 5 otherwise
    bool slices = true;     // complex slices in addition to the series criterion
};

int default_degree(int n);
int default_oracle_degree(int n);

// One report per parameter sample.
std::vector<EntryReport> verify_entry(const CatalogEntry& e, const VerifyOptions& opts);

struct CatalogReport {
    std::vector<EntryReport> rows;  // ordered as in the catalog
    double seconds = 0;
    bool pass() const;
};

// Entries are verified independently on `width` threads.
CatalogReport verify_all(const std::vector<CatalogEntry>& entries, const VerifyOptions& opts, int width = 1);

std::string format_text(const CatalogReport& r);
// Tab-separated: label, sample, check, status, detail. No timings.
std::string format_machine(const CatalogReport& r);

}  // namespace potalg
