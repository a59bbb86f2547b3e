#include "potalg/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "potalg/homology.hpp"
#include "potalg/twist.hpp"

#ifndef POTALG_DATA_DIR
#define POTALG_DATA_DIR "data"
#endif

namespace potalg {

std::string to_string(Flag f) {
    switch (f) {
        case Flag::Yes: return "Y";
        case Flag::No: return "N";
        default: return "n/a";
    }
}

std::string to_string(ProperClass c) {
    switch (c) {
        case ProperClass::Proper: return "proper";
        case ProperClass::NonProper: return "nonproper";
        default: return "degenerate";
    }
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Split on `sep` outside parentheses; empty pieces dropped.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

// "(e1, e2)" -> {e1, e2}; anything else -> {s}.
std::vector<std::string> tuple_parts(const std::string& s) {
    std::string t = trim(s);
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            if (t[i] == '(') ++depth;
            if (t[i] == ')') --depth;
            if (depth == 0) { wraps = false; break; }
        }
        if (wraps) {
            auto parts = split_top(t.substr(1, t.size() - 2), ',');
            if (parts.size() > 1) return parts;
        }
    }
    return {t};
}

Flag parse_flag(const std::string& label, const std::string& key, const std::string& v) {
    if (v == "Y") return Flag::Yes;
    if (v == "N") return Flag::No;
    if (v == "n/a") return Flag::NotApplicable;
    throw SchemaError(label, key, "expected Y, N or n/a, got '" + v + "'");
}

int generator_of(int n, const std::string& name) {
    for (int j = 0; j < n; ++j)
        if (generator_name(n, j) == name) return j;
    return -1;
}

SubstitutionChain parse_chain(const std::string& label, const std::string& key, int n, const std::string& text) {
    SubstitutionChain chain;
    for (const auto& step : split_top(text, ';')) {
        std::map<int, std::string> m;
        for (const auto& item : split_top(step, ',')) {
            auto arrow = item.find("->");
            if (arrow == std::string::npos) throw SchemaError(label, key, "expected 'gen -> form' in '" + item + "'");
            int g = generator_of(n, trim(item.substr(0, arrow)));
            if (g < 0) throw SchemaError(label, key, "unknown generator in '" + item + "'");
            if (m.count(g)) throw SchemaError(label, key, "generator mapped twice in '" + step + "'");
            m[g] = trim(item.substr(arrow + 2));
        }
        chain.push_back(std::move(m));
    }
    return chain;
}

Sample parse_assignments(const std::string& label, const std::string& key, const std::string& text) {
    Sample s;
    for (const auto& item : split_top(text, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw SchemaError(label, key, "expected 'name = value' in '" + item + "'");
        s[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
    return s;
}

std::vector<std::string> parse_list(const std::string& text) { return split_top(text, ';'); }

void validate(CatalogEntry& e, const std::set<std::string>& keys, const FieldSpec& spec) {
    const std::string& L = e.label;
    for (const char* req : {"n", "k", "potential", "relations", "series", "class"})
        if (!keys.count(req)) throw SchemaError(L, req, "missing");
    if (e.n < 1) throw SchemaError(L, "n", "must be positive");
    if (e.k < 2) throw SchemaError(L, "k", "must be at least 2");
    if (e.params.empty() != e.samples.empty())
        throw SchemaError(L, "samples", e.params.empty() ? "samples given for a rigid entry" : "no samples");
    if (!e.twist.empty() && !e.twisted) throw SchemaError(L, "twist", "spectrum given for a potential row");
    if (!e.gb.empty() && !e.gb_order) throw SchemaError(L, "gb_order", "required with gb");
    if (e.gb_order && e.gb_order->n() != e.n) throw SchemaError(L, "gb_order", "wrong generator count");

    for (const auto& s : samples_of(e)) {
        for (const auto& p : e.params)
            if (!s.count(p)) throw SchemaError(L, "samples", "parameter '" + p + "' not assigned");
        for (const auto& [name, v] : s)
            if (std::find(e.params.begin(), e.params.end(), name) == e.params.end())
                throw SchemaError(L, "samples", "unknown parameter '" + name + "'");
        std::string field = "samples";
        try {
            ParamMap pm = evaluate_sample(s, spec);
            if (!sample_admissible(e, pm, spec))
                throw SchemaError(L, "samples", "sample " + sample_text(s) + " violates an exception");
            field = "potential";
            NcPoly f = entry_potential(e, pm, spec);
            if (!f.is_zero() && (!f.is_homogeneous() || f.max_degree() != e.k))
                throw SchemaError(L, field, "not homogeneous of degree k");
            field = "relations";
            entry_relations(e, pm, spec);
            field = "gb";
            for (const auto& g : e.gb) parse_ncpoly(g, e.n, spec, pm);
            field = "twist";
            for (const auto& b : e.twist) parse_scalar(b.eigenvalue, spec, pm);
            field = "iso";
            for (const auto& iso : e.isos) {
                substitute(f, iso.substitution, pm);
                for (const auto& [name, expr] : iso.action) parse_scalar(expr, spec, pm);
            }
            field = "pbw_sub";
            substitute(f, e.pbw_sub, pm);
        } catch (const SchemaError&) {
            throw;
        } catch (const UnsupportedOrder&) {
            // constant outside this field; checked when verifying in a larger one
        } catch (const Error& err) {
            throw SchemaError(L, field, err.what());
        } catch (const std::exception& err) {
            throw SchemaError(L, field, err.what());
        }
    }
}

}  // namespace

std::vector<Sample> samples_of(const CatalogEntry& e) {
    if (e.samples.empty()) return {Sample{}};
    return e.samples;
}

std::string sample_text(const Sample& s) {
    if (s.empty()) return "-";
    std::string out;
    for (const auto& [k, v] : s) out += (out.empty() ? "" : ", ") + k + "=" + v;
    return out;
}

ParamMap evaluate_sample(const Sample& s, const FieldSpec& spec) {
    ParamMap pm;
    for (const auto& [k, v] : s) pm[k] = parse_scalar(v, spec);
    return pm;
}

bool sample_admissible(const CatalogEntry& e, const ParamMap& params, const FieldSpec& spec) {
    for (const auto& ex : e.exceptions) {
        auto at = ex.find("!=");
        if (at == std::string::npos) throw SchemaError(e.label, "exceptions", "expected '!=' in '" + ex + "'");
        auto lhs = tuple_parts(ex.substr(0, at));
        auto rhs = tuple_parts(ex.substr(at + 2));
        if (lhs.size() != rhs.size()) throw SchemaError(e.label, "exceptions", "tuple sizes differ in '" + ex + "'");
        bool all_equal = true;
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (parse_scalar(lhs[i], spec, params) != parse_scalar(rhs[i], spec, params)) all_equal = false;
        if (all_equal) return false;
    }
    return true;
}

NcPoly entry_potential(const CatalogEntry& e, const ParamMap& params, const FieldSpec& spec) {
    return parse_ncpoly(e.potential, e.n, spec, params);
}

std::vector<NcPoly> entry_relations(const CatalogEntry& e, const ParamMap& params, const FieldSpec& spec) {
    std::vector<NcPoly> out;
    for (const auto& r : e.relations) out.push_back(parse_ncpoly(r, e.n, spec, params));
    return out;
}

NcPoly substitute(const NcPoly& p, const SubstitutionChain& chain, const ParamMap& params) {
    const int n = p.n();
    NcPoly cur = p;
    for (const auto& step : chain) {
        Matrix m = Matrix::identity(n, p.spec());
        for (const auto& [g, form] : step) {
            NcPoly img = parse_ncpoly(form, n, p.spec(), params);
            if (!img.is_zero() && (!img.is_homogeneous() || img.max_degree() != 1))
                throw SingularSubstitution("image of " + generator_name(n, g) + " is not linear");
            for (int r = 0; r < n; ++r) m.at(r, g) = img.coeff(Word{static_cast<Letter>(r)});
        }
        cur = apply_substitution(cur, LinearSub{m});
    }
    return cur;
}

std::vector<CatalogEntry> parse_catalog(const std::string& text, const FieldSpec& spec) {
    std::vector<CatalogEntry> out;
    std::set<std::string> labels;
    std::set<std::string> keys;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto finish = [&]() {
        if (!out.empty()) validate(out.back(), keys, spec);
        keys.clear();
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw SchemaError("?", "label", "bad header on line " + std::to_string(lineno));
            finish();
            CatalogEntry e;
            e.label = trim(t.substr(1, t.size() - 2));
            if (e.label.empty() || !labels.insert(e.label).second)
                throw SchemaError(e.label, "label", "empty or duplicate label");
            out.push_back(std::move(e));
            continue;
        }
        if (out.empty()) throw SchemaError("?", "label", "field before first entry on line " + std::to_string(lineno));
        CatalogEntry& e = out.back();
        auto eq = t.find('=');
        if (eq == std::string::npos) throw SchemaError(e.label, "?", "expected 'key = value' on line " + std::to_string(lineno));
        std::string key = trim(t.substr(0, eq));
        std::string v = trim(t.substr(eq + 1));
        if (key != "iso" && key != "erratum" && !keys.insert(key).second) throw SchemaError(e.label, key, "repeated");
        keys.insert(key);
        try {
            if (key == "n") e.n = std::stoi(v);
            else if (key == "k") e.k = std::stoi(v);
            else if (key == "params") e.params = split_top(v, ',');
            else if (key == "potential") e.potential = v;
            else if (key == "kind") {
                if (v != "potential" && v != "twisted") throw SchemaError(e.label, key, "expected potential or twisted");
                e.twisted = v == "twisted";
            }
            else if (key == "relations") e.relations = parse_list(v);
            else if (key == "exceptions") e.exceptions = parse_list(v);
            else if (key == "samples") {
                for (const auto& s : parse_list(v)) e.samples.push_back(parse_assignments(e.label, key, s));
            } else if (key == "series") {
                e.series_text = v;
                e.series = RationalSeries::parse(v);
            } else if (key == "dual_series") e.dual_series = RationalSeries::parse(v);
            else if (key == "koszul") e.koszul = parse_flag(e.label, key, v);
            else if (key == "pbw") e.pbw = parse_flag(e.label, key, v);
            else if (key == "exact") e.exact = parse_flag(e.label, key, v);
            else if (key == "class") {
                if (v == "proper") e.properness = ProperClass::Proper;
                else if (v == "nonproper") e.properness = ProperClass::NonProper;
                else if (v == "degenerate") e.properness = ProperClass::Degenerate;
                else throw SchemaError(e.label, key, "expected proper, nonproper or degenerate");
            } else if (key == "twist") {
                static const std::regex block(R"(^(.*\S)\s*\[\s*(\d+)\s*\]$)");
                for (const auto& b : parse_list(v)) {
                    std::smatch m;
                    if (!std::regex_match(b, m, block)) throw SchemaError(e.label, key, "expected 'value [size]' in '" + b + "'");
                    e.twist.push_back({m[1].str(), std::stoi(m[2].str())});
                }
            } else if (key == "pbw_sub") e.pbw_sub = parse_chain(e.label, key, e.n, v);
            else if (key == "iso") {
                auto colon = v.find(':');
                if (colon == std::string::npos) throw SchemaError(e.label, key, "expected 'substitution : action'");
                IsoSpec iso;
                iso.text = v;
                iso.substitution = parse_chain(e.label, key, e.n, v.substr(0, colon));
                iso.action = parse_assignments(e.label, key, v.substr(colon + 1));
                e.isos.push_back(std::move(iso));
            } else if (key == "gb_order") {
                MonomialOrder o;
                for (const auto& g : split_top(v, '>')) {
                    int j = generator_of(e.n, g);
                    if (j < 0) throw SchemaError(e.label, key, "unknown generator '" + g + "'");
                    o.precedence.push_back(j);
                }
                e.gb_order = o;
            } else if (key == "gb") e.gb = parse_list(v);
            else if (key == "erratum") e.errata.push_back(v);
            else throw SchemaError(e.label, key, "unknown field");
        } catch (const SchemaError&) {
            throw;
        } catch (const std::exception& err) {
            throw SchemaError(e.label, key, err.what());
        }
    }
    finish();
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path, const FieldSpec& spec) {
    std::ifstream in(path);
    if (!in) throw SchemaError("-", "path", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str(), spec);
}

std::string default_catalog_path() { return std::string(POTALG_DATA_DIR) + "/catalog.txt"; }

// ------------------------------------------------------------ verification

bool EntryReport::pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* EntryReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool CatalogReport::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const EntryReport& r) { return r.pass(); });
}

int default_degree(int n) { return n == 3 ? 8 : n == 2 ? 10 : 6; }
int default_oracle_degree(int n) { return n == 3 ? 6 : n == 2 ? 7 : 5; }

namespace {

std::string join_dims(const std::vector<long long>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::size_t span_rank(const std::vector<NcPoly>& polys, std::map<Word, std::uint32_t>& cols) {
    std::vector<SparseRow> rows;
    for (const auto& p : polys) {
        SparseRow r;
        for (const auto& [w, c] : p.terms()) {
            auto it = cols.emplace(w, static_cast<std::uint32_t>(cols.size())).first;
            r.emplace_back(it->second, c);
        }
        rows.push_back(normalize_row(std::move(r)));
    }
    Echelon e(static_cast<std::uint32_t>(cols.size()));
    for (auto& r : rows) e.insert(std::move(r));
    return e.rank();
}

bool span_equal(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
    std::map<Word, std::uint32_t> cols;
    auto ra = span_rank(a, cols);
    auto rb = span_rank(b, cols);
    std::vector<NcPoly> ab(a);
    ab.insert(ab.end(), b.begin(), b.end());
    return ra == rb && span_rank(ab, cols) == ra;
}

std::vector<NcPoly> nonzero(std::vector<NcPoly> v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const NcPoly& p) { return p.is_zero(); }), v.end());
    return v;
}

NcPoly make_monic(const NcPoly& p, const MonomialOrder& o) {
    const Word* lead = nullptr;
    for (const auto& [w, c] : p.terms())
        if (!lead || o.less(*lead, w)) lead = &w;
    return lead ? p.scaled(p.coeff(*lead).inv()) : p;
}

CheckResult check(const std::string& name, bool ok, std::string detail) {
    return {name, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult na(const std::string& name, std::string detail) { return {name, CheckStatus::NotApplicable, std::move(detail)}; }

// F written in the generators it actually uses, renumbered.
NcPoly compress_generators(const NcPoly& f, int& used) {
    std::vector<int> map(f.n(), -1);
    used = 0;
    for (const auto& [w, c] : f.terms())
        for (Letter l : w)
            if (map[l] < 0) map[l] = 0;
    for (int j = 0; j < f.n(); ++j)
        if (map[j] == 0) map[j] = used++;
    NcPoly out(used, f.spec());
    for (const auto& [w, c] : f.terms()) {
        Word v;
        for (Letter l : w) v.push_back(static_cast<Letter>(map[l]));
        out.add_term(v, c);
    }
    return out;
}

struct Context {
    const CatalogEntry& e;
    const FieldSpec& spec;
    ParamMap params;
    int degree;
    int oracle_degree;
    NcPoly f;
    std::vector<NcPoly> rels;  // nonzero derivatives
    GrobnerBasis gb;
    std::vector<long long> dims;
};

CheckResult check_relations(const Context& c) {
    auto table = nonzero(entry_relations(c.e, c.params, c.spec));
    bool ok = span_equal(c.rels, table);
    return check("relations", ok,
                 ok ? "derivatives span the listed relations (" + std::to_string(c.rels.size()) + ")"
                    : "derivatives and listed relations span different spaces");
}

CheckResult check_series(const Context& c) {
    auto want = taylor(c.e.series, c.degree);
    if (want == c.dims) return check("series", true, "dims " + join_dims(c.dims) + " match " + c.e.series_text);
    std::size_t m = 0;
    while (m < want.size() && want[m] == c.dims[m]) ++m;
    return check("series", false,
                 "degree " + std::to_string(m) + ": computed " + std::to_string(c.dims[m]) + ", claimed " +
                     std::to_string(want[m]) + " (dims " + join_dims(c.dims) + ")");
}

CheckResult check_oracle(const Context& c) {
    int d = std::min(c.oracle_degree, c.degree);
    auto brute = brute_force_dims(c.rels, c.e.n, d);
    std::vector<long long> head(c.dims.begin(), c.dims.begin() + d + 1);
    return check("oracle", brute == head, "slice ranks to degree " + std::to_string(d) + ": " + join_dims(brute));
}

CheckResult check_class(const Context& c, const TwistReport& tw) {
    const int n = c.e.n, k = c.e.k;
    std::string got;
    std::string detail = "relation rank " + std::to_string(tw.relation_rank);
    if (tw.relation_rank < n) {
        got = "degenerate";
    } else {
        if (k > c.degree) return na("class", "degree " + std::to_string(k) + " beyond the checked range");
        auto p = properness_check(n, k, c.dims[k - 1], c.dims[k]);
        detail += ", dim A_" + std::to_string(k - 1) + " = " + std::to_string(c.dims[k - 1]) + ", dim A_" +
                  std::to_string(k) + " = " + std::to_string(c.dims[k]);
        if (!p.nondegenerate) got = "inconsistent";
        else got = p.proper ? "proper" : "nonproper";
    }
    return check("class", got == to_string(c.e.properness), got + "; " + detail);
}

CheckResult check_twist(const Context& c, const TwistReport& tw) {
    if (!c.e.twisted) return check("twist", tw.is_potential, tw.is_potential ? "cyclicly invariant" : "not a potential");
    if (!tw.is_twisted) return check("twist", false, "left and right derivative spans differ");
    if (tw.is_potential) return check("twist", false, "claimed non-potential but cyclicly invariant");
    if (c.e.twist.empty())
        return check("twist", true, tw.twist ? "twisted, M = " + tw.twist->to_string() : "twisted, degenerate");
    if (!tw.twist) return check("twist", false, "no unique twist (degenerate)");
    std::vector<Scalar> eig;
    std::vector<std::pair<Scalar, int>> blocks;
    std::string claim;
    for (const auto& b : c.e.twist) {
        Scalar v = parse_scalar(b.eigenvalue, c.spec, c.params);
        for (int i = 0; i < b.size; ++i) eig.push_back(v);
        blocks.emplace_back(v, b.size);
        claim += (claim.empty() ? "" : ", ") + b.eigenvalue + (b.size > 1 ? " [" + std::to_string(b.size) + "]" : "");
    }
    if (!verify_eigenvalues(*tw.twist, eig)) return check("twist", false, "characteristic polynomial differs from " + claim);
    if (!verify_jordan(*tw.twist, blocks)) return check("twist", false, "eigenvalues match, Jordan blocks differ from " + claim);
    return check("twist", true, "spectrum " + claim);
}

CheckResult check_exact(const Context& c, bool slices) {
    const int n = c.e.n, k = c.e.k;
    auto target = exact_target_dims(n, k, c.degree);
    bool criterion;
    std::string why;
    if (c.dims != target) {
        criterion = false;
        std::size_t m = 0;
        while (c.dims[m] == target[m]) ++m;
        why = "series leaves the exact target at degree " + std::to_string(m);
    } else {
        criterion = right_annihilator_free(c.gb, c.degree);
        why = criterion ? "target series and no right annihilators" : "non-trivial right annihilator";
    }
    std::optional<int> bad_slice;
    bool composed = true;
    if (slices && !c.f.is_zero()) {
        for (const auto& s : build_complex_slices(c.f, c.gb, c.degree)) {
            if (!s.compositions_vanish) composed = false;
            if (!s.exact_here() && !bad_slice) bad_slice = s.degree;
        }
        if (!composed) return check("exact", false, "d o d != 0 on some slice");
        if (criterion != !bad_slice)
            return check("exact", false, "criterion (" + why + ") disagrees with slices");
        if (bad_slice) why += "; slice " + std::to_string(*bad_slice) + " not exact";
        else why += "; slices exact to degree " + std::to_string(c.degree);
    }
    if (c.e.exact == Flag::NotApplicable) return na("exact", why);
    return check("exact", criterion == (c.e.exact == Flag::Yes), (criterion ? "exact: " : "not exact: ") + why);
}

CheckResult check_koszul(const Context& c) {
    if (c.e.koszul == Flag::NotApplicable) return na("koszul", "not quadratic");
    auto probe = koszul_duality_probe(c.rels, c.e.n, c.spec, c.degree);
    std::string detail = probe.holds ? "duality holds to degree " + std::to_string(c.degree)
                                     : "duality fails at degree " + std::to_string(*probe.first_failure_degree);
    detail += "; dual dims " + join_dims(probe.dual_dims);
    bool ok = probe.holds == (c.e.koszul == Flag::Yes);
    if (c.e.dual_series) {
        bool dual_ok = taylor(*c.e.dual_series, c.degree) == probe.dual_dims;
        if (!dual_ok) detail += " (dual series differs from claim)";
        ok = ok && dual_ok;
    }
    return check("koszul", ok, detail);
}

CheckResult check_pbw(const Context& c) {
    if (c.e.pbw == Flag::NotApplicable) return na("pbw", "not quadratic");
    std::vector<NcPoly> rels;
    for (const auto& r : c.rels) rels.push_back(substitute(r, c.e.pbw_sub, c.params));
    std::optional<MonomialOrder> found;
    for (const auto& o : MonomialOrder::all(c.e.n))
        if (pbw_with_order(rels, o).is_quadratic_gb) {
            found = o;
            break;
        }
    std::string via = c.e.pbw_sub.empty() ? "" : " after substitution";
    if (c.e.pbw == Flag::Yes)
        return check("pbw", found.has_value(), found ? "quadratic basis for " + found->to_string() + via
                                                     : "no quadratic basis in any precedence" + via);
    return check("pbw", !found, found ? "quadratic basis for " + found->to_string()
                                      : "consistent: no precedence gives a quadratic basis");
}

CheckResult check_gb(const Context& c) {
    if (c.e.gb.empty()) return na("gb", "no reference basis");
    const MonomialOrder& o = *c.e.gb_order;
    auto g = buchberger_truncated(c.rels, o, c.degree, c.spec);
    std::vector<NcPoly> want;
    for (const auto& s : c.e.gb) want.push_back(make_monic(parse_ncpoly(s, c.e.n, c.spec, c.params), o));
    bool same = g.complete() && g.elements().size() == want.size();
    for (const auto& w : want)
        if (same) same = std::find(g.elements().begin(), g.elements().end(), w) != g.elements().end();
    std::string detail = std::to_string(g.elements().size()) + " elements for " + o.to_string() +
                         (g.complete() ? ", complete" : ", incomplete");
    if (!same) {
        detail += ":";
        for (const auto& p : g.elements()) detail += " [" + print_ncpoly(p) + "]";
    }
    return check("gb", same, detail);
}

CheckResult check_iso(const Context& c) {
    if (c.e.isos.empty()) return na("iso", "none listed");
    std::string detail;
    for (const auto& iso : c.e.isos) {
        ParamMap mapped = c.params;
        for (const auto& [name, expr] : iso.action) mapped[name] = parse_scalar(expr, c.spec, c.params);
        NcPoly moved = substitute(c.f, iso.substitution, c.params);
        NcPoly target = entry_potential(c.e, mapped, c.spec);
        if (!span_equal(nonzero(derivative_relations(moved)), nonzero(derivative_relations(target))))
            return check("iso", false, "'" + iso.text + "' does not match the parameter action");
        detail += (detail.empty() ? "" : "; ") + iso.text;
    }
    return check("iso", true, detail);
}

CheckResult check_free_product(const Context& c) {
    if (c.e.properness != ProperClass::Degenerate) return na("free-product", "non-degenerate");
    int m = 0;
    NcPoly g = compress_generators(c.f, m);
    std::vector<long long> dims_b(c.degree + 1, 0);
    if (m == 0) {
        dims_b[0] = 1;
    } else {
        auto rels = nonzero(derivative_relations(g));
        dims_b = graded_dims(buchberger_truncated(rels, MonomialOrder::standard(m), c.degree, c.spec), c.degree);
    }
    auto inv = series_inverse(dims_b, c.degree);
    if (c.degree >= 1) inv[1] -= c.e.n - m;
    bool ok = series_inverse(inv, c.degree) == c.dims;
    return check("free-product", ok,
                 std::to_string(m) + " active generators, H_B = " + join_dims(dims_b) + (ok ? "" : "; formula differs"));
}

CheckResult check_flag_consistency(const CatalogEntry& e) {
    if (e.k != 3 || e.properness != ProperClass::Proper || e.koszul == Flag::NotApplicable)
        return na("flags", "exact/koszul link only for proper quadratic rows");
    return check("flags", e.koszul == e.exact, "koszul " + to_string(e.koszul) + ", exact " + to_string(e.exact));
}

}  // namespace

std::vector<EntryReport> verify_entry(const CatalogEntry& e, const VerifyOptions& opts) {
    std::vector<EntryReport> out;
    for (const auto& s : samples_of(e)) {
        auto t0 = std::chrono::steady_clock::now();
        EntryReport rep;
        rep.label = e.label;
        rep.sample = sample_text(s);
        rep.degree = opts.degree > 0 ? opts.degree : default_degree(e.n);
        int od = opts.oracle_degree > 0 ? opts.oracle_degree : default_oracle_degree(e.n);
        try {
            Context c{e, opts.spec, evaluate_sample(s, opts.spec), rep.degree, od, NcPoly(e.n, opts.spec), {}, {}, {}};
            if (!sample_admissible(e, c.params, opts.spec)) {
                rep.checks.push_back(check("sample", false, "violates an exception in " + opts.spec.to_string()));
            } else {
                c.f = entry_potential(e, c.params, opts.spec);
                c.rels = nonzero(derivative_relations(c.f));
                c.gb = buchberger_truncated(c.rels, MonomialOrder::standard(e.n), c.degree, opts.spec);
                c.dims = graded_dims(c.gb, c.degree);
                TwistReport tw = c.f.is_zero() ? TwistReport{true, true, false, {}, {}, 0} : twist_detect(c.f);
                auto guarded = [&](const std::string& name, auto&& fn) {
                    try {
                        rep.checks.push_back(fn());
                    } catch (const UnsupportedOrder& err) {
                        rep.checks.push_back(na(name, std::string("skipped: ") + err.what()));
                    } catch (const Error& err) {
                        rep.checks.push_back(check(name, false, std::string("error: ") + err.what()));
                    }
                };
                guarded("relations", [&] { return check_relations(c); });
                guarded("series", [&] { return check_series(c); });
                guarded("oracle", [&] { return check_oracle(c); });
                guarded("class", [&] { return check_class(c, tw); });
                guarded("twist", [&] { return check_twist(c, tw); });
                guarded("exact", [&] { return check_exact(c, opts.slices); });
                guarded("koszul", [&] { return check_koszul(c); });
                guarded("pbw", [&] { return check_pbw(c); });
                guarded("flags", [&] { return check_flag_consistency(e); });
                guarded("gb", [&] { return check_gb(c); });
                guarded("iso", [&] { return check_iso(c); });
                guarded("free-product", [&] { return check_free_product(c); });
            }
        } catch (const UnsupportedOrder& err) {
            rep.checks.push_back(na("field", std::string("skipped: ") + err.what()));
        }
        for (const auto& note : e.errata) rep.checks.push_back({"erratum", CheckStatus::Note, note});
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(rep));
    }
    return out;
}

CatalogReport verify_all(const std::vector<CatalogEntry>& entries, const VerifyOptions& opts, int width) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::vector<EntryReport>> parts(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < entries.size();) parts[i] = verify_entry(entries[i], opts);
    };
    width = std::max(1, width);
    if (width == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < width; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    CatalogReport r;
    for (auto& p : parts)
        for (auto& row : p) r.rows.push_back(std::move(row));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {
const char* status_text(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Note: return "note";
        default: return "n/a";
    }
}
}  // namespace

std::string format_text(const CatalogReport& r) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& row : r.rows) {
        passed += row.pass();
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", row.seconds);
        os << row.label << "  [" << row.sample << "]  " << (row.pass() ? "PASS" : "FAIL") << "  (degree " << row.degree
           << ", " << secs << " s)\n";
        for (const auto& c : row.checks)
            os << "    " << c.name << std::string(c.name.size() < 13 ? 13 - c.name.size() : 1, ' ') << status_text(c.status)
               << "  " << c.detail << "\n";
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
    os << passed << "/" << r.rows.size() << " rows pass in " << secs << " s: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string format_machine(const CatalogReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows)
        for (const auto& c : row.checks)
            os << row.label << '\t' << row.sample << '\t' << c.name << '\t' << status_text(c.status) << '\t' << c.detail
               << '\n';
    os << "summary\t-\tall\t" << (r.pass() ? "PASS" : "FAIL") << '\t' << r.rows.size() << " rows\n";
    return os.str();
}

}  // namespace potalg
