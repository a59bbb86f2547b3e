// Command-line front end: analyze, catalog, sample, series-fit, gv, twist-space.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include "potalg/catalog.hpp"
#include "potalg/homology.hpp"
#include "potalg/twist.hpp"

using namespace potalg;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string text, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text += line + "\n";
    }
    return text;
}

// Generators x1..xN when indexed names appear, else x, y(, z).
int infer_generators(const std::string& text) {
    int n = 0;
    std::regex indexed(R"(x(\d+))");
    for (std::sregex_iterator it(text.begin(), text.end(), indexed), end; it != end; ++it)
        n = std::max(n, std::stoi((*it)[1].str()));
    if (n > 0) return n;
    return text.find('z') != std::string::npos ? 3 : 2;
}

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::vector<long long> parse_coefficients(const std::string& text) {
    std::vector<long long> out;
    std::string tok;
    std::istringstream in(text);
    while (in >> tok) {
        std::istringstream parts(tok);
        std::string piece;
        while (std::getline(parts, piece, ','))
            if (!piece.empty()) out.push_back(std::stoll(piece));
    }
    return out;
}

struct Emitter {
    bool machine;
    void operator()(const std::string& key, const std::string& value) const {
        if (machine) std::cout << key << '\t' << value << '\n';
        else std::cout << key << ": " << value << '\n';
    }
};

// ------------------------------------------------------------------ analyze

struct AnalyzeOptions {
    std::string file;
    std::string field = "cyclo72";
    int degree = 0;
    int n = 0;
    std::vector<std::string> eigen;
    bool machine = false;
};

int cmd_analyze(const AnalyzeOptions& o) {
    FieldSpec spec = FieldSpec::parse(o.field);
    std::string text = read_file(o.file);
    int n = o.n > 0 ? o.n : infer_generators(text);
    NcPoly f = parse_ncpoly(text, n, spec);
    int degree = o.degree > 0 ? o.degree : default_degree(n);
    Emitter out{o.machine};
    out("field", spec.to_string());
    out("generators", std::to_string(n));
    out("potential", print_ncpoly(f));
    int status = kPass;

    if (f.is_zero()) {
        out("dims", join(taylor(RationalSeries::make({1}, {1, -n}), degree)));
        return status;
    }
    out("cyclicly invariant", is_cyclicly_invariant(f) ? "yes" : "no");
    if (!f.is_homogeneous()) {
        auto rels = derivative_relations(f);
        auto d = pseries_dims(rels, n, MonomialOrder::standard(n), degree);
        out("homogeneous", "no");
        out("P-series dims", join(d));
        return status;
    }

    const int k = f.max_degree();
    TwistReport tw = twist_detect(f);
    out("twisted potential", tw.is_twisted ? "yes" : "no");
    out("relation rank", std::to_string(tw.relation_rank));
    out("nondegenerate", tw.nondegenerate ? "yes" : "no");
    if (tw.twist) out("twist", tw.twist->to_string());
    if (!o.eigen.empty()) {
        if (!tw.twist) {
            out("eigenvalues", "no twist matrix to check");
            status = kFail;
        } else {
            std::vector<Scalar> claimed;
            for (const auto& e : o.eigen) claimed.push_back(parse_scalar(e, spec));
            bool ok = claimed.size() == static_cast<std::size_t>(n) && verify_eigenvalues(*tw.twist, claimed);
            out("eigenvalues", ok ? "verified" : "mismatch");
            if (!ok) status = kFail;
        }
    }

    auto rels = derivative_relations(f);
    std::vector<NcPoly> nz;
    for (const auto& r : rels)
        if (!r.is_zero()) nz.push_back(r);
    auto gb = buchberger_truncated(nz, MonomialOrder::standard(n), degree, spec);
    auto dims = graded_dims(gb, degree);
    out("dims", join(dims));
    auto fit = fit_rational(dims, std::clamp(degree / 2, 1, 6));
    out("fitted series", fit ? fit->to_string() : "none");
    if (tw.nondegenerate && k <= degree) {
        auto p = properness_check(n, k, dims[k - 1], dims[k]);
        out("proper", p.proper ? "yes" : "no");
    }
    if (tw.is_twisted) {
        bool crit = exactness_by_criterion(f, gb, degree);
        std::optional<int> bad;
        for (const auto& s : build_complex_slices(f, gb, degree))
            if (!s.exact_here() && !bad) bad = s.degree;
        out("exact", std::string(crit ? "YES" : "NO") + " (criterion), " +
                         (bad ? "slice " + std::to_string(*bad) + " not exact" : "slices exact") + " to degree " +
                         std::to_string(degree));
    }
    if (k == 3) {
        auto probe = koszul_duality_probe(nz, n, spec, degree);
        out("duality", probe.holds ? "holds to degree " + std::to_string(degree)
                                   : "fails at degree " + std::to_string(*probe.first_failure_degree));
        out("dual dims", join(probe.dual_dims));
        for (const auto& ord : MonomialOrder::all(n)) {
            auto pbw = pbw_with_order(nz, ord);
            out("pbw " + ord.to_string(), pbw.is_quadratic_gb ? "quadratic basis" : "not quadratic");
        }
    }
    return status;
}

// ------------------------------------------------------------------ catalog

struct CatalogOptions {
    std::vector<std::string> entries;
    bool all = false;
    std::string field = "cyclo72";
    int degree = 0;
    int width = 1;
    bool machine = false;
    std::string path;
};

int cmd_catalog(const CatalogOptions& o) {
    VerifyOptions vo;
    vo.spec = FieldSpec::parse(o.field);
    vo.degree = o.degree;
    auto entries = load_catalog(o.path.empty() ? default_catalog_path() : o.path, vo.spec);
    std::vector<CatalogEntry> chosen;
    if (o.all) {
        chosen = entries;
    } else {
        for (const auto& label : o.entries) {
            auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.label == label; });
            if (it == entries.end()) {
                std::cerr << "unknown label: " << label << "\n";
                return kUsage;
            }
            chosen.push_back(*it);
        }
    }
    auto report = verify_all(chosen, vo, o.width);
    if (o.machine) {
        std::cout << format_machine(report);
    } else {
        std::cout << "# field " << vo.spec.to_string() << ", degree "
                  << (o.degree > 0 ? std::to_string(o.degree) : std::string("default")) << ", width " << o.width << "\n";
        std::cout << format_text(report);
    }
    return report.pass() ? kPass : kFail;
}

// ------------------------------------------------------------------ sample

struct SampleOptions {
    int n = 3, k = 3, trials = 20, degree = 6;
    std::uint64_t seed = 1;
    std::string field = "fp:1009";
    bool machine = false;
};

int cmd_sample(const SampleOptions& o) {
    if (o.n < 2 || o.k < 3) throw CLI::ValidationError("sample", "needs n >= 2 and k >= 3");
    FieldSpec spec = FieldSpec::parse(o.field);
    Emitter out{o.machine};
    out("config", "n=" + std::to_string(o.n) + " k=" + std::to_string(o.k) + " trials=" + std::to_string(o.trials) +
                      " degree=" + std::to_string(o.degree) + " seed=" + std::to_string(o.seed) + " field=" +
                      spec.to_string());
    auto rep = generic_sample_series(o.n, o.k, o.trials, o.degree, spec, o.seed);
    out("minima", join(rep.minima));
    out("target", rep.target_text);
    out("target dims", join(rep.target));
    out("matches target", rep.matches_target ? "yes" : "no");
    out("never below target", rep.never_below_target ? "yes" : "no");
    if (o.n == 2 && o.k == 3) {
        // four isomorphism classes rather than one generic series
        for (const char* src : {"0", "x^3", "cyc(xyy)", "x^3 + y^3"}) {
            NcPoly f = parse_ncpoly(src, 2, spec);
            std::vector<NcPoly> rels;
            for (const auto& r : derivative_relations(f))
                if (!r.is_zero()) rels.push_back(r);
            auto dims = graded_dims(buchberger_truncated(rels, MonomialOrder::standard(2), o.degree, spec), o.degree);
            auto fit = fit_rational(dims, 2);
            out(std::string("stratum ") + src, join(dims) + (fit ? "  " + fit->to_string() : ""));
        }
    }
    return rep.never_below_target ? kPass : kFail;
}

// ------------------------------------------------------------------ series-fit

int cmd_series_fit(const std::string& coeffs, const std::string& expand, int max_den, int degree) {
    if (!expand.empty()) {
        std::cout << join(taylor(RationalSeries::parse(expand), degree)) << "\n";
        return kPass;
    }
    auto c = parse_coefficients(coeffs);
    if (c.empty()) throw CLI::ValidationError("series-fit", "no coefficients");
    auto fit = fit_rational(c, max_den);
    if (!fit) {
        std::cout << "no rational fit with denominator degree <= " << max_den << "\n";
        return kFail;
    }
    std::cout << fit->to_string() << "\n";
    return kPass;
}

// ------------------------------------------------------------------ gv

int cmd_gv(int m, int list_upto) {
    if (list_upto > 0) {
        std::string s;
        for (int j = 1; j <= list_upto; ++j)
            if (!gv_representable(j).representable) s += (s.empty() ? "" : " ") + std::to_string(j);
        std::cout << s << "\n";
        return kPass;
    }
    if (m < 1) throw CLI::ValidationError("gv", "m must be positive");
    auto r = gv_representable(m);
    if (!r.representable) {
        std::cout << m << ": non-representable\n";
        return kPass;
    }
    std::string w;
    for (int s : r.witness) w += (w.empty() ? "" : "+") + std::to_string(s);
    std::cout << m << ": representable, " << w << "\n";
    return kPass;
}

// ------------------------------------------------------------------ twist-space

int cmd_twist_space(int n, int k, const std::string& matrix, const std::string& field, bool quiet) {
    FieldSpec spec = FieldSpec::parse(field);
    std::vector<std::vector<Scalar>> rows;
    std::istringstream in(matrix);
    std::string row;
    while (std::getline(in, row, ';')) {
        std::vector<Scalar> r;
        std::istringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) r.push_back(parse_scalar(cell, spec));
        rows.push_back(std::move(r));
    }
    if (rows.size() != static_cast<std::size_t>(n))
        throw CLI::ValidationError("twist-space", "matrix must have n rows");
    for (const auto& r : rows)
        if (r.size() != static_cast<std::size_t>(n)) throw CLI::ValidationError("twist-space", "matrix must be n x n");
    auto basis = twisted_space(n, k, Matrix::from_rows(rows));
    std::cout << "dimension " << basis.size() << "\n";
    if (!quiet)
        for (const auto& f : basis) std::cout << "  " << print_ncpoly(f) << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Potential and twisted potential algebras"};
    app.require_subcommand(1);

    AnalyzeOptions ao;
    auto* analyze = app.add_subcommand("analyze", "Analyze the potential in FILE");
    analyze->add_option("file", ao.file, "Polynomial file")->required();
    analyze->add_option("--field", ao.field, "q, cyclo72 or fp:<prime>");
    analyze->add_option("--degree", ao.degree, "Truncation degree");
    analyze->add_option("-n,--generators", ao.n, "Number of generators (inferred when absent)");
    analyze->add_option("--eigen", ao.eigen, "Claimed twist eigenvalues")->delimiter(',');
    analyze->add_flag("--machine", ao.machine, "Tab-separated output");

    CatalogOptions co;
    auto* catalog = app.add_subcommand("catalog", "Verify catalog entries");
    auto* entry_opt = catalog->add_option("--entry", co.entries, "Entry label (repeatable)");
    auto* all_opt = catalog->add_flag("--all", co.all, "Every entry");
    entry_opt->excludes(all_opt);
    catalog->add_option("--field", co.field, "q, cyclo72 or fp:<prime>");
    catalog->add_option("--degree", co.degree, "Truncation degree (default 8 for n=3, 10 for n=2)");
    catalog->add_option("--width", co.width, "Worker threads")->check(CLI::PositiveNumber);
    catalog->add_option("--catalog", co.path, "Catalog file");
    catalog->add_flag("--machine", co.machine, "One tab-separated line per check");

    SampleOptions so;
    auto* sample = app.add_subcommand("sample", "Minimal Hilbert series of random potentials");
    sample->add_option("-n", so.n, "Generators");
    sample->add_option("-k", so.k, "Degree of the potential");
    sample->add_option("--trials", so.trials, "Random potentials");
    sample->add_option("--degree", so.degree, "Truncation degree");
    sample->add_option("--seed", so.seed, "RNG seed");
    sample->add_option("--field", so.field, "q, cyclo72 or fp:<prime>");
    sample->add_flag("--machine", so.machine, "Tab-separated output");

    std::vector<std::string> coeff_args;
    std::string expand;
    int max_den = 4, fit_degree = 10;
    auto* fit = app.add_subcommand("series-fit", "Fit a rational function to coefficients, or expand one");
    fit->add_option("coefficients", coeff_args, "Comma or space separated integers");
    fit->add_option("--max-den", max_den, "Largest denominator degree");
    fit->add_option("--expand", expand, "Series to expand instead");
    fit->add_option("--degree", fit_degree, "Expansion degree");

    int gv_m = 0, gv_list = 0;
    auto* gv = app.add_subcommand("gv", "Representability as a sum of squares 4, 9, .., l^2");
    gv->add_option("m", gv_m, "Integer to test");
    gv->add_option("--list", gv_list, "Print non-representable integers up to N");

    int ts_n = 2, ts_k = 3;
    std::string ts_matrix, ts_field = "cyclo72";
    bool ts_quiet = false;
    auto* ts = app.add_subcommand("twist-space", "Basis of twisted potentials with twist M");
    ts->add_option("-n", ts_n, "Generators");
    ts->add_option("-k", ts_k, "Degree");
    ts->add_option("--matrix", ts_matrix, "Rows separated by ';', entries by ','")->required();
    ts->add_option("--field", ts_field, "q, cyclo72 or fp:<prime>");
    ts->add_flag("--quiet", ts_quiet, "Dimension only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(ao);
        if (*catalog) {
            if (!co.all && co.entries.empty()) throw CLI::ValidationError("catalog", "give --entry LABEL or --all");
            return cmd_catalog(co);
        }
        if (*sample) return cmd_sample(so);
        if (*fit) {
            std::string coeffs;
            for (const auto& a : coeff_args) coeffs += a + " ";
            return cmd_series_fit(coeffs, expand, max_den, fit_degree);
        }
        if (*gv) return cmd_gv(gv_m, gv_list);
        if (*ts) return cmd_twist_space(ts_n, ts_k, ts_matrix, ts_field, ts_quiet);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
