#include "potalg/series.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "potalg/grobner.hpp"
#include "potalg/homology.hpp"
#include "potalg/twist.hpp"

namespace potalg {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qadd(const QPoly& a, const QPoly& b, int sign = 1) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
    trim(r);
    return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly qmod(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    return a;
}

QPoly qdiv(QPoly a, const QPoly& b) {
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

QPoly qgcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = qmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

struct Rf {
    QPoly num, den;
};

Rf rf_mul(const Rf& a, const Rf& b) { return {qmul(a.num, b.num), qmul(a.den, b.den)}; }

Rf rf_inv(const Rf& a) {
    if (a.num.empty()) throw std::invalid_argument("series: division by zero");
    return {a.den, a.num};
}

Rf rf_pow(const Rf& a, long e) {
    Rf base = e < 0 ? rf_inv(a) : a;
    Rf r{{1}, {1}};
    for (long k = 0; k < std::labs(e); ++k) r = rf_mul(r, base);
    return r;
}

class SeriesParser {
public:
    explicit SeriesParser(const std::string& s) : s_(s) {}

    Rf parse() {
        Rf r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("series: " + what + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string& w) {
        skip();
        if (s_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Rf expr() {
        Rf acc = term();
        for (;;) {
            int sign;
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else break;
            Rf t = term();
            acc = {qadd(qmul(acc.num, t.den), qmul(t.num, acc.den), sign), qmul(acc.den, t.den)};
        }
        return acc;
    }

    Rf term() {
        Rf acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = rf_mul(acc, unary());
            } else if (c == '/') {
                ++pos_;
                acc = rf_mul(acc, rf_inv(unary()));
            } else if (c == '(' || c == 't' || c == '\\' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = rf_mul(acc, power());
            } else {
                break;
            }
        }
        return acc;
    }

    Rf unary() {
        if (accept('-')) {
            Rf r = unary();
            for (auto& c : r.num) c = -c;
            return r;
        }
        accept('+');
        return power();
    }

    long exponent() {
        bool brace = accept('{');
        bool paren = !brace && accept('(');
        bool neg = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        long e = std::stol(s_.substr(start, pos_ - start));
        if (brace && !accept('}')) fail("expected '}'");
        if (paren && !accept(')')) fail("expected ')'");
        return neg ? -e : e;
    }

    Rf power() {
        Rf base = primary();
        if (accept('^')) base = rf_pow(base, exponent());
        return base;
    }

    Rf primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Rf r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (c == 't') {
            ++pos_;
            return {{0, 1}, {1}};
        }
        if (accept_word("\\frac")) {
            if (!accept('{')) fail("expected '{'");
            Rf a = expr();
            if (!accept('}') || !accept('{')) fail("expected '}{'");
            Rf b = expr();
            if (!accept('}')) fail("expected '}'");
            return rf_mul(a, rf_inv(b));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpq_class v(mpz_class(s_.substr(start, pos_ - start)));
            QPoly p{v};
            trim(p);
            return {p, {1}};
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

RationalSeries normalize(QPoly num, QPoly den) {
    trim(num);
    trim(den);
    if (den.empty()) throw std::invalid_argument("series: zero denominator");
    QPoly g = qgcd(num.empty() ? den : num, den);
    num = qdiv(num, g);
    den = qdiv(den, g);
    if (den.empty() || den[0] == 0) throw std::invalid_argument("series: denominator vanishes at t = 0");
    mpq_class s = den[0];
    for (auto& c : num) c /= s;
    for (auto& c : den) c /= s;
    RationalSeries r;
    r.num.clear();
    r.den.clear();
    for (auto* pr : {&num, &den}) {
        IntPoly& out = pr == &num ? r.num : r.den;
        for (auto& c : *pr) {
            c.canonicalize();
            if (c.get_den() != 1 || !c.get_num().fits_slong_p())
                throw std::invalid_argument("series: expansion is not integral");
            out.push_back(c.get_num().get_si());
        }
    }
    return r;
}

std::string poly_text(const IntPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        long long c = p[k];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        long long a = c < 0 ? -c : c;
        if (k == 0) os << a;
        else {
            if (a != 1) os << a;
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
    return r;
}

}  // namespace

RationalSeries RationalSeries::parse(const std::string& text) {
    Rf r = SeriesParser(text).parse();
    return normalize(r.num, r.den);
}

RationalSeries RationalSeries::make(const IntPoly& num, const IntPoly& den) {
    QPoly a, b;
    for (auto c : num) a.emplace_back(static_cast<long>(c));
    for (auto c : den) b.emplace_back(static_cast<long>(c));
    return normalize(a, b);
}

std::string RationalSeries::to_string() const {
    auto wrap = [](const IntPoly& p) {
        std::size_t nz = 0;
        for (auto c : p) nz += c != 0;
        std::string s = poly_text(p);
        return nz > 1 ? "(" + s + ")" : s;
    };
    if (den == IntPoly{1}) return wrap(num);
    return wrap(num) + "/" + wrap(den);
}

std::vector<long long> taylor(const RationalSeries& rs, int up_to) {
    std::vector<long long> c(up_to + 1, 0);
    for (int m = 0; m <= up_to; ++m) {
        long long v = m < static_cast<int>(rs.num.size()) ? rs.num[m] : 0;
        for (int j = 1; j < static_cast<int>(rs.den.size()) && j <= m; ++j)
            v = checked_add(v, -checked_mul(rs.den[j], c[m - j]));
        c[m] = v;  // den[0] == 1
    }
    return c;
}

std::vector<long long> series_inverse(const std::vector<long long>& p, int up_to) {
    if (p.empty() || (p[0] != 1 && p[0] != -1)) throw std::invalid_argument("series inverse needs p(0) = +-1");
    std::vector<long long> c(up_to + 1, 0);
    for (int m = 0; m <= up_to; ++m) {
        long long v = m == 0 ? 1 : 0;
        for (int j = 1; j < static_cast<int>(p.size()) && j <= m; ++j) v = checked_add(v, -checked_mul(p[j], c[m - j]));
        c[m] = v * p[0];
    }
    return c;
}

std::optional<RationalSeries> fit_rational(const std::vector<long long>& coeffs, int max_den_degree) {
    const int N = static_cast<int>(coeffs.size());
    auto c = [&](int m) { return m < 0 ? mpq_class(0) : mpq_class(static_cast<long>(coeffs[m])); };
    for (int s = 0; s <= N - 2; ++s)
        for (int d = 0; d <= std::min(s, max_den_degree); ++d) {
            int e = s - d;
            int equations = N - 1 - e;
            if (equations < d + 1) continue;
            // rows: sum_{j=1..d} q_j c_{m-j} = -c_m for m = e+1..N-1
            std::vector<std::vector<mpq_class>> a;
            for (int m = e + 1; m < N; ++m) {
                std::vector<mpq_class> row(d + 1);
                for (int j = 1; j <= d; ++j) row[j - 1] = c(m - j);
                row[d] = -c(m);
                a.push_back(std::move(row));
            }
            // Gaussian elimination
            std::vector<int> pivcol;
            std::size_t r = 0;
            for (int col = 0; col < d && r < a.size(); ++col) {
                std::size_t p = r;
                while (p < a.size() && a[p][col] == 0) ++p;
                if (p == a.size()) continue;
                std::swap(a[p], a[r]);
                mpq_class inv = 1 / a[r][col];
                for (auto& x : a[r]) x *= inv;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (i != r && a[i][col] != 0) {
                        mpq_class f = a[i][col];
                        for (int k = 0; k <= d; ++k) a[i][k] -= f * a[r][k];
                    }
                pivcol.push_back(col);
                ++r;
            }
            bool ok = true;
            for (std::size_t i = r; i < a.size(); ++i)
                if (a[i][d] != 0) ok = false;
            if (!ok) continue;
            QPoly q(d + 1, 0);
            q[0] = 1;
            for (std::size_t i = 0; i < pivcol.size(); ++i) q[pivcol[i] + 1] = a[i][d];
            QPoly p(e + 1, 0);
            for (int m = 0; m <= e; ++m)
                for (int j = 0; j <= std::min(d, m); ++j) p[m] += q[j] * c(m - j);
            try {
                RationalSeries rs = normalize(p, q);
                if (taylor(rs, N - 1) == coeffs) return rs;
            } catch (const std::exception&) {
            }
        }
    return std::nullopt;
}

SampleReport generic_sample_series(int n, int k, int trials, int up_to, const FieldSpec& spec, std::uint64_t seed) {
    SampleReport rep;
    rep.trials = trials;
    rep.seed = seed;
    if (n == 2 && k == 3) {
        rep.target = taylor(RationalSeries::parse("(1+t)/(1-t)"), up_to);
        rep.target_text = "(1+t)/(1-t)";
    } else {
        rep.target = exact_target_dims(n, k, up_to);
        IntPoly den(k + 1, 0);
        den[0] = 1;
        den[1] -= n;
        den[k - 1] += n;
        den[k] -= 1;
        rep.target_text = RationalSeries::make({1}, den).to_string();
    }
    // one representative per cyclic class of degree-k words
    std::set<Word> reps;
    std::uint64_t total = 1;
    for (int j = 0; j < k; ++j) total *= n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w = word_from_index(n, k, idx);
        Word best = w, r = w;
        for (int s = 1; s < k; ++s) {
            std::rotate(r.begin(), r.begin() + 1, r.end());
            best = std::min(best, r);
        }
        reps.insert(best);
    }
    std::mt19937_64 rng(seed);
    auto order = MonomialOrder::standard(n);
    for (int t = 0; t < trials; ++t) {
        NcPoly f(n, spec);
        for (const auto& w : reps) {
            long v;
            if (spec.kind == FieldKind::PrimeField) v = static_cast<long>(rng() % spec.modulus);
            else v = static_cast<long>(rng() % 41) - 20;
            Scalar c = Scalar::from_int(spec, v);
            std::set<Word> orbit;
            Word r = w;
            for (int s = 0; s < k; ++s) {
                orbit.insert(r);
                std::rotate(r.begin(), r.begin() + 1, r.end());
            }
            for (const auto& o : orbit) f.add_term(o, c);
        }
        auto gb = buchberger_truncated(derivative_relations(f), order, up_to, spec);
        auto dims = graded_dims(gb, up_to);
        if (rep.minima.empty()) rep.minima = dims;
        for (int m = 0; m <= up_to; ++m) rep.minima[m] = std::min(rep.minima[m], dims[m]);
        for (int m = 0; m <= up_to; ++m)
            if (dims[m] < rep.target[m]) rep.never_below_target = false;
    }
    rep.matches_target = rep.minima == rep.target;
    return rep;
}

GvResult gv_representable(int m) {
    // m = sum_{j=2..l} j^2 n_j with every n_j >= 1: take one copy of each
    // square up to l^2, then any nonnegative combination of the same squares.
    GvResult r;
    if (m < 1) return r;
    int base = 0;
    for (int l = 2; base + l * l <= m; ++l) {
        base += l * l;
        int rest = m - base;
        std::vector<int> from(rest + 1, -1);
        std::vector<bool> reach(rest + 1, false);
        reach[0] = true;
        for (int v = 1; v <= rest; ++v)
            for (int j = 2; j <= l && j * j <= v; ++j)
                if (reach[v - j * j]) {
                    reach[v] = true;
                    from[v] = j * j;
                    break;
                }
        if (!reach[rest]) continue;
        r.representable = true;
        for (int j = 2; j <= l; ++j) r.witness.push_back(j * j);
        for (int v = rest; v > 0; v -= from[v]) r.witness.push_back(from[v]);
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    }
    return r;
}

}  // namespace potalg
