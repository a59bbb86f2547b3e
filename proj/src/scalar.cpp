#include "potalg/scalar.hpp"

#include <array>
#include <sstream>

namespace potalg {

namespace {

using BigVec = std::vector<mpq_class>;
using BigPtr = std::shared_ptr<const BigVec>;

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

bool all_zero(const BigVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

BigPtr make_big(BigVec v) {
    if (all_zero(v)) return nullptr;
    return std::make_shared<const BigVec>(std::move(v));
}

// Reduce a coefficient vector of length up to 47 modulo t^24 - t^12 + 1.
BigVec cyc_reduce(BigVec c) {
    for (int d = static_cast<int>(c.size()) - 1; d >= kCycDegree; --d) {
        if (c[d] == 0) continue;
        c[d - 12] += c[d];
        c[d - 24] -= c[d];
        c[d] = 0;
    }
    c.resize(kCycDegree);
    return c;
}

BigVec cyc_mul(const BigVec& a, const BigVec& b) {
    BigVec c(2 * kCycDegree - 1);
    mpq_class tmp;
    for (int i = 0; i < kCycDegree; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < kCycDegree; ++j) {
            if (b[j] == 0) continue;
            tmp = a[i] * b[j];
            c[i + j] += tmp;
        }
    }
    return cyc_reduce(std::move(c));
}

// Solve a * b = 1 by elimination on the multiplication matrix.
BigVec cyc_inv(const BigVec& a) {
    const int n = kCycDegree;
    std::vector<BigVec> m(n, BigVec(n + 1));
    BigVec col(a);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[i][j] = col[i];
        // col *= t
        BigVec next(n + 1);
        for (int i = 0; i < n; ++i) next[i + 1] = col[i];
        col = cyc_reduce(std::move(next));
    }
    m[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw DivisionByZero("cyclotomic element is not invertible");
        std::swap(m[piv], m[c]);
        mpq_class f = 1 / m[c][c];
        for (int k = c; k <= n; ++k) m[c][k] *= f;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class g = m[r][c];
            for (int k = c; k <= n; ++k) m[r][k] -= g * m[c][k];
        }
    }
    BigVec out(n);
    for (int i = 0; i < n; ++i) out[i] = m[i][n];
    return out;
}

std::string mpq_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::vector<std::uint32_t> factors;
    std::uint32_t m = p - 1;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto f : factors)
            if (powmod(g, (p - 1) / f, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return 0;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p % 72 != 1) throw std::invalid_argument("modulus " + std::to_string(p) + " is not 1 mod 72");
    return {FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "cyclo72") return cyclotomic72();
    if (text.rfind("fp:", 0) == 0) {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
            p = std::stoul(text.substr(3), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field '" + text + "'");
        }
        if (used + 3 != text.size() || p > 0xffffffffUL) throw std::invalid_argument("bad field '" + text + "'");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected q, cyclo72 or fp:<p>)");
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case FieldKind::Rationals: return "q";
        case FieldKind::Cyclotomic72: return "cyclo72";
        case FieldKind::PrimeField: return "fp:" + std::to_string(modulus);
    }
    return "?";
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_int(const FieldSpec& spec, long v) { return from_mpz(spec, mpz_class(v)); }

Scalar Scalar::from_mpz(const FieldSpec& spec, const mpz_class& v) { return from_mpq(spec, mpq_class(v)); }

Scalar Scalar::from_mpq(const FieldSpec& spec, const mpq_class& v) {
    Scalar s(spec);
    switch (spec.kind) {
        case FieldKind::Rationals:
            if (v != 0) s.big_ = std::make_shared<const BigVec>(BigVec{v});
            break;
        case FieldKind::Cyclotomic72:
            if (v != 0) {
                BigVec c(kCycDegree);
                c[0] = v;
                s.big_ = std::make_shared<const BigVec>(std::move(c));
            }
            break;
        case FieldKind::PrimeField: {
            mpz_class p = spec.modulus;
            mpz_class num = v.get_num() % p, den = v.get_den() % p;
            if (num < 0) num += p;
            if (den == 0) throw DivisionByZero("denominator " + v.get_den().get_str() + " vanishes mod " + p.get_str());
            auto n = static_cast<std::uint32_t>(num.get_ui()), d = static_cast<std::uint32_t>(den.get_ui());
            s.fp_ = mulmod(n, invmod(d, spec.modulus), spec.modulus);
            break;
        }
    }
    return s;
}

Scalar Scalar::from_cyclotomic(const std::vector<mpq_class>& coeffs) {
    BigVec c(coeffs);
    if (c.size() > static_cast<std::size_t>(kCycDegree)) c = cyc_reduce(std::move(c));
    c.resize(kCycDegree);
    Scalar s(FieldSpec::cyclotomic72());
    s.big_ = make_big(std::move(c));
    return s;
}

bool Scalar::is_zero() const {
    if (!bound_) return true;
    if (spec_.kind == FieldKind::PrimeField) return fp_ == 0;
    return !big_;
}

bool Scalar::is_one() const {
    if (!bound_) return false;
    switch (spec_.kind) {
        case FieldKind::PrimeField: return fp_ == 1;
        case FieldKind::Rationals: return big_ && (*big_)[0] == 1;
        case FieldKind::Cyclotomic72:
            if (!big_ || (*big_)[0] != 1) return false;
            for (int j = 1; j < kCycDegree; ++j)
                if ((*big_)[j] != 0) return false;
            return true;
    }
    return false;
}

FieldSpec Scalar::join(const Scalar& a, const Scalar& b) {
    if (a.bound_ && b.bound_ && a.spec_ != b.spec_)
        throw MixedBackends("cannot combine " + a.spec_.to_string() + " with " + b.spec_.to_string());
    return a.bound_ ? a.spec_ : b.spec_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!bound_) return o;
    if (!o.bound_) return *this;
    FieldSpec s = join(*this, o);
    Scalar r(s);
    switch (s.kind) {
        case FieldKind::PrimeField: {
            std::uint32_t v = fp_ + o.fp_;
            if (v >= s.modulus) v -= s.modulus;
            r.fp_ = v;
            break;
        }
        case FieldKind::Rationals:
            if (!big_) return o;
            if (!o.big_) return *this;
            r.big_ = make_big(BigVec{(*big_)[0] + (*o.big_)[0]});
            break;
        case FieldKind::Cyclotomic72: {
            if (!big_) return o;
            if (!o.big_) return *this;
            BigVec c(kCycDegree);
            for (int j = 0; j < kCycDegree; ++j) c[j] = (*big_)[j] + (*o.big_)[j];
            r.big_ = make_big(std::move(c));
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-() const {
    if (!bound_) return *this;
    Scalar r(spec_);
    switch (spec_.kind) {
        case FieldKind::PrimeField: r.fp_ = fp_ ? spec_.modulus - fp_ : 0; break;
        default:
            if (big_) {
                BigVec c(*big_);
                for (auto& x : c) x = -x;
                r.big_ = std::make_shared<const BigVec>(std::move(c));
            }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    FieldSpec s = join(*this, o);
    if (!bound_ || !o.bound_) return (bound_ || o.bound_) ? Scalar(s) : Scalar();
    Scalar r(s);
    switch (s.kind) {
        case FieldKind::PrimeField: r.fp_ = mulmod(fp_, o.fp_, s.modulus); break;
        case FieldKind::Rationals:
            if (big_ && o.big_) r.big_ = std::make_shared<const BigVec>(BigVec{(*big_)[0] * (*o.big_)[0]});
            break;
        case FieldKind::Cyclotomic72:
            if (big_ && o.big_) r.big_ = make_big(cyc_mul(*big_, *o.big_));
            break;
    }
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar r(spec_);
    switch (spec_.kind) {
        case FieldKind::PrimeField: r.fp_ = invmod(fp_, spec_.modulus); break;
        case FieldKind::Rationals: r.big_ = std::make_shared<const BigVec>(BigVec{1 / (*big_)[0]}); break;
        case FieldKind::Cyclotomic72: r.big_ = make_big(cyc_inv(*big_)); break;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    join(*this, o);
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return *this * o.inv();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    if (!bound_) return *this;  // unbound zero has no field to host 1
    Scalar base = *this;
    Scalar r = one(spec_);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!bound_ || !o.bound_) return is_zero() && o.is_zero();
    join(*this, o);
    if (spec_.kind == FieldKind::PrimeField) return fp_ == o.fp_;
    if (!big_ || !o.big_) return !big_ && !o.big_;
    return *big_ == *o.big_;
}

bool Scalar::is_rational() const {
    if (!bound_ || spec_.kind != FieldKind::Cyclotomic72 || !big_) return true;
    for (int j = 1; j < kCycDegree; ++j)
        if ((*big_)[j] != 0) return false;
    return true;
}

mpq_class Scalar::rational() const {
    if (!bound_ || (spec_.kind != FieldKind::PrimeField && !big_)) return 0;
    if (spec_.kind == FieldKind::PrimeField) return mpq_class(fp_);
    if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
    return (*big_)[0];
}

std::vector<mpq_class> Scalar::cyclotomic() const {
    if (spec_.kind != FieldKind::Cyclotomic72) throw std::logic_error("not a cyclotomic scalar");
    if (!big_) return BigVec(kCycDegree);
    return *big_;
}

std::string Scalar::to_string() const {
    if (!bound_) return "0";
    switch (spec_.kind) {
        case FieldKind::PrimeField: {
            if (fp_ <= spec_.modulus / 2) return std::to_string(fp_);
            return "-" + std::to_string(spec_.modulus - fp_);
        }
        case FieldKind::Rationals: return big_ ? mpq_text((*big_)[0]) : "0";
        case FieldKind::Cyclotomic72: {
            if (!big_) return "0";
            std::ostringstream os;
            bool first = true;
            for (int j = 0; j < kCycDegree; ++j) {
                mpq_class c = (*big_)[j];
                if (c == 0) continue;
                bool neg = c < 0;
                if (neg) c = -c;
                if (first) os << (neg ? "-" : "");
                else os << (neg ? " - " : " + ");
                first = false;
                if (j == 0) { os << mpq_text(c); continue; }
                if (c != 1) os << mpq_text(c) << "*";
                os << "zeta72";
                if (j > 1) os << "^" << j;
            }
            return os.str();
        }
    }
    return "?";
}

bool Scalar::needs_parens() const {
    std::string s = to_string();
    return s.find_first_of("+/ ") != std::string::npos || s.find('-', 1) != std::string::npos;
}

// ------------------------------------------------------- roots of unity

Scalar make_root_of_unity(const FieldSpec& spec, int order) {
    if (order <= 0 || 72 % order != 0)
        throw UnsupportedOrder("order " + std::to_string(order) + " does not divide 72");
    switch (spec.kind) {
        case FieldKind::Rationals:
            if (order == 1) return Scalar::one(spec);
            if (order == 2) return Scalar::from_int(spec, -1);
            throw UnsupportedOrder("Q has no root of unity of order " + std::to_string(order));
        case FieldKind::PrimeField: {
            std::uint32_t p = spec.modulus;
            std::uint32_t g = least_primitive_root(p);
            return Scalar::from_int(spec, powmod(g, (p - 1) / static_cast<std::uint32_t>(order), p));
        }
        case FieldKind::Cyclotomic72: {
            std::vector<mpq_class> c(kCycDegree);
            c[1] = 1;
            return Scalar::from_cyclotomic(c).pow(72 / order);
        }
    }
    throw UnsupportedOrder("unknown backend");
}

bool is_constant_name(const std::string& name) {
    return name == "theta" || name == "i" || name == "xi8" || name == "xi9" || name == "zeta72";
}

Scalar named_constant(const FieldSpec& spec, const std::string& name) {
    if (name == "theta") return make_root_of_unity(spec, 3);
    if (name == "i") return make_root_of_unity(spec, 4);
    if (name == "xi8") return make_root_of_unity(spec, 8);
    if (name == "xi9") return make_root_of_unity(spec, 9);
    if (name == "zeta72") return make_root_of_unity(spec, 72);
    throw UnknownConstant("unknown constant '" + name + "'");
}

}  // namespace potalg
