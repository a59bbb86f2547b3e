#include "potalg/parse.hpp"

#include <cctype>
#include <sstream>

namespace potalg {

namespace {

class Parser {
public:
    Parser(const std::string& text, int n, const FieldSpec& spec, const ParamMap& params)
        : s_(text), n_(n), spec_(spec), params_(params) {}

    NcPoly parse_all() {
        NcPoly p = poly();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NcPoly poly() {
        NcPoly acc(n_, spec_);
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        NcPoly t = term();
        acc += neg ? -t : t;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc += -term();
            else break;
        }
        return acc;
    }

    NcPoly term() {
        NcPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                NcPoly d = factor();
                Scalar c;
                if (!as_scalar(d, c)) { pos_ = at; fail("division by a non-scalar"); }
                if (c.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                acc = acc.scaled(c.inv());
            } else {
                break;
            }
        }
        return acc;
    }

    bool as_scalar(const NcPoly& p, Scalar& out) const {
        if (p.is_zero()) {
            out = Scalar(spec_);
            return true;
        }
        if (p.size() == 1 && p.terms().begin()->first.empty()) {
            out = p.terms().begin()->second;
            return true;
        }
        return false;
    }

    NcPoly factor() {
        if (accept('-')) return -factor();
        std::size_t at = pos_;
        NcPoly base = primary();
        if (accept('^')) {
            bool neg = accept('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            long e = std::stol(s_.substr(start, pos_ - start));
            Scalar c;
            if (neg) {
                if (!as_scalar(base, c)) { pos_ = at; fail("negative power of a non-scalar"); }
                if (c.is_zero()) { pos_ = at; fail("negative power of zero"); }
                return NcPoly::constant(n_, c.pow(-e));
            }
            if (as_scalar(base, c)) return NcPoly::constant(n_, c.is_zero() ? (e ? Scalar(spec_) : Scalar::one(spec_)) : c.pow(e));
            NcPoly r = NcPoly::constant(n_, Scalar::one(spec_));
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    NcPoly primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NcPoly p = poly();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class v(s_.substr(start, pos_ - start));
            return NcPoly::constant(n_, Scalar::from_mpz(spec_, v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "cyc" && peek() == '(') {
                accept('(');
                NcPoly p = poly();
                if (!accept(')')) fail("expected ')'");
                return cyclicize(p);
            }
            return identifier(name, start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    int generator_index(const std::string& name) const {
        if (n_ <= 3) {
            static const std::string letters = "xyz";
            if (name.size() == 1) {
                auto k = letters.find(name[0]);
                if (k != std::string::npos && static_cast<int>(k) < n_) return static_cast<int>(k);
            }
            return -1;
        }
        if (name.size() >= 2 && name[0] == 'x') {
            for (std::size_t k = 1; k < name.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(name[k]))) return -1;
            int j = std::stoi(name.substr(1));
            if (j >= 1 && j <= n_) return j - 1;
        }
        return -1;
    }

    static bool looks_like_generator(const std::string& name) {
        if (name.empty() || name.find_first_not_of("xyzw") == std::string::npos) return true;
        if (name[0] == 'x' && name.size() >= 2) {
            for (std::size_t k = 1; k < name.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(name[k]))) return false;
            return true;
        }
        return false;
    }

    NcPoly identifier(const std::string& name, std::size_t start) {
        auto it = params_.find(name);
        if (it != params_.end()) return NcPoly::constant(n_, it->second);
        if (is_constant_name(name)) {
            try {
                return NcPoly::constant(n_, named_constant(spec_, name));
            } catch (const UnsupportedOrder& e) {
                throw UnsupportedOrder(std::string(e.what()) + " (constant '" + name + "' at position " +
                                       std::to_string(start) + ")");
            }
        }
        int g = generator_index(name);
        if (g >= 0) return NcPoly::generator(n_, spec_, g);
        // run of single-letter generators, e.g. "xzy"
        if (n_ <= 3 && name.find_first_not_of("xyz") == std::string::npos) {
            Word w;
            for (char ch : name) {
                int k = generator_index(std::string(1, ch));
                if (k < 0) throw UnknownGenerator("unknown generator '" + std::string(1, ch) + "' at position " + std::to_string(start));
                w.push_back(static_cast<Letter>(k));
            }
            return NcPoly::monomial(n_, w, Scalar::one(spec_));
        }
        if (looks_like_generator(name))
            throw UnknownGenerator("unknown generator '" + name + "' at position " + std::to_string(start));
        throw UnknownConstant("unknown name '" + name + "' at position " + std::to_string(start));
    }

    const std::string& s_;
    int n_;
    FieldSpec spec_;
    const ParamMap& params_;
    std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_ncpoly(const std::string& text, int n, const FieldSpec& spec, const ParamMap& params) {
    Parser p(text, n, spec, params);
    NcPoly r = p.parse_all();
    NcPoly out(n, spec);
    out += r;
    return out;
}

Scalar parse_scalar(const std::string& text, const FieldSpec& spec, const ParamMap& params) {
    NcPoly p = parse_ncpoly(text, 0, spec, params);
    if (p.is_zero()) return Scalar(spec);
    if (p.size() != 1 || !p.terms().begin()->first.empty()) throw SyntaxError("expected a scalar expression", 0);
    return p.terms().begin()->second;
}

std::string print_word(int n, const Word& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size();) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (k) os << "*";
        os << generator_name(n, w[k]);
        if (run > 1) os << "^" << run;
        k += run;
    }
    return os.str();
}

std::string print_ncpoly(const NcPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        std::string cs = c.to_string();
        bool neg = false;
        Scalar mag = c;
        if (!cs.empty() && cs[0] == '-') {
            std::string ns = (-c).to_string();
            if (ns.empty() || ns[0] != '-') {
                neg = true;
                mag = -c;
            }
        }
        std::string body;
        if (w.empty()) {
            body = mag.needs_parens() ? "(" + mag.to_string() + ")" : mag.to_string();
        } else if (mag.is_one()) {
            body = print_word(p.n(), w);
        } else {
            std::string ms = mag.to_string();
            body = (mag.needs_parens() ? "(" + ms + ")" : ms) + "*" + print_word(p.n(), w);
        }
        if (first) os << (neg ? "-" : "") << body;
        else os << (neg ? " - " : " + ") << body;
        first = false;
    }
    return os.str();
}

}  // namespace potalg
