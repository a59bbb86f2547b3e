#include "potalg/grobner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "potalg/parse.hpp"

namespace potalg {

// ------------------------------------------------------------------ orders

MonomialOrder MonomialOrder::standard(int n) {
    MonomialOrder o;
    o.precedence.resize(n);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
}

std::vector<MonomialOrder> MonomialOrder::all(int n) {
    std::vector<MonomialOrder> out;
    MonomialOrder o = standard(n);
    do {
        out.push_back(o);
    } while (std::next_permutation(o.precedence.begin(), o.precedence.end()));
    return out;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    std::vector<int> rank(precedence.size());
    for (std::size_t k = 0; k < precedence.size(); ++k) rank[precedence[k]] = static_cast<int>(precedence.size() - k);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return rank[a[k]] < rank[b[k]];
    return false;
}

std::string MonomialOrder::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < precedence.size(); ++k) {
        if (k) s += ">";
        s += generator_name(n(), precedence[k]);
    }
    return s;
}

// ------------------------------------------------------------- packed words

namespace detail {

using Key = std::uint64_t;
using Term = std::pair<Key, Scalar>;
using Poly = std::vector<Term>;  // strictly decreasing keys, no zero coefficients

constexpr int kLenShift = 58;
constexpr Key kBody = (Key(1) << kLenShift) - 1;

// Word packed as [length:6][letters:58], letters left-aligned, each letter
// stored as its precedence rank (largest generator = largest digit), so that
// integer comparison of keys is exactly the deglex order. With low_first the
// length field holds 63 - length: shorter words compare larger.
struct Codec {
    int n = 0;
    int bits = 1;
    int cap = 58;
    bool low_first = false;
    std::vector<int> digit_of;   // letter -> digit
    std::vector<int> letter_of;  // digit -> letter

    Codec(const MonomialOrder& o, bool low) : n(o.n()), low_first(low) {
        bits = 1;
        while ((1 << bits) < std::max(n, 2)) ++bits;
        cap = kLenShift / bits;
        digit_of.resize(n);
        letter_of.resize(n);
        for (int k = 0; k < n; ++k) {
            int d = n - 1 - k;
            digit_of[o.precedence[k]] = d;
            letter_of[d] = o.precedence[k];
        }
    }

    int len(Key k) const {
        int f = static_cast<int>(k >> kLenShift);
        return low_first ? 63 - f : f;
    }
    Key head(int l) const { return Key(low_first ? 63 - l : l) << kLenShift; }
    Key empty() const { return head(0); }

    Key top_mask(int l) const { return l == 0 ? 0 : (kBody & ~(kBody >> (l * bits))); }

    Key encode(const Word& w) const {
        if (static_cast<int>(w.size()) > cap)
            throw TooLarge("word of length " + std::to_string(w.size()) + " exceeds packed capacity " +
                           std::to_string(cap));
        Key body = 0;
        int shift = kLenShift;
        for (Letter l : w) {
            shift -= bits;
            body |= Key(digit_of[l]) << shift;
        }
        return head(static_cast<int>(w.size())) | body;
    }

    Word decode(Key k) const {
        int l = len(k);
        Word w(l);
        int shift = kLenShift;
        for (int i = 0; i < l; ++i) {
            shift -= bits;
            w[i] = static_cast<Letter>(letter_of[(k >> shift) & ((Key(1) << bits) - 1)]);
        }
        return w;
    }

    Key concat(Key a, Key b) const {
        int la = len(a), lb = len(b);
        if (la + lb > cap)
            throw TooLarge("word of length " + std::to_string(la + lb) + " exceeds packed capacity " +
                           std::to_string(cap));
        return head(la + lb) | (a & kBody) | ((b & kBody) >> (la * bits));
    }

    Key sub(Key a, int pos, int l) const {
        Key body = ((a & kBody) << (pos * bits)) & kBody;
        return head(l) | (body & top_mask(l));
    }

    Key letter(int l) const {
        return head(1) | (Key(digit_of[l]) << (kLenShift - bits));
    }
};

struct Elem {
    Poly p;
    bool alive = true;
};

struct GbImpl {
    MonomialOrder order;
    Codec codec;
    FieldSpec spec;
    int max_degree = 0;
    bool word_truncated = false;
    bool complete = false;
    std::vector<Elem> elems;
    std::unordered_map<Key, int> lead_index;
    std::map<int, int> lead_lengths;  // length -> count of alive leads

    GbImpl(const MonomialOrder& o, const FieldSpec& s, bool truncated)
        : order(o), codec(o, truncated), spec(s), word_truncated(truncated) {}

    bool dropped(Key w) const { return word_truncated && codec.len(w) > max_degree; }

    // (element index, position) of a lead dividing w, or (-1, 0).
    std::pair<int, int> find_divisor(Key w) const {
        int l = codec.len(w);
        for (const auto& [ll, cnt] : lead_lengths) {
            if (ll > l) break;
            for (int pos = 0; pos + ll <= l; ++pos) {
                auto it = lead_index.find(codec.sub(w, pos, ll));
                if (it != lead_index.end()) return {it->second, pos};
            }
        }
        return {-1, 0};
    }

    Poly reduce(const Poly& p) const {
        std::map<Key, Scalar, std::greater<Key>> acc;
        for (const auto& [k, c] : p)
            if (!dropped(k)) acc.emplace(k, c);
        Poly out;
        while (!acc.empty()) {
            auto it = acc.begin();
            Key w = it->first;
            Scalar c = it->second;
            acc.erase(it);
            auto [gi, pos] = find_divisor(w);
            if (gi < 0) {
                out.emplace_back(w, c);
                continue;
            }
            const Poly& g = elems[gi].p;
            int l = codec.len(w), ll = codec.len(g.front().first);
            Key u = codec.sub(w, 0, pos);
            Key v = codec.sub(w, pos + ll, l - pos - ll);
            for (std::size_t t = 1; t < g.size(); ++t) {
                Key k = codec.concat(codec.concat(u, g[t].first), v);
                if (dropped(k)) continue;
                Scalar d = c * g[t].second;
                auto [jt, fresh] = acc.emplace(k, -d);
                if (!fresh) {
                    jt->second -= d;
                    if (jt->second.is_zero()) acc.erase(jt);
                }
            }
        }
        return out;
    }

    Poly multiply(Key u, const Poly& g, Key v) const {
        Poly out;
        out.reserve(g.size());
        for (const auto& [k, c] : g) {
            Key w = codec.concat(codec.concat(u, k), v);
            if (!dropped(w)) out.emplace_back(w, c);
        }
        return out;
    }

    static Poly combine(const Poly& a, const Poly& b) {  // a - b
        Poly out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first > a[i].first) {
                out.emplace_back(b[j].first, -b[j].second);
                ++j;
            } else {
                Scalar c = a[i].second - b[j].second;
                if (!c.is_zero()) out.emplace_back(a[i].first, c);
                ++i;
                ++j;
            }
        }
        return out;
    }

    static Poly monic(Poly p) {
        if (p.empty() || p.front().second.is_one()) return p;
        Scalar inv = p.front().second.inv();
        for (auto& t : p) t.second = t.second * inv;
        return p;
    }

    Poly normal_form(const Poly& p) const { return reduce(p); }
};

Poly to_packed(const Codec& codec, const NcPoly& p) {
    Poly out;
    for (const auto& [w, c] : p.terms()) out.emplace_back(codec.encode(w), c);
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    return out;
}

NcPoly from_packed(const Codec& codec, const Poly& p, const FieldSpec& spec) {
    NcPoly out(codec.n, spec);
    for (const auto& [k, c] : p) out.add_term(codec.decode(k), c);
    return out;
}

// Overlap task: suffix of lead(i) of length s equals prefix of lead(j).
struct Task {
    int degree;
    int i, j;
    Key word;
    int s;
    bool operator>(const Task& o) const {
        return std::tie(degree, i, j, word, s) > std::tie(o.degree, o.i, o.j, o.word, o.s);
    }
};

class Builder {
public:
    Builder(GbImpl& g) : g_(g) {}

    void run(const std::vector<NcPoly>& relations) {
        for (const auto& r : relations) pending_.push_back(to_packed(g_.codec, r));
        drain_pending();
        while (!tasks_.empty()) {
            Task t = tasks_.top();
            tasks_.pop();
            if (t.degree > g_.max_degree) {
                // with words truncated the whole S-polynomial lies beyond the cut
                if (!g_.word_truncated) deferred_.push_back(t);
                continue;
            }
            if (!g_.elems[t.i].alive || !g_.elems[t.j].alive) continue;
            pending_.push_back(spoly(t));
            drain_pending();
        }
        g_.complete = g_.word_truncated || check_deferred();
        interreduce();
    }

private:
    Poly spoly(const Task& t) const {
        const Poly& a = g_.elems[t.i].p;
        const Poly& b = g_.elems[t.j].p;
        int la = g_.codec.len(a.front().first), lb = g_.codec.len(b.front().first);
        Key bt = g_.codec.sub(b.front().first, t.s, lb - t.s);
        Key ah = g_.codec.sub(a.front().first, 0, la - t.s);
        Key empty = g_.codec.empty();
        return GbImpl::combine(g_.multiply(empty, a, bt), g_.multiply(ah, b, empty));
    }

    void drain_pending() {
        while (!pending_.empty()) {
            Poly p = std::move(pending_.front());
            pending_.pop_front();
            Poly r = g_.reduce(p);
            if (!r.empty()) add(GbImpl::monic(std::move(r)));
        }
    }

    void add(Poly p) {
        const Codec& c = g_.codec;
        int k = static_cast<int>(g_.elems.size());
        Key lead = p.front().first;
        int ll = g_.codec.len(lead);
        // retire elements whose lead contains the new lead
        for (int e = 0; e < k; ++e) {
            if (!g_.elems[e].alive) continue;
            Key le = g_.elems[e].p.front().first;
            int l = g_.codec.len(le);
            bool divides = false;
            for (int pos = 0; pos + ll <= l && !divides; ++pos) divides = c.sub(le, pos, ll) == lead;
            if (!divides) continue;
            g_.elems[e].alive = false;
            g_.lead_index.erase(le);
            if (--g_.lead_lengths[l] == 0) g_.lead_lengths.erase(l);
            pending_.push_back(g_.elems[e].p);
        }
        Elem el;
        el.p = std::move(p);
        g_.elems.push_back(std::move(el));
        g_.lead_index[lead] = k;
        ++g_.lead_lengths[ll];
        for (int e = 0; e <= k; ++e) {
            if (!g_.elems[e].alive) continue;
            overlaps(k, e);
            if (e != k) overlaps(e, k);
        }
    }

    void overlaps(int i, int j) {
        const Codec& c = g_.codec;
        Key a = g_.elems[i].p.front().first;
        Key b = g_.elems[j].p.front().first;
        int la = g_.codec.len(a), lb = g_.codec.len(b);
        for (int s = 1; s < std::min(la, lb); ++s) {
            if (c.sub(a, la - s, s) != c.sub(b, 0, s)) continue;
            int deg = la + lb - s;
            if (deg > c.cap) {
                overflow_ = true;
                continue;
            }
            tasks_.push(Task{deg, i, j, c.concat(a, c.sub(b, s, lb - s)), s});
        }
    }

    bool check_deferred() {
        if (overflow_) return false;
        std::sort(deferred_.begin(), deferred_.end(), [](const Task& a, const Task& b) { return b > a; });
        for (const Task& t : deferred_) {
            if (!g_.elems[t.i].alive || !g_.elems[t.j].alive) continue;
            if (!g_.reduce(spoly(t)).empty()) return false;
        }
        return true;
    }

    void interreduce() {
        std::vector<int> alive;
        for (int e = 0; e < static_cast<int>(g_.elems.size()); ++e)
            if (g_.elems[e].alive) alive.push_back(e);
        for (int e : alive) {
            Poly& p = g_.elems[e].p;
            Poly tail(p.begin() + 1, p.end());
            Poly r = g_.reduce(tail);
            r.insert(r.begin(), p.front());
            p = std::move(r);
        }
    }

    GbImpl& g_;
    std::deque<Poly> pending_;
    std::priority_queue<Task, std::vector<Task>, std::greater<Task>> tasks_;
    std::vector<Task> deferred_;
    bool overflow_ = false;
};

}  // namespace detail

// ------------------------------------------------------------ GrobnerBasis

const MonomialOrder& GrobnerBasis::order() const { return impl_->order; }
int GrobnerBasis::n() const { return impl_->codec.n; }
const FieldSpec& GrobnerBasis::spec() const { return impl_->spec; }
int GrobnerBasis::truncation_degree() const { return impl_->max_degree; }
bool GrobnerBasis::complete() const { return impl_->complete; }
bool GrobnerBasis::word_truncated() const { return impl_->word_truncated; }

std::vector<Word> GrobnerBasis::leading_words() const {
    std::vector<Word> out;
    for (const auto& e : impl_->elems) out.push_back(impl_->codec.decode(e.p.front().first));
    return out;
}

NcPoly GrobnerBasis::normal_form(const NcPoly& p) const {
    if (!impl_->complete && !impl_->word_truncated && p.max_degree() > impl_->max_degree)
        throw TruncationExceeded("normal form of degree " + std::to_string(p.max_degree()) +
                                 " beyond truncation degree " + std::to_string(impl_->max_degree));
    auto r = impl_->reduce(detail::to_packed(impl_->codec, p));
    return detail::from_packed(impl_->codec, r, p.spec());
}

bool GrobnerBasis::is_normal(const Word& w) const {
    if (impl_->word_truncated && static_cast<int>(w.size()) > impl_->max_degree) return false;
    return impl_->find_divisor(impl_->codec.encode(w)).first < 0;
}

std::vector<Word> GrobnerBasis::normal_words(int degree) const {
    if (!impl_->complete && !impl_->word_truncated && degree > impl_->max_degree)
        throw TruncationExceeded("degree " + std::to_string(degree) + " beyond truncation degree " +
                                 std::to_string(impl_->max_degree));
    const auto& c = impl_->codec;
    std::vector<detail::Key> layer{c.empty()};
    for (int d = 1; d <= degree; ++d) {
        std::vector<detail::Key> next;
        for (detail::Key u : layer)
            for (int digit = 0; digit < c.n; ++digit) {
                detail::Key w = c.concat(u, c.letter(c.letter_of[digit]));
                bool ok = !(impl_->word_truncated && d > impl_->max_degree);
                for (const auto& [ll, cnt] : impl_->lead_lengths) {
                    if (!ok || ll > d) break;
                    if (impl_->lead_index.count(c.sub(w, d - ll, ll))) ok = false;
                }
                if (ok) next.push_back(w);
            }
        layer = std::move(next);
    }
    std::vector<Word> out;
    out.reserve(layer.size());
    for (auto k : layer) out.push_back(c.decode(k));
    return out;
}

std::string GrobnerBasis::serialize() const {
    std::ostringstream os;
    os << "# order " << impl_->order.to_string() << " truncation " << impl_->max_degree
       << (impl_->word_truncated ? " words" : "") << " complete " << (impl_->complete ? "yes" : "no") << "\n";
    for (const auto& e : elements_) os << print_ncpoly(e) << "\n";
    return os.str();
}

GrobnerBasis run_buchberger(const std::vector<NcPoly>& relations, const MonomialOrder& order, int max_degree,
                            bool word_truncated, const FieldSpec& spec) {
    FieldSpec fs = spec;
    for (const auto& r : relations)
        if (!r.is_zero()) {
            fs = r.spec();
            break;
        }
    auto impl = std::make_shared<detail::GbImpl>(order, fs, word_truncated);
    impl->max_degree = max_degree;
    for (const auto& r : relations)
        if (r.n() > order.n()) throw UnknownGenerator("relation uses more generators than the order");
    detail::Builder(*impl).run(relations);

    // compact: keep alive elements only, sorted by lead
    std::vector<detail::Elem> kept;
    for (auto& e : impl->elems)
        if (e.alive) kept.push_back(std::move(e));
    std::sort(kept.begin(), kept.end(),
              [](const detail::Elem& a, const detail::Elem& b) { return a.p.front().first < b.p.front().first; });
    impl->elems = std::move(kept);
    impl->lead_index.clear();
    for (int k = 0; k < static_cast<int>(impl->elems.size()); ++k)
        impl->lead_index[impl->elems[k].p.front().first] = k;

    GrobnerBasis gb;
    for (const auto& e : impl->elems) gb.elements_.push_back(detail::from_packed(impl->codec, e.p, fs));
    gb.impl_ = std::move(impl);
    return gb;
}

GrobnerBasis buchberger_truncated(const std::vector<NcPoly>& relations, const MonomialOrder& order, int max_degree,
                                  const FieldSpec& spec) {
    return run_buchberger(relations, order, max_degree, false, spec);
}

GrobnerBasis buchberger_word_truncated(const std::vector<NcPoly>& relations, const MonomialOrder& order,
                                       int max_word, const FieldSpec& spec) {
    return run_buchberger(relations, order, max_word, true, spec);
}

// ------------------------------------------------------------- dimensions

std::vector<long long> graded_dims(const GrobnerBasis& gb, int up_to) {
    if (!gb.complete() && up_to > gb.truncation_degree())
        throw TruncationExceeded("dimensions requested to degree " + std::to_string(up_to) +
                                 " but basis is truncated at " + std::to_string(gb.truncation_degree()));
    std::vector<long long> out;
    for (int d = 0; d <= up_to; ++d) out.push_back(static_cast<long long>(gb.normal_words(d).size()));
    return out;
}

namespace {

bool all_homogeneous(const std::vector<NcPoly>& rels) {
    for (const auto& r : rels)
        if (!r.is_homogeneous()) return false;
    return true;
}

std::uint64_t ipow(int n, int m) {
    std::uint64_t r = 1;
    for (int k = 0; k < m; ++k) r *= static_cast<std::uint64_t>(n);
    return r;
}

constexpr std::uint64_t kBruteLimit = 6561;

FieldSpec spec_of(const std::vector<NcPoly>& rels) {
    for (const auto& r : rels)
        if (!r.is_zero()) return r.spec();
    return FieldSpec::rationals();
}

}  // namespace

std::vector<long long> pseries_dims(const std::vector<NcPoly>& relations, int n, const MonomialOrder& order,
                                    int up_to) {
    std::vector<long long> out;
    if (all_homogeneous(relations)) {
        auto gb = buchberger_truncated(relations, order, up_to, spec_of(relations));
        long long acc = 0;
        for (long long a : graded_dims(gb, up_to)) out.push_back(acc += a);
        return out;
    }
    (void)n;
    for (int k = 0; k <= up_to; ++k) {
        auto gb = buchberger_word_truncated(relations, order, k, spec_of(relations));
        long long acc = 0;
        for (int d = 0; d <= k; ++d) acc += static_cast<long long>(gb.normal_words(d).size());
        out.push_back(acc);
    }
    return out;
}

std::vector<long long> brute_force_dims(const std::vector<NcPoly>& relations, int n, int up_to) {
    for (const auto& r : relations)
        if (!r.is_homogeneous()) throw NotHomogeneous("brute-force dimensions need homogeneous relations");
    std::vector<long long> out;
    for (int m = 0; m <= up_to; ++m) {
        std::uint64_t cols = ipow(n, m);
        if (cols > kBruteLimit)
            throw TooLarge("degree " + std::to_string(m) + " slice has " + std::to_string(cols) + " words");
        Echelon ech(static_cast<std::uint32_t>(cols));
        for (const auto& r : relations) {
            int d = r.max_degree();
            if (d < 0 || d > m) continue;
            for (int lu = 0; lu <= m - d; ++lu) {
                int lv = m - d - lu;
                std::uint64_t su = ipow(n, lu), sv = ipow(n, lv), sr = ipow(n, d);
                for (std::uint64_t u = 0; u < su; ++u)
                    for (std::uint64_t v = 0; v < sv; ++v) {
                        SparseRow row;
                        for (const auto& [w, c] : r.terms()) {
                            std::uint64_t idx = (u * sr + word_index(n, w)) * sv + v;
                            row.emplace_back(static_cast<std::uint32_t>(idx), c);
                        }
                        ech.insert(normalize_row(std::move(row)));
                        if (ech.rank() == cols) break;
                    }
            }
        }
        out.push_back(static_cast<long long>(cols - ech.rank()));
    }
    return out;
}

std::vector<long long> brute_force_pseries_dims(const std::vector<NcPoly>& relations, int n, int up_to) {
    // Columns index all words of length <= k: offset(l) + base-n index.
    std::vector<long long> out;
    for (int k = 0; k <= up_to; ++k) {
        std::vector<std::uint64_t> offset(k + 2, 0);
        for (int l = 0; l <= k; ++l) offset[l + 1] = offset[l] + ipow(n, l);
        std::uint64_t cols = offset[k + 1];
        if (cols > 4 * kBruteLimit) throw TooLarge("truncated space too large: " + std::to_string(cols));
        Echelon ech(static_cast<std::uint32_t>(cols));
        for (const auto& r : relations) {
            int lo = r.min_degree();
            if (lo < 0 || lo > k) continue;
            for (int lu = 0; lu <= k - lo; ++lu)
                for (int lv = 0; lu + lv <= k - lo; ++lv) {
                    std::uint64_t su = ipow(n, lu), sv = ipow(n, lv);
                    for (std::uint64_t u = 0; u < su; ++u)
                        for (std::uint64_t v = 0; v < sv; ++v) {
                            SparseRow row;
                            for (const auto& [w, c] : r.terms()) {
                                int l = lu + static_cast<int>(w.size()) + lv;
                                if (l > k) continue;
                                std::uint64_t idx = (u * ipow(n, w.size()) + word_index(n, w)) * sv + v;
                                row.emplace_back(static_cast<std::uint32_t>(offset[l] + idx), c);
                            }
                            ech.insert(normalize_row(std::move(row)));
                        }
                }
        }
        out.push_back(static_cast<long long>(cols - ech.rank()));
    }
    return out;
}

// ------------------------------------------------------ right annihilators

bool right_annihilator_free(const GrobnerBasis& gb, int up_to) {
    int n = gb.n();
    // u -> g u is injective on normal words when no lead starts with g
    std::vector<bool> starts(n, false);
    for (const auto& w : gb.leading_words())
        if (!w.empty()) starts[w.front()] = true;
    for (int g = 0; g < n; ++g)
        if (!starts[g]) return true;
    if (!gb.complete() && up_to + 1 > gb.truncation_degree())
        throw TruncationExceeded("annihilator check needs degree " + std::to_string(up_to + 1));
    const FieldSpec& spec = gb.spec();
    for (int m = 0; m <= up_to; ++m) {
        auto src = gb.normal_words(m);
        auto dst = gb.normal_words(m + 1);
        std::map<Word, std::uint32_t> col;
        for (std::size_t k = 0; k < dst.size(); ++k) col[dst[k]] = static_cast<std::uint32_t>(k);
        // rows: images of each normal word u under (x_1 u, ..., x_n u); kernel trivial iff full row rank
        Echelon ech(static_cast<std::uint32_t>(n * dst.size()));
        for (const auto& u : src) {
            SparseRow row;
            for (int j = 0; j < n; ++j) {
                Word w{static_cast<Letter>(j)};
                w.insert(w.end(), u.begin(), u.end());
                NcPoly nf = gb.normal_form(NcPoly::monomial(n, w, Scalar::one(spec)));
                for (const auto& [v, c] : nf.terms())
                    row.emplace_back(static_cast<std::uint32_t>(j * dst.size() + col.at(v)), c);
            }
            row = normalize_row(std::move(row));
            if (row.empty() || !ech.insert(row)) return false;
        }
    }
    return true;
}

// -------------------------------------------------------------------- PBW

PbwResult pbw_with_order(const std::vector<NcPoly>& relations, const MonomialOrder& order) {
    for (const auto& r : relations)
        if (!r.is_zero() && (r.min_degree() != 2 || r.max_degree() != 2))
            throw NotQuadratic("PBW check needs quadratic relations");
    auto gb = buchberger_truncated(relations, order, 3, spec_of(relations));
    PbwResult res;
    res.is_quadratic_gb = true;
    for (const auto& w : gb.leading_words()) {
        if (w.size() == 2) res.leading_words.push_back(w);
        else res.is_quadratic_gb = false;
    }
    return res;
}

}  // namespace potalg
