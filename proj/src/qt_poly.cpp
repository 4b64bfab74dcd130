#include "mackit/qt_poly.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

namespace mackit {

std::atomic<long> g_gcd_calls{0}, g_peel_hits{0}, g_brown_calls{0}, g_brown_points{0}, g_predivide_hits{0};
std::atomic<long> g_ns_prediv{0}, g_ns_peel{0}, g_ns_brown{0}, g_ns_prim{0}, g_ns_content{0}, g_ns_total{0};
std::atomic<long> g_ns_peel_eval{0}, g_ns_peel_scan{0}, g_ns_peel_fold{0}, g_ns_peel_div{0}, g_peel_fold_calls{0}, g_peel_scan_pass{0};
namespace { struct Tick { std::atomic<long>& slot; std::chrono::steady_clock::time_point t0;
  explicit Tick(std::atomic<long>& s) : slot(s), t0(std::chrono::steady_clock::now()) {}
  ~Tick(){ slot += std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now()-t0).count(); } }; }

namespace {

// Merge two sorted term lists into dst (dst must not alias the inputs).
// Terms of b enter scaled by c (and shifted by `shift` monomial degrees).
void merge_add(QtPolynomial::TermList& dst, const QtPolynomial::TermList& a,
               const QtPolynomial::TermList& b) {
    dst.clear();
    dst.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) dst.push_back(a[i++]);
        else if (b[j].first < a[i].first) dst.push_back(b[j++]);
        else {
            Rat s = a[i].second + b[j].second;
            if (s != 0) dst.emplace_back(a[i].first, std::move(s));
            ++i; ++j;
        }
    }
    for (; i < a.size(); ++i) dst.push_back(a[i]);
    for (; j < b.size(); ++j) dst.push_back(b[j]);
}

void sort_combine(QtPolynomial::TermList& v) {
    std::sort(v.begin(), v.end(),
              [](const QtPolynomial::Term& x, const QtPolynomial::Term& y) {
                  return x.first < y.first;
              });
    size_t out = 0;
    for (size_t i = 0; i < v.size();) {
        Monomial m = v[i].first;
        Rat s = std::move(v[i].second);
        size_t j = i + 1;
        while (j < v.size() && v[j].first == m) { s += v[j].second; ++j; }
        if (s != 0) {
            v[out].first = m;
            v[out].second = std::move(s);
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

} // namespace

QtPolynomial QtPolynomial::monomial(const Rat& c, long qe, long te) {
    QtPolynomial p;
    p.add_term(qe, te, c);
    return p;
}

QtPolynomial QtPolynomial::one_minus(long qe, long te) {
    QtPolynomial p;
    p.add_term(0, 0, 1);
    p.add_term(qe, te, -1);
    return p;
}

bool QtPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.front().first == Monomial{0, 0} &&
           terms_.front().second == 1;
}

bool QtPolynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.front().first == Monomial{0, 0});
}

long QtPolynomial::deg_q() const {
    // Terms are sorted lex with q major, so the last term has the top q power.
    return terms_.empty() ? -1 : terms_.back().first.qe;
}

long QtPolynomial::deg_t() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.te);
    return d;
}

long QtPolynomial::t_valuation() const {
    if (terms_.empty()) return 0;
    long v = terms_.front().first.te;
    for (const auto& [m, c] : terms_) v = std::min(v, m.te);
    return v;
}

Rat QtPolynomial::coeff(long qe, long te) const {
    Monomial key{qe, te};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Monomial& m) { return t.first < m; });
    if (it != terms_.end() && it->first == key) return it->second;
    return Rat(0);
}

Rat QtPolynomial::leading_coeff() const {
    return terms_.empty() ? Rat(0) : terms_.back().second;
}

Monomial QtPolynomial::leading_monomial() const {
    return terms_.empty() ? Monomial{0, 0} : terms_.back().first;
}

void QtPolynomial::add_term(long qe, long te, const Rat& c) {
    if (c == 0) return;
    if (qe < 0 || te < 0) throw Error("QtPolynomial: negative exponent");
    Monomial key{qe, te};
    if (terms_.empty() || terms_.back().first < key) {
        terms_.emplace_back(key, c);
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Monomial& m) { return t.first < m; });
    if (it != terms_.end() && it->first == key) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.emplace(it, key, c);
    }
}

QtPolynomial QtPolynomial::operator-() const {
    QtPolynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
}

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& o) {
    if (o.terms_.empty()) return *this;
    TermList out;
    merge_add(out, terms_, o.terms_);
    terms_ = std::move(out);
    return *this;
}

QtPolynomial& QtPolynomial::operator-=(const QtPolynomial& o) {
    return *this += (-o);
}

QtPolynomial operator+(const QtPolynomial& a, const QtPolynomial& b) {
    QtPolynomial r;
    merge_add(r.terms_, a.terms_, b.terms_);
    return r;
}

QtPolynomial operator-(const QtPolynomial& a, const QtPolynomial& b) {
    return a + (-b);
}

QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
    QtPolynomial r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1) {
        const auto& [ma, ca] = a.terms_.front();
        r.terms_.reserve(b.terms_.size());
        for (const auto& [mb, cb] : b.terms_)
            r.terms_.emplace_back(Monomial{ma.qe + mb.qe, ma.te + mb.te}, ca * cb);
        return r;
    }
    if (b.terms_.size() == 1) return b * a;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.terms_.emplace_back(Monomial{ma.qe + mb.qe, ma.te + mb.te}, ca * cb);
    sort_combine(r.terms_);
    return r;
}

QtPolynomial QtPolynomial::pow(long e) const {
    if (e < 0) throw Error("QtPolynomial::pow: negative exponent");
    QtPolynomial r(1);
    QtPolynomial base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

bool QtPolynomial::try_divide(const QtPolynomial& a, const QtPolynomial& b, QtPolynomial& quot) {
    if (b.is_zero()) throw DivisionByZero("QtPolynomial: division by zero polynomial");
    QtPolynomial rem = a;
    TermList qterms;  // built in decreasing order
    TermList scratch, shifted;
    const Monomial lb = b.leading_monomial();
    const Rat cb = b.leading_coeff();
    while (!rem.terms_.empty()) {
        const Monomial lr = rem.terms_.back().first;
        if (lr.qe < lb.qe || lr.te < lb.te) return false;
        Rat c = rem.terms_.back().second / cb;
        const Monomial m{lr.qe - lb.qe, lr.te - lb.te};
        qterms.emplace_back(m, c);
        // rem -= c * x^m * b   (merge of two sorted lists)
        shifted.clear();
        shifted.reserve(b.terms_.size());
        c = -c;
        for (const auto& [mb, cbv] : b.terms_)
            shifted.emplace_back(Monomial{mb.qe + m.qe, mb.te + m.te}, c * cbv);
        merge_add(scratch, rem.terms_, shifted);
        rem.terms_.swap(scratch);
    }
    std::reverse(qterms.begin(), qterms.end());
    quot.terms_ = std::move(qterms);
    return true;
}

QtPolynomial operator/(const QtPolynomial& a, const QtPolynomial& b) {
    QtPolynomial q;
    if (!QtPolynomial::try_divide(a, b, q))
        throw Error("QtPolynomial: inexact division");
    return q;
}

Rat QtPolynomial::content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    if (r < 0) r = -r;
    return r;
}

QtPolynomial QtPolynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = content();
    if (leading_coeff() < 0) c = -c;
    Rat inv = 1 / c;
    return scaled(inv);
}

QtPolynomial QtPolynomial::scaled(const Rat& c) const {
    QtPolynomial r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, v] : terms_) r.terms_.emplace_back(m, v * c);
    return r;
}

// ---------------------------------------------------------------------------
// GCD machinery.  Univariate: heuristic gcd (evaluate at a large integer,
// integer gcd, balanced-radix reconstruction, verify by division) with a
// subresultant PRS fallback.  Bivariate: Brown's evaluation/interpolation
// gcd, verified by exact division.
// ---------------------------------------------------------------------------

namespace {

// Univariate polynomial with integer coefficients, dense vector form.
using ZVec = std::vector<Int>;

Int eval_at(const ZVec& p, const Int& x) {
    Int r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Int max_abs_coeff(const ZVec& p) {
    Int m = 0;
    for (const auto& c : p) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

void normalize_zvec(ZVec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divide out integer content and fix sign of the leading coefficient.
void make_primitive(ZVec& p) {
    normalize_zvec(p);
    if (p.empty()) return;
    Int g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
}

bool zvec_divides(const ZVec& num, const ZVec& den) {
    if (den.empty()) return num.empty();
    ZVec rem = num;
    normalize_zvec(rem);
    while (rem.size() >= den.size()) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                    den.back().get_mpz_t());
        if (r != 0) return false;
        size_t off = rem.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) rem[off + i] -= q * den[i];
        normalize_zvec(rem);
        if (rem.empty()) return true;
        if (rem.size() < den.size()) return false;
    }
    return rem.empty();
}

// Balanced xi-adic reconstruction of a polynomial from its value at xi.
ZVec reconstruct_balanced(Int v, const Int& xi) {
    ZVec out;
    Int half = xi / 2;
    while (v != 0) {
        Int digit;
        mpz_mod(digit.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
        if (digit > half) digit -= xi;
        out.push_back(digit);
        v = (v - digit) / xi;
    }
    return out;
}

// Subresultant PRS over Z; returns the primitive gcd.
ZVec zvec_subresultant_gcd(ZVec a, ZVec b) {
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    Int g = 1, h = 1;
    while (true) {
        long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
        ZVec r = a;
        Int lb = b.back();
        for (long step = 0; step <= delta; ++step) {
            normalize_zvec(r);
            if (r.size() < b.size()) {
                Int scale;
                mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(),
                           static_cast<unsigned long>(delta + 1 - step));
                for (auto& c : r) c *= scale;
                break;
            }
            Int lr = r.back();
            size_t off = r.size() - b.size();
            for (auto& c : r) c *= lb;
            for (size_t i = 0; i < b.size(); ++i) r[off + i] -= lr * b[i];
            normalize_zvec(r);
        }
        normalize_zvec(r);
        if (r.empty()) break;
        if (r.size() == 1) { b = ZVec{Int(1)}; break; }
        Int divisor = g;
        for (long i = 0; i < delta; ++i) divisor *= h;
        for (auto& c : r) c /= divisor;
        a = b;
        b = r;
        g = a.back();
        if (delta > 0) {
            Int gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            Int hp;
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            h = gp / hp;
        }
    }
    make_primitive(b);
    return b;
}

// Heuristic gcd in Z[x] with PRS fallback; returns the primitive gcd.
ZVec zvec_gcd(const ZVec& a, const ZVec& b) {
    if (a.empty()) { ZVec r = b; make_primitive(r); return r; }
    if (b.empty()) { ZVec r = a; make_primitive(r); return r; }
    Int bound = std::max(max_abs_coeff(a), max_abs_coeff(b));
    Int xi = 2 * bound + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Int va = eval_at(a, xi);
        Int vb = eval_at(b, xi);
        Int g;
        mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        ZVec cand = reconstruct_balanced(g, xi);
        make_primitive(cand);
        if (!cand.empty() && zvec_divides(a, cand) && zvec_divides(b, cand)) return cand;
        xi = xi * 33 + 7;
    }
    return zvec_subresultant_gcd(a, b);
}

bool is_univariate_in_q(const QtPolynomial& p) { return p.deg_t() <= 0; }
bool is_univariate_in_t(const QtPolynomial& p) { return p.deg_q() <= 0; }

ZVec to_zvec_q(const QtPolynomial& p) {
    ZVec out(static_cast<size_t>(std::max<long>(p.deg_q(), -1) + 1));
    for (const auto& [m, c] : p.terms()) out[static_cast<size_t>(m.qe)] = c.get_num();
    normalize_zvec(out);
    return out;
}

ZVec to_zvec_t(const QtPolynomial& p) {
    ZVec out(static_cast<size_t>(std::max<long>(p.deg_t(), -1) + 1));
    for (const auto& [m, c] : p.terms()) out[static_cast<size_t>(m.te)] = c.get_num();
    normalize_zvec(out);
    return out;
}

QtPolynomial from_zvec(const ZVec& v, bool in_q) {
    QtPolynomial p;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) p.add_term(in_q ? static_cast<long>(i) : 0,
                                  in_q ? 0 : static_cast<long>(i), Rat(v[i]));
    }
    return p;
}

QtPolynomial coeff_of_q(const QtPolynomial& p, long k) {
    QtPolynomial out;
    for (const auto& [m, c] : p.terms())
        if (m.qe == k) out.add_term(0, m.te, c);
    return out;
}

// gcd in Z[t] of the coefficients when viewed as a polynomial in q.
QtPolynomial content_q(const QtPolynomial& p) {
    QtPolynomial g;
    for (long k = 0; k <= p.deg_q(); ++k) {
        QtPolynomial c = coeff_of_q(p, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_part() : QtPolynomial::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Dense rational vector in q.
using QVec = std::vector<Rat>;

// t := xi on an integer-coefficient polynomial, dense in q.
ZVec eval_t_int(const QtPolynomial& p, long xi) {
    ZVec out(static_cast<size_t>(std::max<long>(p.deg_q(), -1) + 1));
    std::vector<Int> pw(static_cast<size_t>(std::max<long>(p.deg_t(), 0) + 1));
    pw[0] = 1;
    for (size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * xi;
    for (const auto& [m, c] : p.terms())
        out[static_cast<size_t>(m.qe)] += c.get_num() * pw[static_cast<size_t>(m.te)];
    normalize_zvec(out);
    return out;
}

// p(2, 3) by descending-lex Horner; in-place bigint ops, no power tables.
Int eval_point_2_3(const QtPolynomial& p) {
    Int r = 0, inner = 0, tmp;
    const auto& terms = p.terms();
    long cur_q = p.deg_q();
    long cur_t = -1;
    auto close_q = [&](long next_q) {
        if (cur_t > 0) {
            mpz_ui_pow_ui(tmp.get_mpz_t(), 3, static_cast<unsigned long>(cur_t));
            inner *= tmp;
        }
        r += inner;
        inner = 0;
        cur_t = -1;
        if (next_q >= 0 && cur_q > next_q) r <<= static_cast<unsigned long>(cur_q - next_q);
        cur_q = next_q;
    };
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        if (m.qe != cur_q) close_q(m.qe);
        if (cur_t < 0) {
            inner = c.get_num();
            cur_t = m.te;
        } else {
            mpz_ui_pow_ui(tmp.get_mpz_t(), 3, static_cast<unsigned long>(cur_t - m.te));
            inner *= tmp;
            inner += c.get_num();
            cur_t = m.te;
        }
    }
    close_q(0);
    if (cur_q > 0) r <<= static_cast<unsigned long>(cur_q);
    return r;
}

// Exact binomial divisibility: (1 - q^a t^b) | P iff the coefficient sums
// over the monomial orbits (qe,te) ~ (qe-a, te-b) all vanish.  The integer
// pass rejects most candidates before any big-rational work.
bool binomial_divides(const QtPolynomial& P, long a, long b) {
    std::map<std::pair<long, long>, long> counts;
    for (const auto& [m, c] : P.terms()) {
        long k = std::numeric_limits<long>::max();
        if (a > 0) k = m.qe / a;
        if (b > 0) k = std::min(k, m.te / b);
        ++counts[{m.qe - k * a, m.te - k * b}];
    }
    for (const auto& [key, n] : counts)
        if (n < 2) return false;
    std::map<std::pair<long, long>, Rat> orbit;
    for (const auto& [m, c] : P.terms()) {
        long k = std::numeric_limits<long>::max();
        if (a > 0) k = m.qe / a;
        if (b > 0) k = std::min(k, m.te / b);
        const std::pair<long, long> key{m.qe - k * a, m.te - k * b};
        auto [it, inserted] = orbit.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) orbit.erase(it);
        }
    }
    return orbit.empty();
}

// Exact division by (1 - q^a t^b) via the forward recurrence
// Q[m] = P[m] + Q[m - (a,b)], processed in ascending lex order.
// Requires (and does not verify) exact divisibility.
QtPolynomial divide_by_binomial(const QtPolynomial& P, long a, long b) {
    std::map<Monomial, Rat> f;
    for (const auto& [m, c] : P.terms()) f.emplace(m, c);
    for (auto it = f.begin(); it != f.end(); ++it) {
        if (it->second == 0) continue;
        Monomial next{it->first.qe + a, it->first.te + b};
        auto [jt, inserted] = f.emplace(next, it->second);
        if (!inserted) jt->second += it->second;
    }
    QtPolynomial out;
    for (auto& [m, c] : f) {
        if (c != 0) out.add_term(m.qe, m.te, c);
    }
    return out;
}

struct BinomialModuli {
    static constexpr long kMaxA = 16, kMaxB = 32;
    // moduli[a][b] = 2^a 3^b - 1 when it fits in unsigned long, else 0.
    unsigned long moduli[kMaxA + 1][kMaxB + 1] = {};
    BinomialModuli() {
        for (long a = 0; a <= kMaxA; ++a) {
            for (long b = 0; b <= kMaxB; ++b) {
                Int v;
                mpz_ui_pow_ui(v.get_mpz_t(), 3, static_cast<unsigned long>(b));
                v <<= static_cast<unsigned long>(a);
                v -= 1;
                moduli[a][b] = mpz_fits_ulong_p(v.get_mpz_t()) ? mpz_get_ui(v.get_mpz_t()) : 0;
            }
        }
    }
};

// Strip common factors of the form (1 - q^a t^b) from both polynomials.
// Nearly every shared factor in this problem domain has this shape, so the
// residual gcd is almost always trivial.
QtPolynomial peel_common_binomials(QtPolynomial& A, QtPolynomial& B, Int evA, Int evB) {
    static const BinomialModuli table;
    QtPolynomial common(1);
    const long max_a = std::min({A.deg_q(), B.deg_q(), BinomialModuli::kMaxA});
    const long max_b = std::min({A.deg_t(), B.deg_t(), BinomialModuli::kMaxB});
    if (max_a < 0 || max_b < 0 || max_a + max_b == 0) return common;
    for (long a = 0; a <= max_a; ++a) {
        for (long b = (a == 0 ? 1 : 0); b <= max_b; ++b) {
            const unsigned long m = table.moduli[a][b];
            {
                Tick tk(g_ns_peel_scan);
                if (m > 1) {
                    bool skip = false;
                    if (evA != 0 && mpz_fdiv_ui(evA.get_mpz_t(), m) != 0) skip = true;
                    if (!skip && evB != 0 && mpz_fdiv_ui(evB.get_mpz_t(), m) != 0) skip = true;
                    if (skip) continue;
                }
            }
            ++g_peel_scan_pass;
            bool peeled_here = false;
            auto fold_both = [&]() {
                Tick tk(g_ns_peel_fold);
                ++g_peel_fold_calls;
                return binomial_divides(A, a, b) && binomial_divides(B, a, b);
            };
            while (fold_both()) {
                Tick tkd(g_ns_peel_div);
                A = divide_by_binomial(A, a, b);
                B = divide_by_binomial(B, a, b);
                common *= QtPolynomial::one_minus(a, b);
                ++g_peel_hits;
                peeled_here = true;
            }
            if (peeled_here) {
                evA = eval_point_2_3(A);
                evB = eval_point_2_3(B);
            }
        }
    }
    return common;
}

// Brown's bivariate gcd: interpolate in t from univariate gcds in q.
// Inputs must be primitive in the q-over-Z[t] view.  Result is primitive.
QtPolynomial brown_bivariate_gcd(const QtPolynomial& A, const QtPolynomial& B) {
    ++g_brown_calls;
    const long dA = A.deg_q(), dB = B.deg_q();
    QtPolynomial lcA = coeff_of_q(A, dA);
    QtPolynomial lcB = coeff_of_q(B, dB);
    QtPolynomial gamma;  // gcd of leading coefficients, univariate in t
    bool have_gamma = false;

    long cur_deg = std::min(dA, dB) + 1;
    std::vector<long> nodes;
    std::vector<QVec> newton;  // divided-difference coefficient vectors
    const long max_nodes = A.deg_t() + B.deg_t() + 3;

    for (long trial = 0; trial < 16 * max_nodes + 64; ++trial) {
        const long xi = (trial % 2 == 0) ? trial / 2 + 1 : -(trial / 2 + 1);
        if (lcA.evaluate(Rat(0), Rat(xi)) == 0 || lcB.evaluate(Rat(0), Rat(xi)) == 0) continue;
        ++g_brown_points;
        ZVec g = zvec_gcd(eval_t_int(A, xi), eval_t_int(B, xi));
        const long dg = static_cast<long>(g.size()) - 1;
        if (dg == 0) return QtPolynomial(1);
        if (dg > cur_deg) continue;  // unlucky evaluation point
        if (dg < cur_deg) {
            cur_deg = dg;
            nodes.clear();
            newton.clear();
        }
        // impose the leading coefficient gamma(xi)
        if (!have_gamma) {
            gamma = QtPolynomial::gcd(lcA, lcB);
            have_gamma = true;
        }
        Rat gx = gamma.evaluate(Rat(0), Rat(xi)) / Rat(g.back());
        QVec val(static_cast<size_t>(dg + 1), Rat(0));
        for (long i = 0; i <= dg; ++i) val[static_cast<size_t>(i)] = Rat(g[static_cast<size_t>(i)]) * gx;
        // Newton divided difference against the current table
        QVec dd = val;
        bool matches = true;
        for (size_t k = 0; k < nodes.size(); ++k) {
            const QVec& nk = newton[k];
            for (size_t i = 0; i < dd.size(); ++i) {
                if (i < nk.size()) dd[i] -= nk[i];
            }
            Rat denom(xi - nodes[k]);
            for (auto& c : dd) c /= denom;
        }
        for (const auto& c : dd)
            if (c != 0) { matches = false; break; }
        if (!matches) {
            nodes.push_back(xi);
            newton.push_back(dd);
            if (static_cast<long>(nodes.size()) > max_nodes)
                throw Error("bivariate gcd: interpolation did not stabilize");
            continue;
        }
        // Interpolation is stable at a fresh point: build and verify.
        // G(q,t) = sum_k newton[k](q) * prod_{j<k} (t - nodes[j])
        QtPolynomial cand;
        QtPolynomial basis(1);
        for (size_t k = 0; k < nodes.size(); ++k) {
            QtPolynomial layer;
            for (size_t i = 0; i < newton[k].size(); ++i) {
                if (newton[k][i] != 0)
                    layer.add_term(static_cast<long>(i), 0, newton[k][i]);
            }
            if (!layer.is_zero()) cand += layer * basis;
            basis *= QtPolynomial::t(1) - QtPolynomial(nodes[k]);
        }
        if (cand.is_zero()) continue;
        cand = cand.primitive_part();
        QtPolynomial cq = content_q(cand);
        if (!cq.is_one()) cand = cand / cq;
        cand = cand.primitive_part();
        QtPolynomial dummy;
        if (QtPolynomial::try_divide(A, cand, dummy) && QtPolynomial::try_divide(B, cand, dummy))
            return cand;
        // False stabilization: record the point and keep going.
        nodes.push_back(xi);
        newton.push_back(dd);  // all-zero vector keeps the table consistent
    }
    throw Error("bivariate gcd: ran out of evaluation points");
}

} // namespace

QtPolynomial QtPolynomial::gcd(const QtPolynomial& a0, const QtPolynomial& b0) {
    ++g_gcd_calls;
    Tick tick_total(g_ns_total);
    if (a0.is_zero()) return b0.primitive_part();
    if (b0.is_zero()) return a0.primitive_part();
    QtPolynomial a, b;
    {
        Tick tk(g_ns_prim);
        a = a0.primitive_part();
        b = b0.primitive_part();
    }
    if (a.is_one() || b.is_one()) return QtPolynomial(1);
    if (a == b) return a;

    // Divisor pre-check: denominators in this library are routinely exact
    // multiples of one another (products of the same binomial factors).
    const Int eva = eval_point_2_3(a);
    const Int evb = eval_point_2_3(b);
    {
        Tick tk(g_ns_prediv);
        QtPolynomial quot;
        const Monomial la = a.leading_monomial(), lb = b.leading_monomial();
        const bool a_over_b = la.qe >= lb.qe && la.te >= lb.te &&
            (evb == 0 || mpz_divisible_p(eva.get_mpz_t(), evb.get_mpz_t()));
        if (a_over_b && try_divide(a, b, quot)) { ++g_predivide_hits; return b; }
        const bool b_over_a = lb.qe >= la.qe && lb.te >= la.te &&
            (eva == 0 || mpz_divisible_p(evb.get_mpz_t(), eva.get_mpz_t()));
        if (b_over_a && try_divide(b, a, quot)) { ++g_predivide_hits; return a; }
    }

    const bool auq = is_univariate_in_q(a), buq = is_univariate_in_q(b);
    const bool aut = is_univariate_in_t(a), but = is_univariate_in_t(b);
    if (auq && buq) return from_zvec(zvec_gcd(to_zvec_q(a), to_zvec_q(b)), true);
    if (aut && but) return from_zvec(zvec_gcd(to_zvec_t(a), to_zvec_t(b)), false);
    if ((auq && but) || (aut && buq)) {
        // Nonconstant polynomials in distinct single variables are coprime.
        return QtPolynomial(1);
    }
    // Genuinely bivariate on at least one side: peel shared binomial
    // factors, split off the q-view contents, then interpolate.
    QtPolynomial common;
    {
        Tick tk(g_ns_peel);
        common = peel_common_binomials(a, b, eva, evb);
    }
    if (a.is_constant() || b.is_constant()) return common.primitive_part();
    QtPolynomial ca, cb;
    {
        Tick tk(g_ns_content);
        ca = content_q(a);
        cb = content_q(b);
    }
    QtPolynomial c = gcd(ca, cb) * common;
    QtPolynomial pa = ca.is_one() ? a : a / ca;
    QtPolynomial pb = cb.is_one() ? b : b / cb;
    QtPolynomial g(1);
    {
        Tick tk(g_ns_brown);
        if (is_univariate_in_q(pa) && is_univariate_in_q(pb))
            g = from_zvec(zvec_gcd(to_zvec_q(pa), to_zvec_q(pb)), true);
        else if (!is_univariate_in_t(pa) && !is_univariate_in_t(pb))
            g = brown_bivariate_gcd(pa, pb);
    }
    return (c * g).primitive_part();
}

QtPolynomial QtPolynomial::subst_powers(long aq, long bt) const {
    if (aq < 1 || bt < 1) throw Error("subst_powers: exponents must be >= 1");
    QtPolynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_)
        r.terms_.emplace_back(Monomial{m.qe * aq, m.te * bt}, c);
    return r;  // order is preserved by positive power substitution
}

QtPolynomial QtPolynomial::subst_q(const Rat& value) const {
    QtPolynomial r;
    for (const auto& [m, c] : terms_) {
        Rat pw(1);
        for (long i = 0; i < m.qe; ++i) pw *= value;
        r.add_term(0, m.te, c * pw);
    }
    return r;
}

QtPolynomial QtPolynomial::subst_t(const Rat& value) const {
    QtPolynomial r;
    for (const auto& [m, c] : terms_) {
        Rat pw(1);
        for (long i = 0; i < m.te; ++i) pw *= value;
        r.add_term(m.qe, 0, c * pw);
    }
    return r;
}

QtPolynomial QtPolynomial::subst_q_to_t() const {
    QtPolynomial r;
    for (const auto& [m, c] : terms_) r.add_term(0, m.qe + m.te, c);
    return r;
}

QtPolynomial QtPolynomial::reverse_t() const {
    const long d = deg_t();
    QtPolynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.qe, d - m.te, c);
    return r;
}

QtPolynomial QtPolynomial::mul_t_power(long k) const {
    QtPolynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        if (m.te + k < 0) throw Error("mul_t_power: negative exponent produced");
        r.terms_.emplace_back(Monomial{m.qe, m.te + k}, c);
    }
    return r;
}

QtPolynomial QtPolynomial::coeff_of_t(long k) const {
    QtPolynomial out;
    for (const auto& [m, c] : terms_)
        if (m.te == k) out.add_term(m.qe, 0, c);
    return out;
}

Rat QtPolynomial::evaluate(const Rat& qv, const Rat& tv) const {
    Rat r(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (long i = 0; i < m.qe; ++i) term *= qv;
        for (long i = 0; i < m.te; ++i) term *= tv;
        r += term;
    }
    return r;
}

std::string QtPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lex order reads naturally: highest q-power first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool has_var = m.qe > 0 || m.te > 0;
        if (!has_var || a != 1) {
            os << a.get_str();
            if (has_var) os << "*";
        }
        if (m.qe > 0) {
            os << "q";
            if (m.qe > 1) os << "^" << m.qe;
            if (m.te > 0) os << "*";
        }
        if (m.te > 0) {
            os << "t";
            if (m.te > 1) os << "^" << m.te;
        }
    }
    return os.str();
}

} // namespace mackit
