#include "mackit/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace mackit {

char basis_code(Basis b) {
    switch (b) {
        case Basis::Monomial: return 'm';
        case Basis::Powersum: return 'p';
        case Basis::Elementary: return 'e';
        case Basis::Homogeneous: return 'h';
        case Basis::Schur: return 's';
    }
    return '?';
}

Basis basis_from_code(char c) {
    switch (c) {
        case 'm': return Basis::Monomial;
        case 'p': return Basis::Powersum;
        case 'e': return Basis::Elementary;
        case 'h': return Basis::Homogeneous;
        case 's': return Basis::Schur;
        default: throw InvalidArgument(std::string("unknown basis code '") + c + "'");
    }
}

SymFunc SymFunc::one(Basis b) {
    SymFunc f(b);
    f.set_coeff(Partition(), QtRational(1));
    return f;
}

SymFunc SymFunc::generator(Basis b, const Partition& lambda) {
    SymFunc f(b);
    f.set_coeff(lambda, QtRational(1));
    return f;
}

QtRational SymFunc::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? QtRational(0) : it->second;
}

void SymFunc::set_coeff(const Partition& lambda, const QtRational& c) {
    if (c.is_zero()) coeffs_.erase(lambda);
    else coeffs_[lambda] = c;
}

void SymFunc::add_coeff(const Partition& lambda, const QtRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

long SymFunc::max_weight() const {
    long w = 0;
    for (const auto& [p, c] : coeffs_) w = std::max(w, p.weight());
    return w;
}

bool SymFunc::is_homogeneous() const {
    long w = -1;
    for (const auto& [p, c] : coeffs_) {
        if (w == -1) w = p.weight();
        else if (p.weight() != w) return false;
    }
    return true;
}

SymFunc SymFunc::homogeneous_component(long w) const {
    SymFunc out(basis_);
    for (const auto& [p, c] : coeffs_)
        if (p.weight() == w) out.coeffs_.emplace(p, c);
    return out;
}

std::vector<long> SymFunc::weights() const {
    std::vector<long> out;
    for (const auto& [p, c] : coeffs_) {
        long w = p.weight();
        if (out.empty() || out.back() != w) out.push_back(w);
    }
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc out(basis_);
    for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p, -c);
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_) throw InvalidArgument("SymFunc: adding different bases; convert first");
    for (const auto& [p, c] : o.coeffs_) add_coeff(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_) throw InvalidArgument("SymFunc: subtracting different bases; convert first");
    for (const auto& [p, c] : o.coeffs_) add_coeff(p, -c);
    return *this;
}

SymFunc SymFunc::scaled(const QtRational& c) const {
    SymFunc out(basis_);
    if (c.is_zero()) return out;
    for (const auto& [p, v] : coeffs_) out.set_coeff(p, v * c);
    return out;
}

SymFunc SymFunc::scaled(const Rat& c) const {
    SymFunc out(basis_);
    if (c == 0) return out;
    for (const auto& [p, v] : coeffs_) {
        QtRational s = v;
        s.scale(c);
        out.coeffs_.emplace(p, std::move(s));
    }
    return out;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << basis_code(basis_) << p.to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Transition tables, one set per weight, cached.
// Row i of a table X_to_Y is the Y-expansion of the i-th X basis element
// (canonical partition order).
// ---------------------------------------------------------------------------

namespace {

using Mat = std::vector<std::vector<Rat>>;
using PExp = std::map<Partition, Rat, PartitionLess>;  // element in one basis, Rat coeffs

// p_r * m_lambda expanded in the monomial basis.
PExp multiply_p_into_m(const PExp& f, long r) {
    PExp out;
    for (const auto& [lam, c] : f) {
        // distinct part values of lam plus the "new part" case v = 0
        std::vector<long> values{0};
        for (long v : lam.parts())
            if (values.back() != v) values.push_back(v);
        for (long v : values) {
            std::vector<long> parts = lam.parts();
            if (v > 0) parts.erase(std::find(parts.begin(), parts.end(), v));
            parts.push_back(v + r);
            std::sort(parts.begin(), parts.end(), std::greater<long>());
            Partition mu(parts);
            Rat coeff = c * mu.multiplicity(v + r);
            out[mu] += coeff;
            if (out[mu] == 0) out.erase(mu);
        }
    }
    return out;
}

// Number of semistandard tableaux of shape lambda and content mu.
Int kostka_number(const Partition& lambda, const Partition& mu) {
    // DP over content prefixes: peel the last content part as a horizontal strip.
    struct Key {
        Partition shape;
        long level;
        bool operator<(const Key& o) const {
            if (level != o.level) return level < o.level;
            return canonical_less(shape, o.shape);
        }
    };
    std::map<Key, Int> memo;
    std::function<Int(const Partition&, long)> rec = [&](const Partition& shape, long level) -> Int {
        if (level == 0) return shape.empty() ? 1 : 0;
        Key k{shape, level};
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        const long piece = mu.part(level);
        Int total = 0;
        // inner shapes nu with shape/nu a horizontal strip of size piece
        for (const auto& nu : partitions_of(shape.weight() - piece)) {
            if (is_horizontal_strip(shape, nu)) total += rec(nu, level - 1);
        }
        memo.emplace(k, total);
        return total;
    };
    return rec(lambda, mu.length());
}

struct Tables {
    long weight = 0;
    std::vector<Partition> parts;
    std::map<Partition, long, PartitionLess> index;
    Mat p_to_m, m_to_p, s_to_m, m_to_s, h_to_p, e_to_p, p_to_h, p_to_e;
};

// Lower-triangular inversion (row i supported on columns <= i).
Mat invert_lower_unitriangular_like(const Mat& R) {
    const size_t n = R.size();
    Mat B(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        B[i][i] = Rat(1) / R[i][i];
        for (size_t jj = i; jj-- > 0;) {
            Rat s(0);
            for (size_t k = jj + 1; k <= i; ++k) s += B[i][k] * R[k][jj];
            if (s != 0) B[i][jj] = -s / R[jj][jj];
        }
    }
    return B;
}

// Upper-triangular with unit diagonal (row i supported on columns >= i).
Mat invert_upper_unitriangular(const Mat& K) {
    const size_t n = K.size();
    Mat B(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        B[i][i] = 1;
        for (size_t j = i + 1; j < n; ++j) {
            Rat s(0);
            for (size_t k = i; k < j; ++k) s += B[i][k] * K[k][j];
            if (s != 0) B[i][j] = -s;
        }
    }
    return B;
}

std::shared_ptr<const Tables> build_tables(long n) {
    auto tb = std::make_shared<Tables>();
    tb->weight = n;
    tb->parts = partitions_of(n);
    const size_t N = tb->parts.size();
    for (size_t i = 0; i < N; ++i) tb->index.emplace(tb->parts[i], static_cast<long>(i));

    auto to_row = [&](const PExp& f) {
        std::vector<Rat> row(N, Rat(0));
        for (const auto& [p, c] : f) row[static_cast<size_t>(tb->index.at(p))] = c;
        return row;
    };

    // p_lambda in m by iterated multiplication.
    tb->p_to_m.resize(N);
    for (size_t i = 0; i < N; ++i) {
        PExp cur;
        cur[Partition()] = 1;
        for (long r : tb->parts[i].parts()) cur = multiply_p_into_m(cur, r);
        tb->p_to_m[i] = to_row(cur);
    }
    tb->m_to_p = invert_lower_unitriangular_like(tb->p_to_m);

    // Kostka matrix (Schur in monomials).
    tb->s_to_m.assign(N, std::vector<Rat>(N, Rat(0)));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Int k = kostka_number(tb->parts[i], tb->parts[j]);
            if (k != 0) tb->s_to_m[i][j] = Rat(k);
        }
    tb->m_to_s = invert_upper_unitriangular(tb->s_to_m);

    // Generators h_k, e_k and powersums p_k expanded recursively.
    std::vector<PExp> h_in_p(static_cast<size_t>(n + 1)), e_in_p(static_cast<size_t>(n + 1));
    std::vector<PExp> p_in_h(static_cast<size_t>(n + 1)), p_in_e(static_cast<size_t>(n + 1));
    h_in_p[0][Partition()] = 1;
    e_in_p[0][Partition()] = 1;
    auto mul_union = [](const PExp& f, const Partition& extra, const Rat& c) {
        PExp out;
        for (const auto& [p, v] : f) out[p.union_with(extra)] = v * c;
        return out;
    };
    auto acc = [](PExp& dst, const PExp& src, const Rat& c) {
        for (const auto& [p, v] : src) {
            dst[p] += v * c;
            if (dst[p] == 0) dst.erase(p);
        }
    };
    for (long k = 1; k <= n; ++k) {
        PExp hk, ek;
        for (long i = 1; i <= k; ++i) {
            Rat ch = Rat(1) / k;
            Rat ce = (i % 2 == 1) ? ch : -ch;
            acc(hk, mul_union(h_in_p[static_cast<size_t>(k - i)], Partition({i}), Rat(1)), ch);
            acc(ek, mul_union(e_in_p[static_cast<size_t>(k - i)], Partition({i}), Rat(1)), ce);
        }
        h_in_p[static_cast<size_t>(k)] = std::move(hk);
        e_in_p[static_cast<size_t>(k)] = std::move(ek);
        // p_k = k h_k - sum_{i<k} p_i h_{k-i}  (in the h basis)
        PExp pk_h;
        pk_h[Partition({k})] = Rat(k);
        for (long i = 1; i < k; ++i)
            acc(pk_h, mul_union(p_in_h[static_cast<size_t>(i)], Partition({k - i}), Rat(1)), Rat(-1));
        p_in_h[static_cast<size_t>(k)] = std::move(pk_h);
        // p_k = (-1)^{k-1} k e_k - (-1)^{k-1} sum_{i<k} (-1)^{i-1} p_i e_{k-i}
        PExp pk_e;
        Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
        pk_e[Partition({k})] = sign * k;
        for (long i = 1; i < k; ++i) {
            Rat c = -sign * ((i % 2 == 1) ? Rat(1) : Rat(-1));
            acc(pk_e, mul_union(p_in_e[static_cast<size_t>(i)], Partition({k - i}), Rat(1)), c);
        }
        p_in_e[static_cast<size_t>(k)] = std::move(pk_e);
    }

    auto product_rows = [&](const std::vector<PExp>& gen, const Partition& lambda) {
        PExp cur;
        cur[Partition()] = 1;
        for (long part : lambda.parts()) {
            PExp next;
            for (const auto& [pl, cl] : cur)
                for (const auto& [pr, cr] : gen[static_cast<size_t>(part)]) {
                    next[pl.union_with(pr)] += cl * cr;
                    if (next[pl.union_with(pr)] == 0) next.erase(pl.union_with(pr));
                }
            cur = std::move(next);
        }
        return to_row(cur);
    };

    tb->h_to_p.resize(N);
    tb->e_to_p.resize(N);
    tb->p_to_h.resize(N);
    tb->p_to_e.resize(N);
    for (size_t i = 0; i < N; ++i) {
        tb->h_to_p[i] = product_rows(h_in_p, tb->parts[i]);
        tb->e_to_p[i] = product_rows(e_in_p, tb->parts[i]);
        tb->p_to_h[i] = product_rows(p_in_h, tb->parts[i]);
        tb->p_to_e[i] = product_rows(p_in_e, tb->parts[i]);
    }
    return tb;
}

std::mutex g_tables_mutex;
std::map<long, std::shared_ptr<const Tables>> g_tables_cache;

std::shared_ptr<const Tables> tables(long n) {
    {
        std::lock_guard<std::mutex> lk(g_tables_mutex);
        auto it = g_tables_cache.find(n);
        if (it != g_tables_cache.end()) return it->second;
    }
    auto tb = build_tables(n);
    std::lock_guard<std::mutex> lk(g_tables_mutex);
    return g_tables_cache.emplace(n, std::move(tb)).first->second;
}

using Vec = std::vector<QtRational>;

Vec apply_mat(const Mat& M, const Vec& v) {
    const size_t n = v.size();
    Vec out(n, QtRational(0));
    for (size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (M[i][j] == 0) continue;
            QtRational term = v[i];
            term.scale(M[i][j]);
            out[j] += term;
        }
    }
    return out;
}

Vec to_vec(const Tables& tb, const SymFunc& f, long w) {
    Vec v(tb.parts.size(), QtRational(0));
    for (const auto& [p, c] : f.coeffs())
        if (p.weight() == w) v[static_cast<size_t>(tb.index.at(p))] = c;
    return v;
}

void from_vec(const Tables& tb, const Vec& v, SymFunc& out) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.add_coeff(tb.parts[i], v[i]);
}

Vec convert_vec(const Tables& tb, Vec v, Basis from, Basis to) {
    if (from == to) return v;
    // Direct Schur <-> monomial via the Kostka matrices.
    if (from == Basis::Schur && to == Basis::Monomial) return apply_mat(tb.s_to_m, v);
    if (from == Basis::Monomial && to == Basis::Schur) return apply_mat(tb.m_to_s, v);
    // Everything else routes through the powersums.
    if (from != Basis::Powersum) {
        switch (from) {
            case Basis::Monomial: v = apply_mat(tb.m_to_p, v); break;
            case Basis::Schur: v = apply_mat(tb.s_to_m, v); v = apply_mat(tb.m_to_p, v); break;
            case Basis::Elementary: v = apply_mat(tb.e_to_p, v); break;
            case Basis::Homogeneous: v = apply_mat(tb.h_to_p, v); break;
            default: break;
        }
    }
    switch (to) {
        case Basis::Powersum: return v;
        case Basis::Monomial: return apply_mat(tb.p_to_m, v);
        case Basis::Schur: v = apply_mat(tb.p_to_m, v); return apply_mat(tb.m_to_s, v);
        case Basis::Elementary: return apply_mat(tb.p_to_e, v);
        case Basis::Homogeneous: return apply_mat(tb.p_to_h, v);
        default: return v;
    }
}

} // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc out(target);
    for (long w : f.weights()) {
        auto tb = tables(w);
        Vec v = to_vec(*tb, f, w);
        v = convert_vec(*tb, std::move(v), f.basis(), target);
        from_vec(*tb, v, out);
    }
    return out;
}

bool equal_elements(const SymFunc& a, const SymFunc& b) {
    if (a.basis() == b.basis()) return a == b;
    return convert(a, Basis::Powersum) == convert(b, Basis::Powersum);
}

SymFunc mul(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::Powersum);
    SymFunc gp = convert(g, Basis::Powersum);
    SymFunc prod(Basis::Powersum);
    for (const auto& [pl, cl] : fp.coeffs())
        for (const auto& [pr, cr] : gp.coeffs())
            prod.add_coeff(pl.union_with(pr), cl * cr);
    return convert(prod, f.basis());
}

SymFunc power(const SymFunc& f, long e) {
    if (e < 0) throw InvalidArgument("power: negative exponent");
    SymFunc r = SymFunc::one(f.basis());
    for (long i = 0; i < e; ++i) r = mul(r, f);
    return r;
}

Rat z_int(const Partition& lambda) {
    Rat z(1);
    long prev = -1, run = 0;
    for (long p : lambda.parts()) {
        if (p == prev) ++run; else run = 1;
        prev = p;
        z *= Rat(p) * run;
    }
    return z;
}

QtRational zqt_weight(const Partition& lambda) {
    static std::mutex m;
    static std::map<Partition, QtRational, PartitionLess> memo;
    {
        std::lock_guard<std::mutex> lk(m);
        auto it = memo.find(lambda);
        if (it != memo.end()) return it->second;
    }
    QtRational z{QtPolynomial(z_int(lambda))};
    for (long p : lambda.parts())
        z *= QtRational(QtPolynomial::one_minus(p, 0), QtPolynomial::one_minus(0, p));
    std::lock_guard<std::mutex> lk(m);
    return memo.emplace(lambda, std::move(z)).first->second;
}

namespace {

QtRational inner_with_weight(const SymFunc& f, const SymFunc& g, bool qt) {
    SymFunc fp = convert(f, Basis::Powersum);
    SymFunc gp = convert(g, Basis::Powersum);
    QtRational total(0);
    for (const auto& [p, cf] : fp.coeffs()) {
        QtRational cg = gp.coeff(p);
        if (cg.is_zero()) continue;
        QtRational term = cf * cg;
        if (qt) term *= zqt_weight(p);
        else term.scale(z_int(p));
        total += term;
    }
    return total;
}

} // namespace

QtRational inner_qt(const SymFunc& f, const SymFunc& g) { return inner_with_weight(f, g, true); }
QtRational inner_hall(const SymFunc& f, const SymFunc& g) { return inner_with_weight(f, g, false); }

namespace {

// p_k o g in the powersum basis.
SymFunc pleth_pk(const SymFunc& g_p, long k) {
    SymFunc out(Basis::Powersum);
    for (const auto& [sigma, d] : g_p.coeffs()) {
        std::vector<long> scaled;
        for (long part : sigma.parts()) scaled.push_back(part * k);
        out.add_coeff(Partition(scaled), d.subst_powers(k, k));
    }
    return out;
}

} // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::Powersum);
    SymFunc gp = convert(g, Basis::Powersum);
    SymFunc total(Basis::Powersum);
    // cache p_k o g for the k that appear
    std::map<long, SymFunc> pk;
    for (const auto& [rho, c] : fp.coeffs()) {
        SymFunc term(Basis::Powersum);
        term.set_coeff(Partition(), QtRational(1));
        for (long k : rho.parts()) {
            auto it = pk.find(k);
            if (it == pk.end()) it = pk.emplace(k, pleth_pk(gp, k)).first;
            SymFunc next(Basis::Powersum);
            for (const auto& [pl, cl] : term.coeffs())
                for (const auto& [pr, cr] : it->second.coeffs())
                    next.add_coeff(pl.union_with(pr), cl * cr);
            term = std::move(next);
        }
        total += term.scaled(c);
    }
    return convert(total, f.basis());
}

SymFunc internal_product(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::Powersum);
    SymFunc gp = convert(g, Basis::Powersum);
    SymFunc out(Basis::Powersum);
    for (const auto& [p, cf] : fp.coeffs()) {
        QtRational cg = gp.coeff(p);
        if (cg.is_zero()) continue;
        QtRational c = cf * cg;
        c.scale(z_int(p));
        out.add_coeff(p, c);
    }
    return convert(out, f.basis());
}

SymFunc transform_alphabet(const SymFunc& f, AlphabetTransform kind) {
    SymFunc fp = convert(f, Basis::Powersum);
    SymFunc out(Basis::Powersum);
    for (const auto& [rho, c] : fp.coeffs()) {
        QtRational factor(1);
        for (long k : rho.parts()) {
            switch (kind) {
                case AlphabetTransform::QtTwist:
                    factor *= QtRational(QtPolynomial::one_minus(k, 0), QtPolynomial::one_minus(0, k));
                    break;
                case AlphabetTransform::QtTwistInverse:
                    factor *= QtRational(QtPolynomial::one_minus(0, k), QtPolynomial::one_minus(k, 0));
                    break;
                case AlphabetTransform::OverOneMinusQ:
                    factor *= QtRational(QtPolynomial(1), QtPolynomial::one_minus(k, 0));
                    break;
                case AlphabetTransform::OverOneMinusT:
                    factor *= QtRational(QtPolynomial(1), QtPolynomial::one_minus(0, k));
                    break;
            }
        }
        out.add_coeff(rho, c * factor);
    }
    return convert(out, f.basis());
}

QtRational principal_specialize(const SymFunc& f, long l, bool divide_by_one_minus_q) {
    if (l < 1) throw InvalidArgument("principal_specialize: alphabet length must be >= 1");
    SymFunc fp = convert(f, Basis::Powersum);
    QtRational total(0);
    for (const auto& [rho, c] : fp.coeffs()) {
        QtRational term = c;
        for (long k : rho.parts()) {
            QtRational den = QtRational(QtPolynomial::one_minus(0, k));
            if (divide_by_one_minus_q)
                den *= QtRational(QtPolynomial::one_minus(k, 0));
            term *= QtRational(QtPolynomial::one_minus(0, k * l)) / den;
        }
        total += term;
    }
    return total;
}

SymFunc g_prime(long r) {
    if (r < 0) throw InvalidArgument("g_prime: negative degree");
    SymFunc out(Basis::Powersum);
    for (const auto& lam : partitions_of(r))
        out.set_coeff(lam, zqt_weight(lam).inverse());
    return out;
}

} // namespace mackit
