#include "mackit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace mackit {

namespace {

std::mutex g_phi_mutex;
std::map<long, QtPolynomial> g_phi_cache;

QtPolynomial compute_cyclotomic(long l) {
    // t^l - 1 divided by all Phi_d for proper divisors d of l.
    QtPolynomial p = QtPolynomial::t(l) - QtPolynomial(1);
    for (long d = 1; d < l; ++d) {
        if (l % d == 0) p = p / cyclotomic_polynomial(d);
    }
    return p;
}

} // namespace

const QtPolynomial& cyclotomic_polynomial(long l) {
    if (l < 1) throw InvalidArgument("cyclotomic_polynomial: order must be >= 1");
    {
        std::lock_guard<std::mutex> lk(g_phi_mutex);
        auto it = g_phi_cache.find(l);
        if (it != g_phi_cache.end()) return it->second;
    }
    QtPolynomial p = compute_cyclotomic(l);
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    return g_phi_cache.emplace(l, std::move(p)).first->second;
}

CyclotomicScalar::CyclotomicScalar(long order) : order_(order) {
    if (order < 1) throw InvalidArgument("CyclotomicScalar: order must be >= 1");
    coeff_.assign(static_cast<size_t>(cyclotomic_polynomial(order).deg_t()), QtRational(0));
}

CyclotomicScalar::CyclotomicScalar(long order, const Rat& c) : CyclotomicScalar(order) {
    coeff_[0] = QtRational(c);
}

void CyclotomicScalar::check_same_order(const CyclotomicScalar& o) const {
    if (order_ != o.order_)
        throw InvalidArgument("CyclotomicScalar: mixed cyclotomic orders");
}

bool CyclotomicScalar::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicScalar::is_rational_constant() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (!coeff_[i].is_zero()) return false;
    return coeff_[0].is_constant();
}

// Reduce a raw coefficient vector (any length) modulo Phi_l in place,
// leaving exactly phi(l) entries.
void CyclotomicScalar::reduce_vector(std::vector<QtRational>& v) const {
    const QtPolynomial& phi = cyclotomic_polynomial(order_);
    const size_t deg = static_cast<size_t>(phi.deg_t());
    // Phi is monic: t^deg = -(lower part).
    std::vector<Rat> lower(deg);
    for (size_t i = 0; i < deg; ++i) lower[i] = -phi.coeff(0, static_cast<long>(i));
    while (v.size() > deg) {
        QtRational top = v.back();
        v.pop_back();
        if (top.is_zero()) continue;
        const size_t base = v.size() - deg;
        for (size_t i = 0; i < deg; ++i) {
            if (lower[i] != 0) v[base + i] += top * QtRational(lower[i]);
        }
    }
    v.resize(deg, QtRational(0));
}

CyclotomicScalar CyclotomicScalar::reduce(const QtPolynomial& p, long order) {
    CyclotomicScalar out(order);
    const size_t deg = out.coeff_.size();
    std::vector<QtRational> v(static_cast<size_t>(std::max<long>(p.deg_t() + 1, static_cast<long>(deg))),
                              QtRational(0));
    for (const auto& [m, c] : p.terms()) {
        v[static_cast<size_t>(m.te)] += QtRational(QtPolynomial::monomial(c, m.qe, 0));
    }
    out.reduce_vector(v);
    out.coeff_ = std::move(v);
    return out;
}

CyclotomicScalar CyclotomicScalar::reduce(const QtRational& f, long order) {
    CyclotomicScalar num = reduce(f.num(), order);
    CyclotomicScalar den = reduce(f.den(), order);
    if (den.is_zero())
        throw NonInvertibleDenominator(
            "reduce mod Phi_" + std::to_string(order) + ": denominator " +
            f.den().to_string() + " vanishes in the quotient");
    return num * den.inverse();
}

CyclotomicScalar CyclotomicScalar::operator-() const {
    CyclotomicScalar r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& o) {
    check_same_order(o);
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& o) {
    check_same_order(o);
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& o) {
    check_same_order(o);
    const size_t n = coeff_.size();
    std::vector<QtRational> prod(2 * n, QtRational(0));
    for (size_t i = 0; i < n; ++i) {
        if (coeff_[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.coeff_[j].is_zero()) continue;
            prod[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    reduce_vector(prod);
    coeff_ = std::move(prod);
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const Rat& c) {
    for (auto& v : coeff_) v *= QtRational(c);
    return *this;
}

// Extended Euclid over K[t] with K = Q(q); Phi_l is irreducible over Q,
// hence over Q(q), so every nonzero residue has an inverse.
CyclotomicScalar CyclotomicScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("CyclotomicScalar: inverse of zero");
    using TPoly = std::vector<QtRational>;
    auto degree_of = [](const TPoly& p) -> long {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (!p[i].is_zero()) return i;
        return -1;
    };
    const QtPolynomial& phi = cyclotomic_polynomial(order_);
    TPoly r0;
    for (long i = 0; i <= phi.deg_t(); ++i) r0.push_back(QtRational(phi.coeff(0, i)));
    TPoly r1 = coeff_;
    TPoly s0(1, QtRational(0));
    TPoly s1(1, QtRational(1));
    auto sub_scaled = [&](TPoly& a, const TPoly& b, const QtRational& c, long shift) {
        if (a.size() < b.size() + static_cast<size_t>(shift))
            a.resize(b.size() + static_cast<size_t>(shift), QtRational(0));
        for (size_t i = 0; i < b.size(); ++i) a[i + static_cast<size_t>(shift)] -= c * b[i];
    };
    while (degree_of(r1) > 0) {
        // divide r0 by r1
        TPoly rem = r0;
        TPoly quo;
        long d1 = degree_of(r1);
        QtRational lead1 = r1[static_cast<size_t>(d1)];
        long dr;
        while ((dr = degree_of(rem)) >= d1) {
            QtRational c = rem[static_cast<size_t>(dr)] / lead1;
            if (quo.size() < static_cast<size_t>(dr - d1 + 1)) quo.resize(static_cast<size_t>(dr - d1 + 1), QtRational(0));
            quo[static_cast<size_t>(dr - d1)] = c;
            sub_scaled(rem, r1, c, dr - d1);
            rem[static_cast<size_t>(dr)] = QtRational(0);  // kill rounding-free residue exactly
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - quo * s1)
        TPoly snew = s0;
        for (size_t k = 0; k < quo.size(); ++k) {
            if (quo[k].is_zero()) continue;
            sub_scaled(snew, s1, quo[k], static_cast<long>(k));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    long d = degree_of(r1);
    if (d < 0) throw Error("CyclotomicScalar::inverse: gcd degenerate (residue shares a factor with Phi)");
    QtRational unit = r1[static_cast<size_t>(d)];  // d == 0 here
    CyclotomicScalar out(order_);
    std::vector<QtRational> v = s1;
    for (auto& c : v) c = c / unit;
    if (v.size() < out.coeff_.size()) v.resize(out.coeff_.size(), QtRational(0));
    out.reduce_vector(v);
    out.coeff_ = std::move(v);
    return out;
}

CyclotomicScalar CyclotomicScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicScalar r(order_, Rat(1));
    CyclotomicScalar base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::string CyclotomicScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_[i].to_string() << ")";
        if (i == 1) os << "*t";
        else if (i > 1) os << "*t^" << i;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace mackit
