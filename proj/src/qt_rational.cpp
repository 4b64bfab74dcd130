#include "mackit/qt_rational.hpp"

#include <sstream>

namespace mackit {

QtRational::QtRational(QtPolynomial num, QtPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("QtRational: zero denominator");
    normalize();
}

void QtRational::normalize() {
    if (num_.is_zero()) {
        den_ = QtPolynomial(1);
        return;
    }
    QtPolynomial g = QtPolynomial::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    // Scale so the denominator is primitive integer with positive lead.
    Rat c = den_.content();
    if (den_.leading_coeff() < 0) c = -c;
    if (c != 1) {
        den_ = den_ / QtPolynomial(c);
        num_ = num_ / QtPolynomial(c);
    }
}

void QtRational::normalize_scalar() {
    if (num_.is_zero()) {
        den_ = QtPolynomial(1);
        return;
    }
    Rat c = den_.content();
    if (den_.leading_coeff() < 0) c = -c;
    if (c != 1) {
        den_ = den_ / QtPolynomial(c);
        num_ = num_ / QtPolynomial(c);
    }
}

Rat QtRational::as_rat() const {
    if (!is_constant()) throw Error("QtRational::as_rat: not a constant");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_term() / den_.constant_term();
}

QtRational QtRational::operator-() const {
    QtRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QtRational QtRational::inverse() const {
    if (is_zero()) throw DivisionByZero("QtRational: inverse of zero");
    QtRational r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_scalar();
    return r;
}

namespace {

// a/b +- c/d with Henrici's trick: only gcd(b,d) and gcd(t, g) are computed,
// both far smaller than gcd(numerator, b*d).
void add_sub(QtPolynomial& a, QtPolynomial& b, const QtPolynomial& c0, const QtPolynomial& d0,
             bool subtract) {
    const QtPolynomial c = subtract ? -c0 : c0;
    if (a.is_zero()) { a = c; b = d0; return; }
    if (c.is_zero()) return;
    QtPolynomial g = QtPolynomial::gcd(b, d0);
    if (g.is_one()) {
        a = a * d0 + c * b;
        b = b * d0;
        if (a.is_zero()) b = QtPolynomial(1);
        return;
    }
    QtPolynomial bp = b / g;
    QtPolynomial dp = d0 / g;
    QtPolynomial t = a * dp + c * bp;
    if (t.is_zero()) { a = QtPolynomial(); b = QtPolynomial(1); return; }
    QtPolynomial h = QtPolynomial::gcd(t, g);
    if (h.is_one()) {
        a = t;
        b = bp * dp * g;
    } else {
        a = t / h;
        b = bp * dp * (g / h);
    }
}

} // namespace

QtRational& QtRational::operator+=(const QtRational& o) {
    add_sub(num_, den_, o.num_, o.den_, false);
    normalize_scalar();
    return *this;
}

QtRational& QtRational::operator-=(const QtRational& o) {
    add_sub(num_, den_, o.num_, o.den_, true);
    normalize_scalar();
    return *this;
}

QtRational& QtRational::operator*=(const QtRational& o) {
    if (is_zero() || o.is_zero()) { num_ = QtPolynomial(); den_ = QtPolynomial(1); return *this; }
    QtPolynomial g1 = QtPolynomial::gcd(num_, o.den_);
    QtPolynomial g2 = QtPolynomial::gcd(o.num_, den_);
    QtPolynomial n1 = g1.is_one() ? num_ : num_ / g1;
    QtPolynomial n2 = g2.is_one() ? o.num_ : o.num_ / g2;
    QtPolynomial d1 = g2.is_one() ? den_ : den_ / g2;
    QtPolynomial d2 = g1.is_one() ? o.den_ : o.den_ / g1;
    num_ = n1 * n2;
    den_ = d1 * d2;
    normalize_scalar();
    return *this;
}

QtRational& QtRational::operator/=(const QtRational& o) {
    if (o.is_zero()) throw DivisionByZero("QtRational: division by zero");
    return *this *= o.inverse();
}

QtRational QtRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QtRational r(1);
    QtRational base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

QtRational& QtRational::scale(const Rat& c) {
    if (c == 0) {
        num_ = QtPolynomial();
        den_ = QtPolynomial(1);
        return *this;
    }
    num_ = num_ * QtPolynomial(c);
    return *this;
}

QtRational QtRational::subst_powers(long a, long b) const {
    return QtRational(num_.subst_powers(a, b), den_.subst_powers(a, b));
}

QtRational QtRational::subst_t_inverse() const {
    // f(q, 1/t) = t^(deg_t den - deg_t num) * rev(num) / rev(den),
    // with the t power attached to whichever side keeps exponents >= 0.
    if (num_.is_zero()) return *this;
    const long dn = num_.deg_t();
    const long dd = den_.deg_t();
    QtPolynomial rn = num_.reverse_t();
    QtPolynomial rd = den_.reverse_t();
    if (dd >= dn) return QtRational(rn.mul_t_power(dd - dn), rd);
    return QtRational(rn, rd.mul_t_power(dn - dd));
}

QtRational QtRational::subst_q(const Rat& v) const {
    QtPolynomial d = den_.subst_q(v);
    if (d.is_zero()) throw DivisionByZero("QtRational::subst_q: denominator vanishes");
    return QtRational(num_.subst_q(v), d);
}

QtRational QtRational::subst_t(const Rat& v) const {
    QtPolynomial d = den_.subst_t(v);
    if (d.is_zero()) throw DivisionByZero("QtRational::subst_t: denominator vanishes");
    return QtRational(num_.subst_t(v), d);
}

QtRational QtRational::subst_q_to_t() const {
    QtPolynomial d = den_.subst_q_to_t();
    if (d.is_zero()) throw DivisionByZero("QtRational::subst_q_to_t: denominator vanishes");
    return QtRational(num_.subst_q_to_t(), d);
}

std::string QtRational::to_string() const {
    if (den_.is_one()) {
        if (num_.terms().size() <= 1) return num_.to_string();
        return num_.to_string();
    }
    std::ostringstream os;
    if (num_.terms().size() > 1) os << "(" << num_.to_string() << ")";
    else os << num_.to_string();
    os << "/";
    if (den_.terms().size() > 1) os << "(" << den_.to_string() << ")";
    else os << den_.to_string();
    return os.str();
}

} // namespace mackit
