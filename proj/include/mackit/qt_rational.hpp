#ifndef MACKIT_QT_RATIONAL_HPP
#define MACKIT_QT_RATIONAL_HPP

#include <string>

#include "mackit/qt_poly.hpp"

namespace mackit {

// Element of F = Q(q,t) as a reduced fraction of QtPolynomials.
// Canonical form: gcd(num, den) = 1, denominator is a primitive integer
// polynomial with positive leading coefficient (lex order, q before t).
// Equality of canonical forms is plain structural equality.
class QtRational {
public:
    QtRational() : num_(), den_(1) {}
    QtRational(long v) : num_(v), den_(1) {}                       // NOLINT(google-explicit-constructor)
    QtRational(const Rat& v) : num_(v), den_(1) {}                 // NOLINT(google-explicit-constructor)
    QtRational(const QtPolynomial& p) : num_(p), den_(1) {}        // NOLINT(google-explicit-constructor)
    QtRational(QtPolynomial num, QtPolynomial den);

    static QtRational q(long e = 1) { return QtRational(QtPolynomial::q(e)); }
    static QtRational t(long e = 1) { return QtRational(QtPolynomial::t(e)); }
    // (1 - q^a t^b) as a rational function.
    static QtRational one_minus(long qe, long te) { return QtRational(QtPolynomial::one_minus(qe, te)); }

    const QtPolynomial& num() const { return num_; }
    const QtPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_q_only() const { return num_.is_q_only() && den_.is_q_only(); }
    // Value as an exact rational; throws unless is_constant().
    Rat as_rat() const;

    QtRational operator-() const;
    QtRational inverse() const;
    QtRational& operator+=(const QtRational& o);
    QtRational& operator-=(const QtRational& o);
    QtRational& operator*=(const QtRational& o);
    QtRational& operator/=(const QtRational& o);
    friend QtRational operator+(QtRational a, const QtRational& b) { return a += b; }
    friend QtRational operator-(QtRational a, const QtRational& b) { return a -= b; }
    friend QtRational operator*(QtRational a, const QtRational& b) { return a *= b; }
    friend QtRational operator/(QtRational a, const QtRational& b) { return a /= b; }
    QtRational pow(long e) const;
    // Multiply by a rational constant without re-reducing the fraction
    // (constants never disturb the gcd or the denominator normalization).
    QtRational& scale(const Rat& c);

    friend bool operator==(const QtRational& a, const QtRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QtRational& a, const QtRational& b) { return !(a == b); }

    // q -> q^a, t -> t^b.
    QtRational subst_powers(long a, long b) const;
    // t -> 1/t; closed on rational functions (powers of t move across).
    QtRational subst_t_inverse() const;
    QtRational subst_q(const Rat& v) const;   // throws DivisionByZero if den vanishes
    QtRational subst_t(const Rat& v) const;
    QtRational subst_q_to_t() const;

    std::string to_string() const;

private:
    void normalize();
    // Fix only the scalar normalization of the denominator (primitive
    // integer, positive leading coefficient); assumes the fraction is
    // already reduced.
    void normalize_scalar();

    QtPolynomial num_;
    QtPolynomial den_;
};

} // namespace mackit

#endif
