#ifndef MACKIT_CYCLOTOMIC_HPP
#define MACKIT_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "mackit/qt_rational.hpp"

namespace mackit {

// The l-th cyclotomic polynomial Phi_l(t), computed by exact division of
// t^l - 1 by the Phi_d for proper divisors d.  Cached per l.
const QtPolynomial& cyclotomic_polynomial(long l);

// Element of Q(q)[t]/(Phi_l(t)): an exact stand-in for "t = primitive l-th
// root of unity, q free".  Stored as a residue of t-degree < phi(l) whose
// coefficients are univariate rational functions of q.  The quotient is a
// field, so every nonzero element is invertible.
class CyclotomicScalar {
public:
    CyclotomicScalar() : order_(1), coeff_(1, QtRational(0)) {}
    explicit CyclotomicScalar(long order);
    CyclotomicScalar(long order, const Rat& c);

    // Reduce a rational function of q and t into the quotient field.
    // Throws NonInvertibleDenominator when the denominator maps to zero.
    static CyclotomicScalar reduce(const QtRational& f, long order);
    static CyclotomicScalar reduce(const QtPolynomial& p, long order);

    long order() const { return order_; }
    long degree() const { return static_cast<long>(coeff_.size()); }  // = phi(order)
    const std::vector<QtRational>& coeffs() const { return coeff_; }

    bool is_zero() const;
    bool is_rational_constant() const;

    CyclotomicScalar operator-() const;
    CyclotomicScalar& operator+=(const CyclotomicScalar& o);
    CyclotomicScalar& operator-=(const CyclotomicScalar& o);
    CyclotomicScalar& operator*=(const CyclotomicScalar& o);
    friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
    friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
    friend CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b) { return a *= b; }
    CyclotomicScalar& operator*=(const Rat& c);
    CyclotomicScalar inverse() const;
    CyclotomicScalar pow(long e) const;

    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        return a.order_ == b.order_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const CyclotomicScalar& a, const CyclotomicScalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_same_order(const CyclotomicScalar& o) const;
    void reduce_vector(std::vector<QtRational>& v) const;

    long order_;
    std::vector<QtRational> coeff_;  // coeff_[i] multiplies t^i, q-only fractions
};

} // namespace mackit

#endif
