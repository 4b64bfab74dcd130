#ifndef MACKIT_QT_POLY_HPP
#define MACKIT_QT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "mackit/errors.hpp"

namespace mackit {

using Rat = mpq_class;
using Int = mpz_class;

// Exponent pair of a monomial q^qe * t^te.  Ordered lexicographically with
// q before t; the leading term of a polynomial is the largest key.
struct Monomial {
    long qe = 0;
    long te = 0;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.qe == b.qe && a.te == b.te;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.qe != b.qe) return a.qe < b.qe;
        return a.te < b.te;
    }
};

// Sparse polynomial in q and t with exact rational coefficients.
// Canonical form: terms sorted ascending by monomial, no zero coefficients,
// nonnegative exponents.
class QtPolynomial {
public:
    using Term = std::pair<Monomial, Rat>;
    using TermList = std::vector<Term>;

    QtPolynomial() = default;
    QtPolynomial(long c) { if (c != 0) terms_.emplace_back(Monomial{0, 0}, Rat(c)); }  // NOLINT
    QtPolynomial(const Rat& c) { if (c != 0) terms_.emplace_back(Monomial{0, 0}, c); } // NOLINT

    static QtPolynomial monomial(const Rat& c, long qe, long te);
    static QtPolynomial q(long e = 1) { return monomial(1, e, 0); }
    static QtPolynomial t(long e = 1) { return monomial(1, 0, e); }
    // 1 - q^a t^b, the building block of nearly every constant in this library.
    static QtPolynomial one_minus(long qe, long te);

    const TermList& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_q_only() const { return deg_t() <= 0; }
    bool is_t_only() const { return deg_q() <= 0; }

    // Degrees; -1 for the zero polynomial.
    long deg_q() const;
    long deg_t() const;
    // Largest power of t dividing the polynomial (0 for zero polynomial).
    long t_valuation() const;

    Rat coeff(long qe, long te) const;
    Rat constant_term() const { return coeff(0, 0); }
    Rat leading_coeff() const;
    Monomial leading_monomial() const;

    void add_term(long qe, long te, const Rat& c);

    QtPolynomial operator-() const;
    QtPolynomial& operator+=(const QtPolynomial& o);
    QtPolynomial& operator-=(const QtPolynomial& o);
    friend QtPolynomial operator+(const QtPolynomial& a, const QtPolynomial& b);
    friend QtPolynomial operator-(const QtPolynomial& a, const QtPolynomial& b);
    friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b);
    QtPolynomial& operator*=(const QtPolynomial& o) { return *this = *this * o; }
    QtPolynomial pow(long e) const;

    friend bool operator==(const QtPolynomial& a, const QtPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Exact division; returns false if b does not divide a.
    static bool try_divide(const QtPolynomial& a, const QtPolynomial& b, QtPolynomial& quot);
    // Exact division, throws Error when the division is not exact.
    friend QtPolynomial operator/(const QtPolynomial& a, const QtPolynomial& b);

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients.  Zero polynomial has content 0.
    Rat content() const;
    // this / (content * sign of leading coefficient): primitive integer
    // polynomial with positive leading coefficient.
    QtPolynomial primitive_part() const;
    QtPolynomial scaled(const Rat& c) const;

    // GCD, normalized primitive with positive leading coefficient.
    static QtPolynomial gcd(const QtPolynomial& a, const QtPolynomial& b);

    // q -> q^a, t -> t^b with a, b >= 1.
    QtPolynomial subst_powers(long a, long b) const;
    // q -> value (result is a polynomial in t alone).
    QtPolynomial subst_q(const Rat& value) const;
    QtPolynomial subst_t(const Rat& value) const;
    // q -> t (exponents merge).
    QtPolynomial subst_q_to_t() const;
    // t^e -> t^(d - e) with d = deg_t; used for t -> 1/t on fractions.
    QtPolynomial reverse_t() const;
    QtPolynomial mul_t_power(long k) const;  // k may be negative if divisible
    // Extract coefficient of t^k as a polynomial in q.
    QtPolynomial coeff_of_t(long k) const;

    Rat evaluate(const Rat& qv, const Rat& tv) const;

    std::string to_string() const;

private:
    TermList terms_;
};

} // namespace mackit

#endif
