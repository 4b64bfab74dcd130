#ifndef MACKIT_SYMFUNC_HPP
#define MACKIT_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "mackit/partition.hpp"
#include "mackit/qt_rational.hpp"

namespace mackit {

enum class Basis { Monomial, Powersum, Elementary, Homogeneous, Schur };

char basis_code(Basis b);          // 'm', 'p', 'e', 'h', 's'
Basis basis_from_code(char c);

// Element of Lambda_F, F = Q(q,t), expressed in one named basis.
// Inhomogeneous elements are allowed; graded operations act degreewise.
class SymFunc {
public:
    using CoeffMap = std::map<Partition, QtRational, PartitionLess>;

    explicit SymFunc(Basis b = Basis::Powersum) : basis_(b) {}

    static SymFunc zero(Basis b) { return SymFunc(b); }
    static SymFunc one(Basis b);
    // Single basis element with coefficient 1.
    static SymFunc generator(Basis b, const Partition& lambda);

    Basis basis() const { return basis_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    QtRational coeff(const Partition& lambda) const;
    void set_coeff(const Partition& lambda, const QtRational& c);
    void add_coeff(const Partition& lambda, const QtRational& c);

    bool is_zero() const { return coeffs_.empty(); }
    long max_weight() const;
    bool is_homogeneous() const;
    SymFunc homogeneous_component(long w) const;
    std::vector<long> weights() const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);   // requires same basis
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

    SymFunc scaled(const QtRational& c) const;
    SymFunc scaled(const Rat& c) const;      // cheap path, no re-reduction

    // Structural equality: same basis, identical canonical coefficients.
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string to_string() const;

private:
    Basis basis_;
    CoeffMap coeffs_;
};

// Exact change of basis; round-trips are the identity degree by degree.
SymFunc convert(const SymFunc& f, Basis target);

// Equality as ring elements (converts through the powersum basis).
bool equal_elements(const SymFunc& a, const SymFunc& b);

// Product in Lambda_F; computed in the powersum basis, returned in the
// basis of the left factor.
SymFunc mul(const SymFunc& f, const SymFunc& g);
SymFunc power(const SymFunc& f, long e);

// z_lambda = prod i^{m_i} m_i!  and  z_lambda(q,t) = z_lambda *
// prod (1-q^{lambda_i})/(1-t^{lambda_i}).
Rat z_int(const Partition& lambda);
QtRational zqt_weight(const Partition& lambda);

// <p_lambda, p_mu>_{q,t} = delta z_lambda(q,t), extended bilinearly.
QtRational inner_qt(const SymFunc& f, const SymFunc& g);
// Classical Hall pairing, weight z_lambda.
QtRational inner_hall(const SymFunc& f, const SymFunc& g);

// Plethysm f o g.  Convention: p_k acts on coefficients by q -> q^k,
// t -> t^k and on powersums by p_m -> p_{km}.  Returned in f's basis.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// Kronecker product: p_lambda * p_mu = delta z_lambda p_lambda.
SymFunc internal_product(const SymFunc& f, const SymFunc& g);

enum class AlphabetTransform {
    QtTwist,          // p_k -> ((1-q^k)/(1-t^k)) p_k      (x -> (1-q)x/(1-t))
    QtTwistInverse,   // p_k -> ((1-t^k)/(1-q^k)) p_k
    OverOneMinusQ,    // p_k -> p_k/(1-q^k)                (x -> x/(1-q))
    OverOneMinusT     // p_k -> p_k/(1-t^k)                (x -> x/(1-t))
};

SymFunc transform_alphabet(const SymFunc& f, AlphabetTransform kind);

// Evaluate on the alphabet 1, t, ..., t^{l-1}: p_k -> (1-t^{kl})/(1-t^k);
// with divide_by_one_minus_q, p_k -> (1-t^{kl})/((1-t^k)(1-q^k)).
QtRational principal_specialize(const SymFunc& f, long l, bool divide_by_one_minus_q = false);

// Pieri multiplier g'_r = sum_{|lambda|=r} z_lambda(q,t)^{-1} p_lambda
// (untwisted; qt_twist of it equals h_r).
SymFunc g_prime(long r);

} // namespace mackit

#endif
