#ifndef MACKIT_ROOTS_UNITY_HPP
#define MACKIT_ROOTS_UNITY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mackit/cyclotomic.hpp"
#include "mackit/macdonald.hpp"
#include "mackit/symfunc.hpp"

namespace mackit {

long moebius(long n);
long euler_phi(long n);
// Ramanujan (Von Sterneck) sum c(k,d) = mu(d/g) phi(d) / phi(d/g), g = gcd(k,d):
// the sum of k-th powers of the primitive d-th roots of unity.
long ramanujan_sum(long k, long d);

// Frobenius characteristic l_k^{(j)} = (1/k) sum_{d|k} c(j,d) p_d^{k/d} of the
// S_k-representation induced from the cyclic character tau -> zeta_k^j.
struct CyclicCharacter {
    long k = 1;
    long j = 0;
    SymFunc frobenius{Basis::Powersum};
};
CyclicCharacter cyclic_character(long k, long j);

// Symmetric function with coefficients in Q(q)[t]/(Phi_l(t)).
class CyclotomicSymFunc {
public:
    using CoeffMap = std::map<Partition, CyclotomicScalar, PartitionLess>;

    CyclotomicSymFunc(long order, Basis b) : order_(order), basis_(b) {}

    long order() const { return order_; }
    Basis basis() const { return basis_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    CyclotomicScalar coeff(const Partition& p) const;
    void add_coeff(const Partition& p, const CyclotomicScalar& c);
    bool is_zero() const { return coeffs_.empty(); }

    CyclotomicSymFunc operator-() const;
    CyclotomicSymFunc& operator+=(const CyclotomicSymFunc& o);
    friend CyclotomicSymFunc operator+(CyclotomicSymFunc a, const CyclotomicSymFunc& b) { return a += b; }
    friend CyclotomicSymFunc operator-(CyclotomicSymFunc a, const CyclotomicSymFunc& b) { return a += -b; }

    friend bool operator==(const CyclotomicSymFunc& a, const CyclotomicSymFunc& b) {
        return a.order_ == b.order_ && a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    long order_;
    Basis basis_;
    CoeffMap coeffs_;
};

// Coefficientwise reduction into Q(q)[t]/(Phi_l(t)); basis preserved.
// NonInvertibleDenominator (with the offending partition named) when a
// coefficient denominator vanishes in the quotient.
CyclotomicSymFunc specialize_at_root(const SymFunc& f, long l);

// Change of basis (transition matrices have rational entries, so they act
// on cyclotomic coefficients directly).
CyclotomicSymFunc convert(const CyclotomicSymFunc& f, Basis target);

// Product, computed in the powersum basis.
CyclotomicSymFunc mul(const CyclotomicSymFunc& f, const CyclotomicSymFunc& g);
CyclotomicSymFunc power_cyc(const CyclotomicSymFunc& f, long e);

// --- verification reports -------------------------------------------------

enum class VerifyStatus { Pass, Fail, Undefined };

std::string verify_status_name(VerifyStatus s);

struct Witness {
    std::string key;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    VerifyStatus status = VerifyStatus::Pass;
    std::vector<Witness> witnesses;
    long elapsed_ms = 0;

    bool passed() const { return status == VerifyStatus::Pass; }
};

// Q'_{(r^l)}(x; q, zeta_d) = (-1)^{r l (d-1)/d} p_d^{l/d} o h_r, for d | l.
VerificationReport verify_rectangular_plethysm(long r, long l, long d);

// Htilde_{(r^l)}(x; q, zeta_d) = prod_{i<=r} (1-q^{id})^{l/d}
//   * p_d^{l/d} o h_r(x/(1-q)), for d | l.  (For d = l the constant is the
//   usual prod_{i<=r}(1-q^{il}).)
VerificationReport verify_htilde_rectangular(long r, long l, long d);

// Theorem 5.1 / Corollary 5.2 factorization at t = zeta_l for one family.
VerificationReport verify_factorization(const Partition& mu, long l, MacdonaldKind kind);

// Components of the congruence Q'_{(r^l)} mod Phi_l: the map j -> the
// symmetric function multiplying t^j.  The component at t^j is
// l_l^{(j + s)} o h_r with the index shift s = r l (l-1)/2 mod l
// (s = l/2 for odd r and even l, otherwise 0).
std::map<long, SymFunc> congruence_decomposition(long r, long l);
VerificationReport verify_congruence_qprime(long r, long l);
// Corollary 7.4: same decomposition for Htilde with constant prod (1-q^{il})
// on the alphabet x/(1-q).
VerificationReport verify_congruence_htilde(long r, long l);

// Cohen inversion (Lemma 7.3): from residues r_d (one per divisor d of n)
// to the coefficients a_0..a_{n-1} of the even-mod-n polynomial; throws
// NonIntegralResult when the a_k are not integers.
std::vector<Int> cohen_inversion(const std::map<long, long>& residues, long n);
// Inverse direction: r_d = sum_{t|n} c(n/d, t) a_{(n/t) mod n}.
std::map<long, long> cohen_residues(const std::vector<Int>& a, long n);

// Proposition 8.1, general form: K~_{mu, nu^l}(q,t) is congruent to
// prod_j prod_i (1-q^{il}) * (h_{l nu} * s_mu)^{(q)}(1,t,...,t^{l-1})
// modulo Phi_l(t); requires |mu| = l |nu|.
VerificationReport verify_kostka_congruence(const Partition& mu, const Partition& nu, long l);

// Corollary 3.2: principal specialization of P at t = zeta_l vanishes off
// rectangles (r^l) and equals (-1)^{(l-1)r} on them.
VerificationReport verify_principal_vanishing(const Partition& lambda, long l);

// Proposition 3.1: principal specialization product formula, exact in Q(q,t).
VerificationReport verify_principal_product(const Partition& lambda, long l);

// Lemma 3.4: c'_{(r^l)}(q, zeta_l) = prod_{i<=r}(1-q^{il}) (the sign-fixed
// form); the report notes the residual sign against the printed lemma.
VerificationReport verify_cprime_constant(long r, long l);

// Corollary 5.3: Q'_{nu^l} at zeta_l = (-1)^{(l-1)|nu|} p_l o h_nu.
VerificationReport verify_nu_rectangle(const Partition& nu, long l);

// Pieri (Eq. 7): coefficients extracted from Q'_mu * g'_r match the
// b-product formula for psi on horizontal strips, zero elsewhere.
VerificationReport verify_pieri_extraction(const Partition& mu, long r);

// Proposition 4.2: psi_{lambda u (r^l) / mu u (r^l)}(q, zeta) = psi_{lambda/mu}(q, zeta).
VerificationReport verify_psi_invariance(const Partition& lambda, const Partition& mu, long r, long l);

// Orthogonality / duality / Cauchy / Eq. 3 checks for one weight.
VerificationReport verify_orthogonality(long weight);
VerificationReport verify_duality(long weight);
VerificationReport verify_cauchy(long weight);
VerificationReport verify_integral_form_consistency(long weight);

// Sanity anchors: P at q=t equals Schur; P at q=0 is Hall-Littlewood
// unitriangular with polynomial coefficients.
VerificationReport verify_schur_limit(long weight);
VerificationReport verify_hall_littlewood_limit(long weight);

} // namespace mackit

#endif
