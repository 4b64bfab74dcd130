#ifndef MACKIT_MACDONALD_HPP
#define MACKIT_MACDONALD_HPP

#include <memory>
#include <tuple>
#include <vector>

#include "mackit/symfunc.hpp"

namespace mackit {

enum class MacdonaldKind { P, Q, Qprime, J, Htilde };

MacdonaldKind macdonald_kind_from_string(const std::string& s);
std::string macdonald_kind_name(MacdonaldKind k);

// Macdonald polynomial P_lambda(x; q, t), monomial basis: unitriangular
// over monomials in dominance order, pairwise orthogonal under <.,.>_{q,t}.
// Built by Gram-Schmidt restricted to the dominance down-set; cached.
SymFunc macdonald_P(const Partition& lambda);
// <P_lambda, P_lambda>_{q,t}; cached alongside P.
QtRational macdonald_P_norm(const Partition& lambda);

SymFunc macdonald_Q(const Partition& lambda);        // monomial basis
SymFunc macdonald_Qprime(const Partition& lambda);   // Schur basis (cached)
SymFunc macdonald_J(const Partition& lambda);        // monomial basis
SymFunc macdonald_Htilde(const Partition& lambda);   // Schur basis (cached)
SymFunc macdonald(MacdonaldKind kind, const Partition& lambda);

// c_mu = prod (1 - q^{a(s)} t^{l(s)+1}),  c'_mu = prod (1 - q^{a(s)+1} t^{l(s)}).
struct IntegralConstants {
    QtRational c;
    QtRational cprime;
};
IntegralConstants integral_constants(const Partition& mu);

enum class KostkaVariant { K, Ktilde, Kprime };

KostkaVariant kostka_variant_from_string(const std::string& s);
std::string kostka_variant_name(KostkaVariant v);

struct KostkaMatrix {
    KostkaVariant variant;
    long weight = 0;
    std::vector<Partition> rows;  // lambda, canonical order
    std::vector<Partition> cols;  // mu, canonical order
    std::vector<std::vector<QtRational>> entries;  // entries[i][j] = K_{rows[i], cols[j]}
};

// Full matrix for one weight.  K and Ktilde entries are asserted to be
// polynomials (NonPolynomialResult on violation); Kprime entries may be
// genuine rational functions.
KostkaMatrix kostka(KostkaVariant variant, long weight);
QtRational kostka_entry(KostkaVariant variant, const Partition& lambda, const Partition& mu);

// psi_{lambda/mu}(q,t) = prod_{s in D(lambda/mu)} b_mu(s)/b_lambda(s),
// b_nu(s) = (1 - q^{a_nu(s)} t^{l_nu(s)+1})/(1 - q^{a_nu(s)+1} t^{l_nu(s)}).
// Throws NotAHorizontalStrip when lambda/mu is not a horizontal strip.
QtRational pieri_psi(const Partition& lambda, const Partition& mu);
// Psi_{lambda/mu} = psi_{lambda/mu} * c'_mu / c'_lambda (integral-form Pieri).
QtRational pieri_psi_modified(const Partition& lambda, const Partition& mu);

// Green polynomial X^mu_rho(q,t) = <Htilde_mu, p_rho> (Hall pairing).
QtRational green_polynomial(const Partition& mu, const Partition& rho);

// Optional persistence hook (wired up by the CLI disk cache).
class MacdonaldStore {
public:
    virtual ~MacdonaldStore() = default;
    using PRecord = std::tuple<Partition, SymFunc, QtRational>;  // lambda, P (monomial), norm
    virtual bool load_P(long weight, std::vector<PRecord>& out) = 0;
    virtual void store_P(long weight, const std::vector<PRecord>& records) = 0;
    virtual bool load_kostka(KostkaVariant v, long weight, KostkaMatrix& out) = 0;
    virtual void store_kostka(const KostkaMatrix& m) = 0;
};

// Compute every P (and norm) of one weight, optionally across threads.
// Concurrent fills of the cache are idempotent.
void precompute_macdonald_weight(long weight, int jobs = 1);

void set_macdonald_store(MacdonaldStore* store);
// Write any newly computed entries back through the store.
void flush_macdonald_store();
// Drop all in-memory Macdonald caches (used by tests).
void clear_macdonald_memory();

} // namespace mackit

#endif
