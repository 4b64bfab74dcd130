#include "mackit/macdonald.hpp"

#include <algorithm>
#include <map>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace mackit {

MacdonaldKind macdonald_kind_from_string(const std::string& s) {
    if (s == "P") return MacdonaldKind::P;
    if (s == "Q") return MacdonaldKind::Q;
    if (s == "Qprime" || s == "Q'") return MacdonaldKind::Qprime;
    if (s == "J") return MacdonaldKind::J;
    if (s == "Htilde" || s == "H~") return MacdonaldKind::Htilde;
    throw InvalidArgument("unknown Macdonald family '" + s + "'");
}

std::string macdonald_kind_name(MacdonaldKind k) {
    switch (k) {
        case MacdonaldKind::P: return "P";
        case MacdonaldKind::Q: return "Q";
        case MacdonaldKind::Qprime: return "Qprime";
        case MacdonaldKind::J: return "J";
        case MacdonaldKind::Htilde: return "Htilde";
    }
    return "?";
}

KostkaVariant kostka_variant_from_string(const std::string& s) {
    if (s == "K") return KostkaVariant::K;
    if (s == "Ktilde" || s == "K~") return KostkaVariant::Ktilde;
    if (s == "Kprime" || s == "K'") return KostkaVariant::Kprime;
    throw InvalidArgument("unknown Kostka variant '" + s + "'");
}

std::string kostka_variant_name(KostkaVariant v) {
    switch (v) {
        case KostkaVariant::K: return "K";
        case KostkaVariant::Ktilde: return "Ktilde";
        case KostkaVariant::Kprime: return "Kprime";
    }
    return "?";
}

namespace {

struct PEntry {
    SymFunc P_m{Basis::Monomial};
    SymFunc P_p{Basis::Powersum};
    SymFunc Pz_p{Basis::Powersum};  // coefficientwise z_rho(q,t)-weighted copy of P_p
    QtRational norm;
};

struct MacCache {
    std::mutex mu;
    std::map<Partition, std::shared_ptr<const PEntry>, PartitionLess> P;
    std::map<Partition, std::shared_ptr<const SymFunc>, PartitionLess> Qprime;
    std::map<Partition, std::shared_ptr<const SymFunc>, PartitionLess> Htilde;
    std::map<std::pair<int, long>, std::shared_ptr<const KostkaMatrix>> kostka;
    std::set<long> loaded_weights;
    std::set<long> dirty_weights;
    MacdonaldStore* store = nullptr;
};

MacCache& cache() {
    static MacCache c;
    return c;
}

// Balanced sum: pairwise adds on operands of comparable size keep the
// fraction arithmetic (and its gcds) small.
QtRational tree_sum(std::vector<QtRational>& terms) {
    if (terms.empty()) return QtRational(0);
    size_t n = terms.size();
    while (n > 1) {
        size_t out = 0;
        for (size_t i = 0; i + 1 < n; i += 2) terms[out++] = terms[i] + terms[i + 1];
        if (n & 1) terms[out++] = terms[n - 1];
        n = out;
    }
    return terms.front();
}

// Inner product of two powersum-basis elements (no conversion).
QtRational inner_qt_p(const SymFunc& f, const SymFunc& g) {
    std::vector<QtRational> terms;
    for (const auto& [p, cf] : f.coeffs()) {
        QtRational cg = g.coeff(p);
        if (cg.is_zero()) continue;
        terms.push_back(cf * cg * zqt_weight(p));
    }
    return tree_sum(terms);
}

SymFunc z_weighted(const SymFunc& f_p) {
    SymFunc out(Basis::Powersum);
    for (const auto& [rho, c] : f_p.coeffs()) out.set_coeff(rho, c * zqt_weight(rho));
    return out;
}

// <f, g>_{q,t} where f has rational-number coefficients and gz is already
// z-weighted: a sum of scaled, pre-reduced fractions.
QtRational inner_qt_const_side(const SymFunc& f_p, const SymFunc& gz_p) {
    std::vector<QtRational> terms;
    for (const auto& [rho, c] : f_p.coeffs()) {
        QtRational v = gz_p.coeff(rho);
        if (v.is_zero()) continue;
        v.scale(c.as_rat());
        terms.push_back(std::move(v));
    }
    return tree_sum(terms);
}

void load_weight_from_store(MacCache& c, long w) {
    if (!c.store || c.loaded_weights.count(w)) return;
    c.loaded_weights.insert(w);
    std::vector<MacdonaldStore::PRecord> recs;
    if (!c.store->load_P(w, recs)) return;
    for (auto& [lam, pm, norm] : recs) {
        if (c.P.count(lam)) continue;
        auto e = std::make_shared<PEntry>();
        e->P_m = pm;
        e->P_p = convert(pm, Basis::Powersum);
        e->Pz_p = z_weighted(e->P_p);
        e->norm = norm;
        c.P.emplace(lam, std::move(e));
    }
}

std::shared_ptr<const PEntry> p_entry(const Partition& lambda);

std::shared_ptr<const PEntry> compute_p_entry(const Partition& lambda) {
    const long w = lambda.weight();
    auto e = std::make_shared<PEntry>();
    // Gram-Schmidt against the P's of the strict dominance down-set; the
    // triangular structure makes projections outside the down-set vanish.
    // Since the P_mu are pairwise orthogonal, projecting the original m_lambda
    // gives the same coefficients as projecting the running vector.
    SymFunc m_p = convert(SymFunc::generator(Basis::Monomial, lambda), Basis::Powersum);
    SymFunc acc = m_p;
    if (w > 0) {
        std::vector<std::pair<std::shared_ptr<const PEntry>, QtRational>> proj;
        for (const auto& mu : partitions_of(w)) {
            if (mu == lambda || !dominance_leq(mu, lambda)) continue;
            auto em = p_entry(mu);
            QtRational c = inner_qt_const_side(m_p, em->Pz_p);
            if (c.is_zero()) continue;
            c /= em->norm;
            proj.emplace_back(std::move(em), std::move(c));
        }
        // Assemble each powersum coordinate with a balanced sum.
        std::map<Partition, std::vector<QtRational>, PartitionLess> sums;
        for (const auto& [em, c] : proj) {
            for (const auto& [rho, v] : em->P_p.coeffs()) sums[rho].push_back(c * v);
        }
        for (auto& [rho, terms] : sums) acc.add_coeff(rho, -tree_sum(terms));
    }
    e->P_p = acc;
    e->P_m = convert(acc, Basis::Monomial);
    e->Pz_p = z_weighted(acc);
    // <P,P> = <P, m_lambda> by orthogonality to the lower P's.
    e->norm = inner_qt_const_side(m_p, e->Pz_p);
    return e;
}

std::shared_ptr<const PEntry> p_entry(const Partition& lambda) {
    MacCache& c = cache();
    {
        std::lock_guard<std::mutex> lk(c.mu);
        load_weight_from_store(c, lambda.weight());
        auto it = c.P.find(lambda);
        if (it != c.P.end()) return it->second;
    }
    auto e = compute_p_entry(lambda);
    std::lock_guard<std::mutex> lk(c.mu);
    auto [it, inserted] = c.P.emplace(lambda, std::move(e));
    if (inserted) c.dirty_weights.insert(lambda.weight());
    return it->second;
}

} // namespace

SymFunc macdonald_P(const Partition& lambda) { return p_entry(lambda)->P_m; }

QtRational macdonald_P_norm(const Partition& lambda) { return p_entry(lambda)->norm; }

SymFunc macdonald_Q(const Partition& lambda) {
    auto e = p_entry(lambda);
    return e->P_m.scaled(e->norm.inverse());
}

SymFunc macdonald_Qprime(const Partition& lambda) {
    MacCache& c = cache();
    {
        std::lock_guard<std::mutex> lk(c.mu);
        auto it = c.Qprime.find(lambda);
        if (it != c.Qprime.end()) return *it->second;
    }
    auto e = p_entry(lambda);
    SymFunc qp = transform_alphabet(e->P_p.scaled(e->norm.inverse()), AlphabetTransform::QtTwist);
    auto res = std::make_shared<const SymFunc>(convert(qp, Basis::Schur));
    std::lock_guard<std::mutex> lk(c.mu);
    return *c.Qprime.emplace(lambda, std::move(res)).first->second;
}

SymFunc macdonald_J(const Partition& lambda) {
    auto e = p_entry(lambda);
    return e->P_m.scaled(integral_constants(lambda).c);
}

SymFunc macdonald_Htilde(const Partition& mu) {
    MacCache& c = cache();
    {
        std::lock_guard<std::mutex> lk(c.mu);
        auto it = c.Htilde.find(mu);
        if (it != c.Htilde.end()) return *it->second;
    }
    // t^{n(mu)} J_mu(x / (1 - t^{-1}); q, t^{-1}), kept exact in Q(q,t):
    // substitute t -> 1/t in every coefficient, apply
    // p_k -> p_k / (1 - t^{-k}) = -t^k/(1-t^k) p_k, then scale by t^{n(mu)}.
    auto e = p_entry(mu);
    SymFunc jp = e->P_p.scaled(integral_constants(mu).c);
    SymFunc out(Basis::Powersum);
    for (const auto& [rho, coeff] : jp.coeffs()) {
        QtRational v = coeff.subst_t_inverse();
        for (long k : rho.parts()) {
            v *= QtRational(-QtPolynomial::t(k), QtPolynomial::one_minus(0, k));
        }
        out.add_coeff(rho, v);
    }
    out = out.scaled(QtRational(QtPolynomial::t(mu.n_stat())));
    SymFunc hs = convert(out, Basis::Schur);
    for (const auto& [lam, coeff] : hs.coeffs()) {
        if (!coeff.is_polynomial())
            throw NonPolynomialResult("Htilde" + mu.to_string() + ": coefficient of s" +
                                      lam.to_string() + " is " + coeff.to_string());
    }
    auto res = std::make_shared<const SymFunc>(std::move(hs));
    std::lock_guard<std::mutex> lk(c.mu);
    return *c.Htilde.emplace(mu, std::move(res)).first->second;
}

SymFunc macdonald(MacdonaldKind kind, const Partition& lambda) {
    switch (kind) {
        case MacdonaldKind::P: return macdonald_P(lambda);
        case MacdonaldKind::Q: return macdonald_Q(lambda);
        case MacdonaldKind::Qprime: return macdonald_Qprime(lambda);
        case MacdonaldKind::J: return macdonald_J(lambda);
        case MacdonaldKind::Htilde: return macdonald_Htilde(lambda);
    }
    throw InvalidArgument("macdonald: bad kind");
}

IntegralConstants integral_constants(const Partition& mu) {
    QtPolynomial c(1), cp(1);
    for (const Cell& s : mu.cells()) {
        CellStats st = mu.cell_stats(s);
        c *= QtPolynomial::one_minus(st.arm, st.leg + 1);
        cp *= QtPolynomial::one_minus(st.arm + 1, st.leg);
    }
    return IntegralConstants{QtRational(c), QtRational(cp)};
}

namespace {

SymFunc kostka_column(KostkaVariant variant, const Partition& mu) {
    switch (variant) {
        case KostkaVariant::K: {
            SymFunc col = convert(
                transform_alphabet(macdonald_J(mu), AlphabetTransform::OverOneMinusT),
                Basis::Schur);
            for (const auto& [lam, coeff] : col.coeffs()) {
                if (!coeff.is_polynomial())
                    throw NonPolynomialResult("K" + mu.to_string() + " entry at s" +
                                              lam.to_string() + ": " + coeff.to_string());
            }
            return col;
        }
        case KostkaVariant::Ktilde:
            return macdonald_Htilde(mu);  // polynomiality asserted there
        case KostkaVariant::Kprime:
            return macdonald_Qprime(mu);
    }
    throw InvalidArgument("kostka_column: bad variant");
}

} // namespace

KostkaMatrix kostka(KostkaVariant variant, long weight) {
    if (weight < 1) throw InvalidArgument("kostka: weight must be >= 1");
    MacCache& c = cache();
    const std::pair<int, long> key{static_cast<int>(variant), weight};
    {
        std::lock_guard<std::mutex> lk(c.mu);
        auto it = c.kostka.find(key);
        if (it != c.kostka.end()) return *it->second;
        if (c.store) {
            KostkaMatrix m;
            if (c.store->load_kostka(variant, weight, m)) {
                auto sp = std::make_shared<const KostkaMatrix>(std::move(m));
                return *c.kostka.emplace(key, std::move(sp)).first->second;
            }
        }
    }
    KostkaMatrix m;
    m.variant = variant;
    m.weight = weight;
    m.rows = partitions_of(weight);
    m.cols = m.rows;
    m.entries.assign(m.rows.size(), std::vector<QtRational>(m.cols.size(), QtRational(0)));
    for (size_t j = 0; j < m.cols.size(); ++j) {
        SymFunc col = kostka_column(variant, m.cols[j]);
        for (size_t i = 0; i < m.rows.size(); ++i) m.entries[i][j] = col.coeff(m.rows[i]);
    }
    auto sp = std::make_shared<const KostkaMatrix>(std::move(m));
    std::lock_guard<std::mutex> lk(c.mu);
    auto [it, inserted] = c.kostka.emplace(key, std::move(sp));
    if (inserted && c.store) c.store->store_kostka(*it->second);
    return *it->second;
}

QtRational kostka_entry(KostkaVariant variant, const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw WeightMismatch("kostka_entry: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
    return kostka_column(variant, mu).coeff(lambda);
}

namespace {

QtRational b_factor(const Partition& nu, const Cell& s) {
    CellStats st = nu.cell_stats(s);
    return QtRational(QtPolynomial::one_minus(st.arm, st.leg + 1),
                      QtPolynomial::one_minus(st.arm + 1, st.leg));
}

} // namespace

QtRational pieri_psi(const Partition& lambda, const Partition& mu) {
    if (!is_horizontal_strip(lambda, mu))
        throw NotAHorizontalStrip(lambda.to_string() + "/" + mu.to_string());
    HorizontalStrip strip(lambda, mu);
    QtRational psi(1);
    for (const Cell& s : strip_D_set(strip)) {
        psi *= b_factor(mu, s) / b_factor(lambda, s);
    }
    return psi;
}

QtRational pieri_psi_modified(const Partition& lambda, const Partition& mu) {
    return pieri_psi(lambda, mu) * integral_constants(mu).cprime /
           integral_constants(lambda).cprime;
}

QtRational green_polynomial(const Partition& mu, const Partition& rho) {
    if (mu.weight() != rho.weight())
        throw WeightMismatch("green_polynomial: |" + mu.to_string() + "| != |" + rho.to_string() + "|");
    return inner_hall(macdonald_Htilde(mu), SymFunc::generator(Basis::Powersum, rho));
}

void precompute_macdonald_weight(long weight, int jobs) {
    const auto& parts = partitions_of(weight);
    if (jobs <= 1) {
        for (const auto& lam : parts) p_entry(lam);
        return;
    }
    // Work from the bottom of the dominance order upward so dependencies are
    // usually already cached; duplicated computation is harmless.
    std::vector<Partition> order(parts.rbegin(), parts.rend());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= order.size()) return;
            p_entry(order[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

void set_macdonald_store(MacdonaldStore* store) {
    MacCache& c = cache();
    std::lock_guard<std::mutex> lk(c.mu);
    c.store = store;
    c.loaded_weights.clear();
}

void flush_macdonald_store() {
    MacCache& c = cache();
    std::lock_guard<std::mutex> lk(c.mu);
    if (!c.store) return;
    for (long w : c.dirty_weights) {
        std::vector<MacdonaldStore::PRecord> recs;
        for (const auto& [lam, e] : c.P) {
            if (lam.weight() == w) recs.emplace_back(lam, e->P_m, e->norm);
        }
        if (!recs.empty()) c.store->store_P(w, recs);
    }
    c.dirty_weights.clear();
}

void clear_macdonald_memory() {
    MacCache& c = cache();
    std::lock_guard<std::mutex> lk(c.mu);
    c.P.clear();
    c.Qprime.clear();
    c.Htilde.clear();
    c.kostka.clear();
    c.loaded_weights.clear();
    c.dirty_weights.clear();
}

} // namespace mackit
