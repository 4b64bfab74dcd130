#include "mackit/verify.hpp"

#include <atomic>
#include <thread>

namespace mackit {

Suite suite_from_string(const std::string& s) {
    if (s == "plethysm") return Suite::Plethysm;
    if (s == "factorization") return Suite::Factorization;
    if (s == "congruence") return Suite::Congruence;
    if (s == "kostka-congruence") return Suite::KostkaCongruence;
    if (s == "pieri") return Suite::Pieri;
    if (s == "orthogonality") return Suite::Orthogonality;
    if (s == "all") return Suite::All;
    throw InvalidArgument("unknown verification suite '" + s + "'");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Plethysm: return "plethysm";
        case Suite::Factorization: return "factorization";
        case Suite::Congruence: return "congruence";
        case Suite::KostkaCongruence: return "kostka-congruence";
        case Suite::Pieri: return "pieri";
        case Suite::Orthogonality: return "orthogonality";
        case Suite::All: return "all";
    }
    return "?";
}

VerifyBudget VerifyBudget::with_override(long budget) {
    VerifyBudget b;
    if (budget > 0) {
        b.plethysm = budget;
        b.factorization = budget;
        b.congruence = budget;
        b.kostka = budget;
        b.pieri = budget;
        b.orthogonality = budget;
        b.principal = std::min(budget, 5L);
    }
    return b;
}

namespace {

void add_plethysm(std::vector<Claim>& out, const VerifyBudget& budget) {
    for (long l = 1; l <= budget.plethysm; ++l) {
        for (long r = 1; r * l <= budget.plethysm; ++r) {
            for (long d = 1; d <= l; ++d) {
                if (l % d != 0) continue;
                out.push_back(Claim{"Qprime rectangle r=" + std::to_string(r) + " l=" +
                                        std::to_string(l) + " d=" + std::to_string(d),
                                    [r, l, d] { return verify_rectangular_plethysm(r, l, d); }});
                out.push_back(Claim{"Htilde rectangle r=" + std::to_string(r) + " l=" +
                                        std::to_string(l) + " d=" + std::to_string(d),
                                    [r, l, d] { return verify_htilde_rectangular(r, l, d); }});
            }
        }
    }
    // Cor 5.3 special cases nu^l for small nu.
    for (long l = 2; l <= 3; ++l) {
        for (long w = 1; w <= 3 && w * l <= budget.plethysm + 2; ++w) {
            for (const auto& nu : partitions_of(w)) {
                out.push_back(Claim{"Qprime nu-rectangle nu=" + nu.to_string() + " l=" +
                                        std::to_string(l),
                                    [nu, l] { return verify_nu_rectangle(nu, l); }});
            }
        }
    }
    // Lemma 3.4 constants.
    for (long r = 1; r <= 3; ++r)
        for (long l = 1; l <= 4; ++l)
            out.push_back(Claim{"cprime constant r=" + std::to_string(r) + " l=" + std::to_string(l),
                                [r, l] { return verify_cprime_constant(r, l); }});
    // Cor 3.2 vanishing dichotomy.
    for (long l = 2; l <= 3; ++l) {
        for (long w = 0; w <= std::min(budget.orthogonality, 6L); ++w) {
            for (const auto& lam : partitions_of(w)) {
                if (lam.length() > l) continue;
                out.push_back(Claim{"principal vanishing lambda=" + lam.to_string() + " l=" +
                                        std::to_string(l),
                                    [lam, l] { return verify_principal_vanishing(lam, l); }});
            }
        }
    }
    // Prop 3.1 exact product formula.
    for (long w = 1; w <= budget.principal; ++w) {
        for (const auto& lam : partitions_of(w)) {
            for (long l = lam.length(); l <= 4; ++l) {
                if (l < 1) continue;
                out.push_back(Claim{"principal product lambda=" + lam.to_string() + " l=" +
                                        std::to_string(l),
                                    [lam, l] { return verify_principal_product(lam, l); }});
            }
        }
    }
}

void add_factorization(std::vector<Claim>& out, const VerifyBudget& budget) {
    for (long w = 1; w <= budget.factorization; ++w) {
        for (const auto& mu : partitions_of(w)) {
            for (long l = 2; l <= 3; ++l) {
                out.push_back(Claim{"Qprime factorization mu=" + mu.to_string() + " l=" +
                                        std::to_string(l),
                                    [mu, l] { return verify_factorization(mu, l, MacdonaldKind::Qprime); }});
                if (w <= std::min(budget.factorization, 8L)) {
                    out.push_back(Claim{"Htilde factorization mu=" + mu.to_string() + " l=" +
                                            std::to_string(l),
                                        [mu, l] { return verify_factorization(mu, l, MacdonaldKind::Htilde); }});
                }
            }
        }
    }
}

void add_congruence(std::vector<Claim>& out, const VerifyBudget& budget) {
    for (long l = 1; l <= budget.congruence; ++l) {
        for (long r = 1; r * l <= budget.congruence; ++r) {
            out.push_back(Claim{"Qprime congruence r=" + std::to_string(r) + " l=" + std::to_string(l),
                                [r, l] { return verify_congruence_qprime(r, l); }});
            out.push_back(Claim{"Htilde congruence r=" + std::to_string(r) + " l=" + std::to_string(l),
                                [r, l] { return verify_congruence_htilde(r, l); }});
        }
    }
}

void add_kostka(std::vector<Claim>& out, const VerifyBudget& budget) {
    for (long l = 2; l <= budget.kostka; ++l) {
        for (long wn = 1; wn * l <= budget.kostka; ++wn) {
            for (const auto& nu : partitions_of(wn)) {
                for (const auto& mu : partitions_of(wn * l)) {
                    out.push_back(Claim{"Kostka congruence mu=" + mu.to_string() + " nu=" +
                                            nu.to_string() + " l=" + std::to_string(l),
                                        [mu, nu, l] { return verify_kostka_congruence(mu, nu, l); }});
                }
            }
        }
    }
}

void add_pieri(std::vector<Claim>& out, const VerifyBudget& budget) {
    for (long w = 0; w <= budget.pieri; ++w) {
        for (const auto& mu : partitions_of(w)) {
            for (long r = 0; w + r <= budget.pieri; ++r) {
                out.push_back(Claim{"pieri extraction mu=" + mu.to_string() + " r=" + std::to_string(r),
                                    [mu, r] { return verify_pieri_extraction(mu, r); }});
            }
        }
    }
    // Prop 4.2 psi invariance over horizontal strips.
    const long strip_budget = std::min(budget.pieri - 1, 6L);
    for (long w = 1; w <= strip_budget; ++w) {
        for (const auto& lam : partitions_of(w)) {
            for (long wm = 0; wm < w; ++wm) {
                for (const auto& mu : partitions_of(wm)) {
                    if (!is_horizontal_strip(lam, mu)) continue;
                    for (long r = 1; r <= 2; ++r) {
                        for (long l = 2; l <= 3; ++l) {
                            out.push_back(Claim{"psi invariance " + lam.to_string() + "/" +
                                                    mu.to_string() + " r=" + std::to_string(r) +
                                                    " l=" + std::to_string(l),
                                                [lam, mu, r, l] {
                                                    return verify_psi_invariance(lam, mu, r, l);
                                                }});
                        }
                    }
                }
            }
        }
    }
}

void add_orthogonality(std::vector<Claim>& out, const VerifyBudget& budget) {
    for (long w = 1; w <= budget.orthogonality; ++w) {
        out.push_back(Claim{"orthogonality weight " + std::to_string(w),
                            [w] { return verify_orthogonality(w); }});
        out.push_back(Claim{"duality weight " + std::to_string(w),
                            [w] { return verify_duality(w); }});
        out.push_back(Claim{"cauchy weight " + std::to_string(w), [w] { return verify_cauchy(w); }});
        out.push_back(Claim{"integral form weight " + std::to_string(w),
                            [w] { return verify_integral_form_consistency(w); }});
    }
    for (long w = 1; w <= budget.principal; ++w) {
        out.push_back(Claim{"schur limit weight " + std::to_string(w),
                            [w] { return verify_schur_limit(w); }});
        out.push_back(Claim{"hall-littlewood limit weight " + std::to_string(w),
                            [w] { return verify_hall_littlewood_limit(w); }});
    }
}

} // namespace

std::vector<Claim> enumerate_suite(Suite suite, const VerifyBudget& budget) {
    std::vector<Claim> out;
    switch (suite) {
        case Suite::Plethysm: add_plethysm(out, budget); break;
        case Suite::Factorization: add_factorization(out, budget); break;
        case Suite::Congruence: add_congruence(out, budget); break;
        case Suite::KostkaCongruence: add_kostka(out, budget); break;
        case Suite::Pieri: add_pieri(out, budget); break;
        case Suite::Orthogonality: add_orthogonality(out, budget); break;
        case Suite::All:
            add_orthogonality(out, budget);
            add_pieri(out, budget);
            add_plethysm(out, budget);
            add_factorization(out, budget);
            add_congruence(out, budget);
            add_kostka(out, budget);
            break;
    }
    return out;
}

std::vector<VerificationReport> run_claims(const std::vector<Claim>& claims, int jobs) {
    std::vector<VerificationReport> out(claims.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < claims.size(); ++i) out[i] = claims[i].run();
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= claims.size()) return;
            out[i] = claims[i].run();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

} // namespace mackit
