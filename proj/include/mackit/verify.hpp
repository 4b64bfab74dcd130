#ifndef MACKIT_VERIFY_HPP
#define MACKIT_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "mackit/roots_unity.hpp"

namespace mackit {

enum class Suite {
    Plethysm,
    Factorization,
    Congruence,
    KostkaCongruence,
    Pieri,
    Orthogonality,
    All,
};

Suite suite_from_string(const std::string& s);
std::string suite_name(Suite s);

// Per-suite weight budgets; a nonpositive override keeps the default.
struct VerifyBudget {
    long plethysm = 6;          // r*l bound for rectangle claims
    long factorization = 8;     // |mu| bound
    long congruence = 6;        // r*l bound
    long kostka = 8;            // l*|nu| bound
    long pieri = 7;             // |mu| + r bound
    long orthogonality = 6;     // weight bound
    long principal = 5;         // weight bound for Prop 3.1
    static VerifyBudget with_override(long budget);
};

struct Claim {
    std::string description;
    std::function<VerificationReport()> run;
};

// Deterministic enumeration of the claim instances of a suite.
std::vector<Claim> enumerate_suite(Suite suite, const VerifyBudget& budget);

// Run claims (optionally across threads); reports keep enumeration order.
std::vector<VerificationReport> run_claims(const std::vector<Claim>& claims, int jobs = 1);

} // namespace mackit

#endif
