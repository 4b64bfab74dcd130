#ifndef MACKIT_JSON_IO_HPP
#define MACKIT_JSON_IO_HPP

#include <json.hpp>

#include "mackit/macdonald.hpp"
#include "mackit/roots_unity.hpp"

namespace mackit {

// Deterministic JSON: objects keep insertion order, terms follow the
// canonical orders fixed by the library (lex monomials; weight then
// reverse-lex partitions).
using Json = nlohmann::ordered_json;

Json to_json(const QtPolynomial& p);     // [{qexp, texp, num, den}...]
Json to_json(const QtRational& f);       // {num: [...], den: [...]}
Json to_json(const Partition& p);        // [3,1,1]
Json to_json(const SymFunc& f);          // {basis, terms: [{part, coeff}...]}
Json to_json(const CyclotomicScalar& c); // {order, coeffs: [ratfun...]}
Json to_json(const CyclotomicSymFunc& f);
Json to_json(const KostkaMatrix& m);
Json to_json(const VerificationReport& r);

QtPolynomial polynomial_from_json(const Json& j);
QtRational rational_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);
KostkaMatrix kostka_from_json(const Json& j);

} // namespace mackit

#endif
