#include "mackit/json_io.hpp"

namespace mackit {

Json to_json(const QtPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["qexp"] = m.qe;
        t["texp"] = m.te;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    return terms;
}

Json to_json(const QtRational& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (long v : p.parts()) j.push_back(v);
    return j;
}

Json to_json(const SymFunc& f) {
    Json j;
    j["basis"] = std::string(1, basis_code(f.basis()));
    Json terms = Json::array();
    for (const auto& [part, coeff] : f.coeffs()) {
        Json t;
        t["part"] = to_json(part);
        t["coeff"] = to_json(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const CyclotomicScalar& c) {
    Json j;
    j["order"] = c.order();
    Json coeffs = Json::array();
    for (const auto& v : c.coeffs()) coeffs.push_back(to_json(v));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const CyclotomicSymFunc& f) {
    Json j;
    j["basis"] = std::string(1, basis_code(f.basis()));
    j["order"] = f.order();
    Json terms = Json::array();
    for (const auto& [part, coeff] : f.coeffs()) {
        Json t;
        t["part"] = to_json(part);
        t["coeff"] = to_json(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const KostkaMatrix& m) {
    Json j;
    j["variant"] = kostka_variant_name(m.variant);
    j["weight"] = m.weight;
    Json rows = Json::array();
    for (const auto& p : m.rows) rows.push_back(to_json(p));
    Json cols = Json::array();
    for (const auto& p : m.cols) cols.push_back(to_json(p));
    j["rows"] = std::move(rows);
    j["cols"] = std::move(cols);
    Json entries = Json::array();
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["claim"] = r.claim;
    Json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["status"] = verify_status_name(r.status);
    Json witness = Json::array();
    for (const auto& w : r.witnesses) {
        Json wj;
        wj["partition"] = w.key;
        wj["lhs"] = w.lhs;
        wj["rhs"] = w.rhs;
        witness.push_back(std::move(wj));
    }
    j["witness"] = std::move(witness);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

QtPolynomial polynomial_from_json(const Json& j) {
    QtPolynomial p;
    for (const auto& t : j) {
        Rat c(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
        c.canonicalize();
        p.add_term(t.at("qexp").get<long>(), t.at("texp").get<long>(), c);
    }
    return p;
}

QtRational rational_from_json(const Json& j) {
    return QtRational(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

Partition partition_from_json(const Json& j) {
    std::vector<long> parts;
    for (const auto& v : j) parts.push_back(v.get<long>());
    return Partition(std::move(parts));
}

SymFunc symfunc_from_json(const Json& j) {
    SymFunc f(basis_from_code(j.at("basis").get<std::string>().at(0)));
    for (const auto& t : j.at("terms")) {
        f.set_coeff(partition_from_json(t.at("part")), rational_from_json(t.at("coeff")));
    }
    return f;
}

KostkaMatrix kostka_from_json(const Json& j) {
    KostkaMatrix m;
    m.variant = kostka_variant_from_string(j.at("variant").get<std::string>());
    m.weight = j.at("weight").get<long>();
    for (const auto& r : j.at("rows")) m.rows.push_back(partition_from_json(r));
    for (const auto& c : j.at("cols")) m.cols.push_back(partition_from_json(c));
    for (const auto& row : j.at("entries")) {
        std::vector<QtRational> out;
        for (const auto& e : row) out.push_back(rational_from_json(e));
        m.entries.push_back(std::move(out));
    }
    return m;
}

} // namespace mackit
