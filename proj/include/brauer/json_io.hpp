#pragma once

#include <nlohmann/json.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/analysis.hpp"
#include "brauer/central.hpp"
#include "brauer/rational_function.hpp"
#include "brauer/solver.hpp"

namespace brauer {

// Key order is part of the emitted byte format, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

class JsonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace jsonio {

/// Integers are emitted as JSON numbers when they fit in 64 bits, as decimal
/// strings otherwise; both forms are accepted on input.
inline Json bigint_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return Json(static_cast<long long>(v));
    return Json(v.str());
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw JsonError("expected integer or integer string");
}

inline Json poly_to_json(const Polynomial& p) {
    Json arr = Json::array();
    if (p.is_zero()) {
        arr.push_back(0);
        return arr;
    }
    for (const BigInt& c : p.coeffs()) arr.push_back(bigint_to_json(c));
    return arr;
}

inline Polynomial poly_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw JsonError("polynomial: expected non-empty array");
    std::vector<BigInt> cs;
    for (const auto& e : j) cs.push_back(bigint_from_json(e));
    return Polynomial(std::move(cs));
}

inline Json to_json(const RationalFunction& f) {
    Json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

inline RationalFunction rf_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw JsonError("coefficient: expected {\"num\": [...], \"den\": [...]}");
    return RationalFunction(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

inline Json to_json(const CentralElement& x) {
    Json j;
    j["n"] = x.n();
    Json terms = Json::array();
    for (const auto& [t, c] : x.terms()) {  // map order == canonical tableau order
        Json term;
        term["tableau"] = t.rows();
        term["coeff"] = to_json(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline CentralElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw JsonError("element: expected {\"n\": ..., \"terms\": [...]}");
    int n = j["n"].get<int>();
    if (n < 1) throw JsonError("element: bad n");
    CentralElement x(n);
    for (const auto& term : j["terms"]) {
        if (!term.contains("tableau") || !term.contains("coeff"))
            throw JsonError("element term: expected tableau and coeff");
        std::vector<std::string> rows = term["tableau"].get<std::vector<std::string>>();
        SporeTableau t = SporeTableau::from_rows(rows);
        if (t.n() != n) throw JsonError("element term: tableau size differs from n");
        if (!is_realizable(t))
            throw JsonError("element term: tableau " + t.str() + " is not a diagram class");
        x.add(t, rf_from_json(term["coeff"]));
    }
    return x;
}

inline Json to_json(const PoleReport& rep) {
    Json j;
    Json poles = Json::array();
    for (const auto& p : rep.poles) poles.push_back(p.str());
    j["poles"] = std::move(poles);
    Json by = Json::object();
    for (const auto& [t, ps] : rep.by_class) {
        Json arr = Json::array();
        for (const auto& p : ps) arr.push_back(p.str());
        by[t.str()] = std::move(arr);
    }
    j["byClass"] = std::move(by);
    Json mp = Json::object();
    for (const auto& [p, prop] : rep.max_prop_at_pole) mp[p.str()] = prop;
    j["maxPropAtPole"] = std::move(mp);
    return j;
}

inline Json to_json(const SplitSystem& sys) {
    Json j;
    j["n"] = sys.n;
    j["ell"] = sys.ell;
    j["mode"] = sys.mode == SystemMode::full ? "full" : "reduced";
    Json unknowns = Json::array();
    for (const auto& t : sys.unknowns) unknowns.push_back(t.rows());
    j["unknowns"] = std::move(unknowns);
    Json rows = Json::array();
    for (const auto& r : sys.rows) {
        Json row;
        row["witness"] = r.witness.str();
        Json cs = Json::array();
        for (const auto& c : r.coeffs) cs.push_back(to_json(c));
        row["coeffs"] = std::move(cs);
        row["rhs"] = to_json(r.rhs);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

/// The one emission format used everywhere: 2-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace jsonio

/// Human-readable listing: one "tableau  coefficient" line per term.
inline std::string element_text(const CentralElement& x) {
    std::string out = "n = " + std::to_string(x.n()) + "\n";
    for (const auto& [t, c] : x.terms()) out += "[" + t.str() + "]  " + c.str() + "\n";
    return out;
}

}  // namespace brauer
