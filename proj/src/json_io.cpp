#include "quivmod/json_io.hpp"

#include <charconv>

#include "quivmod/error.hpp"

namespace quivmod {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw InvalidInput("bad_input", what); }

std::vector<std::int64_t> int_array(const Json& doc, const char* key) {
    if (!doc.contains(key)) bad_input(std::string("missing field '") + key + "'");
    const Json& a = doc.at(key);
    if (!a.is_array()) bad_input(std::string("field '") + key + "' must be an array of integers");
    std::vector<std::int64_t> out;
    for (const Json& x : a) {
        if (!x.is_number_integer()) bad_input(std::string("field '") + key + "' must contain integers only");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

std::int64_t parse_power(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) bad_input("bad v-power key '" + s + "'");
    return v;
}

}  // namespace

ProblemSpec parse_problem(const Json& doc) {
    if (!doc.is_object()) bad_input("problem must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "vertices" && key != "arrows" && key != "dimension" && key != "stability" &&
            key != "deformed_stability" && key != "assume_nonempty") {
            bad_input("unknown field '" + key + "'");
        }
    }
    if (!doc.contains("arrows") || !doc.at("arrows").is_array()) bad_input("missing field 'arrows' (square matrix)");
    std::vector<std::vector<std::int64_t>> arrows;
    for (const Json& row : doc.at("arrows")) {
        if (!row.is_array()) bad_input("'arrows' rows must be arrays");
        std::vector<std::int64_t> r;
        for (const Json& x : row) {
            if (!x.is_number_integer()) bad_input("'arrows' entries must be integers");
            r.push_back(x.get<std::int64_t>());
        }
        arrows.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (doc.contains("vertices")) {
        if (!doc.at("vertices").is_array()) bad_input("'vertices' must be an array of strings");
        for (const Json& v : doc.at("vertices")) {
            if (!v.is_string()) bad_input("'vertices' must be an array of strings");
            names.push_back(v.get<std::string>());
        }
    } else {
        for (std::size_t i = 1; i <= arrows.size(); ++i) names.push_back("v" + std::to_string(i));
    }

    ProblemSpec spec;
    spec.quiver = Quiver(std::move(names), std::move(arrows));
    spec.d = DimVector(int_array(doc, "dimension"));
    spec.theta = Stability(int_array(doc, "stability"));
    check_size(spec.quiver, spec.d);
    check_size(spec.quiver, spec.theta);
    if (doc.contains("deformed_stability") && !doc.at("deformed_stability").is_null()) {
        spec.theta_prime = Stability(int_array(doc, "deformed_stability"));
        check_size(spec.quiver, *spec.theta_prime);
    }
    if (doc.contains("assume_nonempty")) {
        if (!doc.at("assume_nonempty").is_boolean()) bad_input("'assume_nonempty' must be a boolean");
        spec.assume_nonempty = doc.at("assume_nonempty").get<bool>();
    }
    return spec;
}

ProblemSpec parse_problem(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput("json_parse_error", e.what());
    }
    return parse_problem(doc);
}

ProblemSpec problem_from_example(const Example& ex) {
    return {ex.quiver, ex.d, ex.theta, ex.theta_prime, ex.assume_nonempty};
}

Json problem_to_json(const ProblemSpec& spec) {
    Json j = to_json(spec.quiver);
    j["dimension"] = to_json(spec.d);
    j["stability"] = to_json(spec.theta);
    if (spec.theta_prime) j["deformed_stability"] = to_json(*spec.theta_prime);
    j["assume_nonempty"] = spec.assume_nonempty;
    return j;
}

Json to_json(const HalfLaurent& p) {
    Json powers = Json::object();
    for (const auto& [k, c] : p.terms()) powers[std::to_string(k)] = rational_string(c);
    return {{"v_powers", powers}, {"pretty", p.pretty()}};
}

HalfLaurent laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("v_powers") || !j.at("v_powers").is_object()) bad_input("expected {\"v_powers\": {...}}");
    HalfLaurent::Terms terms;
    for (const auto& [k, c] : j.at("v_powers").items()) {
        if (!c.is_string()) bad_input("coefficients must be rational strings");
        const Rational r = parse_rational(c.get<std::string>());
        if (r != 0) terms[parse_power(k)] = r;
    }
    return HalfLaurent(std::move(terms));
}

Json to_json(const RatFunc& r) {
    return {{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}, {"pretty", r.pretty()}};
}

RatFunc ratfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad_input("expected {\"num\": ..., \"den\": ...}");
    return RatFunc::fraction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json to_json(const DimVector& d) { return d.coords(); }
Json to_json(const Stability& s) { return s.weights(); }

Json to_json(const Quiver& q) { return {{"vertices", q.vertices()}, {"arrows", q.arrow_matrix()}}; }

Json to_json(const HalfInt& h) { return h.to_string(); }

Json to_json(const LunaType& xi) {
    Json parts = Json::array();
    for (const auto& p : xi.parts) parts.push_back({{"part", to_json(p.part)}, {"multiplicity", p.multiplicity}});
    return {{"type", xi.to_string()}, {"parts", parts}, {"trivial", xi.is_trivial()}};
}

Json to_json(const LocalQuiver& lq) {
    Json j = to_json(lq.quiver);
    j["dimension"] = to_json(lq.d);
    j["stability"] = to_json(lq.theta);
    return j;
}

Json to_json(const DeformationCheck& c) {
    Json v = Json::array();
    for (const auto& x : c.violations) v.push_back({{"e", to_json(x.e)}, {"condition", x.condition}});
    return {{"passes", c.passes}, {"violations", v}};
}

Json to_json(const SmallnessReport& r) {
    Json hyp = Json::object();
    for (const auto& h : r.hypotheses) hyp[h.name] = h.holds;
    Json strata = Json::array();
    for (const auto& s : r.strata) {
        Json rec = to_json(s.type);
        rec["filtered"] = s.filtered;
        if (s.filtered) {
            rec["filter_reason"] = s.filter_reason;
        } else {
            rec["fiber_bound"] = to_json(s.fiber_bound);
            rec["codim_bound"] = s.codim_bound;
            rec["margin"] = to_json(s.margin);
            if (s.local) rec["local_quiver"] = to_json(*s.local);
        }
        strata.push_back(std::move(rec));
    }
    return {{"verdict", verdict_name(r.verdict)},
            {"reasons", r.reasons},
            {"hypotheses", hyp},
            {"assume_stable_nonempty", r.assume_stable_nonempty},
            {"strata", strata}};
}

}  // namespace quivmod
