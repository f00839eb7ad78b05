#include "slopestab/spec_doc.hpp"

#include <fstream>

namespace slopestab {

namespace {

const std::vector<std::string> kKinds = {
    "point-on-smooth", "curve-divisor",     "curve-subscheme",
    "custom-hs",       "toric-oracle-case", "newton-diagram"};

std::vector<std::string> params_for(const std::string& kind) {
    if (kind == "point-on-smooth") return {"n", "Ln", "KLn1", "eps"};
    if (kind == "curve-divisor") return {"g", "d", "degZ"};
    if (kind == "curve-subscheme") return {"g", "d", "e", "rho", "eps"};
    if (kind == "custom-hs")
        return {"n", "a0", "a1", "higher", "a0_const", "a1_const", "eps"};
    if (kind == "toric-oracle-case") return {"ambient", "d", "m", "layers"};
    if (kind == "newton-diagram") return {"points", "divisor"};
    throw SpecError("unknown kind \"" + kind + "\"");
}

Poly poly_field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw SpecError("missing field \"" + key + "\"");
    const json& arr = j.at(key);
    if (!arr.is_array()) throw SpecError("field \"" + key + "\" must be an array of rationals");
    std::vector<Rat> coeffs;
    for (const auto& c : arr) {
        if (!c.is_string()) throw SpecError("field \"" + key + "\": coefficients must be \"p/q\" strings");
        try {
            coeffs.push_back(Rat::parse(c.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw SpecError("field \"" + key + "\": " + e.what());
        }
    }
    return Poly(std::move(coeffs));
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

}  // namespace

void reject_unknown_fields(const json& obj, const std::vector<std::string>& allowed,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const auto& a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok) throw SpecError(where + ": unknown field \"" + key + "\"");
    }
}

Rat rat_field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw SpecError("missing field \"" + key + "\"");
    const json& v = j.at(key);
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (!v.is_string()) throw SpecError("field \"" + key + "\" must be a \"p/q\" string");
    try {
        return Rat::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SpecError("field \"" + key + "\": " + e.what());
    }
}

long int_field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw SpecError("missing field \"" + key + "\"");
    const json& v = j.at(key);
    if (v.is_number_integer()) return v.get<long>();
    throw SpecError("field \"" + key + "\" must be an integer");
}

VarietySpecDoc VarietySpecDoc::from_json(const json& j) {
    if (!j.is_object()) throw SpecError("spec document must be a JSON object");
    reject_unknown_fields(j, {"schema_version", "kind", "parameters", "flags"}, "spec");

    VarietySpecDoc doc;
    if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer())
        throw SpecError("missing integer field \"schema_version\"");
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != 1)
        throw SpecError("unsupported schema_version " + std::to_string(doc.schema_version));

    if (!j.contains("kind") || !j.at("kind").is_string())
        throw SpecError("missing string field \"kind\"");
    doc.kind = j.at("kind").get<std::string>();
    bool known = false;
    for (const auto& k : kKinds) known = known || k == doc.kind;
    if (!known) throw SpecError("unknown kind \"" + doc.kind + "\"");

    if (!j.contains("parameters") || !j.at("parameters").is_object())
        throw SpecError("missing object field \"parameters\"");
    doc.parameters = j.at("parameters");
    reject_unknown_fields(doc.parameters, params_for(doc.kind), "parameters");

    if (j.contains("flags")) {
        const json& f = j.at("flags");
        reject_unknown_fields(f, {"saturates_at_eps", "normal"}, "flags");
        if (f.contains("saturates_at_eps")) {
            if (!f.at("saturates_at_eps").is_boolean())
                throw SpecError("flags.saturates_at_eps must be a boolean");
            doc.saturates_at_eps = f.at("saturates_at_eps").get<bool>();
        }
        if (f.contains("normal")) {
            if (!f.at("normal").is_boolean())
                throw SpecError("flags.normal must be a boolean");
            doc.normal = f.at("normal").get<bool>();
        }
    }
    return doc;
}

json VarietySpecDoc::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    j["parameters"] = parameters;
    j["flags"] = json{{"saturates_at_eps", saturates_at_eps}, {"normal", normal}};
    return j;
}

HSModel VarietySpecDoc::model() const {
    try {
        if (kind == "point-on-smooth") {
            HSModel h = hs_point_on_smooth(
                static_cast<int>(int_field(parameters, "n")), rat_field(parameters, "Ln"),
                rat_field(parameters, "KLn1"), rat_field(parameters, "eps"),
                saturates_at_eps);
            return h;
        }
        if (kind == "curve-divisor") {
            HSModel h = hs_divisor_on_curve(int_field(parameters, "g"),
                                            int_field(parameters, "d"),
                                            int_field(parameters, "degZ"));
            h.saturates_at_eps = saturates_at_eps;
            return h;
        }
        if (kind == "curve-subscheme") {
            HSModel h = hs_curve_subscheme(int_field(parameters, "g"),
                                           int_field(parameters, "d"),
                                           rat_field(parameters, "e"),
                                           rat_field(parameters, "rho"),
                                           rat_field(parameters, "eps"));
            h.saturates_at_eps = saturates_at_eps;
            return h;
        }
        if (kind == "custom-hs") {
            HSModel h;
            h.n = static_cast<int>(int_field(parameters, "n"));
            h.a0 = poly_field(parameters, "a0");
            h.a1 = poly_field(parameters, "a1");
            h.a0_const = rat_field(parameters, "a0_const");
            h.a1_const = rat_field(parameters, "a1_const");
            h.eps = rat_field(parameters, "eps");
            h.saturates_at_eps = saturates_at_eps;
            if (parameters.contains("higher")) {
                std::vector<Poly> hs;
                const json& arr = parameters.at("higher");
                if (!arr.is_array()) throw SpecError("field \"higher\" must be an array");
                json wrap;
                for (const auto& entry : arr) {
                    wrap["p"] = entry;
                    hs.push_back(poly_field(wrap, "p"));
                }
                h.higher = std::move(hs);
            }
            h.validate();
            return h;
        }
        if (kind == "toric-oracle-case") return oracle::model_of(toric_case());
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception& e) {
        throw SpecError(std::string("invalid model parameters: ") + e.what());
    }
    throw SpecError("kind \"" + kind + "\" does not describe a Hilbert-Samuel model");
}

oracle::ToricCase VarietySpecDoc::toric_case() const {
    if (kind != "toric-oracle-case")
        throw SpecError("kind \"" + kind + "\" is not a toric oracle case");
    if (!parameters.contains("ambient") || !parameters.at("ambient").is_string())
        throw SpecError("missing string field \"ambient\"");
    std::string amb = parameters.at("ambient").get<std::string>();
    oracle::ToricCase tc;
    if (amb == "P1") tc.ambient = oracle::ToricCase::Ambient::P1;
    else if (amb == "P2") tc.ambient = oracle::ToricCase::Ambient::P2;
    else throw SpecError("ambient must be \"P1\" or \"P2\"");
    tc.d = int_field(parameters, "d");
    tc.m = parameters.contains("m") ? int_field(parameters, "m") : 1;
    if (tc.d < 1 || tc.m < 1) throw SpecError("toric case requires d >= 1 and m >= 1");
    return tc;
}

std::vector<long> VarietySpecDoc::graded_layers() const {
    std::vector<long> layers;
    if (!parameters.contains("layers")) return layers;
    const json& arr = parameters.at("layers");
    if (!arr.is_array()) throw SpecError("field \"layers\" must be an array of integers");
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw SpecError("layers must be integers");
        layers.push_back(v.get<long>());
    }
    return layers;
}

std::vector<LatticePoint> VarietySpecDoc::diagram_points() const {
    if (kind != "newton-diagram")
        throw SpecError("kind \"" + kind + "\" is not a newton diagram");
    if (!parameters.contains("points")) throw SpecError("missing field \"points\"");
    const json& arr = parameters.at("points");
    if (!arr.is_array()) throw SpecError("field \"points\" must be an array of [p, i] pairs");
    std::vector<LatticePoint> pts;
    for (const auto& v : arr) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
            !v[1].is_number_integer())
            throw SpecError("each point must be an integer pair [p, i]");
        pts.push_back({v[0].get<long>(), v[1].get<long>()});
    }
    return pts;
}

HSModel VarietySpecDoc::diagram_divisor() const {
    if (kind != "newton-diagram")
        throw SpecError("kind \"" + kind + "\" is not a newton diagram");
    if (!parameters.contains("divisor") || !parameters.at("divisor").is_object())
        throw SpecError("missing object field \"divisor\" (a nested spec document)");
    VarietySpecDoc inner = VarietySpecDoc::from_json(parameters.at("divisor"));
    return inner.model();
}

VarietySpecDoc load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SpecError("invalid JSON in \"" + path + "\": " + e.what());
    }
    return VarietySpecDoc::from_json(j);
}

json verdict_to_json(const StabilityVerdict& v, const HSModel& h) {
    json j;
    j["status"] = to_string(v.status);
    j["mu_X"] = mu_X(h).str();
    j["eps"] = h.eps.str();
    j["saturates_at_eps"] = h.saturates_at_eps;
    j["margin"] = poly_to_json(v.margin);
    json zeros = json::array();
    for (const auto& w : v.zero_set) {
        if (w.exact) zeros.push_back(json{{"root", w.value.str()}});
        else zeros.push_back(json{{"interval", json::array({w.lo.str(), w.hi.str()})}});
    }
    j["zero_set"] = zeros;
    if (v.c_star) j["c_star"] = v.c_star->str();
    return j;
}

json weight_to_json(const WeightExpansion& w) {
    json j;
    j["b0"] = w.b0.str();
    j["b1"] = w.b1.str();
    j["accuracy"] = to_string(w.accuracy);
    if (w.full) j["full"] = poly_to_json(*w.full);
    return j;
}

json diagram_to_json(const NewtonDiagram& d) {
    json j;
    json hull = json::array();
    for (const auto& v : d.hull_vertices) hull.push_back(json::array({v.p, v.i}));
    j["hull_vertices"] = hull;
    json slopes = json::array();
    for (const auto& m : d.slopes) slopes.push_back(m.str());
    j["slopes"] = slopes;
    return j;
}

}  // namespace slopestab
