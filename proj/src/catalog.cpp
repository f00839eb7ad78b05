#include "slopestab/catalog.hpp"

namespace slopestab {

namespace {

VarietySpecDoc make_doc(const std::string& kind, json params, bool saturates) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = kind;
    j["parameters"] = std::move(params);
    j["flags"] = json{{"saturates_at_eps", saturates}, {"normal", true}};
    return VarietySpecDoc::from_json(j);
}

CatalogEntry pn_point(const std::string& id, int n) {
    CatalogEntry e;
    e.id = id;
    e.description = "point on P^" + std::to_string(n) + " with the hyperplane polarisation";
    e.spec = make_doc("point-on-smooth",
                      json{{"n", n}, {"Ln", "1"}, {"KLn1", std::to_string(-(n + 1))},
                           {"eps", "1"}},
                      true);
    e.expected_status = Stability::boundary_semistable;
    e.expected_values = {{"mu_X", Rat(n * (n + 1), 2)}, {"futaki@1", Rat(0)}};
    e.expected_c_star = Rat(1);
    e.note = "equality case of the point criterion: (-K.L^{n-1}) eps = (n+1) L^n; "
             "semistable with Futaki invariant zero at c = eps = 1";
    return e;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> entries;

    entries.push_back(pn_point("pn-point", 2));
    entries.push_back(pn_point("p1-point", 1));
    entries.push_back(pn_point("p3-point", 3));
    entries.push_back(pn_point("p4-point", 4));

    {
        CatalogEntry e;
        e.id = "p1-deg3-point";
        e.description = "point on P^1 with L = O(3)";
        e.spec = make_doc("curve-divisor", json{{"g", 0}, {"d", 3}, {"degZ", 1}}, true);
        e.expected_status = Stability::boundary_semistable;
        e.expected_values = {{"mu_X", Rat(1, 3)},
                             {"mu_c_ideal@1", Rat(1, 5)},
                             {"futaki@1", Rat(1)}};
        e.expected_c_star = Rat(3);
        e.note = "genus 0: equality exactly at c = eps = 3; the degeneration blows "
                 "down to a product, so this is the polystable boundary case";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "curve-g1-point";
        e.description = "point on a smooth genus-1 curve, deg L = 3";
        e.spec = make_doc("curve-divisor", json{{"g", 1}, {"d", 3}, {"degZ", 1}}, true);
        e.expected_status = Stability::stable_wrt_z;
        e.expected_values = {{"mu_X", Rat(0)}};
        e.note = "mu_c(O_Z) = 1/c > 0 = mu(X) for every admissible c";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "curve-g2-point";
        e.description = "point on a smooth genus-2 curve, deg L = 5";
        e.spec = make_doc("curve-divisor", json{{"g", 2}, {"d", 5}, {"degZ", 1}}, true);
        e.expected_status = Stability::stable_wrt_z;
        e.expected_values = {{"mu_X", Rat(-1, 5)}, {"mu_c_quotient@1", Rat(1)}};
        e.note = "mu(X) < 0 while every divisor has positive quotient slope";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "genus2-node";
        e.description = "ordinary double point on an irreducible genus-2 curve, deg L = 5";
        e.spec = make_doc("curve-subscheme",
                          json{{"g", 2}, {"d", 5}, {"e", "2"}, {"rho", "1"},
                               {"eps", "5/2"}},
                          false);
        e.expected_status = Stability::stable_wrt_z;
        e.expected_values = {{"mu_X", Rat(-1, 5)}, {"mu_c_quotient@1", Rat(0)}};
        e.note = "node has e = 2, rho = 1, so mu_c(O_Z) = (e - 2 rho)/(e c) = 0 > mu(X)";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "genus2-triple-point";
        e.description = "multiplicity-3 point on an irreducible genus-2 curve, deg L = 5";
        e.spec = make_doc("curve-subscheme",
                          json{{"g", 2}, {"d", 5}, {"e", "3"}, {"rho", "2"},
                               {"eps", "5/3"}},
                          false);
        e.expected_status = Stability::strictly_destabilised;
        e.expected_values = {{"mu_X", Rat(-1, 5)}, {"mu_c_quotient@1", Rat(-1, 3)}};
        e.note = "rho >= e - 1 forces 2 rho > e for e >= 3, so the point destabilises";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "k3-quartic-point";
        e.description = "point on a quartic K3 surface, L = O(1)";
        e.spec = make_doc("point-on-smooth",
                          json{{"n", 2}, {"Ln", "4"}, {"KLn1", "0"}, {"eps", "1"}},
                          true);
        e.expected_status = Stability::stable_wrt_z;
        e.expected_values = {{"mu_X", Rat(0)},
                             {"mu_c_ideal@1", Rat(-3, 11)},
                             {"futaki@1", Rat(1)}};
        e.note = "K numerically trivial: slope stable for every polarisation";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.id = "canonical-surface-point";
        e.description = "point on a canonically polarised surface with K^2 = 2";
        e.spec = make_doc("point-on-smooth",
                          json{{"n", 2}, {"Ln", "2"}, {"KLn1", "2"}, {"eps", "1"}},
                          true);
        e.expected_status = Stability::stable_wrt_z;
        e.expected_values = {{"mu_X", Rat(-1)}};
        e.note = "canonical polarisation (K = L): the margin is c^3/6 + c^2/2 > 0";
        entries.push_back(e);
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

namespace {
Rat eval_key(const HSModel& h, const std::string& key) {
    auto at = key.find('@');
    if (at == std::string::npos) {
        if (key == "mu_X") return mu_X(h);
        throw std::invalid_argument("catalog: unknown check \"" + key + "\"");
    }
    Rat c = Rat::parse(key.substr(at + 1));
    std::string fn = key.substr(0, at);
    if (fn == "futaki") return futaki(h, c);
    if (fn == "mu_c_ideal") return mu_c_ideal(h, c);
    if (fn == "mu_c_quotient") return mu_c_quotient(h, c);
    throw std::invalid_argument("catalog: unknown check \"" + key + "\"");
}
}  // namespace

CatalogRunResult catalog_run(const CatalogEntry& e) {
    CatalogRunResult out;
    HSModel h = e.spec.model();
    StabilityVerdict v = decide(h);
    out.report["id"] = e.id;
    out.report["description"] = e.description;
    out.report["verdict"] = verdict_to_json(v, h);

    json checks = json::array();
    bool ok = v.status == e.expected_status;
    checks.push_back(json{{"check", "status"},
                          {"expected", to_string(e.expected_status)},
                          {"actual", to_string(v.status)},
                          {"ok", v.status == e.expected_status}});
    for (const auto& [key, expected] : e.expected_values) {
        Rat actual = eval_key(h, key);
        bool good = actual == expected;
        ok = ok && good;
        checks.push_back(json{{"check", key},
                              {"expected", expected.str()},
                              {"actual", actual.str()},
                              {"ok", good}});
    }
    if (e.expected_c_star) {
        bool good = v.c_star && *v.c_star == *e.expected_c_star;
        ok = ok && good;
        checks.push_back(json{{"check", "c_star"},
                              {"expected", e.expected_c_star->str()},
                              {"actual", v.c_star ? v.c_star->str() : "none"},
                              {"ok", good}});
    }
    out.report["checks"] = checks;
    out.report["ok"] = ok;
    out.ok = ok;
    return out;
}

}  // namespace slopestab
