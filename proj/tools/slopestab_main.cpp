#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "slopestab/catalog.hpp"
#include "slopestab/chow.hpp"
#include "slopestab/oracle_suite.hpp"
#include "slopestab/spec_doc.hpp"

namespace ss = slopestab;
using ss::json;
using ss::Rat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitMismatch = 3;

long env_kmax(long fallback) {
    const char* v = std::getenv("SLOPESTAB_KMAX");
    if (!v) return fallback;
    try {
        long k = std::stol(v);
        return k > 0 ? k : fallback;
    } catch (...) {
        return fallback;
    }
}

void emit(const json& j, bool as_json, const std::string& human) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << human;
}

int cmd_slope(const std::string& spec_path, bool as_json) {
    ss::VarietySpecDoc doc = ss::load_spec_file(spec_path);
    ss::HSModel h = doc.model();
    ss::StabilityVerdict v = ss::decide(h);
    json j = ss::verdict_to_json(v, h);
    std::ostringstream hum;
    hum << "status: " << ss::to_string(v.status) << "\n"
        << "mu(X) = " << ss::mu_X(h) << ", eps = " << h.eps
        << (h.saturates_at_eps ? " (saturates)" : "") << "\n"
        << "margin N(c) = " << v.margin.str() << "\n";
    if (v.c_star) hum << "c* = " << *v.c_star << "\n";
    emit(j, as_json, hum.str());
    return kExitOk;
}

int cmd_futaki(const std::string& spec_path, const std::string& c_str, bool as_json) {
    ss::VarietySpecDoc doc = ss::load_spec_file(spec_path);
    ss::HSModel h = doc.model();
    Rat c = Rat::parse(c_str);
    Rat f = ss::futaki(h, c);
    ss::WeightExpansion w = ss::normal_cone_weight(h, c);
    json j;
    j["c"] = c.str();
    j["futaki"] = f.str();
    j["mu_X"] = ss::mu_X(h).str();
    j["mu_c_ideal"] = ss::mu_c_ideal(h, c).str();
    j["weight"] = ss::weight_to_json(w);
    std::ostringstream hum;
    hum << "F(c=" << c << ") = " << f << "  [b0 = " << w.b0 << ", b1 = " << w.b1
        << ", mu_c = " << ss::mu_c_ideal(h, c) << "]\n";
    emit(j, as_json, hum.str());
    return kExitOk;
}

ss::ChowData chow_data_for(const ss::VarietySpecDoc& doc, long c) {
    ss::ChowData data;
    if (doc.kind == "toric-oracle-case") {
        ss::oracle::ToricCase tc = doc.toric_case();
        data.base = ss::oracle::model_of(tc);
        data.N_plus_1 = Rat(ss::oracle::h0_count(tc, 1, 0));
        for (long i = 1; i <= c; ++i)
            data.h0_ideal[i] = Rat(ss::oracle::h0_count(tc, 1, i));
        return data;
    }
    if (doc.kind == "curve-divisor") {
        long g = ss::int_field(doc.parameters, "g");
        long d = ss::int_field(doc.parameters, "d");
        long degZ = ss::int_field(doc.parameters, "degZ");
        if (g < 1) throw ss::SpecError("chow: curve thresholds need genus g >= 1");
        if (d <= 2 * g - 2) throw ss::SpecError("chow: need d > 2g - 2");
        if (d - c * degZ <= 2 * g - 2)
            throw ss::SpecError("chow: section counts leave the exact range; lower c");
        data.base = doc.model();
        data.N_plus_1 = Rat(d + 1 - g);
        for (long i = 1; i <= c; ++i) data.h0_ideal[i] = Rat(d + 1 - g - i * degZ);
        return data;
    }
    throw ss::SpecError("chow: kind \"" + doc.kind +
                        "\" carries no section counts (use curve-divisor or toric-oracle-case)");
}

int cmd_chow(const std::string& spec_path, long c, long r, bool as_json) {
    ss::VarietySpecDoc doc = ss::load_spec_file(spec_path);
    if (c < 1) throw ss::SpecError("chow: c must be a positive integer");
    ss::ChowData data = chow_data_for(doc, c);
    json j;
    j["c"] = c;
    ss::ExtRat ch = ss::chow_slope(data, c);
    j["Ch_c"] = ch.str();
    j["Ch_X"] = ss::chow_of_X(data).str();
    ss::QuotientHS q = ss::quotient_of(data.base);
    if (!q.t0.is_zero()) j["Ch_c_quotient"] = ss::chow_quotient_slope(data, c).str();

    std::ostringstream hum;
    hum << "Ch_c = " << ch.str() << ", Ch(X) = " << ss::chow_of_X(data) << "\n";

    if (doc.kind == "curve-divisor") {
        long g = ss::int_field(doc.parameters, "g");
        long d = ss::int_field(doc.parameters, "d");
        j["uniform_constant"] = ss::uniform_constant_curve(g, d).str();
        j["chow_threshold"] = ss::chow_threshold_curve(g, d).str();
        j["asymptotically_chow_stable"] = ss::decide_asymptotic_chow_curve(g, d);
        hum << "uniform constant g/d = " << ss::uniform_constant_curve(g, d)
            << ", threshold = " << ss::chow_threshold_curve(g, d) << ", asymptotic: "
            << (ss::decide_asymptotic_chow_curve(g, d) ? "stable" : "not decided")
            << "\n";
    }
    if (r >= 1) {
        // e_{n+1}(r) from the same count source
        Rat chi_r, w_r(0);
        if (doc.kind == "toric-oracle-case") {
            ss::oracle::ToricCase tc = doc.toric_case();
            chi_r = Rat(ss::oracle::h0_count(tc, r, 0));
            w_r = Rat(ss::oracle::brute_normal_cone_weight(tc, Rat(c), r));
        } else {
            long g = ss::int_field(doc.parameters, "g");
            long d = ss::int_field(doc.parameters, "d");
            long degZ = ss::int_field(doc.parameters, "degZ");
            if (d * r - c * r * degZ <= 2 * g - 2)
                throw ss::SpecError("chow: r-twisted counts leave the exact range");
            chi_r = Rat(d * r + 1 - g);
            for (long jj = 1; jj <= c * r; ++jj) w_r += Rat(d * r + 1 - g - jj * degZ);
            w_r -= Rat(c * r) * chi_r;
        }
        Rat e = ss::chow_weight_coeff(data.base, Rat(c), r, w_r, chi_r);
        j["r"] = r;
        j["e_top"] = e.str();
        hum << "e_{n+1}(r=" << r << ") = " << e << "\n";
    }
    emit(j, as_json, hum.str());
    return kExitOk;
}

int cmd_newton(const std::string& spec_path, bool as_json) {
    ss::VarietySpecDoc doc = ss::load_spec_file(spec_path);
    ss::NewtonDiagram d = ss::concave_hull(doc.diagram_points());
    ss::HSModel hD = doc.diagram_divisor();
    ss::WeightExpansion w = ss::divisor_tc_weight(d, hD);
    json j = ss::diagram_to_json(d);
    j["weight"] = ss::weight_to_json(w);
    std::ostringstream hum;
    hum << "hull:";
    for (const auto& v : d.hull_vertices) hum << " (" << v.p << "," << v.i << ")";
    hum << "\nslopes:";
    for (const auto& m : d.slopes) hum << " " << m;
    hum << "\nweight: b0 = " << w.b0 << ", b1 = " << w.b1 << " ("
        << ss::to_string(w.accuracy) << ")\n";
    emit(j, as_json, hum.str());
    return kExitOk;
}

int cmd_oracle(const std::string& scope, long kmax, bool as_json) {
    long kp1 = kmax > 0 ? kmax : env_kmax(50);
    long kp2 = kmax > 0 ? std::min(kmax, 20L) : std::min(env_kmax(20), 20L);
    long kgr = kmax > 0 ? std::min(kmax, 12L) : 12;
    ss::oracle::SuiteReport rep = ss::oracle::run_suite(scope, kp1, kp2, kgr);
    if (as_json) {
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back(json{{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        json j;
        j["scope"] = scope;
        j["rows"] = rows;
        j["all_pass"] = rep.all_pass();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rep.rows)
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  [" << r.details
                      << "]\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "MISMATCH detected") << "\n";
    }
    return rep.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_catalog_list(bool as_json) {
    if (as_json) {
        json arr = json::array();
        for (const auto& e : ss::catalog())
            arr.push_back(json{{"id", e.id},
                               {"description", e.description},
                               {"expected", ss::to_string(e.expected_status)}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& e : ss::catalog())
            std::cout << e.id << "  (" << ss::to_string(e.expected_status) << ")  "
                      << e.description << "\n";
    }
    return kExitOk;
}

int cmd_catalog_run(const std::string& id, bool as_json) {
    const ss::CatalogEntry* e = ss::catalog_find(id);
    if (!e) throw ss::SpecError("no catalog entry with id \"" + id + "\"");
    ss::CatalogRunResult res = ss::catalog_run(*e);
    if (as_json) {
        std::cout << res.report.dump(2) << "\n";
    } else {
        std::cout << e->id << ": " << (res.ok ? "OK" : "MISMATCH") << "\n";
        for (const auto& c : res.report.at("checks"))
            std::cout << "  " << (c.at("ok").get<bool>() ? "PASS " : "FAIL ")
                      << c.at("check").get<std::string>() << " = "
                      << c.at("actual").get<std::string>() << " (expected "
                      << c.at("expected").get<std::string>() << ")\n";
    }
    return res.ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slopestab: exact slope-stability invariants of polarised varieties"};
    app.require_subcommand(1);

    std::string spec_path, c_str = "1", scope = "all", catalog_id;
    long c_int = 1, r_int = 0, kmax = 0;
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    auto* slope = app.add_subcommand("slope", "stability verdict for a spec document");
    slope->add_option("--spec", spec_path, "spec JSON file")->required();

    auto* futaki = app.add_subcommand("futaki", "Donaldson-Futaki invariant at a given c");
    futaki->add_option("--spec", spec_path, "spec JSON file")->required();
    futaki->add_option("--c", c_str, "parameter c as an exact rational \"p/q\"")->required();

    auto* chow = app.add_subcommand("chow", "Chow slopes and curve thresholds");
    chow->add_option("--spec", spec_path, "spec JSON file")->required();
    chow->add_option("--c", c_int, "integer parameter c")->required();
    chow->add_option("--r", r_int, "also report the leading Chow weight coefficient at r");

    auto* newton = app.add_subcommand("newton", "Newton diagram decomposition of a monomial degeneration");
    newton->add_option("--spec", spec_path, "spec JSON file")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration checks");
    auto* compare = oracle->add_subcommand("compare", "run formula-vs-enumeration suites");
    compare->add_option("--scope", scope, "p1 | p2 | graded | curve-local | all")
        ->check(CLI::IsMember({"p1", "p2", "graded", "curve-local", "all"}));
    compare->add_option("--kmax", kmax, "enumeration cap (overrides SLOPESTAB_KMAX)");

    auto* cat = app.add_subcommand("catalog", "worked examples with pinned outcomes");
    auto* list = cat->add_subcommand("list", "list catalog entries");
    auto* run = cat->add_subcommand("run", "run one catalog entry");
    run->add_option("id", catalog_id, "catalog entry id")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (slope->parsed()) return cmd_slope(spec_path, as_json);
        if (futaki->parsed()) return cmd_futaki(spec_path, c_str, as_json);
        if (chow->parsed()) return cmd_chow(spec_path, c_int, r_int, as_json);
        if (newton->parsed()) return cmd_newton(spec_path, as_json);
        if (oracle->parsed()) {
            if (!compare->parsed()) throw ss::SpecError("usage: oracle compare [--scope ...]");
            return cmd_oracle(scope, kmax, as_json);
        }
        if (cat->parsed()) {
            if (list->parsed()) return cmd_catalog_list(as_json);
            if (run->parsed()) return cmd_catalog_run(catalog_id, as_json);
            throw ss::SpecError("usage: catalog list | catalog run <id>");
        }
    } catch (const ss::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
