#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slopestab/chow.hpp"
#include "slopestab/hs_model.hpp"
#include "slopestab/oracle.hpp"
#include "slopestab/slope.hpp"
#include "slopestab/testconfig.hpp"

namespace slopestab {

using json = nlohmann::ordered_json;

/// Invalid input document; carries a field-level message. The CLI maps
/// this to exit code 2.
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A variety/subscheme description document. One JSON wire format for
/// every CLI entry point; all rationals travel as exact "p/q" strings
/// and every unknown field is rejected.
struct VarietySpecDoc {
    int schema_version = 1;
    std::string kind;           // point-on-smooth | curve-divisor |
                                // curve-subscheme | custom-hs |
                                // toric-oracle-case | newton-diagram
    json parameters;            // kind-specific, validated on parse
    bool saturates_at_eps = false;
    bool normal = false;

    static VarietySpecDoc from_json(const json& j);
    json to_json() const;

    /// Hilbert-Samuel model for the HS kinds (everything except
    /// newton-diagram; toric-oracle-case yields its closed-form model).
    HSModel model() const;

    oracle::ToricCase toric_case() const;         // toric-oracle-case
    std::vector<long> graded_layers() const;      // optional on toric kind
    std::vector<LatticePoint> diagram_points() const;  // newton-diagram
    HSModel diagram_divisor() const;              // newton-diagram
};

VarietySpecDoc load_spec_file(const std::string& path);

/// Serialisation helpers shared by the CLI and the catalog.
json verdict_to_json(const StabilityVerdict& v, const HSModel& h);
json weight_to_json(const WeightExpansion& w);
json diagram_to_json(const NewtonDiagram& d);

Rat rat_field(const json& j, const std::string& key);
long int_field(const json& j, const std::string& key);

/// Throws SpecError if the object holds any key outside `allowed`.
void reject_unknown_fields(const json& obj, const std::vector<std::string>& allowed,
                           const std::string& where);

}  // namespace slopestab
