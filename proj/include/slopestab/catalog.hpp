#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slopestab/spec_doc.hpp"

namespace slopestab {

/// A worked example with its pinned expected outcome. Running an entry
/// recomputes everything from the spec document and must reproduce the
/// expectation bit for bit.
struct CatalogEntry {
    std::string id;
    std::string description;
    VarietySpecDoc spec;
    Stability expected_status;
    /// Checked values; keys are "mu_X", "futaki@<c>", "mu_c_ideal@<c>",
    /// "mu_c_quotient@<c>" with <c> an exact rational.
    std::vector<std::pair<std::string, Rat>> expected_values;
    std::optional<Rat> expected_c_star;
    std::string note;
};

const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(const std::string& id);

struct CatalogRunResult {
    bool ok = true;
    json report;
};

/// Recomputes the entry and compares with the expectation.
CatalogRunResult catalog_run(const CatalogEntry& e);

}  // namespace slopestab
