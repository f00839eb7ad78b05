#pragma once

#include <string>
#include <vector>

#include "slopestab/oracle.hpp"
#include "slopestab/testconfig.hpp"

namespace slopestab::oracle {

struct SuiteRow {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteReport {
    std::vector<SuiteRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

/// Formula-vs-enumeration comparisons. Each row pins one closed form
/// against the literal monomial count.
SuiteReport run_suite_p1(long kmax = 50);
SuiteReport run_suite_p2(long kmax = 20);
SuiteReport run_suite_graded(long kmax = 12);
SuiteReport run_suite_curve_local();
SuiteReport run_suite(const std::string& scope, long kmax_p1 = 50, long kmax_p2 = 20,
                      long kmax_graded = 12);

/// The layer lists exercised by the graded suite, including the base
/// case (z)+(t), a collinear diagram, and non-integral-slope diagrams
/// that need a base change.
const std::vector<std::vector<long>>& graded_suite_layers();

/// Weight samples (k, w(k)) of the brute graded enumeration.
std::vector<std::pair<Rat, Rat>> graded_weight_samples(const GradedTC& g, long kmax);

/// Diagram of a layer list: points (layers[j], j) plus the final (0, r).
std::vector<LatticePoint> diagram_points_of_layers(const std::vector<long>& layers);

}  // namespace slopestab::oracle
