#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopestab/hs_model.hpp"
#include "slopestab/interval_sign.hpp"

namespace slopestab {

enum class Stability {
    stable_wrt_z,
    strictly_destabilised,
    boundary_semistable,
};

std::string to_string(Stability s);

/// Outcome of the slope-stability test of (X, L) against a fixed
/// subscheme Z, over the whole admissible range of the parameter c.
/// The margin polynomial N(c) has the sign of mu(X) - mu_c(I_Z), so
///   N > 0 on the admissible set        -> stable with respect to Z,
///   N < 0 somewhere admissible         -> strictly destabilised,
///   N >= 0 with an admissible zero     -> semistable boundary case.
struct StabilityVerdict {
    Stability status = Stability::stable_wrt_z;
    Poly margin;                         // N(c); N(0) = 0
    std::vector<RootWitness> zero_set;   // roots of N in (0, eps]
    std::optional<Rat> c_star;           // a c achieving equality/violation
};

/// mu(X) = a_1 / a_0.
Rat mu_X(const HSModel& h);

/// K-slope of the ideal:
///   mu_c(I_Z) = int_0^c (a_1 + a_0'/2) / int_0^c a_0.
/// Requires 0 < c <= eps and a positive denominator.
Rat mu_c_ideal(const HSModel& h, const Rat& c);

/// Slope of the quotient O_Z, via a~_i = a_i - a_i(x). Requires a
/// nonempty Z (positive int of a~_0).
Rat mu_c_quotient(const HSModel& h, const Rat& c);

/// Donaldson-Futaki invariant of the deformation to the normal cone of
/// Z with parameter c:
///   F = a_0 (mu(X) - mu_c(I_Z)) int_0^c a_0,
/// which coincides with b_0 a_1 - b_1 a_0 for the weight coefficients
/// of testconfig.hpp.
Rat futaki(const HSModel& h, const Rat& c);

/// The margin polynomial
///   N(c) = mu(X) int_0^c a_0 - int_0^c (a_1 + a_0'/2),
/// whose sign on (0, eps] is the sign of mu(X) - mu_c(I_Z).
Poly margin_poly(const HSModel& h);

/// Full-interval stability decision: sign-analyses N on (0, eps), and
/// at c = eps as well exactly when sections saturate there.
StabilityVerdict decide(const HSModel& h);

/// For K numerically equivalent to alpha L with alpha >= 0, checks the
/// pointwise inequality -mu(X) a_0(x) + a_1(x) <= 0 on (0, eps] and
/// that the integrated margin is strictly positive there. Empty Z
/// (a_i(x) identically a_i) is vacuously true.
bool cy_canonical_check(const HSModel& h, const Rat& alpha);

}  // namespace slopestab
