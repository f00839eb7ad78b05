#pragma once

#include <utility>
#include <vector>

#include "slopestab/hs_model.hpp"
#include "slopestab/polynomial.hpp"

namespace slopestab::oracle {

/// A toric catalog case: P^1 or P^2 with L = O(d) and the fat
/// coordinate point of multiplicity m as the subscheme. All section
/// counts below are literal monomial enumerations (exponent loops),
/// never dimension formulas, so they are independent of every closed
/// form they are used to validate.
struct ToricCase {
    enum class Ambient { P1, P2 };
    Ambient ambient = Ambient::P1;
    long d = 1;
    long m = 1;

    Rat eps() const { return Rat(d, m); }
};

/// Monomials of degree d*k vanishing to the given order at the
/// coordinate point, counted by staircase enumeration.
long h0_vanishing(const ToricCase& tc, long k, long order);

/// h^0(L^k tensor I_Z^j) for Z the m-fat point, i.e. vanishing order m*j.
long h0_count(const ToricCase& tc, long k, long j);

/// w(k) = sum_{j=1}^{ck} h^0(L^k I_Z^j) - c k h^0(L^k).
/// Requires ck a positive integer and c <= d/m.
long long brute_normal_cone_weight(const ToricCase& tc, const Rat& c, long k);

/// Verifies that the t-weight-space dimensions of the central fibre
/// sum to h^0(L^k) (flatness of the degeneration), for the given c, k.
bool flatness_check(const ToricCase& tc, const Rat& c, long k);

/// A monomial test configuration I = I_0 + t I_1 + ... + (t^r) on a
/// toric case, with layer j carrying the ideal of the point thickened
/// layers[j] times. Layers must be non-increasing and start at most at
/// d (so all counts stay in the polynomial range).
struct GradedTC {
    ToricCase tc;
    std::vector<long> layers;  // point multiplicity per t-layer, absolute
};

/// Total weight of the t-graded pieces of H^0(L^k tensor I^k) mod t,
/// enumerated layer by layer via the min-plus expansion of I^k.
long long brute_graded_weight(const GradedTC& g, long k);

/// Exact interpolation through all but the last sample, with the held
/// out sample used as a consistency check; throws std::runtime_error if
/// any sample deviates from the fit (pre-stable-range contamination).
Poly fit_weight_poly(const std::vector<std::pair<Rat, Rat>>& samples);

/// Generator a X^p + b Y^q of an ideal in C[X,Y]/(XY) supported at the
/// origin.
struct LocalGen {
    Rat a;
    long p = 1;
    Rat b;
    long q = 1;
};

/// dim_C R/I^k for the nodal local model R = C[X,Y]/(XY), computed by
/// exact linear algebra on the spanning monomial vectors of I^k, then
/// fitted to e k - rho on the upper half of k in {2..kmax}. Throws if
/// the ideal is not supported at the origin or the tail is not affine.
std::pair<long, long> curve_local_rho(const std::vector<LocalGen>& gens, long kmax = 12);

/// dim_C R/I^k for a single k (exposed for tests).
long local_quotient_dim(const std::vector<LocalGen>& gens, long k);

/// Closed-form Hilbert-Samuel model of a toric case (the formula side
/// that the enumerations above are checked against).
HSModel model_of(const ToricCase& tc);

}  // namespace slopestab::oracle
