#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slopestab/hs_model.hpp"

namespace slopestab {

/// How much of a weight polynomial w(k) = b_0 k^{n+1} + b_1 k^n + ...
/// the stated coefficients capture.
///   exact          : full polynomial known (oracle fits only)
///   up_to_k_nminus1: b_0 and b_1 exact, error O(k^{n-1})
///   up_to_k_n      : only b_0 reliable; a normalisation step may have
///                    shifted b_1 by an unknown nonpositive amount
enum class WeightAccuracy { exact, up_to_k_nminus1, up_to_k_n };

std::string to_string(WeightAccuracy a);

struct WeightExpansion {
    Rat b0, b1;
    std::optional<Poly> full;  // polynomial in k, from oracle fits
    WeightAccuracy accuracy = WeightAccuracy::up_to_k_nminus1;
};

/// Leading weight coefficients of the deformation to the normal cone
/// of Z with parameter c:
///   b_0 = int_0^c a_0 - c a_0,
///   b_1 = int_0^c (a_1 + a_0'/2) - c a_1.
/// Requires 0 < c <= eps; c = eps additionally requires the saturation
/// flag (only then is the contracted family a test configuration).
WeightExpansion normal_cone_weight(const HSModel& h, const Rat& c);

/// Section-count source: (k, j) -> h^0(L^k tensor I_Z^j). j = 0 must
/// give h^0(L^k). All section counting stays outside this module; see
/// oracle.hpp for the brute-force source.
using SectionCounts = std::function<Rat(long k, long j)>;

/// Normalised two-parameter weight
///   w~_{r,k}(c) = r chi(L^r) sum_{j=1}^{ck} h^0(L^k I^j)
///                 - k chi(L^k) w(r) - c k chi(L^k) r chi(L^r),
/// with w(r) and all chi taken from the same count table. Requires
/// ck and cr to be positive integers.
Rat normalized_weight(const Rat& c, long r, long k, const SectionCounts& counts);

/// A lattice point (z-exponent p, t-exponent i) of a monomial
/// degeneration ideal (z^{p_1}) + t (z^{p_2}) + ... + (t^r).
struct LatticePoint {
    long p = 0;  // z-exponent
    long i = 0;  // t-exponent
};

/// Newton diagram of such an ideal: the extremal vertices (k_i, rho_i)
/// of its concave hull, ordered by decreasing k from (p_1, 0) to
/// (0, r), and the segment slopes m_i, which are non-decreasing.
struct NewtonDiagram {
    std::vector<LatticePoint> raw_points;
    std::vector<LatticePoint> hull_vertices;
    std::vector<Rat> slopes;  // m_1..m_{l-1}; m_0 = 0 by convention
};

/// Builds the diagram. Requires the p_i non-increasing with the i
/// strictly increasing from 0, and the final point at p = 0. Collinear
/// boundary points are kept as vertices (their combination coefficient
/// below is then zero).
NewtonDiagram concave_hull(const std::vector<LatticePoint>& raw_points);

/// Base change t -> t^M: multiplies all t-coordinates (hence all
/// slopes, hence the weight) by M.
NewtonDiagram basechange(const NewtonDiagram& d, long M);

/// Weight of the composite test configuration determined by the
/// diagram, as the combination
///   sum_i (m_i - m_{i-1}) w(D, k_i)
/// of normal-cone weights of the reduced divisor D. Non-integer slopes
/// are cleared by an internal base change (t -> t^M, divide by M).
/// The overall sign is fixed by the base case (z)+(t), which must
/// reproduce the plain normal-cone weight; see the oracle suite.
/// Accuracy is up_to_k_nminus1 only for an ample polarisation with
/// integral slopes (no normalisation correction), else up_to_k_n.
WeightExpansion divisor_tc_weight(const NewtonDiagram& d, const HSModel& hD,
                                  bool ample = true);

/// Seshadri constant of a chain ideal I_r = I_0 + t I_1 + ... + (t^r):
/// the minimum of the component constants.
Rat seshadri_of_chain(const std::vector<Rat>& eps_list);

}  // namespace slopestab
