#pragma once

#include <map>
#include <vector>

#include "slopestab/hs_model.hpp"

namespace slopestab {

/// Section counts needed for Chow slopes at a fixed embedding
/// X in P^N by O(1): h^0(I_Z^i(1)) for i = 1..c and N+1 = h^0(O(1)).
/// Counts are supplied (e.g. by the oracle); nothing here estimates
/// them. The Kodaira-embedding normalisation h^0_{P^N} = h^0_X is
/// assumed and recorded as a flag.
struct ChowData {
    std::map<long, Rat> h0_ideal;  // i -> h^0(I_Z^i(1))
    Rat N_plus_1;                  // h^0(O(1))
    HSModel base;
    bool kodaira_embedding = true;

    void validate() const;
};

/// A rational that may be the +infinity sentinel (division by a zero
/// a_0-integral, i.e. Z = X).
struct ExtRat {
    bool finite = true;
    Rat value;

    std::string str() const { return finite ? value.str() : "inf"; }
};

/// Ch_c(I_Z) = sum_{i=1}^c h^0(I_Z^i(1)) / int_0^c a_0.
ExtRat chow_slope(const ChowData& data, long c);

/// Ch(X) = (N+1)/a_0.
Rat chow_of_X(const ChowData& data);

/// Ch_c(O_Z) = sum_{i=1}^c (N+1 - h^0(I_Z^i(1))) / int_0^c a~_0.
Rat chow_quotient_slope(const ChowData& data, long c);

/// Supremum of constants for which a smooth genus-g degree-d curve is
/// uniformly Chow slope stable: g/d. Requires g >= 1, d > 2g-2.
Rat uniform_constant_curve(long g, long d);

/// The uniformity threshold sufficient for Chow stability of such a
/// curve: (1 + 1/(d-g)) (g - 1/2) / d. Requires d > 2g-2 and d > g.
Rat chow_threshold_curve(long g, long d);

/// True when the uniform constant strictly exceeds the threshold.
bool decide_asymptotic_chow_curve(long g, long d);

/// Coefficients c_0..c_{n+1} of the asymptotic Chow slope
///   eta_c(I_Z) = sum_j c_j r^{n+1-j},
///   c_j = sum_{i=0}^j int_0^c beta_i a_{j-i}^{(i)}(x) dx / int_0^c a_0,
/// so c_0 = 1 and c_1 = mu_c(I_Z). Requires the full coefficient list
/// a_0..a_n on the model.
struct EtaExpansion {
    std::vector<Rat> coeffs;  // c_0..c_{n+1}

    Rat value_at(long r) const;
};

EtaExpansion eta(const HSModel& h, const Rat& c);

/// eta_X(r) = r chi(L^r) / a_0; requires full coefficients.
Rat eta_X(const HSModel& h, long r);

/// k^{n+1} coefficient of the normalised weight of the deformation to
/// the normal cone: e_{n+1}(r) = b_0 r chi_r - a_0 w_r, with w_r and
/// chi_r supplied by the caller (oracle counts or closed forms). A
/// negative value certifies Chow instability with respect to r.
Rat chow_weight_coeff(const HSModel& h, const Rat& c, long r, const Rat& w_r,
                      const Rat& chi_r);

}  // namespace slopestab
