#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopestab/polynomial.hpp"

namespace slopestab {

/// Hilbert-Samuel data of a polarised variety (X, L) of dimension n
/// together with a subscheme Z: the coefficient polynomials a_i(x) of
/// chi(L^k tensor I_Z^{xk}), the constants a_i of chi(L^k), the
/// Seshadri constant eps(Z) bounding the admissible slope parameter,
/// and whether sections saturate at c = eps (which decides whether the
/// boundary value is a legitimate test value).
///
/// a1_const is stored separately from a1(0): the two agree only when X
/// is normal, and nothing here assumes normality.
struct HSModel {
    int n = 1;                    // dim X
    Poly a0;                      // a_0(x), degree <= n
    Poly a1;                      // a_1(x), degree <= n-1
    std::optional<std::vector<Poly>> higher;  // a_2..a_n when known exactly
    Rat a0_const;                 // a_0 = a_0(0)
    Rat a1_const;                 // a_1
    Rat eps;                      // Seshadri constant, > 0
    bool saturates_at_eps = false;
    std::string label;

    /// Throws std::invalid_argument if the defining inequalities fail:
    /// a0(0) = a0_const, eps > 0, a0 > 0 on (0, eps), a0' <= 0 on (0, eps).
    void validate() const;

    /// chi(L^k) as a polynomial in k; requires full coefficients
    /// (higher present) beyond dimension 1.
    Poly hilbert_polynomial() const;

    bool has_full_coefficients() const {
        return n <= 1 || (higher && static_cast<int>(higher->size()) == n - 1);
    }
};

/// Quotient coefficients a~_i(x) = a_i - a_i(x) of chi(L^k tensor O_{xkZ}).
struct QuotientHS {
    Poly t0;  // a~_0(x); vanishes at 0, non-decreasing on [0, eps]
    Poly t1;  // a~_1(x)
};

QuotientHS quotient_of(const HSModel& h);

/// A (thickened) point on a smooth n-fold with L^n = Ln and
/// K_X . L^{n-1} = KLn1:
///   a~_0(x) = x^n/n!,  a~_1(x) = (n-1) x^{n-1} / (2 (n-1)!).
HSModel hs_point_on_smooth(int n, const Rat& Ln, const Rat& KLn1, const Rat& eps,
                           bool saturates);

/// A degree-degZ divisor on a smooth curve of genus g with deg L = d:
///   a_0(x) = d - degZ x,  a_1 = 1 - g,  eps = d/degZ.
HSModel hs_divisor_on_curve(long g, long d, long degZ);

/// A subscheme of an irreducible curve with Hilbert-Samuel data
/// h^0(L^k / (L^k tensor I^{xk})) = e x k - rho:
///   a~_0(x) = e x,  a~_1 = -rho.
HSModel hs_curve_subscheme(long g, long d, const Rat& e, const Rat& rho,
                           const Rat& eps);

/// The fat coordinate point of multiplicity m on P^2 with L = O(d),
/// with the full coefficient list a_0, a_1, a_2 (for eta expansions):
///   a_0(x) = (d^2 - m^2 x^2)/2,  a_1(x) = (3d - m x)/2,  a_2 = 1.
HSModel hs_p2_fat_point(long d, long m);

/// Disjoint union: quotient coefficients add; eps becomes
/// min(eps_1, eps_2), which is only an upper bound for the true
/// Seshadri constant of the union, so callers may override downward.
/// The saturation flag is reset to false; set it explicitly if both
/// pieces are known to saturate.
HSModel combine_disjoint(const HSModel& h1, const HSModel& h2);

/// Replaces Z by its m-fold thickening: a_i(x) -> a_i(m x), eps -> eps/m.
HSModel thicken(const HSModel& h, long m);

/// Replaces L by L^r: a_i(x) -> r^{n-i} a_i(x/r), eps -> r eps.
/// Stability verdicts are invariant under this.
HSModel scale_polarisation(const HSModel& h, long r);

}  // namespace slopestab
