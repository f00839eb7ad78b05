#pragma once

#include "slopestab/polynomial.hpp"

namespace slopestab {

/// Bernoulli number B_i with the B_1 = -1/2 convention.
Rat bernoulli_number(unsigned i);

/// beta_0 = 1, beta_1 = 1/2, beta_i = B_i / i! for i >= 2.
/// These are the coefficients of the exact polynomial summation
/// formula below.
Rat bernoulli_beta(unsigned i);

/// Exact value of sum_{j=1}^{cr} f(j/r), computed as
/// integral_0^c of sum_i beta_i f^(i)(x) / r^(i-1) dx.
/// For polynomial f the formula is exact, not asymptotic.
/// Requires cr to be a positive integer.
Rat euler_maclaurin_sum(const Poly& f, const Rat& c, long r);

/// The literal finite sum sum_{j=1}^{m} f(j/r); the independent check
/// for euler_maclaurin_sum.
Rat literal_sample_sum(const Poly& f, long m, long r);

}  // namespace slopestab
