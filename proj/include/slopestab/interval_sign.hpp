#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopestab/polynomial.hpp"

namespace slopestab {

enum class SignVerdict {
    strictly_positive,
    nonnegative_with_zero,
    changes_sign,
    strictly_negative,
    nonpositive_with_zero,
    identically_zero,
};

std::string to_string(SignVerdict v);

/// A real root of a polynomial, either pinned down exactly or isolated
/// in an open interval (lo, hi) on which it is the only root and whose
/// endpoints are not roots.
struct RootWitness {
    bool exact = false;
    Rat value;    // the root, when exact
    Rat lo, hi;   // isolating interval otherwise

    std::string str() const;
};

/// Exact sign classification of a polynomial on an interval, together
/// with its roots there and (when they exist) rational sample points
/// realising each sign.
struct SignAnalysis {
    SignVerdict verdict = SignVerdict::identically_zero;
    std::vector<RootWitness> roots;
    std::optional<Rat> positive_at;
    std::optional<Rat> negative_at;
};

/// Classifies the sign of p on (lo, hi] (include_hi) or (lo, hi), via
/// Sturm-sequence root isolation in exact rational arithmetic.
/// Requires lo < hi.
SignAnalysis sign_on_interval(const Poly& p, const Rat& lo, const Rat& hi,
                              bool include_hi);

/// Number of distinct real roots of p in the half-open interval (a, b].
int count_roots(const Poly& p, const Rat& a, const Rat& b);

/// The unique rational with smallest denominator (then smallest
/// numerator magnitude) in the open interval (a, b). Requires a < b.
Rat simplest_rational_between(const Rat& a, const Rat& b);

}  // namespace slopestab
