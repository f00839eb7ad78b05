#include "slopestab/slope.hpp"

#include <stdexcept>

namespace slopestab {

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable_wrt_z: return "stable-wrt-Z";
        case Stability::strictly_destabilised: return "strictly-destabilised";
        case Stability::boundary_semistable: return "boundary-semistable";
    }
    return "?";
}

Rat mu_X(const HSModel& h) {
    if (h.a0_const.sign() <= 0) throw std::domain_error("mu_X: a_0 must be > 0");
    return h.a1_const / h.a0_const;
}

namespace {
void check_c(const HSModel& h, const Rat& c, const char* who) {
    if (c.sign() <= 0 || c > h.eps)
        throw std::domain_error(std::string(who) + ": c outside (0, eps]");
}
}  // namespace

Rat mu_c_ideal(const HSModel& h, const Rat& c) {
    check_c(h, c, "mu_c_ideal");
    Rat den = h.a0.integrate(Rat(0), c);
    if (den.sign() <= 0) throw std::domain_error("mu_c_ideal: int_0^c a_0 must be > 0");
    Rat num = (h.a1 + Rat(1, 2) * h.a0.derivative()).integrate(Rat(0), c);
    return num / den;
}

Rat mu_c_quotient(const HSModel& h, const Rat& c) {
    check_c(h, c, "mu_c_quotient");
    QuotientHS q = quotient_of(h);
    Rat den = q.t0.integrate(Rat(0), c);
    if (den.sign() <= 0)
        throw std::domain_error("mu_c_quotient: int_0^c a~_0 must be > 0 (is Z empty?)");
    Rat num = (q.t1 + Rat(1, 2) * q.t0.derivative()).integrate(Rat(0), c);
    return num / den;
}

Rat futaki(const HSModel& h, const Rat& c) {
    check_c(h, c, "futaki");
    return h.a0_const * margin_poly(h).eval(c);
}

Poly margin_poly(const HSModel& h) {
    Rat mu = mu_X(h);
    Poly A0 = h.a0.antiderivative();
    Poly A1 = (h.a1 + Rat(1, 2) * h.a0.derivative()).antiderivative();
    return mu * A0 - A1;
}

StabilityVerdict decide(const HSModel& h) {
    StabilityVerdict v;
    v.margin = margin_poly(h);

    if (v.margin.is_zero()) {
        // Empty subscheme: equality mu_c = mu(X) for every c.
        v.status = Stability::boundary_semistable;
        v.c_star = h.eps;
        return v;
    }

    SignAnalysis interior = sign_on_interval(v.margin, Rat(0), h.eps, false);
    SignAnalysis reported = sign_on_interval(v.margin, Rat(0), h.eps, true);
    v.zero_set = reported.roots;

    Rat at_eps = v.margin.eval(h.eps);
    bool neg_interior = interior.negative_at.has_value();
    bool neg_boundary = h.saturates_at_eps && at_eps.sign() < 0;

    if (neg_interior || neg_boundary) {
        v.status = Stability::strictly_destabilised;
        v.c_star = neg_interior ? *interior.negative_at : h.eps;
        return v;
    }

    bool zero_interior = !interior.roots.empty();
    bool zero_boundary = h.saturates_at_eps && at_eps.is_zero();
    if (zero_interior || zero_boundary) {
        v.status = Stability::boundary_semistable;
        if (zero_interior && interior.roots.front().exact)
            v.c_star = interior.roots.front().value;
        else if (!zero_interior)
            v.c_star = h.eps;
        return v;
    }

    v.status = Stability::stable_wrt_z;
    return v;
}

bool cy_canonical_check(const HSModel& h, const Rat& alpha) {
    if (alpha.sign() < 0)
        throw std::invalid_argument("cy_canonical_check: alpha must be >= 0");
    // K = alpha L forces mu(X) = -n alpha / 2.
    if (mu_X(h) != -Rat(h.n) * alpha / Rat(2))
        throw std::invalid_argument("cy_canonical_check: model is not consistent with K = alpha L");
    QuotientHS q = quotient_of(h);
    if (q.t0.is_zero() && q.t1.is_zero()) return true;  // empty Z

    // Pointwise: -mu(X) a_0(x) + a_1(x) <= 0 on (0, eps].
    Poly g = h.a1 - mu_X(h) * h.a0;
    if (!g.is_zero()) {
        auto cls = sign_on_interval(-g, Rat(0), h.eps, true);
        if (cls.verdict != SignVerdict::strictly_positive &&
            cls.verdict != SignVerdict::nonnegative_with_zero)
            return false;
    }
    // Integrated, with the a_0'/2 correction: strict positivity of N.
    auto cls = sign_on_interval(margin_poly(h), Rat(0), h.eps, true);
    return cls.verdict == SignVerdict::strictly_positive;
}

}  // namespace slopestab
