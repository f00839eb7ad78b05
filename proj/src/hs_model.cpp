#include "slopestab/hs_model.hpp"

#include <stdexcept>

#include "slopestab/interval_sign.hpp"

namespace slopestab {

void HSModel::validate() const {
    if (n < 1) throw std::invalid_argument("HSModel: dimension must be >= 1");
    if (eps.sign() <= 0) throw std::invalid_argument("HSModel: eps must be > 0");
    if (a0.eval(Rat(0)) != a0_const)
        throw std::invalid_argument("HSModel: a0(0) != a0_const");
    if (a0.degree() > n) throw std::invalid_argument("HSModel: deg a0 > n");
    if (a1.degree() > n - 1) throw std::invalid_argument("HSModel: deg a1 > n-1");
    if (higher && static_cast<int>(higher->size()) != n - 1)
        throw std::invalid_argument("HSModel: higher coefficients must be a_2..a_n");

    auto pos = sign_on_interval(a0, Rat(0), eps, false);
    if (pos.verdict != SignVerdict::strictly_positive)
        throw std::invalid_argument("HSModel: a0 must be strictly positive on (0, eps)");
    Poly d = a0.derivative();
    if (!d.is_zero()) {
        auto nonpos = sign_on_interval(-d, Rat(0), eps, false);
        if (nonpos.verdict != SignVerdict::strictly_positive &&
            nonpos.verdict != SignVerdict::nonnegative_with_zero &&
            nonpos.verdict != SignVerdict::identically_zero)
            throw std::invalid_argument("HSModel: a0 must be non-increasing on (0, eps)");
    }
}

Poly HSModel::hilbert_polynomial() const {
    if (!has_full_coefficients())
        throw std::invalid_argument("HSModel: full coefficients a_2..a_n required");
    Poly chi = Poly::monomial(a0_const, static_cast<unsigned>(n)) +
               Poly::monomial(a1_const, static_cast<unsigned>(n - 1));
    if (higher)
        for (size_t i = 0; i < higher->size(); ++i)
            chi += Poly::monomial((*higher)[i].eval(Rat(0)),
                                  static_cast<unsigned>(n - 2 - static_cast<int>(i)));
    return chi;
}

QuotientHS quotient_of(const HSModel& h) {
    return QuotientHS{Poly::constant(h.a0_const) - h.a0,
                      Poly::constant(h.a1_const) - h.a1};
}

HSModel hs_point_on_smooth(int n, const Rat& Ln, const Rat& KLn1, const Rat& eps,
                           bool saturates) {
    if (n < 1) throw std::invalid_argument("hs_point_on_smooth: n must be >= 1");
    if (Ln.sign() <= 0) throw std::invalid_argument("hs_point_on_smooth: L^n must be > 0");
    if (eps.sign() <= 0) throw std::invalid_argument("hs_point_on_smooth: eps must be > 0");
    HSModel h;
    h.n = n;
    h.a0_const = Ln / rat_factorial(static_cast<unsigned>(n));
    h.a1_const = -KLn1 / (Rat(2) * rat_factorial(static_cast<unsigned>(n - 1)));
    Poly t0 = Poly::monomial(Rat(1) / rat_factorial(static_cast<unsigned>(n)),
                             static_cast<unsigned>(n));
    Poly t1 = Poly::monomial(
        Rat(n - 1) / (Rat(2) * rat_factorial(static_cast<unsigned>(n - 1))),
        static_cast<unsigned>(n - 1));
    h.a0 = Poly::constant(h.a0_const) - t0;
    h.a1 = Poly::constant(h.a1_const) - t1;
    h.eps = eps;
    h.saturates_at_eps = saturates;
    h.validate();
    return h;
}

HSModel hs_divisor_on_curve(long g, long d, long degZ) {
    if (d <= 0) throw std::invalid_argument("hs_divisor_on_curve: deg L must be > 0");
    if (degZ <= 0) throw std::invalid_argument("hs_divisor_on_curve: deg Z must be > 0");
    HSModel h;
    h.n = 1;
    h.a0_const = Rat(d);
    h.a1_const = Rat(1 - g);
    h.a0 = Poly{Rat(d), Rat(-degZ)};
    h.a1 = Poly::constant(h.a1_const);
    h.eps = Rat(d, degZ);
    h.saturates_at_eps = true;
    h.validate();
    return h;
}

HSModel hs_curve_subscheme(long g, long d, const Rat& e, const Rat& rho,
                           const Rat& eps) {
    if (e.sign() <= 0) throw std::invalid_argument("hs_curve_subscheme: e must be > 0");
    HSModel h;
    h.n = 1;
    h.a0_const = Rat(d);
    h.a1_const = Rat(1 - g);
    h.a0 = Poly{Rat(d), -e};
    h.a1 = Poly::constant(h.a1_const + rho);
    h.eps = eps;
    h.validate();
    return h;
}

HSModel hs_p2_fat_point(long d, long m) {
    if (d <= 0 || m <= 0)
        throw std::invalid_argument("hs_p2_fat_point: d and m must be > 0");
    HSModel h;
    h.n = 2;
    h.a0_const = Rat(d * d, 2);
    h.a1_const = Rat(3 * d, 2);
    h.a0 = Poly{h.a0_const, Rat(0), Rat(-m * m, 2)};
    h.a1 = Poly{h.a1_const, Rat(-m, 2)};
    h.higher = std::vector<Poly>{Poly::constant(Rat(1))};
    h.eps = Rat(d, m);
    h.saturates_at_eps = true;
    h.label = "P2(" + std::to_string(d) + ") fat point m=" + std::to_string(m);
    h.validate();
    return h;
}

namespace {
// Largest admissible eps <= bound with a0 > 0 on the open interval;
// the positivity of a0 below the Seshadri constant caps any estimate.
Rat positivity_cap(const Poly& a0, const Rat& bound) {
    auto cls = sign_on_interval(a0, Rat(0), bound, true);
    if (cls.roots.empty()) return bound;
    const RootWitness& first = cls.roots.front();
    return first.exact ? first.value : first.lo;
}
}  // namespace

HSModel combine_disjoint(const HSModel& h1, const HSModel& h2) {
    if (h1.n != h2.n || h1.a0_const != h2.a0_const || h1.a1_const != h2.a1_const)
        throw std::invalid_argument("combine_disjoint: ambient (X, L) data differ");
    HSModel h;
    h.n = h1.n;
    h.a0_const = h1.a0_const;
    h.a1_const = h1.a1_const;
    // a_i = const - a~_i and the a~_i add.
    h.a0 = h1.a0 + h2.a0 - Poly::constant(h1.a0_const);
    h.a1 = h1.a1 + h2.a1 - Poly::constant(h1.a1_const);
    if (h1.higher && h2.higher && h1.higher->size() == h2.higher->size()) {
        std::vector<Poly> hs;
        for (size_t i = 0; i < h1.higher->size(); ++i) {
            Rat c1 = (*h1.higher)[i].eval(Rat(0));
            Rat c2 = (*h2.higher)[i].eval(Rat(0));
            if (c1 != c2) { hs.clear(); break; }
            hs.push_back((*h1.higher)[i] + (*h2.higher)[i] - Poly::constant(c1));
        }
        if (!hs.empty()) h.higher = std::move(hs);
    }
    // min(eps_1, eps_2) is only an upper bound for eps(Z_1 u Z_2); it
    // must additionally respect positivity of the combined a_0.
    h.eps = positivity_cap(h.a0, h1.eps < h2.eps ? h1.eps : h2.eps);
    h.saturates_at_eps = false;
    h.label = h1.label.empty() || h2.label.empty() ? "" : h1.label + " + " + h2.label;
    h.validate();
    return h;
}

HSModel thicken(const HSModel& h, long m) {
    if (m < 1) throw std::invalid_argument("thicken: m must be >= 1");
    if (m == 1) return h;
    HSModel r = h;
    Rat mr(m);
    r.a0 = h.a0.scale_arg(mr);
    r.a1 = h.a1.scale_arg(mr);
    if (h.higher) {
        std::vector<Poly> hs;
        for (const Poly& p : *h.higher) hs.push_back(p.scale_arg(mr));
        r.higher = std::move(hs);
    }
    r.eps = h.eps / mr;
    r.validate();
    return r;
}

HSModel scale_polarisation(const HSModel& h, long r) {
    if (r < 1) throw std::invalid_argument("scale_polarisation: r must be >= 1");
    if (r == 1) return h;
    HSModel s = h;
    Rat rr(r);
    Rat inv = Rat(1) / rr;
    Rat rn = rr.pow(static_cast<unsigned>(h.n));
    s.a0 = rn * h.a0.scale_arg(inv);
    s.a0_const = rn * h.a0_const;
    Rat rn1 = rr.pow(static_cast<unsigned>(h.n - 1));
    s.a1 = rn1 * h.a1.scale_arg(inv);
    s.a1_const = rn1 * h.a1_const;
    if (h.higher) {
        std::vector<Poly> hs;
        for (size_t i = 0; i < h.higher->size(); ++i) {
            Rat f = rr.pow(static_cast<unsigned>(h.n - 2 - static_cast<int>(i)));
            hs.push_back(f * (*h.higher)[i].scale_arg(inv));
        }
        s.higher = std::move(hs);
    }
    s.eps = rr * h.eps;
    s.validate();
    return s;
}

}  // namespace slopestab
