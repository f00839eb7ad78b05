#include "slopestab/chow.hpp"

#include <stdexcept>

#include "slopestab/summation.hpp"
#include "slopestab/testconfig.hpp"

namespace slopestab {

void ChowData::validate() const {
    Rat prev = N_plus_1;
    long expect = 1;
    for (const auto& [i, h0] : h0_ideal) {
        if (i != expect)
            throw std::invalid_argument("ChowData: powers must be 1..c without gaps");
        if (h0 > prev)
            throw std::invalid_argument("ChowData: h^0(I^i(1)) must be non-increasing");
        prev = h0;
        ++expect;
    }
}

namespace {
Rat deficiency_sum(const ChowData& data, long c) {
    if (c < 1) throw std::invalid_argument("chow: c must be a positive integer");
    Rat s(0);
    for (long i = 1; i <= c; ++i) {
        auto it = data.h0_ideal.find(i);
        if (it == data.h0_ideal.end())
            throw std::invalid_argument("chow: missing h^0(I^" + std::to_string(i) + "(1))");
        s += data.N_plus_1 - it->second;
    }
    return s;
}
}  // namespace

ExtRat chow_slope(const ChowData& data, long c) {
    data.validate();
    if (c < 1) throw std::invalid_argument("chow_slope: c must be a positive integer");
    if (Rat(c) > data.base.eps)
        throw std::domain_error("chow_slope: c exceeds the Seshadri constant");
    Rat num(0);
    for (long i = 1; i <= c; ++i) {
        auto it = data.h0_ideal.find(i);
        if (it == data.h0_ideal.end())
            throw std::invalid_argument("chow_slope: missing h^0(I^" + std::to_string(i) + "(1))");
        num += it->second;
    }
    Rat den = data.base.a0.integrate(Rat(0), Rat(c));
    if (den.is_zero()) return ExtRat{false, Rat(0)};
    return ExtRat{true, num / den};
}

Rat chow_of_X(const ChowData& data) {
    if (data.base.a0_const.sign() <= 0)
        throw std::domain_error("chow_of_X: a_0 must be > 0");
    return data.N_plus_1 / data.base.a0_const;
}

Rat chow_quotient_slope(const ChowData& data, long c) {
    data.validate();
    if (c < 1) throw std::invalid_argument("chow_quotient_slope: c must be a positive integer");
    Rat den = quotient_of(data.base).t0.integrate(Rat(0), Rat(c));
    if (den.sign() <= 0)
        throw std::domain_error("chow_quotient_slope: int a~_0 must be > 0 (is Z empty?)");
    return deficiency_sum(data, c) / den;
}

Rat uniform_constant_curve(long g, long d) {
    if (g < 1) throw std::invalid_argument("uniform_constant_curve: g must be >= 1");
    if (d <= 2 * g - 2)
        throw std::invalid_argument("uniform_constant_curve: need d > 2g - 2");
    return Rat(g, d);
}

Rat chow_threshold_curve(long g, long d) {
    if (d <= 2 * g - 2)
        throw std::invalid_argument("chow_threshold_curve: need d > 2g - 2");
    if (d <= g) throw std::invalid_argument("chow_threshold_curve: need d > g");
    return (Rat(1) + Rat(1, d - g)) * (Rat(g) - Rat(1, 2)) / Rat(d);
}

bool decide_asymptotic_chow_curve(long g, long d) {
    return uniform_constant_curve(g, d) > chow_threshold_curve(g, d);
}

Rat EtaExpansion::value_at(long r) const {
    Rat v(0);
    for (const Rat& c : coeffs) v = v * Rat(r) + c;
    return v;
}

EtaExpansion eta(const HSModel& h, const Rat& c) {
    if (!h.has_full_coefficients())
        throw std::invalid_argument("eta: model must carry the full a_0..a_n");
    if (c.sign() <= 0 || c > h.eps)
        throw std::domain_error("eta: c outside (0, eps]");
    std::vector<Poly> a(static_cast<size_t>(h.n) + 1);
    a[0] = h.a0;
    a[1] = h.a1;
    if (h.higher)
        for (size_t i = 0; i < h.higher->size(); ++i) a[i + 2] = (*h.higher)[i];

    Rat den = h.a0.integrate(Rat(0), c);
    if (den.sign() <= 0) throw std::domain_error("eta: int_0^c a_0 must be > 0");

    EtaExpansion out;
    for (int j = 0; j <= h.n + 1; ++j) {
        Rat num(0);
        for (int i = 0; i <= j; ++i) {
            if (j - i > h.n) continue;
            Poly deriv = a[static_cast<size_t>(j - i)];
            for (int t = 0; t < i; ++t) deriv = deriv.derivative();
            num += bernoulli_beta(static_cast<unsigned>(i)) * deriv.integrate(Rat(0), c);
        }
        out.coeffs.push_back(num / den);
    }
    return out;
}

Rat eta_X(const HSModel& h, long r) {
    if (r < 1) throw std::invalid_argument("eta_X: r must be >= 1");
    return Rat(r) * h.hilbert_polynomial().eval(Rat(r)) / h.a0_const;
}

Rat chow_weight_coeff(const HSModel& h, const Rat& c, long r, const Rat& w_r,
                      const Rat& chi_r) {
    if (r < 1) throw std::invalid_argument("chow_weight_coeff: r must be >= 1");
    Rat b0 = h.a0.integrate(Rat(0), c) - c * h.a0_const;
    return b0 * Rat(r) * chi_r - h.a0_const * w_r;
}

}  // namespace slopestab
