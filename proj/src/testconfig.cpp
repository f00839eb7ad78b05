#include "slopestab/testconfig.hpp"

#include <numeric>
#include <stdexcept>

namespace slopestab {

std::string to_string(WeightAccuracy a) {
    switch (a) {
        case WeightAccuracy::exact: return "exact";
        case WeightAccuracy::up_to_k_nminus1: return "up-to-k^{n-1}";
        case WeightAccuracy::up_to_k_n: return "up-to-k^n";
    }
    return "?";
}

WeightExpansion normal_cone_weight(const HSModel& h, const Rat& c) {
    if (c.sign() <= 0 || c > h.eps)
        throw std::domain_error("normal_cone_weight: c outside (0, eps]");
    if (c == h.eps && !h.saturates_at_eps)
        throw std::domain_error(
            "normal_cone_weight: c = eps requires sections to saturate there");
    WeightExpansion w;
    w.b0 = h.a0.integrate(Rat(0), c) - c * h.a0_const;
    w.b1 = (h.a1 + Rat(1, 2) * h.a0.derivative()).integrate(Rat(0), c) -
           c * h.a1_const;
    w.accuracy = WeightAccuracy::up_to_k_nminus1;
    return w;
}

Rat normalized_weight(const Rat& c, long r, long k, const SectionCounts& counts) {
    if (r <= 0 || k <= 0)
        throw std::invalid_argument("normalized_weight: r, k must be positive");
    Rat ck = c * Rat(k), cr = c * Rat(r);
    if (!ck.is_integer() || !cr.is_integer())
        throw std::invalid_argument("normalized_weight: ck and cr must be integers");
    long ckl = std::stol(ck.str()), crl = std::stol(cr.str());

    Rat chi_r = counts(r, 0), chi_k = counts(k, 0);
    Rat sum_k(0);
    for (long j = 1; j <= ckl; ++j) sum_k += counts(k, j);
    Rat w_r(0);
    for (long j = 1; j <= crl; ++j) w_r += counts(r, j);
    w_r -= cr * chi_r;

    return Rat(r) * chi_r * sum_k - Rat(k) * chi_k * w_r -
           c * Rat(k) * chi_k * Rat(r) * chi_r;
}

NewtonDiagram concave_hull(const std::vector<LatticePoint>& raw_points) {
    if (raw_points.size() < 2)
        throw std::invalid_argument("concave_hull: need at least two points");
    for (size_t i = 0; i < raw_points.size(); ++i) {
        if (raw_points[i].p < 0 || raw_points[i].i < 0)
            throw std::invalid_argument("concave_hull: negative lattice point");
        if (i > 0) {
            if (raw_points[i].i <= raw_points[i - 1].i)
                throw std::invalid_argument("concave_hull: t-exponents must increase");
            if (raw_points[i].p > raw_points[i - 1].p)
                throw std::invalid_argument("concave_hull: z-exponents must be non-increasing");
        }
    }
    if (raw_points.front().i != 0)
        throw std::invalid_argument("concave_hull: first point must have t-exponent 0");
    if (raw_points.back().p != 0)
        throw std::invalid_argument("concave_hull: last point must have p = 0");

    // Equal z-exponents: only the lowest t-power matters (the rest lie
    // in its multiples); these are the 0/0 segments we skip.
    std::vector<LatticePoint> pts;
    for (const auto& q : raw_points) {
        if (!pts.empty() && pts.back().p == q.p) continue;
        pts.push_back(q);
    }

    NewtonDiagram d;
    d.raw_points = raw_points;
    auto slope = [](const LatticePoint& a, const LatticePoint& b) {
        return Rat(b.i - a.i) / Rat(a.p - b.p);  // k decreasing, rho increasing
    };
    std::vector<LatticePoint>& hull = d.hull_vertices;
    for (const auto& q : pts) {
        while (hull.size() >= 2 &&
               slope(hull[hull.size() - 2], hull.back()) > slope(hull.back(), q))
            hull.pop_back();
        hull.push_back(q);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i)
        d.slopes.push_back(slope(hull[i], hull[i + 1]));
    return d;
}

NewtonDiagram basechange(const NewtonDiagram& d, long M) {
    if (M < 1) throw std::invalid_argument("basechange: M must be >= 1");
    NewtonDiagram r;
    for (auto q : d.raw_points) r.raw_points.push_back({q.p, q.i * M});
    for (auto q : d.hull_vertices) r.hull_vertices.push_back({q.p, q.i * M});
    for (const auto& m : d.slopes) r.slopes.push_back(Rat(M) * m);
    return r;
}

WeightExpansion divisor_tc_weight(const NewtonDiagram& d, const HSModel& hD,
                                  bool ample) {
    if (d.hull_vertices.size() < 2)
        throw std::invalid_argument("divisor_tc_weight: degenerate diagram");
    for (const auto& v : d.hull_vertices)
        if (Rat(v.p) > hD.eps)
            throw std::domain_error("divisor_tc_weight: vertex k = " +
                                    std::to_string(v.p) +
                                    " exceeds the Seshadri constant");

    // Clear slope denominators by base change, combine with integral
    // coefficients, then divide the weight back by M.
    mpz_class M(1);
    for (const auto& m : d.slopes) mpz_lcm(M.get_mpz_t(), M.get_mpz_t(), m.den().get_mpz_t());
    long Ml = static_cast<long>(M.get_si());
    NewtonDiagram dd = basechange(d, Ml);

    WeightExpansion total;
    total.b0 = Rat(0);
    total.b1 = Rat(0);
    Rat prev(0);
    for (size_t i = 0; i + 1 < dd.hull_vertices.size(); ++i) {
        Rat coeff = dd.slopes[i] - prev;  // >= 0 by concavity
        prev = dd.slopes[i];
        if (coeff.is_zero()) continue;
        WeightExpansion w = normal_cone_weight(hD, Rat(dd.hull_vertices[i].p));
        total.b0 += coeff * w.b0;
        total.b1 += coeff * w.b1;
    }
    total.b0 /= Rat(Ml);
    total.b1 /= Rat(Ml);
    total.accuracy = (ample && Ml == 1) ? WeightAccuracy::up_to_k_nminus1
                                        : WeightAccuracy::up_to_k_n;
    return total;
}

Rat seshadri_of_chain(const std::vector<Rat>& eps_list) {
    if (eps_list.empty())
        throw std::invalid_argument("seshadri_of_chain: empty list");
    Rat m = eps_list.front();
    for (const Rat& e : eps_list) {
        if (e.sign() <= 0)
            throw std::invalid_argument("seshadri_of_chain: constants must be > 0");
        if (e < m) m = e;
    }
    return m;
}

}  // namespace slopestab
