#include "slopestab/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopestab::oracle {

namespace {

long require_integer(const Rat& x, const char* what) {
    if (!x.is_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer, got " + x.str());
    return std::stol(x.str());
}

}  // namespace

long h0_vanishing(const ToricCase& tc, long k, long order) {
    if (k <= 0) throw std::invalid_argument("h0_vanishing: k must be positive");
    if (order < 0) order = 0;
    const long deg = tc.d * k;
    long count = 0;
    if (tc.ambient == ToricCase::Ambient::P1) {
        // monomials x^a y^(deg-a); vanishing order at [0:1] is a
        for (long a = 0; a <= deg; ++a)
            if (a >= order) ++count;
    } else {
        // monomials x^a y^b z^(deg-a-b); vanishing order at [0:0:1] is a+b
        for (long a = 0; a <= deg; ++a)
            for (long b = 0; a + b <= deg; ++b)
                if (a + b >= order) ++count;
    }
    return count;
}

long h0_count(const ToricCase& tc, long k, long j) {
    if (j < 0) throw std::invalid_argument("h0_count: j must be >= 0");
    return h0_vanishing(tc, k, tc.m * j);
}

long long brute_normal_cone_weight(const ToricCase& tc, const Rat& c, long k) {
    long ck = require_integer(c * Rat(k), "brute_normal_cone_weight: ck");
    if (ck < 0) throw std::invalid_argument("brute_normal_cone_weight: ck must be >= 0");
    if (c > tc.eps())
        throw std::invalid_argument("brute_normal_cone_weight: c exceeds d/m");
    long long w = 0;
    for (long j = 1; j <= ck; ++j) w += h0_count(tc, k, j);
    w -= static_cast<long long>(ck) * h0_count(tc, k, 0);
    return w;
}

bool flatness_check(const ToricCase& tc, const Rat& c, long k) {
    long ck = require_integer(c * Rat(k), "flatness_check: ck");
    // weight space j = 0 is h^0(L^k I^{ck}); j = 1..ck are the
    // successive quotients h^0(I^{ck-j}) - h^0(I^{ck-j+1})
    long long total = h0_count(tc, k, ck);
    for (long j = 1; j <= ck; ++j)
        total += h0_count(tc, k, ck - j) - h0_count(tc, k, ck - j + 1);
    return total == h0_count(tc, k, 0);
}

long long brute_graded_weight(const GradedTC& g, long k) {
    if (k <= 0) throw std::invalid_argument("brute_graded_weight: k must be positive");
    const auto& L = g.layers;
    if (L.empty()) throw std::invalid_argument("brute_graded_weight: no layers");
    for (size_t i = 0; i < L.size(); ++i) {
        if (L[i] < 0) throw std::invalid_argument("brute_graded_weight: negative layer");
        if (i > 0 && L[i] > L[i - 1])
            throw std::invalid_argument("brute_graded_weight: layers must be non-increasing");
    }
    if (L.front() > g.tc.d)
        throw std::invalid_argument("brute_graded_weight: leading layer exceeds d");
    const long r = static_cast<long>(L.size());

    // t-degree-j piece of I = I_0 + t I_1 + ... + (t^r) is the point
    // ideal of order W1[j]; pieces of I^k follow by min-plus powers
    // (products of monomial ideals add exponents, sums take minima).
    std::vector<long> W1(static_cast<size_t>(r) + 1);
    for (long j = 0; j < r; ++j) W1[static_cast<size_t>(j)] = L[static_cast<size_t>(j)];
    W1[static_cast<size_t>(r)] = 0;

    std::vector<long> Wk = W1;
    for (long step = 1; step < k; ++step) {
        std::vector<long> next(Wk.size() + W1.size() - 1, 0);
        for (size_t j = 0; j < next.size(); ++j) {
            long best = -1;
            for (size_t j1 = 0; j1 < W1.size(); ++j1) {
                if (j1 > j) break;
                size_t j2 = j - j1;
                if (j2 >= Wk.size()) continue;
                long cand = W1[j1] + Wk[j2];
                if (best < 0 || cand < best) best = cand;
            }
            next[j] = best;
        }
        Wk = std::move(next);
    }

    // w(k) = -sum_j j * dim(piece_j) = sum_{j<kr} h^0(order W_k[j]) - kr h^0
    const long kr = k * r;
    long long w = 0;
    for (long j = 0; j < kr; ++j)
        w += h0_vanishing(g.tc, k, Wk[static_cast<size_t>(j)]);
    w -= static_cast<long long>(kr) * h0_vanishing(g.tc, k, 0);
    return w;
}

Poly fit_weight_poly(const std::vector<std::pair<Rat, Rat>>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("fit_weight_poly: need at least two samples");
    std::vector<std::pair<Rat, Rat>> head(samples.begin(), samples.end() - 1);
    Poly p = interpolate(head);
    for (const auto& [kk, w] : samples)
        if (p.eval(kk) != w)
            throw std::runtime_error("fit_weight_poly: sample at k = " + kk.str() +
                                     " deviates from the interpolant");
    return p;
}

long local_quotient_dim(const std::vector<LocalGen>& gens, long k) {
    if (k <= 0) throw std::invalid_argument("local_quotient_dim: k must be positive");
    if (gens.empty()) throw std::invalid_argument("local_quotient_dim: no generators");
    bool has_x = false, has_y = false;
    long pmax = 0, qmax = 0;
    for (const auto& gen : gens) {
        if (gen.a.is_zero() && gen.b.is_zero())
            throw std::invalid_argument("local_quotient_dim: zero generator");
        if (!gen.a.is_zero()) {
            if (gen.p < 1)
                throw std::invalid_argument("local_quotient_dim: ideal not supported at origin");
            has_x = true;
            pmax = std::max(pmax, gen.p);
        }
        if (!gen.b.is_zero()) {
            if (gen.q < 1)
                throw std::invalid_argument("local_quotient_dim: ideal not supported at origin");
            has_y = true;
            qmax = std::max(qmax, gen.q);
        }
    }
    if (!has_x || !has_y)
        throw std::invalid_argument("local_quotient_dim: ideal not supported at origin");

    // Truncate R = C[X,Y]/(XY) at X^T, Y^T; basis 1, X..X^{T-1}, Y..Y^{T-1}.
    const long T = k * (pmax + qmax) + 2;
    const long dimR = 2 * T - 1;
    auto idx_x = [T](long e) { return e; };            // X^e, e >= 1
    auto idx_y = [T](long e) { return T - 1 + e; };    // Y^e, e >= 1

    // I^k is spanned by the k-fold products alpha X^P + beta Y^Q of
    // generators and their monomial shifts: any shifted product is a
    // pure monomial, so shifts contribute X^{>=Pmin+1}, Y^{>=Qmin+1}.
    std::vector<std::vector<Rat>> rows;
    long Pmin = -1, Qmin = -1;
    const size_t ng = gens.size();
    std::vector<size_t> pick(static_cast<size_t>(k), 0);
    while (true) {
        Rat alpha(1), beta(1);
        long P = 0, Q = 0;
        for (long s = 0; s < k; ++s) {
            const auto& gen = gens[pick[static_cast<size_t>(s)]];
            alpha *= gen.a;
            beta *= gen.b;
            P += gen.p;
            Q += gen.q;
        }
        if (!alpha.is_zero() || !beta.is_zero()) {
            std::vector<Rat> row(static_cast<size_t>(dimR), Rat(0));
            if (!alpha.is_zero() && P < T) row[static_cast<size_t>(idx_x(P))] = alpha;
            if (!beta.is_zero() && Q < T) row[static_cast<size_t>(idx_y(Q))] = beta;
            rows.push_back(std::move(row));
            if (!alpha.is_zero() && (Pmin < 0 || P < Pmin)) Pmin = P;
            if (!beta.is_zero() && (Qmin < 0 || Q < Qmin)) Qmin = Q;
        }
        // next multiset (non-decreasing pick vector)
        long s = k - 1;
        while (s >= 0 && pick[static_cast<size_t>(s)] == ng - 1) --s;
        if (s < 0) break;
        size_t v = pick[static_cast<size_t>(s)] + 1;
        for (long t2 = s; t2 < k; ++t2) pick[static_cast<size_t>(t2)] = v;
    }
    for (long e = Pmin + 1; e < T; ++e) {
        std::vector<Rat> row(static_cast<size_t>(dimR), Rat(0));
        row[static_cast<size_t>(idx_x(e))] = Rat(1);
        rows.push_back(std::move(row));
    }
    for (long e = Qmin + 1; e < T; ++e) {
        std::vector<Rat> row(static_cast<size_t>(dimR), Rat(0));
        row[static_cast<size_t>(idx_y(e))] = Rat(1);
        rows.push_back(std::move(row));
    }

    // exact rank
    long rank = 0;
    size_t col = 0;
    for (; col < static_cast<size_t>(dimR) && static_cast<size_t>(rank) < rows.size(); ++col) {
        size_t pivot = rows.size();
        for (size_t rI = static_cast<size_t>(rank); rI < rows.size(); ++rI)
            if (!rows[rI][col].is_zero()) { pivot = rI; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
        const Rat lead = rows[static_cast<size_t>(rank)][col];
        for (size_t rI = static_cast<size_t>(rank) + 1; rI < rows.size(); ++rI) {
            if (rows[rI][col].is_zero()) continue;
            Rat f = rows[rI][col] / lead;
            for (size_t cI = col; cI < static_cast<size_t>(dimR); ++cI)
                rows[rI][cI] -= f * rows[static_cast<size_t>(rank)][cI];
        }
        ++rank;
    }
    return dimR - rank;
}

std::pair<long, long> curve_local_rho(const std::vector<LocalGen>& gens, long kmax) {
    if (kmax < 4) throw std::invalid_argument("curve_local_rho: kmax too small");
    std::vector<long> dims(static_cast<size_t>(kmax) + 1, 0);
    for (long k = 2; k <= kmax; ++k)
        dims[static_cast<size_t>(k)] = local_quotient_dim(gens, k);

    // affine fit dim = e k - rho on the upper half of the range
    const long k0 = kmax / 2;
    const long e = dims[static_cast<size_t>(k0 + 1)] - dims[static_cast<size_t>(k0)];
    const long rho = e * k0 - dims[static_cast<size_t>(k0)];
    for (long k = k0; k <= kmax; ++k)
        if (dims[static_cast<size_t>(k)] != e * k - rho)
            throw std::runtime_error("curve_local_rho: dim R/I^k is not affine on the sampled tail");
    return {e, rho};
}

HSModel model_of(const ToricCase& tc) {
    if (tc.ambient == ToricCase::Ambient::P1) {
        HSModel h = hs_divisor_on_curve(0, tc.d, tc.m);
        h.label = "P1(" + std::to_string(tc.d) + ") fat point m=" + std::to_string(tc.m);
        return h;
    }
    return hs_p2_fat_point(tc.d, tc.m);
}

}  // namespace slopestab::oracle
