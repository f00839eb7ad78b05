#include "slopestab/interval_sign.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopestab {

std::string to_string(SignVerdict v) {
    switch (v) {
        case SignVerdict::strictly_positive: return "strictly-positive";
        case SignVerdict::nonnegative_with_zero: return "nonnegative-with-zero";
        case SignVerdict::changes_sign: return "changes-sign";
        case SignVerdict::strictly_negative: return "strictly-negative";
        case SignVerdict::nonpositive_with_zero: return "nonpositive-with-zero";
        case SignVerdict::identically_zero: return "identically-zero";
    }
    return "?";
}

std::string RootWitness::str() const {
    if (exact) return value.str();
    return "(" + lo.str() + "," + hi.str() + ")";
}

namespace {

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rat(1) / a.leading()) * a;  // monic
}

/// p with all repeated roots collapsed to simple ones.
Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 1) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return Poly::divmod(p, g).first;
}

std::vector<Poly> sturm_chain(const Poly& sigma) {
    std::vector<Poly> chain;
    chain.push_back(sigma);
    if (sigma.degree() < 1) return chain;
    chain.push_back(sigma.derivative());
    while (chain.back().degree() > 0) {
        Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
    int variations = 0, prev = 0;
    for (const Poly& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

/// Distinct roots of square-free sigma in the open interval (a, b);
/// requires sigma(a) != 0 and sigma(b) != 0.
int sturm_count_open(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

constexpr int kRefineSteps = 60;

/// Shrinks the unique root of sigma in (a, b) to either an exact
/// rational or a tight isolating interval. sigma is square-free, so the
/// root is simple and sigma changes sign across it.
RootWitness refine_root(const Poly& sigma, Rat a, Rat b) {
    int sa = sigma.eval(a).sign();
    for (int i = 0; i < kRefineSteps; ++i) {
        Rat m = (a + b) / Rat(2);
        int sm = sigma.eval(m).sign();
        if (sm == 0) return RootWitness{true, m, Rat(0), Rat(0)};
        if (sm == sa) a = m; else b = m;
    }
    // A rational root of moderate height is by now the simplest
    // rational in the interval.
    Rat s = simplest_rational_between(a, b);
    if (sigma.eval(s).is_zero()) return RootWitness{true, s, Rat(0), Rat(0)};
    return RootWitness{false, Rat(0), a, b};
}

struct Isolator {
    std::vector<RootWitness> roots;

    void isolate(const Poly& sigma, const std::vector<Poly>& chain,
                 const Rat& a, const Rat& b) {
        int n = sturm_count_open(chain, a, b);
        if (n == 0) return;
        if (n == 1) {
            roots.push_back(refine_root(sigma, a, b));
            return;
        }
        Rat m = (a + b) / Rat(2);
        if (sigma.eval(m).is_zero()) {
            Poly s2 = sigma.deflate_root(m);
            auto c2 = sturm_chain(s2);
            isolate(s2, c2, a, m);
            roots.push_back(RootWitness{true, m, Rat(0), Rat(0)});
            // re-sort below; deflation may interleave emission order
            isolate(s2, c2, m, b);
        } else {
            isolate(sigma, chain, a, m);
            isolate(sigma, chain, m, b);
        }
    }
};

Rat left_bound(const RootWitness& w) { return w.exact ? w.value : w.lo; }
Rat right_bound(const RootWitness& w) { return w.exact ? w.value : w.hi; }

}  // namespace

Rat simplest_rational_between(const Rat& a, const Rat& b) {
    if (!(a < b)) throw std::invalid_argument("simplest_rational_between: empty interval");
    if (a.sign() < 0 && b.sign() > 0) return Rat(0);
    if (b.sign() <= 0) return -simplest_rational_between(-b, -a);
    // 0 <= a < b
    mpz_class f_num = a.num() / a.den();  // floor for nonnegative a
    Rat f(f_num, mpz_class(1));
    if (a == f) {
        if (b > f + Rat(1)) return f + Rat(1);
        // x = f + 1/y with y in (1/(b-f), infinity)
        Rat inv = Rat(1) / (b - f);
        mpz_class fl = inv.num() / inv.den();
        Rat y = Rat(fl, mpz_class(1)) + Rat(1);
        return f + Rat(1) / y;
    }
    if (f + Rat(1) < b) return f + Rat(1);
    return f + Rat(1) / simplest_rational_between(Rat(1) / (b - f), Rat(1) / (a - f));
}

int count_roots(const Poly& p, const Rat& a, const Rat& b) {
    if (!(a < b)) throw std::invalid_argument("count_roots: requires a < b");
    if (p.is_zero()) throw std::invalid_argument("count_roots: zero polynomial");
    Poly sigma = squarefree_part(p);
    int cnt = 0;
    if (sigma.eval(b).is_zero()) {
        ++cnt;
        sigma = sigma.deflate_root(b);
    }
    if (sigma.eval(a).is_zero()) sigma = sigma.deflate_root(a);
    if (sigma.degree() < 1) return cnt;
    auto chain = sturm_chain(sigma);
    return cnt + sturm_count_open(chain, a, b);
}

SignAnalysis sign_on_interval(const Poly& p, const Rat& lo, const Rat& hi,
                              bool include_hi) {
    if (!(lo < hi)) throw std::invalid_argument("sign_on_interval: requires lo < hi");
    SignAnalysis out;
    if (p.is_zero()) {
        out.verdict = SignVerdict::identically_zero;
        return out;
    }

    Poly sigma = squarefree_part(p);
    bool hi_is_root = sigma.eval(hi).is_zero();
    while (sigma.eval(lo).is_zero()) sigma = sigma.deflate_root(lo);
    while (!sigma.is_zero() && sigma.eval(hi).is_zero()) sigma = sigma.deflate_root(hi);

    std::vector<RootWitness> interior;
    if (sigma.degree() >= 1) {
        auto chain = sturm_chain(sigma);
        // Pull the isolation window strictly inside (lo, hi) so no
        // isolating interval can touch an endpoint.
        Rat w = (hi - lo) / Rat(4);
        Rat lo2 = lo + w, hi2 = hi - w;
        while (sigma.eval(lo2).is_zero() || sturm_count_open(chain, lo, lo2) > 0) {
            w /= Rat(2);
            lo2 = lo + w;
        }
        Rat w2 = (hi - lo) / Rat(4);
        while (sigma.eval(hi2).is_zero() || sturm_count_open(chain, hi2, hi) > 0) {
            w2 /= Rat(2);
            hi2 = hi - w2;
        }
        if (lo2 < hi2) {
            Isolator iso;
            iso.isolate(sigma, chain, lo2, hi2);
            interior = std::move(iso.roots);
            std::sort(interior.begin(), interior.end(),
                      [](const RootWitness& x, const RootWitness& y) {
                          return left_bound(x) < left_bound(y);
                      });
        }
    }

    // One sample per root-free gap.
    std::vector<Rat> samples;
    Rat prev = lo;
    for (const auto& r : interior) {
        samples.push_back((prev + left_bound(r)) / Rat(2));
        prev = right_bound(r);
    }
    samples.push_back((prev + hi) / Rat(2));

    out.roots = std::move(interior);
    if (include_hi && hi_is_root)
        out.roots.push_back(RootWitness{true, hi, Rat(0), Rat(0)});

    bool pos = false, neg = false;
    for (const Rat& s : samples) {
        int sg = p.eval(s).sign();
        if (sg > 0 && !pos) { pos = true; out.positive_at = s; }
        if (sg < 0 && !neg) { neg = true; out.negative_at = s; }
    }

    bool zero = !out.roots.empty();
    if (pos && neg) out.verdict = SignVerdict::changes_sign;
    else if (pos) out.verdict = zero ? SignVerdict::nonnegative_with_zero
                                     : SignVerdict::strictly_positive;
    else if (neg) out.verdict = zero ? SignVerdict::nonpositive_with_zero
                                     : SignVerdict::strictly_negative;
    else out.verdict = SignVerdict::identically_zero;  // unreachable for p != 0
    return out;
}

}  // namespace slopestab
