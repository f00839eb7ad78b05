#include "slopestab/summation.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace slopestab {

namespace {
// B_0..B_n via sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<Rat> bernoulli_upto(unsigned n) {
    std::vector<Rat> B(n + 1);
    B[0] = Rat(1);
    for (unsigned m = 1; m <= n; ++m) {
        Rat acc(0);
        for (unsigned j = 0; j < m; ++j) acc += rat_binomial(m + 1, j) * B[j];
        B[m] = -acc / rat_binomial(m + 1, m);
    }
    return B;
}
}  // namespace

Rat bernoulli_number(unsigned i) {
    static std::mutex mu;
    static std::vector<Rat> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() <= i) cache = bernoulli_upto(i + 8);
    return cache[i];
}

Rat bernoulli_beta(unsigned i) {
    if (i == 0) return Rat(1);
    if (i == 1) return Rat(1, 2);
    return bernoulli_number(i) / rat_factorial(i);
}

Rat euler_maclaurin_sum(const Poly& f, const Rat& c, long r) {
    if (r <= 0) throw std::invalid_argument("euler_maclaurin_sum: r must be positive");
    Rat cr = c * Rat(r);
    if (!cr.is_integer() || cr.sign() <= 0)
        throw std::invalid_argument("euler_maclaurin_sum: cr must be a positive integer");
    Rat rr(r);
    Rat total(0);
    Poly deriv = f;
    Rat rpow(r);  // r^{1-i}
    for (int i = 0; !deriv.is_zero(); ++i) {
        total += bernoulli_beta(static_cast<unsigned>(i)) * rpow *
                 deriv.integrate(Rat(0), c);
        deriv = deriv.derivative();
        rpow /= rr;
    }
    return total;
}

Rat literal_sample_sum(const Poly& f, long m, long r) {
    Rat s(0);
    for (long j = 1; j <= m; ++j) s += f.eval(Rat(j, r));
    return s;
}

}  // namespace slopestab
