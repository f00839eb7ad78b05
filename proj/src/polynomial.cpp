#include "slopestab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace slopestab {

Poly Poly::monomial(const Rat& a, unsigned k) {
    if (a.is_zero()) return Poly();
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = a;
    return Poly(std::move(c));
}

Rat Poly::leading() const {
    if (is_zero()) return Rat(0);
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<Rat> a(c_.size() + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        a[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return Poly(std::move(a));
}

Rat Poly::integrate(const Rat& a, const Rat& b) const {
    Poly F = antiderivative();
    return F.eval(b) - F.eval(a);
}

Poly Poly::scale_arg(const Rat& s) const {
    std::vector<Rat> r(c_.size());
    Rat p(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * p;
        p *= s;
    }
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> r(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly r = a;
    if (a.degree() < b.degree()) return {Poly(), r};
    std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
    Rat lead = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
        Rat f = r.leading() / lead;
        q[shift] = f;
        r = r - Poly::monomial(f, shift) * b;
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::deflate_root(const Rat& r) const {
    auto [q, rem] = divmod(*this, Poly{-r, Rat(1)});
    if (!rem.is_zero())
        throw std::domain_error("Poly: deflate_root at a non-root");
    return q;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(static_cast<unsigned>(i));
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rat a = c.abs();
        if (i == 0 || a != Rat(1)) os << a.str();
        if (i > 0) {
            if (a != Rat(1)) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton divided differences, then expansion to the monomial basis.
    const size_t n = points.size();
    if (n == 0) return Poly();
    std::vector<Rat> coef(n);
    std::vector<Rat> col(n);
    for (size_t i = 0; i < n; ++i) col[i] = points[i].second;
    coef[0] = col[0];
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i) {
            Rat dx = points[i + level].first - points[i].first;
            if (dx.is_zero())
                throw std::invalid_argument("interpolate: duplicate abscissa " +
                                            points[i].first.str());
            col[i] = (col[i + 1] - col[i]) / dx;
        }
        coef[level] = col[0];
    }
    Poly p = Poly::constant(coef[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        p = p * Poly{-points[i].first, Rat(1)} + Poly::constant(coef[i]);
    }
    return p;
}

}  // namespace slopestab
