#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "slopestab/rational.hpp"

namespace slopestab {

/// Dense univariate polynomial over Rat. Coefficient i is the
/// coefficient of x^i; trailing zeros are trimmed, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
///
/// Degrees in this library stay tiny (at most dimension + 2), so the
/// dense representation and quadratic algorithms are deliberate.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rat& a) { return Poly{a}; }
    static Poly x() { return Poly{Rat(0), Rat(1)}; }
    /// a * x^k
    static Poly monomial(const Rat& a, unsigned k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat leading() const;

    Rat eval(const Rat& x) const;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// Exact definite integral over [a, b].
    Rat integrate(const Rat& a, const Rat& b) const;

    /// p(s * x)
    Poly scale_arg(const Rat& s) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg r < deg b. Throws on division by the zero polynomial.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// Exact division by (x - r); throws if r is not a root.
    Poly deflate_root(const Rat& r) const;

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Interpolating polynomial through the given points (Newton form,
/// exact). Throws std::invalid_argument on duplicate abscissae.
Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace slopestab
