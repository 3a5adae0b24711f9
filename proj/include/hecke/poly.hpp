// Dense univariate polynomials over Rational.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

class Poly {
public:
    Poly() {}
    Poly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
    Poly(long n) : Poly(Rational(n)) {}
    // coeffs lowest-degree first
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    // c0 + c1*t
    static Poly linear(const Rational& c0, const Rational& c1) {
        return Poly(std::vector<Rational>{c0, c1});
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& coeff(size_t i) const {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient/remainder; divisor must be nonzero
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    Poly monic() const;
    Poly derivative() const;
    Rational eval(const Rational& x) const;
    // largest k with (t-t0)^k | *this, together with this/(t-t0)^k; zero poly -> (-1, 0)
    std::pair<long, Poly> valuation_at(const Rational& t0) const;
    // p(-t)
    Poly substitute_neg() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly gcd(const Poly& a, const Poly& b);

}  // namespace hecke
