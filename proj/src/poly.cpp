#include "hecke/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(-x);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * s);
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divrem: division by zero polynomial");
    Poly rem = a;
    std::vector<Rational> q;
    long db = b.degree();
    if (rem.degree() >= db) q.assign(rem.degree() - db + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        long k = rem.degree() - db;
        Rational f = rem.leading() / b.leading();
        q[k] = f;
        for (long i = 0; i <= db; ++i) rem.c_[k + i] -= f * b.c_[i];
        rem.trim();
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::pair<long, Poly> Poly::valuation_at(const Rational& t0) const {
    if (is_zero()) return {-1, Poly()};
    Poly p = *this;
    long k = 0;
    while (p.eval(t0).is_zero()) {
        // synthetic division by (t - t0)
        std::vector<Rational> q(p.c_.size() - 1);
        Rational carry = p.c_.back();
        for (size_t i = p.c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = p.c_[i] + carry * t0;
        }
        p = Poly(std::move(q));
        ++k;
    }
    return {k, p};
}

Poly Poly::substitute_neg() const {
    Poly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(Rational(1));
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = Poly::divrem(x, y).second;
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

}  // namespace hecke
