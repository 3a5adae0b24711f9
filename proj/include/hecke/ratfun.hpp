// Field of univariate rational functions over Q, canonical reduced form.
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "hecke/poly.hpp"

namespace hecke {

struct ValuationData {
    long order = 0;      // order of vanishing at t0 (negative for a pole)
    int sign = 0;        // sign of the leading coefficient
    Rational leading;    // c in f = c*(t-t0)^order*(1 + O(t-t0))
    bool zero = false;   // f == 0; order is conventionally +infinity
};

class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFun(long n) : RatFun(Rational(n)) {}
    RatFun(const Poly& p) : num_(p), den_(Rational(1)) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFun operator-() const;
    RatFun inverse() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    bool defined_at(const Rational& t0) const { return !den_.eval(t0).is_zero(); }
    Rational eval(const Rational& t0) const;
    ValuationData valuation_and_sign(const Rational& t0) const;
    // degree(num) - degree(den); for t -> infinity behaviour
    long inf_degree() const { return num_.degree() - den_.degree(); }
    // limit as t -> +infinity when inf_degree() == 0: ratio of leading coeffs
    Rational leading_ratio() const { return num_.leading() / den_.leading(); }
    RatFun substitute_neg() const { return RatFun(num_.substitute_neg(), den_.substitute_neg()); }

    std::string str(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const RatFun& f);

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace hecke

namespace Eigen {

template <>
struct NumTraits<hecke::RatFun> {
    using Real = hecke::RatFun;
    using NonInteger = hecke::RatFun;
    using Nested = hecke::RatFun;
    using Literal = hecke::RatFun;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 128,
        MulCost = 128
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace hecke {

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatFunMatrix = Eigen::Matrix<RatFun, Eigen::Dynamic, Eigen::Dynamic>;
using RatFunVector = Eigen::Matrix<RatFun, Eigen::Dynamic, 1>;

}  // namespace hecke
