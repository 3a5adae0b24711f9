#include <doctest.h>

#include "hecke/ratfun.hpp"
#include "hecke/sturm.hpp"

using namespace hecke;

namespace {
Poly T() { return Poly::t(); }
Poly C(long n) { return Poly(Rational(n)); }
}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("x"));
    CHECK(Rational(3, 2).str() == "3/2");
}

TEST_CASE("polynomial quotients cancel") {
    // (t^2 - 1)/(t - 1) = t + 1
    RatFun f(T() * T() - C(1), T() - C(1));
    CHECK(f == RatFun(T() + C(1)));
    RatFun g(T() - C(1), T() + C(1));
    CHECK(g + (-g) == RatFun());
    CHECK(g * g.inverse() == RatFun(1));
    CHECK_THROWS(RatFun(1) / RatFun());
}

TEST_CASE("valuation and sign extraction") {
    Poly tm1 = T() - C(1);
    RatFun f(tm1 * tm1 * (T() + C(3)), T() + C(1));
    auto v = f.valuation_and_sign(Rational(1));
    CHECK(v.order == 2);
    CHECK(v.sign == 1);
    CHECK(v.leading == Rational(2));

    RatFun g(tm1, T() + C(1));
    auto w = g.valuation_and_sign(Rational(3));
    CHECK(w.order == 0);
    CHECK(g.eval(Rational(3)) == Rational(1, 2));

    auto u = RatFun(1).valuation_and_sign(Rational(7));
    CHECK(u.order == 0);
    CHECK(u.sign == 1);

    CHECK(RatFun().valuation_and_sign(Rational(0)).zero);
}

TEST_CASE("valuation is additive and subadditive") {
    RatFun a(T() - C(2), C(1));
    RatFun b((T() - C(2)) * (T() + C(5)), T() - C(7));
    Rational t0(2);
    auto va = a.valuation_and_sign(t0), vb = b.valuation_and_sign(t0);
    CHECK((a * b).valuation_and_sign(t0).order == va.order + vb.order);
    auto vs = (a + b).valuation_and_sign(t0);
    CHECK(vs.order >= std::min(va.order, vb.order));
    RatFun c = a * a;  // order 2 vs order 1: minimum wins
    CHECK((a + c).valuation_and_sign(t0).order == 1);
}

TEST_CASE("sturm root counting") {
    Poly p = (T() - C(1)) * (T() - C(2)) * (T() + C(3));
    CHECK(count_real_roots(p, Rational(0), Rational(5, 2)) == 2);
    CHECK(count_real_roots(p, Rational(-4), Rational(3)) == 3);
    CHECK(count_real_roots(p, Rational(3), Rational(10)) == 0);
    // multiple roots counted once
    CHECK(count_real_roots(p * p, Rational(-4), Rational(3)) == 3);
}

TEST_CASE("root free radius shrinks past nearby roots") {
    Poly far = T() - Poly(Rational(9, 8));
    CHECK(root_free_radius({far}, Rational(1), Rational(1, 10)) == Rational(1, 10));
    Poly near = T() - Poly(Rational(21, 20));
    Rational r = root_free_radius({near}, Rational(1), Rational(1, 10));
    CHECK(r < Rational(1, 20));
    CHECK(count_real_roots(near, Rational(1) - r, Rational(1) + r) == 0);
    // a root exactly at t0 is tolerated
    Poly at = T() - C(1);
    CHECK(root_free_radius({at}, Rational(1), Rational(1, 10)) == Rational(1, 10));
}

TEST_CASE("serialization") {
    RatFun f((T() - C(1)) * (T() + C(3)), T() + C(1));
    CHECK(f.str() == "(t^2 + 2*t - 3)/(t + 1)");
    CHECK(RatFun(Rational(3, 2)).str() == "3/2");
    CHECK(Poly(std::vector<Rational>{Rational(0), Rational(-1)}).str() == "-t");
}
