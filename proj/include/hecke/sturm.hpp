// Sturm-sequence root counting, used to pick exact side-signature sample points.
#pragma once

#include <vector>

#include "hecke/poly.hpp"

namespace hecke {

// distinct real roots of p in the half-open interval (a, b]
long count_real_roots(const Poly& p, const Rational& a, const Rational& b);

// Largest delta of the form cap/2^k such that no polynomial in ps has a root in
// (t0-delta, t0+delta) other than possibly t0 itself. Throws if a poly is zero.
Rational root_free_radius(const std::vector<Poly>& ps, const Rational& t0, const Rational& cap);

}  // namespace hecke
