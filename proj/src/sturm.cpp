#include "hecke/sturm.hpp"

#include <stdexcept>

namespace hecke {

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly sf = p;
    Poly g = gcd(p, p.derivative());
    if (g.degree() > 0) sf = Poly::divrem(p, g).first;  // squarefree part
    chain.push_back(sf);
    chain.push_back(sf.derivative());
    while (!chain.back().is_zero()) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        chain.push_back(-Poly::divrem(a, b).second);
    }
    chain.pop_back();
    return chain;
}

long sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    long v = 0;
    int prev = 0;
    for (const Poly& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

long count_real_roots(const Poly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational root_free_radius(const std::vector<Poly>& ps, const Rational& t0, const Rational& cap) {
    Rational delta = cap;
    const Rational half(1, 2);
    for (int iter = 0; iter < 4096; ++iter) {
        bool clean = true;
        for (const Poly& p : ps) {
            if (p.is_zero()) throw std::domain_error("root_free_radius: zero polynomial");
            if (p.degree() == 0) continue;
            long n = count_real_roots(p, t0 - delta, t0 + delta);
            if (p.eval(t0).is_zero()) --n;  // t0 itself is allowed
            if (n > 0) {
                clean = false;
                break;
            }
        }
        if (clean) return delta;
        delta *= half;
    }
    throw std::runtime_error("root_free_radius: no clean window found");
}

}  // namespace hecke
