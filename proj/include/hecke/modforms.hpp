// Modules induced from one-dimensional characters of parabolic subalgebras:
// explicit action, the invariant hermitian Gram family, basis conversion, the
// hermitian-dual identification and the star-twisted form.
#pragma once

#include <memory>

#include "hecke/heckealg.hpp"

namespace hecke {

struct OneDimSigma {
    std::vector<long> M;     // simple-root indices of the Levi
    bool sign_char = false;  // false: trivial character, true: Steinberg
};

struct InducedDatum {
    const WeylGroup* W = nullptr;
    OneDimSigma sigma;
    Weight sigma0_weight;  // tempered part of the sigma-weight
    Weight nu0, dir;       // moving part: lambda(t) = sigma0_weight + nu0 + t*dir
    std::shared_ptr<LineContext> line;
    std::vector<long> basis;  // minimal coset representatives, sorted by length

    static InducedDatum make(const WeylGroup& W, OneDimSigma sigma, Weight nu0, Weight dir);
    static InducedDatum minimal_ps(const WeylGroup& W, Weight nu0, Weight dir);

    long dim() const { return static_cast<long>(basis.size()); }
    long basis_index(long w) const;
    Rational chi(long m) const;  // sigma on W_M
    // the A-weight of the sigma-line at parameter t, as a vector of linear polys
    Weight weight_at(const Rational& t) const;
};

struct GramFamily {
    enum class Basis { T, R };
    Basis kind = Basis::T;
    std::vector<long> labels;
    RatFunMatrix entries;
};

enum class GramRoute { Auto, Formula, Solver };

// pi(t_z) in the coset basis; constant matrix
RationalMatrix action_t(const InducedDatum& d, long z);
// pi(omega) for omega in V; entries are degree-<=1 polynomials in t
RatFunMatrix action_omega(const InducedDatum& d, const Weight& omega);

// The bullet-invariant family. Formula route evaluates the parabolic
// extraction against the long intertwiner; the solver route determines the
// unique invariant family from the action matrices (needed on lines where some
// root restricts to zero on an orbit component). normalized: entry at
// (identity, identity) scaled to 1.
GramFamily gram_family(const InducedDatum& d, GramRoute route = GramRoute::Auto,
                       bool normalized = true, int jobs = 1);

// congruence to the intertwiner basis; requires a multiplication-safe line
GramFamily to_r_basis(const GramFamily& g, const InducedDatum& d);
// closed-form diagonal of the normalized form in the intertwiner basis
RatFun r_diagonal_closed_form(const InducedDatum& d, long x);
// the common prefactor relating the raw T-family to the closed form
RatFun gram_prefactor(const InducedDatum& d);

bool invariance_check(const GramFamily& g, const InducedDatum& d);
// Phi: X(nu)^h -> X(w0 nu) intertwines the dual action, minimal principal series
bool herm_dual_check(const WeylGroup& W, const Weight& nu0, const Weight& dir);

GramFamily star_gram_from_bullet(const GramFamily& g, const InducedDatum& d);
bool star_invariance_check(const GramFamily& star_g, const InducedDatum& d);

}  // namespace hecke
