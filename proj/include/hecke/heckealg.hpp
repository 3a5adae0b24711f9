// Elements of the graded Hecke algebra completed along a line of central
// characters: cross-relation multiplication, the intertwiners R_x, the star
// operations, the Iwahori-Matsumoto involution and parabolic extraction.
#pragma once

#include <map>

#include "hecke/line.hpp"

namespace hecke {

// Minus: R_s = t_s a/(k-a) - k/(k-a), the form-side normalization with R_s^2 = 1.
// Plus: denominators k+a instead; this family diagonalizes the invariant form.
// Bare: r_s = t_s a - k, no denominators; squares to k^2-a^2 instead of 1, but
// satisfies the clean sign-twisted commutation with the group basis.
enum class RFamily { Minus, Plus, Bare };

class HeckeElement {
public:
    HeckeElement() : ctx_(nullptr) {}
    explicit HeckeElement(const LineContext& ctx) : ctx_(&ctx) {}
    static HeckeElement t(const LineContext& ctx, long w);
    static HeckeElement scalar(const LineContext& ctx, LineScalar a);
    static HeckeElement zero(const LineContext& ctx) { return HeckeElement(ctx); }
    static HeckeElement one(const LineContext& ctx) { return t(ctx, ctx.weyl().identity()); }

    const LineContext& ctx() const { return *ctx_; }
    const std::map<long, LineScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LineScalar coeff(long w) const;
    void add_term(long w, const LineScalar& a);

    HeckeElement operator-() const;
    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
    HeckeElement operator*(const LineScalar& a) const;  // right multiplication
    friend bool operator==(const HeckeElement& a, const HeckeElement& b);

    HeckeElement lmul_t(long w) const;  // t_w * this
    HeckeElement rmul_t(long w) const;  // this * t_w, via the cross relation

private:
    void prune();
    const LineContext* ctx_;
    std::map<long, LineScalar> terms_;  // t_w -> coefficient (written on the right)
};

// w(a) for the W-action on scalars, Delta_alpha(a) = (a - s_alpha(a))/alpha
LineScalar delta_op(const LineContext& ctx, long simple_idx, const LineScalar& a);

HeckeElement r_simple(const LineContext& ctx, long simple_idx, RFamily fam = RFamily::Minus);
HeckeElement r_element(const LineContext& ctx, long x, RFamily fam = RFamily::Minus);
// all R_x at once, sharing common subwords along the weak order
std::vector<HeckeElement> r_elements_all(const LineContext& ctx, RFamily fam = RFamily::Minus);
// h * t_w for every w, sharing common subwords
std::vector<HeckeElement> rmul_t_table(const HeckeElement& h);

HeckeElement bullet(const HeckeElement& h);
HeckeElement delta_aut(const HeckeElement& h);     // needs a theta-stable line
HeckeElement star(const HeckeElement& h);          // t_w0 delta(h)^bullet t_w0
HeckeElement im_involution(const HeckeElement& h);
// restriction to the terms supported on W_M
HeckeElement epsilon_M(const HeckeElement& h, const std::vector<long>& M);

// star_M of an element supported on W_M (subalgebra star operation)
HeckeElement star_M(const HeckeElement& h, const std::vector<long>& M);

}  // namespace hecke
