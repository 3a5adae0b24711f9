// One-parameter families of central characters. A scalar is stored through its
// restrictions to all |W| translates w(nu0 + t*dir) of one line; the W-action
// permutes components and roots restrict to degree-<=1 polynomials in t.
#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "hecke/weyl.hpp"

namespace hecke {

struct DegenerateLineError : std::runtime_error {
    explicit DegenerateLineError(const std::string& what) : std::runtime_error(what) {}
};

class LineContext {
public:
    LineContext(const WeylGroup& W, Weight nu0, Weight dir);

    const WeylGroup& weyl() const { return *W_; }
    const RootSystem& roots() const { return W_->roots(); }
    const Weight& base() const { return nu0_; }
    const Weight& direction() const { return dir_; }
    long group_size() const { return W_->size(); }

    // restriction of v (in V) to the component line w(nu0 + t dir)
    Poly restrict_to(const Weight& v_in_V, long w) const;
    // every root restricts to a nonzero function on every component
    bool multiplication_safe() const;
    // some k_alpha - alpha vanishes identically on a component
    bool r_denominator_degenerate() const;
    // -w0 fixes the line pointwise
    bool theta_stable() const;

    bool same_as(const LineContext& o) const {
        return W_ == o.W_ && nu0_ == o.nu0_ && dir_ == o.dir_;
    }

private:
    const WeylGroup* W_;
    Weight nu0_, dir_;
    std::vector<Weight> nu0_orbit_, dir_orbit_;  // w . nu0, w . dir
};

class LineScalar {
public:
    LineScalar() : ctx_(nullptr) {}
    LineScalar(const LineContext& ctx, RatFun constant);
    static LineScalar zero(const LineContext& ctx) { return LineScalar(ctx, RatFun()); }
    static LineScalar one(const LineContext& ctx) { return LineScalar(ctx, RatFun(1)); }
    // the linear function (v, .) for v in V
    static LineScalar from_vector(const LineContext& ctx, const Weight& v_in_V);

    const LineContext& ctx() const { return *ctx_; }
    const RatFun& component(long w) const { return comp_[w]; }
    RatFun& component(long w) { return comp_[w]; }
    bool is_zero() const;

    LineScalar operator-() const;
    friend LineScalar operator+(const LineScalar& a, const LineScalar& b);
    friend LineScalar operator-(const LineScalar& a, const LineScalar& b);
    friend LineScalar operator*(const LineScalar& a, const LineScalar& b);
    // componentwise; throws DegenerateLineError if a divisor component is the zero function
    friend LineScalar operator/(const LineScalar& a, const LineScalar& b);
    friend bool operator==(const LineScalar& a, const LineScalar& b) {
        return a.comp_ == b.comp_;
    }

    // (w(a))|_{u nu(t)} = a|_{(w^-1 u) nu(t)}
    LineScalar w_action(long w) const;
    // component relabeling u -> delta(u); valid on theta-stable lines
    LineScalar delta_twist() const;
    // a(-lambda); see im_involution for the supported line shapes
    LineScalar negate_argument() const;

private:
    void check_ctx(const LineScalar& o) const {
        if (ctx_ != o.ctx_) throw std::invalid_argument("LineScalar: context mismatch");
    }
    const LineContext* ctx_;
    std::vector<RatFun> comp_;
};

}  // namespace hecke
