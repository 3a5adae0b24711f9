#include "hecke/line.hpp"

namespace hecke {

LineContext::LineContext(const WeylGroup& W, Weight nu0, Weight dir)
    : W_(&W), nu0_(std::move(nu0)), dir_(std::move(dir)) {
    if (nu0_.size() != W.roots().dim() || dir_.size() != W.roots().dim())
        throw std::invalid_argument("LineContext: weight dimension mismatch");
    nu0_orbit_.reserve(W.size());
    dir_orbit_.reserve(W.size());
    for (long g = 0; g < W.size(); ++g) {
        nu0_orbit_.push_back(W.act_dual(g, nu0_));
        dir_orbit_.push_back(W.act_dual(g, dir_));
    }
}

Poly LineContext::restrict_to(const Weight& v, long w) const {
    return Poly::linear(pairing(v, nu0_orbit_[w]), pairing(v, dir_orbit_[w]));
}

bool LineContext::multiplication_safe() const {
    for (const auto& b : roots().positive_roots())
        for (long g = 0; g < W_->size(); ++g)
            if (restrict_to(b, g).is_zero()) return false;
    return true;
}

bool LineContext::r_denominator_degenerate() const {
    const auto& rs = roots();
    for (long i = 0; i < rs.num_positive(); ++i)
        for (long g = 0; g < W_->size(); ++g) {
            Poly p = Poly(rs.k_pos(i)) - restrict_to(rs.positive_roots()[i], g);
            if (p.is_zero()) return true;
        }
    return false;
}

bool LineContext::theta_stable() const {
    return W_->theta_dual(nu0_) == nu0_ && W_->theta_dual(dir_) == dir_;
}

LineScalar::LineScalar(const LineContext& ctx, RatFun constant) : ctx_(&ctx) {
    comp_.assign(ctx.group_size(), constant);
}

LineScalar LineScalar::from_vector(const LineContext& ctx, const Weight& v) {
    LineScalar a(ctx, RatFun());
    for (long g = 0; g < ctx.group_size(); ++g) a.comp_[g] = RatFun(ctx.restrict_to(v, g));
    return a;
}

bool LineScalar::is_zero() const {
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

LineScalar LineScalar::operator-() const {
    LineScalar r = *this;
    for (auto& c : r.comp_) c = -c;
    return r;
}

LineScalar operator+(const LineScalar& a, const LineScalar& b) {
    a.check_ctx(b);
    LineScalar r = a;
    for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] += b.comp_[i];
    return r;
}

LineScalar operator-(const LineScalar& a, const LineScalar& b) {
    a.check_ctx(b);
    LineScalar r = a;
    for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] -= b.comp_[i];
    return r;
}

LineScalar operator*(const LineScalar& a, const LineScalar& b) {
    a.check_ctx(b);
    LineScalar r = a;
    for (size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] *= b.comp_[i];
    return r;
}

LineScalar operator/(const LineScalar& a, const LineScalar& b) {
    a.check_ctx(b);
    LineScalar r = a;
    for (size_t i = 0; i < r.comp_.size(); ++i) {
        if (b.comp_[i].is_zero())
            throw DegenerateLineError(
                "scalar division by a function vanishing identically on an orbit component; "
                "perturb the line or use the invariance-solver route");
        r.comp_[i] /= b.comp_[i];
    }
    return r;
}

LineScalar LineScalar::w_action(long w) const {
    const WeylGroup& W = ctx_->weyl();
    long wi = W.inverse(w);
    LineScalar r = *this;
    for (long u = 0; u < W.size(); ++u) r.comp_[u] = comp_[W.mul(wi, u)];
    return r;
}

LineScalar LineScalar::delta_twist() const {
    if (!ctx_->theta_stable())
        throw DegenerateLineError("delta on scalars requires a line fixed by -w0");
    const WeylGroup& W = ctx_->weyl();
    LineScalar r = *this;
    for (long u = 0; u < W.size(); ++u) r.comp_[u] = comp_[W.delta(u)];
    return r;
}

LineScalar LineScalar::negate_argument() const {
    const WeylGroup& W = ctx_->weyl();
    LineScalar r = *this;
    if (W.w0_is_minus_one()) {
        for (long u = 0; u < W.size(); ++u) r.comp_[u] = comp_[W.mul(W.w0(), u)];
        return r;
    }
    bool base_zero = true;
    for (long i = 0; i < ctx_->base().size(); ++i)
        if (!ctx_->base()[i].is_zero()) base_zero = false;
    if (base_zero) {
        for (auto& c : r.comp_) c = c.substitute_neg();
        return r;
    }
    throw DegenerateLineError(
        "negating the argument needs w0 = -1 or a line through the origin");
}

}  // namespace hecke
