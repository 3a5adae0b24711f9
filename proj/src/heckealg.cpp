#include "hecke/heckealg.hpp"

#include <set>

namespace hecke {

HeckeElement HeckeElement::t(const LineContext& ctx, long w) {
    HeckeElement h(ctx);
    h.terms_.emplace(w, LineScalar::one(ctx));
    return h;
}

HeckeElement HeckeElement::scalar(const LineContext& ctx, LineScalar a) {
    HeckeElement h(ctx);
    if (!a.is_zero()) h.terms_.emplace(ctx.weyl().identity(), std::move(a));
    return h;
}

LineScalar HeckeElement::coeff(long w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LineScalar::zero(*ctx_) : it->second;
}

void HeckeElement::add_term(long w, const LineScalar& a) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!a.is_zero()) terms_.emplace(w, a);
    } else {
        it->second = it->second + a;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HeckeElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(*ctx_);
    for (const auto& [w, a] : terms_) r.terms_.emplace(w, -a);
    return r;
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return (a - b).is_zero();
}

HeckeElement HeckeElement::lmul_t(long w) const {
    HeckeElement r(*ctx_);
    const WeylGroup& W = ctx_->weyl();
    for (const auto& [u, c] : terms_) r.terms_.emplace(W.mul(w, u), c);
    return r;
}

LineScalar delta_op(const LineContext& ctx, long i, const LineScalar& a) {
    LineScalar alpha = LineScalar::from_vector(ctx, ctx.roots().simple_roots()[i]);
    LineScalar num = a - a.w_action(ctx.weyl().simple(i));
    return num / alpha;
}

namespace {

// h * t_{s_i}: (t_u c) t_s = t_{us} s(c) + k_i t_u Delta_i(c)
HeckeElement rmul_simple(const HeckeElement& h, long i) {
    const LineContext& ctx = h.ctx();
    const WeylGroup& W = ctx.weyl();
    long s = W.simple(i);
    Rational k = ctx.roots().k_simple(i);
    bool k_one = k == Rational(1);
    LineScalar alpha = LineScalar::from_vector(ctx, ctx.roots().simple_roots()[i]);
    LineScalar kscalar(ctx, RatFun(k));
    HeckeElement r(ctx);
    for (const auto& [u, c] : h.terms()) {
        LineScalar sc = c.w_action(s);
        r.add_term(W.mul(u, s), sc);
        LineScalar num = c - sc;
        if (num.is_zero()) continue;
        LineScalar d = num / alpha;
        r.add_term(u, k_one ? d : d * kscalar);
    }
    return r;
}

}  // namespace

HeckeElement HeckeElement::rmul_t(long w) const {
    HeckeElement r = *this;
    for (long i : ctx_->weyl().word(w)) r = rmul_simple(r, i);
    return r;
}

HeckeElement HeckeElement::operator*(const LineScalar& a) const {
    HeckeElement r(*ctx_);
    for (const auto& [w, c] : terms_) {
        LineScalar p = c * a;
        if (!p.is_zero()) r.terms_.emplace(w, p);
    }
    return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement r(a.ctx());
    for (const auto& [w2, c2] : b.terms()) {
        HeckeElement part = a.rmul_t(w2) * c2;
        for (const auto& [w, c] : part.terms()) r.add_term(w, c);
    }
    return r;
}

HeckeElement r_simple(const LineContext& ctx, long i, RFamily fam) {
    LineScalar alpha = LineScalar::from_vector(ctx, ctx.roots().simple_roots()[i]);
    LineScalar k(ctx, RatFun(ctx.roots().k_simple(i)));
    HeckeElement h(ctx);
    if (fam == RFamily::Bare) {
        h.add_term(ctx.weyl().simple(i), alpha);
        h.add_term(ctx.weyl().identity(), -k);
        return h;
    }
    LineScalar den = fam == RFamily::Minus ? k - alpha : k + alpha;
    for (long g = 0; g < ctx.group_size(); ++g)
        if (den.component(g).is_zero())
            throw DegenerateLineError(
                "intertwiner denominator vanishes identically on an orbit component; "
                "perturb the line direction");
    h.add_term(ctx.weyl().simple(i), alpha / den);
    h.add_term(ctx.weyl().identity(), -(k / den));
    return h;
}

HeckeElement r_element(const LineContext& ctx, long x, RFamily fam) {
    HeckeElement h = HeckeElement::one(ctx);
    for (long i : ctx.weyl().word(x)) h = h * r_simple(ctx, i, fam);
    return h;
}

std::vector<HeckeElement> r_elements_all(const LineContext& ctx, RFamily fam) {
    const WeylGroup& W = ctx.weyl();
    std::vector<HeckeElement> table(W.size());
    std::vector<char> done(W.size(), 0);
    table[W.identity()] = HeckeElement::one(ctx);
    done[W.identity()] = 1;
    std::vector<HeckeElement> gens;
    for (long i = 0; i < ctx.roots().rank(); ++i) gens.push_back(r_simple(ctx, i, fam));
    // extend along the weak right order
    std::vector<long> order(W.size());
    for (long g = 0; g < W.size(); ++g) order[g] = g;
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return W.length(a) < W.length(b); });
    for (long w : order) {
        if (w == W.identity()) continue;
        const auto& word = W.word(w);
        long prefix = W.from_word(std::vector<long>(word.begin(), word.end() - 1));
        table[w] = table[prefix] * gens[word.back()];
        done[w] = 1;
    }
    return table;
}

std::vector<HeckeElement> rmul_t_table(const HeckeElement& h) {
    const WeylGroup& W = h.ctx().weyl();
    std::vector<HeckeElement> table(W.size());
    table[W.identity()] = h;
    std::vector<long> order(W.size());
    for (long g = 0; g < W.size(); ++g) order[g] = g;
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return W.length(a) < W.length(b); });
    for (long w : order) {
        if (w == W.identity()) continue;
        const auto& word = W.word(w);
        long prefix = W.from_word(std::vector<long>(word.begin(), word.end() - 1));
        table[w] = rmul_simple(table[prefix], word.back());
    }
    return table;
}

HeckeElement bullet(const HeckeElement& h) {
    const LineContext& ctx = h.ctx();
    const WeylGroup& W = ctx.weyl();
    HeckeElement r(ctx);
    for (const auto& [w, a] : h.terms()) {
        HeckeElement part = HeckeElement::scalar(ctx, a).rmul_t(W.inverse(w));
        for (const auto& [u, c] : part.terms()) r.add_term(u, c);
    }
    return r;
}

HeckeElement delta_aut(const HeckeElement& h) {
    const LineContext& ctx = h.ctx();
    const WeylGroup& W = ctx.weyl();
    HeckeElement r(ctx);
    for (const auto& [w, a] : h.terms()) r.add_term(W.delta(w), a.delta_twist());
    return r;
}

HeckeElement star(const HeckeElement& h) {
    long w0 = h.ctx().weyl().w0();
    return bullet(delta_aut(h)).lmul_t(w0).rmul_t(w0);
}

HeckeElement im_involution(const HeckeElement& h) {
    const LineContext& ctx = h.ctx();
    const WeylGroup& W = ctx.weyl();
    HeckeElement r(ctx);
    for (const auto& [w, a] : h.terms()) {
        LineScalar c = a.negate_argument();
        if (W.length(w) % 2) c = -c;
        r.add_term(w, c);
    }
    return r;
}

HeckeElement epsilon_M(const HeckeElement& h, const std::vector<long>& M) {
    const WeylGroup& W = h.ctx().weyl();
    auto sub = W.subgroup(M);
    std::set<long> in(sub.begin(), sub.end());
    HeckeElement r(h.ctx());
    for (const auto& [w, a] : h.terms())
        if (in.count(w)) r.add_term(w, a);
    return r;
}

HeckeElement star_M(const HeckeElement& h, const std::vector<long>& M) {
    const LineContext& ctx = h.ctx();
    const WeylGroup& W = ctx.weyl();
    if (!W.w0_is_minus_one())
        throw DegenerateLineError("star_M on scalars implemented for w0 = -1 only");
    long w0M = W.w0_of(M);
    long tw = W.mul(W.w0(), w0M);  // -w_{0,M} as a group element
    HeckeElement r(ctx);
    for (const auto& [w, a] : h.terms()) {
        // delta_M twist: support w0M w w0M, components pulled back along tw
        LineScalar c = a;
        for (long u = 0; u < W.size(); ++u) c.component(u) = a.component(W.mul(tw, u));
        r.add_term(W.mul(W.mul(w0M, w), w0M), c);
    }
    return bullet(r).lmul_t(w0M).rmul_t(w0M);
}

}  // namespace hecke
