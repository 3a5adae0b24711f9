#include "hecke/modforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace hecke {

InducedDatum InducedDatum::make(const WeylGroup& W, OneDimSigma sigma, Weight nu0, Weight dir) {
    const RootSystem& rs = W.roots();
    InducedDatum d;
    d.W = &W;
    d.sigma = std::move(sigma);
    for (long i : d.sigma.M) {
        if (!pairing(rs.simple_roots()[i], nu0).is_zero() ||
            !pairing(rs.simple_roots()[i], dir).is_zero())
            throw std::invalid_argument("induced datum: moving part must be orthogonal to the Levi");
    }
    d.sigma0_weight = Weight::Zero(rs.dim());
    auto coweights = rs.sub_fundamental_coweights(d.sigma.M);
    for (size_t j = 0; j < d.sigma.M.size(); ++j) {
        Weight term = coweights[j] * rs.k_simple(d.sigma.M[j]);
        d.sigma0_weight += d.sigma.sign_char ? Weight(-term) : term;
    }
    d.nu0 = std::move(nu0);
    d.dir = std::move(dir);
    d.line = std::make_shared<LineContext>(W, Weight(d.sigma0_weight + d.nu0), d.dir);
    d.basis = W.min_coset_reps(d.sigma.M);
    return d;
}

InducedDatum InducedDatum::minimal_ps(const WeylGroup& W, Weight nu0, Weight dir) {
    return make(W, OneDimSigma{{}, false}, std::move(nu0), std::move(dir));
}

long InducedDatum::basis_index(long w) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == w) return static_cast<long>(i);
    throw std::logic_error("basis_index: not a minimal coset representative");
}

Rational InducedDatum::chi(long m) const {
    return sigma.sign_char && (W->length(m) % 2) ? Rational(-1) : Rational(1);
}

Weight InducedDatum::weight_at(const Rational& t) const {
    return sigma0_weight + nu0 + dir * t;
}

RationalMatrix action_t(const InducedDatum& d, long z) {
    long n = d.dim();
    RationalMatrix A = RationalMatrix::Zero(n, n);
    for (long j = 0; j < n; ++j) {
        auto [c, m] = d.W->coset_decompose(d.W->mul(z, d.basis[j]), d.sigma.M);
        A(d.basis_index(c), j) += d.chi(m);
    }
    return A;
}

RatFunMatrix action_omega(const InducedDatum& d, const Weight& omega) {
    const RootSystem& rs = d.W->roots();
    long n = d.dim();
    RatFunMatrix A = RatFunMatrix::Zero(n, n);
    for (long j = 0; j < n; ++j) {
        long x = d.basis[j];
        A(j, j) += RatFun(d.line->restrict_to(omega, x));
        long xi = d.W->inverse(x);
        for (long b = 0; b < rs.num_positive(); ++b) {
            if (!d.W->inverts(xi, b)) continue;
            Rational coef = rs.k_pos(b) * pairing(omega, rs.positive_coroots()[b]);
            if (coef.is_zero()) continue;
            auto [c, m] = d.W->coset_decompose(d.W->mul(d.W->reflection(b), x), d.sigma.M);
            A(d.basis_index(c), j) += RatFun(coef * d.chi(m));
        }
    }
    return A;
}

namespace {

template <typename MA, typename MB>
bool same_mat(const MA& a, const MB& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

std::set<long> subgroup_set(const WeylGroup& W, const std::vector<long>& M) {
    auto v = W.subgroup(M);
    return std::set<long>(v.begin(), v.end());
}

GramFamily gram_formula(const InducedDatum& d, int jobs) {
    const WeylGroup& W = *d.W;
    auto Mt = W.delta_of_subset(d.sigma.M);       // delta(M)
    long w0t = W.w0_of(Mt);
    long wu = W.mul(W.w0(), w0t);                 // w^0_M = w0 * w_{0,delta(M)}
    if (wu != W.mul(W.w0_of(d.sigma.M), W.w0()))
        throw std::logic_error("w0 * w_{0,delta(M)} != w_{0,M} * w0");
    HeckeElement R0 = r_element(*d.line, wu, RFamily::Minus);
    auto in_Mt = subgroup_set(W, Mt);
    long wui = W.inverse(wu);

    long n = d.dim();
    GramFamily g;
    g.kind = GramFamily::Basis::T;
    g.labels = d.basis;
    g.entries = RatFunMatrix::Zero(n, n);

    auto entry = [&](long xi, long yi) {
        long x = d.basis[xi], y = d.basis[yi];
        RatFun acc;
        for (const auto& [w, a] : R0.terms()) {
            long mt = W.mul(W.mul(wui, W.inverse(y)), W.mul(x, w));
            if (!in_Mt.count(mt)) continue;
            Rational sgn = d.chi(W.mul(W.mul(wu, mt), wui));
            acc += a.component(wui) * RatFun(sgn);
        }
        return acc;
    };

    std::vector<std::pair<long, long>> pairs;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) pairs.emplace_back(i, j);
    if (jobs <= 1) {
        for (auto [i, j] : pairs) g.entries(i, j) = entry(i, j);
    } else {
        std::vector<std::thread> pool;
        std::vector<RatFun> out(pairs.size());
        long chunk = (static_cast<long>(pairs.size()) + jobs - 1) / jobs;
        for (int th = 0; th < jobs; ++th) {
            long lo = th * chunk, hi = std::min<long>(pairs.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (long p = lo; p < hi; ++p) out[p] = entry(pairs[p].first, pairs[p].second);
            });
        }
        for (auto& t : pool) t.join();
        for (size_t p = 0; p < pairs.size(); ++p)
            g.entries(pairs[p].first, pairs[p].second) = out[p];
    }
    return g;
}

// Unknowns g(c) for c in the coset basis with G(x,y) = chi(m(x^-1 y)) g(c(x^-1 y));
// omega-invariance and symmetry close a homogeneous system whose null space is
// one-dimensional exactly when the family of invariant forms is unique.
GramFamily gram_solver(const InducedDatum& d) {
    const WeylGroup& W = *d.W;
    long n = d.dim();
    long e_idx = d.basis_index(W.identity());

    std::vector<std::vector<long>> cid(n, std::vector<long>(n));
    std::vector<std::vector<Rational>> csgn(n, std::vector<Rational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            auto [c, m] = W.coset_decompose(W.mul(W.inverse(d.basis[i]), d.basis[j]), d.sigma.M);
            cid[i][j] = d.basis_index(c);
            csgn[i][j] = d.chi(m);
        }

    std::vector<std::vector<RatFun>> rows;
    auto add_row = [&](std::vector<RatFun> r) {
        bool nz = false;
        for (const auto& c : r)
            if (!c.is_zero()) nz = true;
        if (nz) rows.push_back(std::move(r));
    };

    const RootSystem& rs = W.roots();
    for (long oi = 0; oi < rs.rank(); ++oi) {
        RatFunMatrix A = action_omega(d, rs.simple_roots()[oi]);
        for (long x = 0; x < n; ++x)
            for (long y = 0; y < n; ++y) {
                std::vector<RatFun> r(n);
                for (long z = 0; z < n; ++z) {
                    if (!A(z, x).is_zero()) r[cid[z][y]] += A(z, x) * RatFun(csgn[z][y]);
                    if (!A(z, y).is_zero()) r[cid[x][z]] -= A(z, y) * RatFun(csgn[x][z]);
                }
                add_row(std::move(r));
            }
    }
    for (long x = 0; x < n; ++x)
        for (long y = x + 1; y < n; ++y) {
            std::vector<RatFun> r(n);
            r[cid[x][y]] += RatFun(csgn[x][y]);
            r[cid[y][x]] -= RatFun(csgn[y][x]);
            add_row(std::move(r));
        }

    // reduced row echelon form over Q(t)
    long rank = 0;
    std::vector<long> pivot_of_col(n, -1);
    for (long col = 0; col < n; ++col) {
        long pr = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) { pr = static_cast<long>(r); break; }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        RatFun inv = rows[rank][col].inverse();
        for (long c = 0; c < n; ++c)
            if (!rows[rank][c].is_zero()) rows[rank][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<long>(r) == rank || rows[r][col].is_zero()) continue;
            RatFun f = rows[r][col];
            for (long c = 0; c < n; ++c)
                if (!rows[rank][c].is_zero()) rows[r][c] -= f * rows[rank][c];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<long> free_cols;
    for (long c = 0; c < n; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    if (free_cols.size() != 1)
        throw std::runtime_error("invariance solver: invariant family is not unique (null space "
                                 "dimension " + std::to_string(free_cols.size()) + ")");
    long fc = free_cols[0];
    std::vector<RatFun> sol(n);
    sol[fc] = RatFun(1);
    for (long c = 0; c < n; ++c)
        if (pivot_of_col[c] >= 0) sol[c] = -rows[pivot_of_col[c]][fc];
    // deterministic scale: the (e,e) value when it does not vanish identically,
    // otherwise the first nonzero coefficient
    RatFun scale = sol[e_idx];
    if (scale.is_zero()) {
        for (long c = 0; c < n && scale.is_zero(); ++c) scale = sol[c];
    }
    for (long c = 0; c < n; ++c)
        if (!sol[c].is_zero()) sol[c] /= scale;

    GramFamily g;
    g.kind = GramFamily::Basis::T;
    g.labels = d.basis;
    g.entries = RatFunMatrix::Zero(n, n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) g.entries(x, y) = RatFun(csgn[x][y]) * sol[cid[x][y]];
    return g;
}

}  // namespace

GramFamily gram_family(const InducedDatum& d, GramRoute route, bool normalized, int jobs) {
    if (route == GramRoute::Auto)
        route = d.line->multiplication_safe() && !d.line->r_denominator_degenerate()
                    ? GramRoute::Formula
                    : GramRoute::Solver;
    GramFamily g = route == GramRoute::Formula ? gram_formula(d, jobs) : gram_solver(d);
    if (normalized) {
        long e_idx = d.basis_index(d.W->identity());
        RatFun pivot = g.entries(e_idx, e_idx);
        if (pivot.is_zero())
            throw std::runtime_error(
                "gram_family: the (e,e) entry vanishes identically on this line; "
                "rescale on a lowest W-type instead");
        for (long i = 0; i < g.entries.rows(); ++i)
            for (long j = 0; j < g.entries.cols(); ++j)
                if (!g.entries(i, j).is_zero()) g.entries(i, j) /= pivot;
    }
    return g;
}

GramFamily to_r_basis(const GramFamily& g, const InducedDatum& d) {
    if (g.kind != GramFamily::Basis::T)
        throw std::invalid_argument("to_r_basis: input must be in the coset basis");
    if (!d.line->multiplication_safe())
        throw DegenerateLineError("to_r_basis: line is not multiplication-safe");
    const WeylGroup& W = *d.W;
    long n = d.dim();
    long id_comp = W.identity();
    RatFunMatrix C = RatFunMatrix::Zero(n, n);
    for (long j = 0; j < n; ++j) {
        HeckeElement rx = r_element(*d.line, d.basis[j], RFamily::Plus);
        for (const auto& [y, a] : rx.terms()) {
            auto [c, m] = W.coset_decompose(y, d.sigma.M);
            RatFun v = a.component(id_comp) * RatFun(d.chi(m));
            if (!v.is_zero()) C(d.basis_index(c), j) += v;
        }
    }
    GramFamily out;
    out.kind = GramFamily::Basis::R;
    out.labels = g.labels;
    out.entries = C.transpose() * g.entries * C;
    return out;
}

RatFun r_diagonal_closed_form(const InducedDatum& d, long x) {
    const RootSystem& rs = d.W->roots();
    RatFun prod(1);
    for (long b = 0; b < rs.num_positive(); ++b) {
        if (!d.W->inverts(x, b)) continue;  // beta > 0 with x beta < 0
        Poly val = d.line->restrict_to(rs.positive_roots()[b], d.W->identity());
        prod *= RatFun(val - Poly(rs.k_pos(b))) / RatFun(val + Poly(rs.k_pos(b)));
    }
    return prod;
}

RatFun gram_prefactor(const InducedDatum& d) {
    const RootSystem& rs = d.W->roots();
    auto subM = rs.sub_positive_roots(d.sigma.M);
    std::set<long> inM(subM.begin(), subM.end());
    RatFun f(1);
    long count = 0;
    for (long b = 0; b < rs.num_positive(); ++b) {
        if (inM.count(b)) continue;
        ++count;
        Poly val = d.line->restrict_to(rs.positive_roots()[b], d.W->identity());
        f *= RatFun(val) / RatFun(val + Poly(rs.k_pos(b)));
    }
    if (count % 2) f = -f;
    return f;
}

bool invariance_check(const GramFamily& g, const InducedDatum& d) {
    const RootSystem& rs = d.W->roots();
    for (long i = 0; i < rs.rank(); ++i) {
        RationalMatrix As = action_t(d, d.W->simple(i));
        RatFunMatrix A = RatFunMatrix::Zero(d.dim(), d.dim());
        for (long r = 0; r < d.dim(); ++r)
            for (long c = 0; c < d.dim(); ++c) A(r, c) = RatFun(As(r, c));
        if (!same_mat(RatFunMatrix(A.transpose() * g.entries), RatFunMatrix(g.entries * A)))
            return false;
        RatFunMatrix Aw = action_omega(d, rs.simple_roots()[i]);
        if (!same_mat(RatFunMatrix(Aw.transpose() * g.entries), RatFunMatrix(g.entries * Aw)))
            return false;
    }
    return true;
}

bool herm_dual_check(const WeylGroup& W, const Weight& nu0, const Weight& dir) {
    const RootSystem& rs = W.roots();
    InducedDatum src = InducedDatum::minimal_ps(W, nu0, dir);
    InducedDatum dst =
        InducedDatum::minimal_ps(W, W.act_dual(W.w0(), nu0), W.act_dual(W.w0(), dir));
    long n = src.dim();

    // dual-side action on X(nu)^h in the basis {t_x^h}: the t_z part matches the
    // plain induced action, the omega part sums over the non-inverted roots
    auto dual_t = [&](long z) { return action_t(src, z); };
    auto dual_omega = [&](const Weight& omega) {
        RatFunMatrix A = RatFunMatrix::Zero(n, n);
        for (long j = 0; j < n; ++j) {
            long x = src.basis[j];
            A(j, j) += RatFun(src.line->restrict_to(omega, x));
            long xi = W.inverse(x);
            for (long b = 0; b < rs.num_positive(); ++b) {
                if (W.inverts(xi, b)) continue;  // beta > 0 with x^-1 beta > 0
                Rational coef = rs.k_pos(b) * pairing(omega, rs.positive_coroots()[b]);
                if (coef.is_zero()) continue;
                A(src.basis_index(W.mul(W.reflection(b), x)), j) += RatFun(coef);
            }
        }
        return A;
    };

    // Phi: t_x^h -> t_{x w0}; as a matrix from the source basis to the target basis
    RationalMatrix P = RationalMatrix::Zero(n, n);
    for (long j = 0; j < n; ++j) P(dst.basis_index(W.mul(src.basis[j], W.w0())), j) = Rational(1);
    RatFunMatrix Pf = RatFunMatrix::Zero(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) Pf(r, c) = RatFun(P(r, c));

    for (long i = 0; i < rs.rank(); ++i) {
        RationalMatrix Dz = dual_t(W.simple(i));
        RationalMatrix Az = action_t(dst, W.simple(i));
        if (!same_mat(RationalMatrix(P * Dz), RationalMatrix(Az * P))) return false;
        RatFunMatrix Dw = dual_omega(rs.simple_roots()[i]);
        RatFunMatrix Aw = action_omega(dst, rs.simple_roots()[i]);
        if (!same_mat(RatFunMatrix(Pf * Dw), RatFunMatrix(Aw * Pf))) return false;
    }
    return true;
}

GramFamily star_gram_from_bullet(const GramFamily& g, const InducedDatum& d) {
    const WeylGroup& W = *d.W;
    auto Md = W.delta_of_subset(d.sigma.M);
    if (Md != d.sigma.M)
        throw std::invalid_argument("star form requires a delta-stable Levi");
    if (!d.line->theta_stable())
        throw DegenerateLineError("star form requires a line fixed by -w0");
    long n = d.dim();
    // delta-twist intertwiner t_x -> t_{delta(x)}
    RationalMatrix T = RationalMatrix::Zero(n, n);
    for (long j = 0; j < n; ++j) T(d.basis_index(W.delta(d.basis[j])), j) = Rational(1);
    RationalMatrix B = action_t(d, W.w0()) * T;
    RatFunMatrix Bf = RatFunMatrix::Zero(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) Bf(r, c) = RatFun(B(r, c));
    GramFamily out;
    out.kind = g.kind;
    out.labels = g.labels;
    out.entries = g.entries * Bf;
    return out;
}

bool star_invariance_check(const GramFamily& sg, const InducedDatum& d) {
    const RootSystem& rs = d.W->roots();
    const WeylGroup& W = *d.W;
    long n = d.dim();
    RationalMatrix Aw0 = action_t(d, W.w0());
    RatFunMatrix Aw0f = RatFunMatrix::Zero(n, n);
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) Aw0f(r, c) = RatFun(Aw0(r, c));
    for (long i = 0; i < rs.rank(); ++i) {
        RationalMatrix As = action_t(d, W.simple(i));
        RatFunMatrix A = RatFunMatrix::Zero(n, n);
        for (long r = 0; r < n; ++r)
            for (long c = 0; c < n; ++c) A(r, c) = RatFun(As(r, c));
        if (!same_mat(RatFunMatrix(A.transpose() * sg.entries),
                      RatFunMatrix(sg.entries * A)))
            return false;
        // omega^star = -t_{w0} (w0 omega) t_{w0}
        RatFunMatrix Aw = action_omega(d, rs.simple_roots()[i]);
        RatFunMatrix Aw0om = action_omega(d, W.act(W.w0(), rs.simple_roots()[i]));
        RatFunMatrix Astar = RatFunMatrix(-(Aw0f * Aw0om * Aw0f));
        if (!same_mat(RatFunMatrix(Aw.transpose() * sg.entries),
                      RatFunMatrix(sg.entries * Astar)))
            return false;
    }
    return true;
}

}  // namespace hecke
