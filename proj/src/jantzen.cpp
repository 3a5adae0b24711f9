#include "hecke/jantzen.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "hecke/sturm.hpp"

namespace hecke {

namespace {

long val_or_max(const RatFun& f, const Rational& t0) {
    if (f.is_zero()) return std::numeric_limits<long>::max();
    return f.valuation_and_sign(t0).order;
}

RatFunMatrix ratfun_inverse(const RatFunMatrix& A) {
    long n = A.rows();
    RatFunMatrix aug(n, 2 * n);
    aug.setZero();
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = RatFun(1);
    }
    for (long col = 0; col < n; ++col) {
        long pr = -1;
        for (long r = col; r < n; ++r)
            if (!aug(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) throw std::runtime_error("ratfun_inverse: singular matrix");
        if (pr != col)
            for (long c = 0; c < 2 * n; ++c) std::swap(aug(pr, c), aug(col, c));
        RatFun inv = aug(col, col).inverse();
        for (long c = 0; c < 2 * n; ++c)
            if (!aug(col, c).is_zero()) aug(col, c) *= inv;
        for (long r = 0; r < n; ++r) {
            if (r == col || aug(r, col).is_zero()) continue;
            RatFun f = aug(r, col);
            for (long c = 0; c < 2 * n; ++c)
                if (!aug(col, c).is_zero()) aug(r, c) -= f * aug(col, c);
        }
    }
    RatFunMatrix inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace

JantzenCore dvr_diagonalize(const RatFunMatrix& g, const Rational& t0) {
    long n = g.rows();
    if (g.cols() != n) throw std::invalid_argument("dvr_diagonalize: matrix not square");
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j)
            if (g(i, j) != g(j, i))
                throw std::invalid_argument("dvr_diagonalize: matrix not symmetric");

    RatFunMatrix A = g;
    RatFunMatrix B(n, n);
    B.setZero();
    for (long i = 0; i < n; ++i) B(i, i) = RatFun(1);

    auto add_col = [&](long dst, long src, const RatFun& f) {
        // col_dst += f * col_src, row_dst += f * row_src, basis col update
        for (long r = 0; r < n; ++r)
            if (!A(r, src).is_zero()) A(r, dst) += f * A(r, src);
        for (long c = 0; c < n; ++c)
            if (!A(src, c).is_zero()) A(dst, c) += f * A(src, c);
        for (long r = 0; r < n; ++r)
            if (!B(r, src).is_zero()) B(r, dst) += f * B(r, src);
    };
    auto swap_cols = [&](long a, long b) {
        if (a == b) return;
        for (long r = 0; r < n; ++r) std::swap(A(r, a), A(r, b));
        for (long c = 0; c < n; ++c) std::swap(A(a, c), A(b, c));
        for (long r = 0; r < n; ++r) std::swap(B(r, a), B(r, b));
    };

    for (long k = 0; k < n; ++k) {
        long best_i = -1, best_j = -1;
        long best_val = std::numeric_limits<long>::max();
        for (long i = k; i < n; ++i)
            for (long j = k; j <= i; ++j) {
                long v = val_or_max(A(i, j), t0);
                if (v < best_val || (v == best_val && i == j && best_i != best_j)) {
                    best_val = v;
                    best_i = i;
                    best_j = j;
                }
            }
        if (best_val == std::numeric_limits<long>::max())
            throw std::runtime_error("dvr_diagonalize: identically degenerate family");
        if (best_i != best_j) {
            // off-diagonal minimum: fold column j into i; valuations of both
            // diagonal entries exceed best_val, so the new diagonal attains it
            add_col(best_i, best_j, RatFun(1));
            if (val_or_max(A(best_i, best_i), t0) != best_val)
                throw std::logic_error("dvr_diagonalize: pivot transfer failed");
        }
        swap_cols(best_i, k);
        RatFun pivot = A(k, k);
        for (long r = k + 1; r < n; ++r) {
            if (A(r, k).is_zero()) continue;
            RatFun f = -(A(r, k) / pivot);
            if (f.valuation_and_sign(t0).order < 0)
                throw std::logic_error("dvr_diagonalize: non-local elimination step");
            add_col(r, k, f);
        }
    }

    JantzenCore core;
    core.t0 = t0;
    std::vector<long> perm(n);
    for (long i = 0; i < n; ++i) perm[i] = i;
    std::vector<long> ords(n);
    std::vector<RatFun> units(n);
    std::vector<int> sgns(n);
    const Poly shift = Poly::linear(-t0, Rational(1));  // (t - t0)
    for (long i = 0; i < n; ++i) {
        auto v = A(i, i).valuation_and_sign(t0);
        ords[i] = v.order;
        if (v.order < 0) throw std::runtime_error("dvr_diagonalize: pole on the diagonal");
        RatFun pw(1);
        for (long p = 0; p < v.order; ++p) pw *= RatFun(shift);
        units[i] = A(i, i) / pw;
        sgns[i] = v.sign;
        if (sgns[i] == 0) throw std::logic_error("dvr_diagonalize: unit vanishes at t0");
    }
    std::sort(perm.begin(), perm.end(), [&](long a, long b) { return ords[a] < ords[b]; });
    core.basis = RatFunMatrix(n, n);
    for (long i = 0; i < n; ++i) {
        core.orders.push_back(ords[perm[i]]);
        core.signs.push_back(sgns[perm[i]]);
        core.units.push_back(units[perm[i]]);
        for (long r = 0; r < n; ++r) core.basis(r, i) = B(r, perm[i]);
    }
    return core;
}

std::pair<long, long> rational_signature(RationalMatrix A) {
    long n = A.rows();
    long p = 0, q = 0;
    std::vector<char> used(n, 0);
    for (long step = 0; step < n; ++step) {
        // prefer a diagonal pivot
        long piv = -1;
        for (long i = 0; i < n; ++i)
            if (!used[i] && !A(i, i).is_zero()) { piv = i; break; }
        if (piv < 0) {
            long oi = -1, oj = -1;
            for (long i = 0; i < n && oi < 0; ++i)
                if (!used[i])
                    for (long j = 0; j < n; ++j)
                        if (!used[j] && j != i && !A(i, j).is_zero()) {
                            oi = i;
                            oj = j;
                            break;
                        }
            if (oi < 0) throw std::runtime_error("rational_signature: singular matrix");
            for (long r = 0; r < n; ++r)
                if (!used[r]) A(r, oi) += A(r, oj);
            for (long c = 0; c < n; ++c)
                if (!used[c]) A(oi, c) += A(oj, c);
            piv = oi;
            if (A(piv, piv).is_zero()) throw std::logic_error("rational_signature: pivot lost");
        }
        if (A(piv, piv).sign() > 0) ++p; else ++q;
        Rational d = A(piv, piv);
        used[piv] = 1;
        for (long r = 0; r < n; ++r) {
            if (used[r] || A(r, piv).is_zero()) continue;
            Rational f = A(r, piv) / d;
            for (long c = 0; c < n; ++c)
                if (!A(piv, c).is_zero()) A(r, c) -= f * A(piv, c);
            for (long c = 0; c < n; ++c)
                if (!A(c, piv).is_zero()) A(c, r) -= f * A(c, piv);
        }
    }
    return {p, q};
}

JantzenReport jantzen_report(const RatFunMatrix& g, const Rational& t0,
                             std::optional<Rational> delta) {
    JantzenReport rep;
    rep.core = dvr_diagonalize(g, t0);
    long n = g.rows();
    long maxord = rep.core.orders.empty() ? 0 : rep.core.orders.back();
    for (long lev = 0; lev <= maxord; ++lev) {
        long graded = 0, cum = 0, p = 0, q = 0;
        for (long i = 0; i < n; ++i) {
            if (rep.core.orders[i] == lev) {
                ++graded;
                (rep.core.signs[i] > 0 ? p : q)++;
            }
            if (rep.core.orders[i] >= lev) ++cum;
        }
        rep.graded_dims.push_back(graded);
        rep.filtration_dims.push_back(cum);
        rep.level_signatures.emplace_back(p, q);
    }

    if (delta) {
        rep.delta = *delta;
    } else {
        std::vector<Poly> pool;
        for (const auto& u : rep.core.units) {
            pool.push_back(u.num());
            pool.push_back(u.den());
        }
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const RatFun& e = rep.core.basis(i, j);
                if (!e.is_zero() && e.den().degree() > 0) pool.push_back(e.den());
                const RatFun& ge = g(i, j);
                if (!ge.is_zero() && ge.den().degree() > 0) pool.push_back(ge.den());
            }
        rep.delta = root_free_radius(pool, t0, Rational(1, 10));
    }

    auto eval_sig = [&](const Rational& t) {
        RationalMatrix M(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) M(i, j) = g(i, j).eval(t);
        auto direct = rational_signature(M);
        // cross-check against the diagonalized family
        long p = 0, q = 0;
        for (long i = 0; i < n; ++i) {
            Rational v = rep.core.units[i].eval(t);
            Rational pw(1);
            for (long e = 0; e < rep.core.orders[i]; ++e) pw *= (t - t0);
            (Rational(v * pw).sign() > 0 ? p : q)++;
        }
        if (direct != std::make_pair(p, q))
            throw std::logic_error("side signature mismatch between the two routes");
        return direct;
    };
    rep.sig_below = eval_sig(t0 - rep.delta);
    rep.sig_above = eval_sig(t0 + rep.delta);

    long podd = 0, qodd = 0;
    for (size_t lev = 1; lev < rep.level_signatures.size(); lev += 2) {
        podd += rep.level_signatures[lev].first;
        qodd += rep.level_signatures[lev].second;
    }
    rep.bookkeeping_ok = rep.sig_above.first == rep.sig_below.first + podd - qodd &&
                         rep.sig_above.second == rep.sig_below.second + qodd - podd;
    return rep;
}

LevelAnalysis::LevelAnalysis(JantzenCore core, const InducedDatum& d)
    : core_(std::move(core)), d_(&d) {
    basis_inv_ = ratfun_inverse(core_.basis);
}

std::vector<long> LevelAnalysis::levels() const {
    std::vector<long> out;
    for (long o : core_.orders)
        if (out.empty() || out.back() != o) out.push_back(o);
    return out;
}

std::vector<long> LevelAnalysis::idx_of_level(long n) const {
    std::vector<long> out;
    for (size_t i = 0; i < core_.orders.size(); ++i)
        if (core_.orders[i] == n) out.push_back(static_cast<long>(i));
    return out;
}

long LevelAnalysis::level_dim(long n) const { return static_cast<long>(idx_of_level(n).size()); }

RationalMatrix LevelAnalysis::level_form(long n) const {
    auto idx = idx_of_level(n);
    RationalMatrix F = RationalMatrix::Zero(idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i) F(i, i) = core_.units[idx[i]].eval(core_.t0);
    return F;
}

RationalMatrix LevelAnalysis::quotient_matrix(const RatFunMatrix& action, long n) const {
    RatFunMatrix C = basis_inv_ * action * core_.basis;
    auto idx = idx_of_level(n);
    long m = static_cast<long>(idx.size());
    RationalMatrix out(m, m);
    for (long a = 0; a < m; ++a) {
        for (long b = 0; b < m; ++b) out(a, b) = C(idx[a], idx[b]).eval(core_.t0);
        // the action must preserve the filtration: components in lower levels vanish at t0
        for (size_t r = 0; r < core_.orders.size(); ++r) {
            if (core_.orders[r] >= n) continue;
            if (!C(r, idx[a]).eval(core_.t0).is_zero())
                throw std::logic_error("action does not preserve the Jantzen filtration");
        }
    }
    return out;
}

RationalMatrix LevelAnalysis::quotient_t(long w, long n) const {
    RationalMatrix At = action_t(*d_, w);
    long sz = At.rows();
    RatFunMatrix A(sz, sz);
    for (long i = 0; i < sz; ++i)
        for (long j = 0; j < sz; ++j) A(i, j) = RatFun(At(i, j));
    return quotient_matrix(A, n);
}

RationalMatrix LevelAnalysis::quotient_omega(const Weight& omega, long n) const {
    return quotient_matrix(action_omega(*d_, omega), n);
}

const RationalMatrix& LevelAnalysis::omega_simple_cached(long i, long n) const {
    auto key = std::make_pair(i, n);
    auto it = omega_cache_.find(key);
    if (it == omega_cache_.end())
        it = omega_cache_.emplace(key, quotient_omega(d_->W->roots().simple_roots()[i], n)).first;
    return it->second;
}

const RationalMatrix& LevelAnalysis::t_simple_cached(long i, long n) const {
    auto key = std::make_pair(i, n);
    auto it = t_cache_.find(key);
    if (it == t_cache_.end())
        it = t_cache_.emplace(key, quotient_t(d_->W->simple(i), n)).first;
    return it->second;
}

std::pair<long, long> LevelAnalysis::level_signature(long n) const {
    long p = 0, q = 0;
    for (auto i : idx_of_level(n)) (core_.signs[i] > 0 ? p : q)++;
    return {p, q};
}

std::pair<long, long> LevelAnalysis::isotypic_signature(const CharTable& ct, long mu,
                                                        long n) const {
    const WeylGroup& W = *d_->W;
    auto cm = class_map(W, ct);
    long m = level_dim(n);
    if (m == 0) return {0, 0};
    // the quotient representation is multiplicative, so sandwich only the
    // simple reflections through the basis and build the rest by products
    std::vector<RationalMatrix> gens;
    for (long i = 0; i < W.roots().rank(); ++i) gens.push_back(t_simple_cached(i, n));
    RationalMatrix eye = RationalMatrix::Zero(m, m);
    for (long i = 0; i < m; ++i) eye(i, i) = Rational(1);
    RationalMatrix P = RationalMatrix::Zero(m, m);
    for (long g = 0; g < W.size(); ++g) {
        RationalMatrix rho = eye;
        for (long i : W.word(g)) rho = rho * gens[i];
        P += ct.chars[mu][cm[g]] * rho;
    }
    P *= Rational(ct.dims[mu], W.size());
    RationalMatrix B = column_reduced_image(P);
    if (B.cols() == 0) return {0, 0};
    RationalMatrix F = level_form(n);
    RationalMatrix R = B.transpose() * F * B;
    return rational_signature(R);
}

long LevelAnalysis::weight_dim(const Weight& lambda, long n) const {
    const RootSystem& rs = d_->W->roots();
    long m = level_dim(n);
    if (m == 0) return 0;
    // intersection of kernels of (rho(omega_i) - (omega_i, lambda)) over simple roots
    RationalMatrix stacked(rs.rank() * m, m);
    for (long i = 0; i < rs.rank(); ++i) {
        RationalMatrix Q = omega_simple_cached(i, n);
        Rational ev = pairing(rs.simple_roots()[i], lambda);
        for (long r = 0; r < m; ++r) Q(r, r) -= ev;
        for (long r = 0; r < m; ++r)
            for (long c = 0; c < m; ++c) stacked(i * m + r, c) = Q(r, c);
    }
    // kernel dimension via column reduction of the transpose image
    RationalMatrix img = column_reduced_image(RationalMatrix(stacked.transpose()));
    return m - img.cols();
}

int LevelAnalysis::weight_vector_sign(const Weight& lambda, long n) const {
    const RootSystem& rs = d_->W->roots();
    long m = level_dim(n);
    // solve the simultaneous eigenvector equations exactly
    RationalMatrix stacked(rs.rank() * m, m);
    for (long i = 0; i < rs.rank(); ++i) {
        RationalMatrix Q = omega_simple_cached(i, n);
        Rational ev = pairing(rs.simple_roots()[i], lambda);
        for (long r = 0; r < m; ++r) Q(r, r) -= ev;
        for (long r = 0; r < m; ++r)
            for (long c = 0; c < m; ++c) stacked(i * m + r, c) = Q(r, c);
    }
    // kernel basis: reduce and read the free directions
    long rows = stacked.rows();
    RationalMatrix A = stacked;
    std::vector<long> pivot_of_col(m, -1);
    long row = 0;
    for (long col = 0; col < m && row < rows; ++col) {
        long pr = -1;
        for (long r = row; r < rows; ++r)
            if (!A(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        for (long c = 0; c < m; ++c) std::swap(A(pr, c), A(row, c));
        Rational inv = A(row, col).inverse();
        for (long c = 0; c < m; ++c) A(row, c) *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == row || A(r, col).is_zero()) continue;
            Rational f = A(r, col);
            for (long c = 0; c < m; ++c) A(r, c) -= f * A(row, c);
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<long> free_cols;
    for (long c = 0; c < m; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    if (free_cols.size() != 1)
        throw std::logic_error("weight_vector_sign: weight space is not one-dimensional");
    RationalVector v = RationalVector::Zero(m);
    v[free_cols[0]] = Rational(1);
    for (long c = 0; c < m; ++c)
        if (pivot_of_col[c] >= 0) v[c] = -A(pivot_of_col[c], free_cols[0]);
    RationalMatrix F = level_form(n);
    Rational val(0);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) val += v[i] * F(i, j) * v[j];
    if (val.is_zero()) throw std::logic_error("weight_vector_sign: isotropic weight vector");
    return val.sign();
}

}  // namespace hecke
