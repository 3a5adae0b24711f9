#include "hecke/langdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

std::string wkey(const Weight& w) {
    std::string k;
    for (long i = 0; i < w.size(); ++i) k += w[i].str() + ";";
    return k;
}

}  // namespace

LanglandsDatum f_decompose(const RootSystem& rs, const WeylGroup& W, const Weight& v) {
    long n = rs.rank();
    std::vector<LanglandsDatum> found;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<long> F, comp;
        for (long i = 0; i < n; ++i) ((mask >> i) & 1 ? F : comp).push_back(i);
        // solve for d on the F block: (a_i, v) = -sum_{i'} d_{i'} (a_i, a_{i'}-check)
        long m = static_cast<long>(F.size());
        RationalMatrix A(m, m);
        RationalVector rhs(m);
        for (long r = 0; r < m; ++r) {
            rhs[r] = -pairing(rs.simple_roots()[F[r]], v);
            for (long c = 0; c < m; ++c)
                A(r, c) = pairing(rs.simple_roots()[F[r]], rs.simple_coroots()[F[c]]);
        }
        // Gaussian solve
        std::vector<Rational> d(m, Rational(0));
        {
            RationalMatrix aug(m, m + 1);
            for (long r = 0; r < m; ++r) {
                for (long c = 0; c < m; ++c) aug(r, c) = A(r, c);
                aug(r, m) = rhs[r];
            }
            bool ok = true;
            for (long col = 0; col < m && ok; ++col) {
                long pr = -1;
                for (long r = col; r < m; ++r)
                    if (!aug(r, col).is_zero()) { pr = r; break; }
                if (pr < 0) { ok = false; break; }
                for (long c = 0; c <= m; ++c) std::swap(aug(pr, c), aug(col, c));
                Rational inv = aug(col, col).inverse();
                for (long c = 0; c <= m; ++c) aug(col, c) *= inv;
                for (long r = 0; r < m; ++r) {
                    if (r == col || aug(r, col).is_zero()) continue;
                    Rational f = aug(r, col);
                    for (long c = 0; c <= m; ++c) aug(r, c) -= f * aug(col, c);
                }
            }
            if (!ok) continue;  // sub-Cartan blocks are invertible, so this cannot occur
            for (long r = 0; r < m; ++r) d[r] = aug(r, m);
        }
        bool valid = true;
        for (const auto& x : d)
            if (x.sign() < 0) valid = false;
        if (!valid) continue;
        std::vector<Rational> c;
        for (long j : comp) {
            Rational cj = pairing(rs.simple_roots()[j], v);
            for (long r = 0; r < m; ++r)
                cj += d[r] * pairing(rs.simple_roots()[j], rs.simple_coroots()[F[r]]);
            if (cj.sign() <= 0) valid = false;
            c.push_back(cj);
        }
        if (!valid) continue;
        // reconstruct exactly (also rejects v outside the coroot span)
        Weight rec = Weight::Zero(rs.dim());
        for (size_t j = 0; j < comp.size(); ++j) rec += rs.fundamental_coweight(comp[j]) * c[j];
        Weight v0 = rec;
        for (long r = 0; r < m; ++r) rec -= rs.simple_coroots()[F[r]] * d[r];
        if (rec != v) continue;
        LanglandsDatum out;
        out.F = F;
        out.v0 = v0;
        out.c = c;
        out.d = d;
        found.push_back(out);
    }
    (void)W;
    if (found.size() != 1)
        throw std::runtime_error("f_decompose: expected a unique subset, found " +
                                 std::to_string(found.size()));
    return found.front();
}

bool dominance_geq(const RootSystem& rs, const Weight& v1, const Weight& v2) {
    Weight diff = v1 - v2;
    // solve diff = sum c_i alpha_i-check with c_i >= 0
    long n = rs.rank();
    RationalMatrix aug(rs.dim(), n + 1);
    for (long r = 0; r < rs.dim(); ++r) {
        for (long c = 0; c < n; ++c) aug(r, c) = rs.simple_coroots()[c][r];
        aug(r, n) = diff[r];
    }
    long row = 0;
    std::vector<long> pivot_col;
    for (long col = 0; col < n && row < rs.dim(); ++col) {
        long pr = -1;
        for (long r = row; r < rs.dim(); ++r)
            if (!aug(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        for (long c = 0; c <= n; ++c) std::swap(aug(pr, c), aug(row, c));
        Rational inv = aug(row, col).inverse();
        for (long c = 0; c <= n; ++c) aug(row, c) *= inv;
        for (long r = 0; r < rs.dim(); ++r) {
            if (r == row || aug(r, col).is_zero()) continue;
            Rational f = aug(r, col);
            for (long c = 0; c <= n; ++c) aug(r, c) -= f * aug(row, c);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (long r = row; r < rs.dim(); ++r)
        if (!aug(r, n).is_zero()) return false;
    std::vector<Rational> coef(n, Rational(0));
    for (long r = 0; r < row; ++r) coef[pivot_col[r]] = aug(r, n);
    Weight rec = Weight::Zero(rs.dim());
    for (long i = 0; i < n; ++i) rec += rs.simple_coroots()[i] * coef[i];
    if (rec != diff) return false;
    for (const auto& x : coef)
        if (x.sign() < 0) return false;
    return true;
}

bool is_tempered(const RootSystem& rs, const std::vector<Weight>& weights) {
    for (const auto& lam : weights)
        for (long i = 0; i < rs.rank(); ++i)
            if (pairing(rs.fundamental_weight(i), lam).sign() > 0) return false;
    return true;
}

bool is_discrete_series(const RootSystem& rs, const std::vector<Weight>& weights) {
    for (const auto& lam : weights)
        for (long i = 0; i < rs.rank(); ++i)
            if (pairing(rs.fundamental_weight(i), lam).sign() >= 0) return false;
    return true;
}

long tau(const WeylGroup& W, long x, const Weight& nu) {
    const RootSystem& rs = W.roots();
    long count = 0;
    for (long b = 0; b < rs.num_positive(); ++b)
        if (W.inverts(x, b) && pairing(rs.positive_roots()[b], nu) == rs.k_pos(b)) ++count;
    return count;
}

long tau0(const WeylGroup& W, long x) {
    const RootSystem& rs = W.roots();
    long count = 0;
    for (long i = 0; i < rs.rank(); ++i)
        if (W.inverts(x, rs.pos_root_index(rs.simple_roots()[i]))) ++count;
    return count;
}

int orientation_sign(const WeylGroup& W, long x, const Weight& s) {
    const RootSystem& rs = W.roots();
    long l0 = 0;
    for (long b = 0; b < rs.num_positive(); ++b) {
        if (!W.inverts(x, b)) continue;
        Rational v = pairing(rs.positive_roots()[b], s);
        if (v.sign() > 0 && v < rs.k_pos(b)) ++l0;
    }
    return l0 % 2 ? -1 : 1;
}

std::vector<std::pair<Weight, long>> a_character(const InducedDatum& d, const Rational& t) {
    Weight lam = d.weight_at(t);
    std::vector<std::pair<Weight, long>> out;
    for (long w : d.basis) {
        Weight img = d.W->act_dual(w, lam);
        bool merged = false;
        for (auto& [v, m] : out)
            if (v == img) {
                ++m;
                merged = true;
                break;
            }
        if (!merged) out.emplace_back(img, 1);
    }
    return out;
}

HKLPoly HKLPoly::monomial(long coef, long deg) {
    std::vector<long> c(deg + 1, 0);
    c[deg] = coef;
    return HKLPoly(std::move(c));
}

void HKLPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

HKLPoly HKLPoly::at_minus_q() const {
    HKLPoly r = *this;
    for (size_t i = 1; i < r.coeffs.size(); i += 2) r.coeffs[i] = -r.coeffs[i];
    return r;
}

HKLPoly operator+(const HKLPoly& a, const HKLPoly& b) {
    std::vector<long> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs.size()) c[i] += a.coeffs[i];
        if (i < b.coeffs.size()) c[i] += b.coeffs[i];
    }
    return HKLPoly(std::move(c));
}

std::string HKLPoly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        long c = coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long a = c < 0 ? -c : c;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

HKLPoly hkl_term(long p_minus_q, long dim_row, long dim_col, long level) {
    long e = dim_col - dim_row - level;
    if (e < 0 || e % 2)
        throw std::domain_error("hermitian KL exponent parity violation: dims (" +
                                std::to_string(dim_row) + "," + std::to_string(dim_col) +
                                ") level " + std::to_string(level));
    return HKLPoly::monomial(p_minus_q, e / 2);
}

long RegularCC::label_index(const std::vector<long>& J) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == J) return static_cast<long>(i);
    throw std::invalid_argument("regular cc: no such label");
}

RegularCC regular_cc_analyze(const WeylGroup& W, const Weight& s) {
    const RootSystem& rs = W.roots();
    if (!rs.is_regular_dominant(s))
        throw std::invalid_argument("regular_cc_analyze: s must be regular dominant");
    RegularCC cc;
    cc.s = s;

    std::vector<long> delta_s;
    for (long b = 0; b < rs.num_positive(); ++b)
        if (pairing(rs.positive_roots()[b], s) == rs.k_pos(b)) delta_s.push_back(b);
    // conjugate into the simple roots
    long wstar = -1;
    for (long g = 0; g < W.size() && wstar < 0; ++g) {
        bool ok = true;
        for (long b : delta_s) {
            long img = W.act_root(g, b);
            if (img >= rs.num_positive()) { ok = false; break; }
            bool is_simple = false;
            for (long i = 0; i < rs.rank(); ++i)
                if (rs.positive_roots()[img] == rs.simple_roots()[i]) is_simple = true;
            if (!is_simple) { ok = false; break; }
        }
        if (ok) wstar = g;
    }
    if (wstar < 0) throw std::logic_error("regular cc: integral roots not simple-conjugate");
    for (long b : delta_s) {
        long img = W.act_root(wstar, b);
        for (long i = 0; i < rs.rank(); ++i)
            if (rs.positive_roots()[img] == rs.simple_roots()[i]) cc.PiM.push_back(i);
    }
    std::sort(cc.PiM.begin(), cc.PiM.end());

    long nm = static_cast<long>(cc.PiM.size());
    for (long mask = 0; mask < (1L << nm); ++mask) {
        std::vector<long> J;
        for (long i = 0; i < nm; ++i)
            if ((mask >> i) & 1) J.push_back(cc.PiM[i]);
        cc.labels.push_back(J);
    }
    std::sort(cc.labels.begin(), cc.labels.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // leading weight of each constituent: x_J s with (a_i, x_J s) = -k_i on J and
    // Langlands dominance off J
    for (const auto& J : cc.labels) {
        Weight rhoJk = Weight::Zero(rs.dim());
        auto cws = rs.sub_fundamental_coweights(J);
        for (size_t j = 0; j < J.size(); ++j) rhoJk += cws[j] * rs.k_simple(J[j]);
        long found = -1;
        for (long x = 0; x < W.size(); ++x) {
            Weight xs = W.act_dual(x, s);
            bool ok = true;
            for (long i : J)
                if (pairing(rs.simple_roots()[i], xs) != -rs.k_simple(i)) ok = false;
            if (!ok) continue;
            Weight nuJ = xs + rhoJk;
            for (long j = 0; j < rs.rank() && ok; ++j) {
                if (std::find(J.begin(), J.end(), j) != J.end()) continue;
                if (pairing(rs.simple_roots()[j], nuJ).sign() <= 0) ok = false;
            }
            if (!ok) continue;
            if (found >= 0 && W.act_dual(found, s) != xs)
                throw std::logic_error("regular cc: leading weight not unique");
            if (found < 0) found = x;
        }
        if (found < 0) throw std::logic_error("regular cc: no leading weight for a label");
        cc.xJ.push_back(found);
        cc.eps.push_back(orientation_sign(W, found, s));
    }

    // weight sets, top down in |J|
    std::vector<std::set<std::string>> taken(cc.labels.size());
    cc.omega_L.resize(cc.labels.size());
    std::vector<long> order(cc.labels.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<long>(i);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        return cc.labels[a].size() > cc.labels[b].size();
    });
    std::set<std::string> used;
    for (long li : order) {
        auto reps = W.min_coset_reps(cc.labels[li]);
        Weight lead = W.act_dual(cc.xJ[li], s);
        for (long w : reps) {
            Weight lam = W.act_dual(w, lead);
            if (used.count(wkey(lam))) continue;
            cc.omega_L[li].push_back(lam);
            used.insert(wkey(lam));
        }
        if (cc.omega_L[li].empty()) throw std::logic_error("regular cc: empty constituent");
    }
    long total = 0;
    for (const auto& v : cc.omega_L) total += static_cast<long>(v.size());
    if (total != W.size()) throw std::logic_error("regular cc: weights do not partition the orbit");
    return cc;
}

long regular_cc_constituent(const RegularCC& cc, const WeylGroup& W, long x) {
    Weight xs = W.act_dual(x, cc.s);
    for (size_t i = 0; i < cc.omega_L.size(); ++i)
        for (const auto& lam : cc.omega_L[i])
            if (lam == xs) return static_cast<long>(i);
    throw std::logic_error("regular_cc_constituent: weight not found");
}

HKLRegularResult hkl_regular(const WeylGroup& W, const Weight& s) {
    const RootSystem& rs = W.roots();
    HKLRegularResult res;
    res.cc = regular_cc_analyze(W, s);
    const RegularCC& cc = res.cc;
    long L = static_cast<long>(cc.labels.size());
    auto subset = [](const std::vector<long>& a, const std::vector<long>& b) {
        for (long x : a)
            if (std::find(b.begin(), b.end(), x) == b.end()) return false;
        return true;
    };

    res.kl.assign(L, std::vector<HKLPoly>(L));
    res.ph_formula.assign(L, std::vector<HKLPoly>(L));
    res.ph.assign(L, std::vector<HKLPoly>(L));
    for (long r = 0; r < L; ++r)
        for (long c = 0; c < L; ++c) {
            if (!subset(cc.labels[r], cc.labels[c])) continue;
            res.kl[r][c] = HKLPoly::monomial(1, 0);
            res.ph_formula[r][c] = HKLPoly::monomial(cc.eps[r] * cc.eps[c], 0);
        }

    for (long r = 0; r < L; ++r) {
        const auto& J = cc.labels[r];
        Weight rhoJk = Weight::Zero(rs.dim());
        auto cws = rs.sub_fundamental_coweights(J);
        for (size_t j = 0; j < J.size(); ++j) rhoJk += cws[j] * rs.k_simple(J[j]);
        Weight nuJ = W.act_dual(cc.xJ[r], s) + rhoJk;
        InducedDatum d =
            InducedDatum::make(W, OneDimSigma{J, true}, Weight::Zero(rs.dim()), nuJ);
        if (d.weight_at(Rational(1)) != W.act_dual(cc.xJ[r], s))
            throw std::logic_error("hkl_regular: family does not pass through x_J s");
        GramFamily g = gram_family(d);
        JantzenCore core = dvr_diagonalize(g.entries, Rational(1));
        LevelAnalysis la(core, d);
        auto levels = la.levels();

        for (long c = 0; c < L; ++c) {
            if (!subset(J, cc.labels[c])) continue;
            Weight lead = W.act_dual(cc.xJ[c], s);
            long found_level = -1;
            for (long n : levels) {
                if (la.weight_dim(lead, n) > 0) {
                    if (found_level >= 0)
                        throw std::logic_error("hkl_regular: leading weight in two levels");
                    found_level = n;
                }
            }
            if (found_level < 0) throw std::logic_error("hkl_regular: leading weight missing");
            // every weight of the constituent sits in the same level, each once
            long dimL = 0;
            for (const auto& lam : cc.omega_L[c]) {
                long wd = la.weight_dim(lam, found_level);
                if (wd != 1)
                    throw std::logic_error("hkl_regular: constituent weights split levels");
                dimL += wd;
            }
            if (dimL != static_cast<long>(cc.omega_L[c].size()))
                throw std::logic_error("hkl_regular: constituent dimension mismatch");
            int sign = la.weight_vector_sign(lead, found_level);
            res.ph[r][c] =
                hkl_term(sign, static_cast<long>(J.size()),
                         static_cast<long>(cc.labels[c].size()), found_level);
        }

        // level dimensions must be exhausted by the constituents
        for (long n : levels) {
            long sum = 0;
            for (long c = 0; c < L; ++c) {
                if (!subset(J, cc.labels[c])) continue;
                long wd = 0;
                for (const auto& lam : cc.omega_L[c]) wd += la.weight_dim(lam, n);
                sum += wd;
            }
            if (sum != la.level_dim(n))
                throw std::logic_error("hkl_regular: level dimensions unaccounted");
        }
    }

    res.routes_agree = res.ph == res.ph_formula;
    bool conj = true;
    for (long r = 0; r < L; ++r)
        for (long c = 0; c < L; ++c) {
            HKLPoly expect = res.kl[r][c].at_minus_q();
            for (auto& co : expect.coeffs) co *= cc.eps[r] * cc.eps[c];
            expect.trim();
            if (!(res.ph[r][c] == expect)) conj = false;
        }
    res.conjecture_holds = res.routes_agree && conj;
    return res;
}

}  // namespace hecke
