#include "hecke/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

Rational pairing(const Weight& v, const Weight& u) {
    if (v.size() != u.size()) throw std::invalid_argument("pairing: dimension mismatch");
    Rational s(0);
    for (long i = 0; i < v.size(); ++i) s += v[i] * u[i];
    return s;
}

Weight parse_weight(const std::string& s, long dim) {
    std::vector<Rational> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) parts.push_back(Rational::parse(cur));
    if (dim >= 0 && static_cast<long>(parts.size()) != dim)
        throw std::invalid_argument("parse_weight: expected " + std::to_string(dim) +
                                    " coordinates in '" + s + "'");
    Weight w(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) w[static_cast<long>(i)] = parts[i];
    return w;
}

std::string weight_str(const Weight& w) {
    std::string s;
    for (long i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i].str();
    }
    return s;
}

namespace {

Weight vec(std::initializer_list<Rational> xs) {
    Weight w(static_cast<long>(xs.size()));
    long i = 0;
    for (const auto& x : xs) w[i++] = x;
    return w;
}

// exact solve A c = b with A the dim x n matrix whose columns are basis[.];
// returns empty optional if inconsistent
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Weight>& basis,
                                                   const Weight& b) {
    long m = b.size(), n = static_cast<long>(basis.size());
    RationalMatrix aug(m, n + 1);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < m; ++i) aug(i, j) = basis[j][i];
    for (long i = 0; i < m; ++i) aug(i, n) = b[i];

    std::vector<long> pivot_col_of_row;
    long row = 0;
    for (long col = 0; col < n && row < m; ++col) {
        long pr = -1;
        for (long i = row; i < m; ++i)
            if (!aug(i, col).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        for (long j = 0; j <= n; ++j) std::swap(aug(pr, j), aug(row, j));
        Rational inv = aug(row, col).inverse();
        for (long j = col; j <= n; ++j) aug(row, j) *= inv;
        for (long i = 0; i < m; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            Rational f = aug(i, col);
            for (long j = col; j <= n; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (long i = row; i < m; ++i)
        if (!aug(i, n).is_zero()) return std::nullopt;
    std::vector<Rational> c(n, Rational(0));
    for (long r = 0; r < row; ++r) c[pivot_col_of_row[r]] = aug(r, n);
    // rows below pivots already checked; verify in case of free columns
    for (long i = 0; i < m; ++i) {
        Rational s(0);
        for (long j = 0; j < n; ++j) s += basis[j][i] * c[j];
        if (s != b[i]) return std::nullopt;
    }
    return c;
}

std::string key_of(const Weight& w) {
    std::string k;
    for (long i = 0; i < w.size(); ++i) k += w[i].str() + ";";
    return k;
}

}  // namespace

RootSystem RootSystem::build(const std::string& type_label, const std::vector<Rational>& ks) {
    RootSystem rs;
    rs.label_ = type_label;
    if (type_label.size() != 2)
        throw std::invalid_argument("unsupported root system label '" + type_label + "'");
    char fam = type_label[0];
    int n = type_label[1] - '0';
    auto e = [&](long i, long d) {
        Weight w = Weight::Zero(d);
        w[i] = Rational(1);
        return w;
    };
    if (fam == 'A' && n >= 1 && n <= 4) {
        rs.dim_ = n + 1;
        for (int i = 0; i < n; ++i) {
            rs.simple_roots_.push_back(e(i, n + 1) - e(i + 1, n + 1));
            rs.simple_coroots_.push_back(e(i, n + 1) - e(i + 1, n + 1));
        }
    } else if (fam == 'B' && n >= 2 && n <= 4) {
        rs.dim_ = n;
        for (int i = 0; i + 1 < n; ++i) {
            rs.simple_roots_.push_back(e(i, n) - e(i + 1, n));
            rs.simple_coroots_.push_back(e(i, n) - e(i + 1, n));
        }
        rs.simple_roots_.push_back(e(n - 1, n));
        rs.simple_coroots_.push_back(e(n - 1, n) * Rational(2));
    } else if (fam == 'C' && n >= 3 && n <= 4) {
        rs.dim_ = n;
        for (int i = 0; i + 1 < n; ++i) {
            rs.simple_roots_.push_back(e(i, n) - e(i + 1, n));
            rs.simple_coroots_.push_back(e(i, n) - e(i + 1, n));
        }
        rs.simple_roots_.push_back(e(n - 1, n) * Rational(2));
        rs.simple_coroots_.push_back(e(n - 1, n));
    } else if (fam == 'D' && n == 4) {
        rs.dim_ = n;
        for (int i = 0; i + 1 < n; ++i) {
            rs.simple_roots_.push_back(e(i, n) - e(i + 1, n));
            rs.simple_coroots_.push_back(e(i, n) - e(i + 1, n));
        }
        rs.simple_roots_.push_back(e(n - 2, n) + e(n - 1, n));
        rs.simple_coroots_.push_back(e(n - 2, n) + e(n - 1, n));
    } else if (fam == 'G' && n == 2) {
        // short root first, in the coordinates used by the reference tables
        rs.dim_ = 3;
        rs.simple_roots_.push_back(vec({Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));
        rs.simple_roots_.push_back(vec({Rational(-1), Rational(1), Rational(0)}));
        rs.simple_coroots_.push_back(vec({Rational(2), Rational(-1), Rational(-1)}));
        rs.simple_coroots_.push_back(vec({Rational(-1), Rational(1), Rational(0)}));
    } else {
        throw std::invalid_argument("unsupported root system label '" + type_label + "'");
    }

    rs.k_simple_.assign(rs.rank(), Rational(1));
    if (!ks.empty()) {
        if (static_cast<long>(ks.size()) != rs.rank())
            throw std::invalid_argument("k: expected one value per simple root");
        rs.k_simple_ = ks;
        for (const auto& k : rs.k_simple_)
            if (k.sign() <= 0) throw std::invalid_argument("k: values must be positive");
    }
    rs.generate_and_validate();
    return rs;
}

void RootSystem::generate_and_validate() {
    long n = rank();
    // W-conjugacy classes of simple roots: equal squared length (irreducible types)
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (pairing(simple_roots_[i], simple_roots_[i]) ==
                    pairing(simple_roots_[j], simple_roots_[j]) &&
                k_simple_[i] != k_simple_[j])
                throw std::invalid_argument("k must be constant on W-conjugate simple roots");

    // reflection closure from the simple roots
    std::map<std::string, Weight> roots;
    for (const auto& a : simple_roots_) roots[key_of(a)] = a;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> cur;
        cur.reserve(roots.size());
        for (auto& [k, v] : roots) cur.push_back(v);
        for (const auto& b : cur) {
            for (long i = 0; i < n; ++i) {
                Weight r = b - simple_roots_[i] * pairing(b, simple_coroots_[i]);
                if (roots.emplace(key_of(r), r).second) grew = true;
                Weight rn = -b;
                if (roots.emplace(key_of(rn), rn).second) grew = true;
            }
        }
    }

    for (auto& [key, r] : roots) {
        auto c = solve_in_span(simple_roots_, r);
        if (!c) throw std::logic_error("root outside simple-root span");
        bool nonneg = true, nonpos = true;
        Rational hsum(0);
        for (const auto& x : *c) {
            if (x.sign() < 0) nonneg = false;
            if (x.sign() > 0) nonpos = false;
            hsum += x;
        }
        if (!nonneg && !nonpos) throw std::logic_error("root with mixed signs");
        if (nonneg) {
            pos_roots_.push_back(r);
            Rational norm = pairing(r, r);
            pos_coroots_.push_back(r * (Rational(2) / norm));
            if (hsum.str().find('/') != std::string::npos)
                throw std::logic_error("non-integral root height");
            heights_.push_back(std::stol(hsum.str()));
        }
    }

    // sort positive roots by (height, coordinates) for determinism
    std::vector<long> order(pos_roots_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<long>(i);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        if (heights_[a] != heights_[b]) return heights_[a] < heights_[b];
        return key_of(pos_roots_[a]) < key_of(pos_roots_[b]);
    });
    auto permute = [&](auto& v) {
        auto c = v;
        for (size_t i = 0; i < order.size(); ++i) v[i] = c[order[i]];
    };
    permute(pos_roots_);
    permute(pos_coroots_);
    permute(heights_);

    // k on positive roots, by squared length
    for (const auto& b : pos_roots_) {
        Rational norm = pairing(b, b);
        long found = -1;
        for (long i = 0; i < n; ++i)
            if (pairing(simple_roots_[i], simple_roots_[i]) == norm) found = i;
        if (found < 0) throw std::logic_error("positive root with no conjugate simple root");
        k_pos_.push_back(k_simple_[found]);
    }

    // invariants
    for (size_t b = 0; b < pos_roots_.size(); ++b) {
        if (pairing(pos_roots_[b], pos_coroots_[b]) != Rational(2))
            throw std::logic_error("(alpha, alpha-check) != 2");
        if (pos_root_index(pos_roots_[b] * Rational(2)) >= 0)
            throw std::logic_error("system is not reduced");
    }
    // reflections permute the roots
    for (long i = 0; i < n; ++i) {
        for (const auto& b : pos_roots_) {
            Weight r = b - simple_roots_[i] * pairing(b, simple_coroots_[i]);
            if (pos_root_index(r) < 0 && pos_root_index(-r) < 0)
                throw std::logic_error("reflection does not preserve the root set");
        }
    }

    // fundamental coweights/weights via the Cartan matrix
    RationalMatrix cartan(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) cartan(i, j) = pairing(simple_roots_[i], simple_coroots_[j]);
    for (long j = 0; j < n; ++j) {
        // coweight: sum_k c_k coroot_k with (alpha_i, .) = delta_ij
        std::vector<Weight> cart_cols;
        for (long k = 0; k < n; ++k) {
            Weight col(n);
            for (long i = 0; i < n; ++i) col[i] = cartan(i, k);
            cart_cols.push_back(col);
        }
        Weight ej = Weight::Zero(n);
        ej[j] = Rational(1);
        auto c = solve_in_span(cart_cols, ej);
        if (!c) throw std::logic_error("Cartan matrix not invertible");
        Weight cw = Weight::Zero(dim_);
        for (long k = 0; k < n; ++k) cw += simple_coroots_[k] * (*c)[k];
        fund_coweights_.push_back(cw);
        // weight: sum_k d_k root_k with (., alpha_i-check) = delta_ij
        std::vector<Weight> cart_rows;
        for (long k = 0; k < n; ++k) {
            Weight row(n);
            for (long i = 0; i < n; ++i) row[i] = cartan(k, i);
            cart_rows.push_back(row);
        }
        auto d = solve_in_span(cart_rows, ej);
        if (!d) throw std::logic_error("Cartan matrix not invertible");
        Weight fw = Weight::Zero(dim_);
        for (long k = 0; k < n; ++k) fw += simple_roots_[k] * (*d)[k];
        fund_weights_.push_back(fw);
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (pairing(simple_roots_[i], fund_coweights_[j]) != Rational(i == j ? 1 : 0))
                throw std::logic_error("pairing of simple roots with coweights is not identity");
}

bool RootSystem::k_is_one() const {
    for (const auto& k : k_simple_)
        if (k != Rational(1)) return false;
    return true;
}

long RootSystem::pos_root_index(const Weight& v) const {
    for (size_t i = 0; i < pos_roots_.size(); ++i)
        if (pos_roots_[i] == v) return static_cast<long>(i);
    return -1;
}

std::vector<long> RootSystem::sub_positive_roots(const std::vector<long>& J) const {
    std::vector<long> out;
    std::vector<Weight> basis;
    for (long j : J) basis.push_back(simple_roots_[j]);
    for (size_t b = 0; b < pos_roots_.size(); ++b) {
        if (basis.empty()) break;
        if (solve_in_span(basis, pos_roots_[b])) out.push_back(static_cast<long>(b));
    }
    return out;
}

Weight RootSystem::rho_check(const std::vector<long>& J) const {
    Weight r = Weight::Zero(dim_);
    for (long b : sub_positive_roots(J)) r += pos_coroots_[b];
    return r * Rational(1, 2);
}

Weight RootSystem::rho_check() const {
    std::vector<long> all(rank());
    for (long i = 0; i < rank(); ++i) all[i] = i;
    return rho_check(all);
}

std::vector<Weight> RootSystem::sub_fundamental_coweights(const std::vector<long>& J) const {
    long m = static_cast<long>(J.size());
    std::vector<Weight> cart_cols;
    for (long k = 0; k < m; ++k) {
        Weight col(m);
        for (long i = 0; i < m; ++i) col[i] = pairing(simple_roots_[J[i]], simple_coroots_[J[k]]);
        cart_cols.push_back(col);
    }
    std::vector<Weight> out;
    for (long j = 0; j < m; ++j) {
        Weight ej = Weight::Zero(m);
        ej[j] = Rational(1);
        auto c = solve_in_span(cart_cols, ej);
        if (!c) throw std::logic_error("sub-Cartan matrix not invertible");
        Weight cw = Weight::Zero(dim_);
        for (long k = 0; k < m; ++k) cw += simple_coroots_[J[k]] * (*c)[k];
        out.push_back(cw);
    }
    return out;
}

RationalMatrix RootSystem::reflection_matrix(long b) const {
    RationalMatrix m = RationalMatrix::Zero(dim_, dim_);
    for (long i = 0; i < dim_; ++i) m(i, i) = Rational(1);
    // v -> v - (v, beta-check) beta
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) m(i, j) -= pos_roots_[b][i] * pos_coroots_[b][j];
    return m;
}

bool RootSystem::is_dominant(const Weight& s) const {
    for (const auto& a : simple_roots_)
        if (pairing(a, s).sign() <= 0) return false;
    return true;
}

bool RootSystem::is_regular(const Weight& s) const {
    for (const auto& b : pos_roots_)
        if (pairing(b, s).is_zero()) return false;
    return true;
}

bool RootSystem::is_regular_dominant(const Weight& s) const {
    return is_dominant(s) && is_regular(s);
}

}  // namespace hecke
