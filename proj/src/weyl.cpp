#include "hecke/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hecke {

long WeylGroup::root_index(const Weight& r) const {
    long i = rs_->pos_root_index(r);
    if (i >= 0) return i;
    i = rs_->pos_root_index(-r);
    if (i >= 0) return num_pos_ + i;
    throw std::logic_error("WeylGroup: vector is not a root");
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs), num_pos_(rs.num_positive()) {
    long n = rs.rank();
    long nroots = 2 * num_pos_;

    // simple reflections as permutations of the root list
    std::vector<Perm> simple_perm(n, Perm(nroots));
    for (long i = 0; i < n; ++i) {
        for (long r = 0; r < nroots; ++r) {
            Weight v = r < num_pos_ ? rs.positive_roots()[r] : -rs.positive_roots()[r - num_pos_];
            Weight img = v - rs.simple_roots()[i] * pairing(v, rs.simple_coroots()[i]);
            simple_perm[i][r] = static_cast<int>(root_index(img));
        }
    }

    Perm idperm(nroots);
    for (long r = 0; r < nroots; ++r) idperm[r] = static_cast<int>(r);
    std::map<Perm, long> index;
    auto add = [&](const Perm& p, const std::vector<long>& word) {
        auto [it, fresh] = index.emplace(p, static_cast<long>(perms_.size()));
        if (fresh) {
            perms_.push_back(p);
            words_.push_back(word);
        }
        return std::pair<long, bool>(it->second, fresh);
    };
    add(idperm, {});
    std::deque<long> queue = {0};
    while (!queue.empty()) {
        long g = queue.front();
        queue.pop_front();
        for (long i = 0; i < n; ++i) {
            // right-multiply: (g * s_i)(r) = g(s_i(r))
            Perm p(nroots);
            for (long r = 0; r < nroots; ++r) p[r] = perms_[g][simple_perm[i][r]];
            std::vector<long> w = words_[g];
            w.push_back(i);
            auto [idx, fresh] = add(p, w);
            if (fresh) queue.push_back(idx);
        }
    }

    long N = size();
    id_ = 0;
    simple_ids_.resize(n);
    for (long i = 0; i < n; ++i) {
        Perm p(nroots);
        for (long r = 0; r < nroots; ++r) p[r] = simple_perm[i][r];
        simple_ids_[i] = index.at(p);
    }

    refl_ids_.resize(num_pos_);
    for (long b = 0; b < num_pos_; ++b) {
        Perm p(nroots);
        for (long r = 0; r < nroots; ++r) {
            Weight v = r < num_pos_ ? rs.positive_roots()[r] : -rs.positive_roots()[r - num_pos_];
            Weight img = v - rs.positive_roots()[b] * pairing(v, rs.positive_coroots()[b]);
            p[r] = static_cast<int>(root_index(img));
        }
        refl_ids_[b] = index.at(p);
    }

    length_.resize(N);
    for (long g = 0; g < N; ++g) {
        long len = 0;
        for (long r = 0; r < num_pos_; ++r)
            if (perms_[g][r] >= num_pos_) ++len;
        length_[g] = len;
        if (static_cast<long>(words_[g].size()) != len)
            throw std::logic_error("BFS word is not reduced");
    }

    mul_table_.assign(N * N, 0);
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            Perm p(nroots);
            for (long r = 0; r < nroots; ++r) p[r] = perms_[a][perms_[b][r]];
            mul_table_[a * N + b] = index.at(p);
        }

    inv_.resize(N);
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            if (mul(a, b) == id_) inv_[a] = b;

    for (long g = 0; g < N; ++g)
        if (length_[g] == num_pos_) w0_ = g;

    // matrix actions, built from the reduced words
    long d = rs.dim();
    RationalMatrix eye = RationalMatrix::Zero(d, d);
    for (long i = 0; i < d; ++i) eye(i, i) = Rational(1);
    std::vector<RationalMatrix> refl_v(n);
    for (long i = 0; i < n; ++i) {
        RationalMatrix m = eye;
        for (long r = 0; r < d; ++r)
            for (long c = 0; c < d; ++c)
                m(r, c) -= rs.simple_roots()[i][r] * rs.simple_coroots()[i][c];
        refl_v[i] = m;
    }
    mat_v_.resize(N);
    mat_vdual_.resize(N);
    for (long g = 0; g < N; ++g) {
        RationalMatrix m = eye;
        for (long i : words_[g]) m = m * refl_v[i];
        mat_v_[g] = m;
    }
    for (long g = 0; g < N; ++g) mat_vdual_[g] = mat_v_[inv_[g]].transpose();
}

std::string WeylGroup::word_str(long a) const {
    if (a == id_) return "e";
    std::string s;
    for (size_t i = 0; i < words_[a].size(); ++i) {
        if (i) s += ".";
        s += "s" + std::to_string(words_[a][i] + 1);
    }
    return s;
}

long WeylGroup::from_word(const std::vector<long>& w) const {
    long g = id_;
    for (long i : w) g = mul(g, simple(i));
    return g;
}

Weight WeylGroup::act(long w, const Weight& v) const { return mat_v_[w] * v; }

Weight WeylGroup::act_dual(long w, const Weight& u) const { return mat_vdual_[w] * u; }

bool WeylGroup::w0_is_minus_one() const {
    for (long r = 0; r < num_pos_; ++r)
        if (perms_[w0_][r] != static_cast<int>(num_pos_ + r)) return false;
    return true;
}

std::vector<long> WeylGroup::subgroup(const std::vector<long>& M) const {
    std::vector<long> elems = {id_};
    std::vector<char> seen(size(), 0);
    seen[id_] = 1;
    std::deque<long> queue = {id_};
    while (!queue.empty()) {
        long g = queue.front();
        queue.pop_front();
        for (long i : M) {
            long h = mul(g, simple(i));
            if (!seen[h]) {
                seen[h] = 1;
                elems.push_back(h);
                queue.push_back(h);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

long WeylGroup::w0_of(const std::vector<long>& M) const {
    long best = id_;
    for (long g : subgroup(M))
        if (length_[g] > length_[best]) best = g;
    return best;
}

bool WeylGroup::is_minimal_rep(long z, const std::vector<long>& M) const {
    for (long i : M)
        if (inverts(z, rs_->pos_root_index(rs_->simple_roots()[i]))) return false;
    return true;
}

std::vector<long> WeylGroup::min_coset_reps(const std::vector<long>& M) const {
    std::vector<long> out;
    for (long g = 0; g < size(); ++g)
        if (is_minimal_rep(g, M)) out.push_back(g);
    std::sort(out.begin(), out.end(), [&](long a, long b) {
        if (length_[a] != length_[b]) return length_[a] < length_[b];
        return a < b;
    });
    return out;
}

std::pair<long, long> WeylGroup::coset_decompose(long z, const std::vector<long>& M) const {
    long c = z;
    while (!is_minimal_rep(c, M)) {
        for (long i : M) {
            if (inverts(c, rs_->pos_root_index(rs_->simple_roots()[i]))) {
                c = mul(c, simple(i));
                break;
            }
        }
    }
    long m = mul(inverse(c), z);
    return {c, m};
}

std::vector<long> WeylGroup::delta_of_subset(const std::vector<long>& M) const {
    std::vector<long> out;
    for (long i : M) {
        Weight img = -act(w0_, rs_->simple_roots()[i]);
        long idx = rs_->pos_root_index(img);
        if (idx < 0) throw std::logic_error("delta of a simple root is not simple");
        // locate as simple root
        long found = -1;
        for (long j = 0; j < rs_->rank(); ++j)
            if (rs_->simple_roots()[j] == img) found = j;
        if (found < 0) throw std::logic_error("delta of a simple root is not simple");
        out.push_back(found);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hecke
