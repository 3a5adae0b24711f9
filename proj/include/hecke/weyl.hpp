// Finite Weyl groups: eager enumeration, reduced words, cosets, delta.
// Elements are canonicalized by their action on the root list and referred to
// by dense integer ids.
#pragma once

#include <string>
#include <vector>

#include "hecke/rootsys.hpp"

namespace hecke {

class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs);

    const RootSystem& roots() const { return *rs_; }
    long size() const { return static_cast<long>(perms_.size()); }
    long identity() const { return id_; }
    long w0() const { return w0_; }

    long simple(long i) const { return simple_ids_[i]; }
    // the reflection in the b-th positive root
    long reflection(long b) const { return refl_ids_[b]; }
    long mul(long a, long b) const { return mul_table_[a * size() + b]; }
    long inverse(long a) const { return inv_[a]; }
    long length(long a) const { return length_[a]; }
    const std::vector<long>& word(long a) const { return words_[a]; }
    std::string word_str(long a) const;
    long from_word(const std::vector<long>& w) const;

    // action on root indices: roots are indexed 0..N-1 (positive), N..2N-1 (negatives)
    long act_root(long w, long root_idx) const { return perms_[w][root_idx]; }
    bool inverts(long w, long pos_idx) const {
        return perms_[w][pos_idx] >= rs_->num_positive();
    }

    Weight act(long w, const Weight& v) const;        // on V
    Weight act_dual(long w, const Weight& u) const;   // on V-dual

    long delta(long w) const { return mul(mul(w0_, w), w0_); }
    Weight delta_weight(const Weight& omega) const { return -act(w0_, omega); }
    // -w0 acting on V-dual
    Weight theta_dual(const Weight& u) const { return -act_dual(w0_, u); }
    bool w0_is_minus_one() const;

    std::vector<long> subgroup(const std::vector<long>& M) const;  // W_M element ids
    long w0_of(const std::vector<long>& M) const;
    std::vector<long> min_coset_reps(const std::vector<long>& M) const;
    // z = c * m with c minimal in z W_M and m in W_M
    std::pair<long, long> coset_decompose(long z, const std::vector<long>& M) const;
    bool is_minimal_rep(long z, const std::vector<long>& M) const;
    std::vector<long> delta_of_subset(const std::vector<long>& M) const;

private:
    using Perm = std::vector<int>;
    long index_of(const Perm& p) const;
    long root_index(const Weight& r) const;

    const RootSystem* rs_;
    long num_pos_ = 0;
    std::vector<Perm> perms_;
    std::vector<long> simple_ids_, refl_ids_;
    std::vector<long> inv_, length_;
    std::vector<std::vector<long>> words_;
    std::vector<long> mul_table_;
    std::vector<RationalMatrix> mat_v_;      // action on V
    std::vector<RationalMatrix> mat_vdual_;  // action on V-dual
    long id_ = 0, w0_ = 0;
};

}  // namespace hecke
