// Reduced root systems in explicit rational coordinates, with the parameter
// function k and the standard pairing (realized as the dot product).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/ratfun.hpp"

namespace hecke {

using Weight = RationalVector;  // vector in V or V-dual, coordinates in Q^dim

Rational pairing(const Weight& v, const Weight& u);

Weight parse_weight(const std::string& s, long dim);
std::string weight_str(const Weight& w);

class RootSystem {
public:
    // type_label in {A1..A4, B2..B4, C3, C4, D4, G2}; k per simple root, default 1
    static RootSystem build(const std::string& type_label,
                            const std::vector<Rational>& k_values = {});

    const std::string& label() const { return label_; }
    long rank() const { return static_cast<long>(simple_roots_.size()); }
    long dim() const { return dim_; }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    const std::vector<Weight>& positive_coroots() const { return pos_coroots_; }
    long num_positive() const { return static_cast<long>(pos_roots_.size()); }

    const Rational& k_simple(long i) const { return k_simple_[i]; }
    // extended to any positive root by W-conjugacy
    const Rational& k_pos(long b) const { return k_pos_[b]; }
    bool k_is_one() const;

    // fundamental coweights (dual to simple roots inside the coroot span)
    const Weight& fundamental_coweight(long i) const { return fund_coweights_[i]; }
    // fundamental weights (dual to simple coroots inside the root span)
    const Weight& fundamental_weight(long i) const { return fund_weights_[i]; }

    // index of a vector in the positive-root list, or -1
    long pos_root_index(const Weight& v) const;
    // sum of simple-root coefficients
    long height(long b) const { return heights_[b]; }

    // positive roots of the subsystem generated by the simple roots in J
    std::vector<long> sub_positive_roots(const std::vector<long>& J) const;
    // half-sum of positive coroots of the subsystem J
    Weight rho_check(const std::vector<long>& J) const;
    Weight rho_check() const;
    // fundamental coweights of the subsystem J (inside the span of its coroots),
    // indexed like J
    std::vector<Weight> sub_fundamental_coweights(const std::vector<long>& J) const;

    // reflection s_{pos_root[b]} acting on V (on V-dual use the transpose of the
    // inverse, which for a reflection is the same matrix transposed)
    RationalMatrix reflection_matrix(long b) const;

    bool is_regular_dominant(const Weight& s) const;
    bool is_regular(const Weight& s) const;
    bool is_dominant(const Weight& s) const;

private:
    void generate_and_validate();

    std::string label_;
    long dim_ = 0;
    std::vector<Weight> simple_roots_, simple_coroots_;
    std::vector<Weight> pos_roots_, pos_coroots_;
    std::vector<Rational> k_simple_, k_pos_;
    std::vector<Weight> fund_coweights_, fund_weights_;
    std::vector<long> heights_;
};

}  // namespace hecke
