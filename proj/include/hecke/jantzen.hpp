// Jantzen filtration of a hermitian family: congruence diagonalization over the
// local ring at t0, vanishing orders and signs, level signatures, and the
// two-sided signature bookkeeping identity.
#pragma once

#include <optional>

#include "hecke/wchars.hpp"

namespace hecke {

struct JantzenCore {
    Rational t0;
    std::vector<long> orders;   // ascending
    std::vector<int> signs;     // sign of the unit at t0, per diagonal entry
    std::vector<RatFun> units;  // diagonal = unit * (t-t0)^order
    RatFunMatrix basis;         // columns: transformed basis vectors; invertible at t0
};

// g symmetric with det not identically zero; transformation entries stay
// regular and invertible at t0
JantzenCore dvr_diagonalize(const RatFunMatrix& g, const Rational& t0);

std::pair<long, long> rational_signature(RationalMatrix sym);

struct JantzenReport {
    JantzenCore core;
    std::vector<long> graded_dims;                      // dim E_n / E_{n+1}
    std::vector<long> filtration_dims;                  // dim E_n
    std::vector<std::pair<long, long>> level_signatures;
    Rational delta;
    std::pair<long, long> sig_below, sig_above;  // exact signatures at t0 -/+ delta
    bool bookkeeping_ok = false;                 // p+ = p- + sum_{n odd}(p_n - q_n)
};

JantzenReport jantzen_report(const RatFunMatrix& g, const Rational& t0,
                             std::optional<Rational> delta = std::nullopt);

// Quotient structure on the graded levels: W- and A-actions descend, exact
// level forms, isotypic signatures and weight-vector signs.
class LevelAnalysis {
public:
    LevelAnalysis(JantzenCore core, const InducedDatum& d);

    const JantzenCore& core() const { return core_; }
    std::vector<long> levels() const;
    long level_dim(long n) const;
    // the nondegenerate form on E_n / E_{n+1} in the transformed basis
    RationalMatrix level_form(long n) const;
    // image of a constant-in-t endomorphism commuting with the filtration
    RationalMatrix quotient_matrix(const RatFunMatrix& action, long n) const;
    RationalMatrix quotient_t(long w, long n) const;
    RationalMatrix quotient_omega(const Weight& omega, long n) const;
    // signature of the level form on the mu-isotypic part of E_n / E_{n+1}
    std::pair<long, long> isotypic_signature(const CharTable& ct, long mu, long n) const;
    std::pair<long, long> level_signature(long n) const;
    // sign of the level form on the (one-dimensional) weight space of lambda
    int weight_vector_sign(const Weight& lambda, long n) const;
    // dimension of the lambda-weight space of E_n / E_{n+1}
    long weight_dim(const Weight& lambda, long n) const;

private:
    JantzenCore core_;
    const InducedDatum* d_;
    RatFunMatrix basis_inv_;
    std::vector<long> idx_of_level(long n) const;
    const RationalMatrix& omega_simple_cached(long i, long n) const;
    const RationalMatrix& t_simple_cached(long i, long n) const;
    mutable std::map<std::pair<long, long>, RationalMatrix> omega_cache_, t_cache_;
};

}  // namespace hecke
