// Weight combinatorics of the Langlands classification, temperedness tests,
// regular-central-character level and orientation data, and the hermitian
// Kazhdan-Lusztig assembly.
#pragma once

#include <map>

#include "hecke/jantzen.hpp"

namespace hecke {

struct LanglandsDatum {
    std::vector<long> F;        // simple indices with a nonzero coroot part
    Weight v0;                  // positive part, sum of c_j * fundamental coweights
    std::vector<Rational> c;    // indexed by the complement of F
    std::vector<Rational> d;    // indexed by F, all >= 0
};

// unique decomposition v = sum_{j notin F} c_j w_j-check - sum_{i in F} d_i a_i-check
// (v must lie in the span of the coroots); verified exhaustively over subsets
LanglandsDatum f_decompose(const RootSystem& rs, const WeylGroup& W, const Weight& v);

// v1 >= v2 in the dominance order (difference a nonnegative combination of
// positive coroots)
bool dominance_geq(const RootSystem& rs, const Weight& v1, const Weight& v2);

bool is_tempered(const RootSystem& rs, const std::vector<Weight>& weights);
bool is_discrete_series(const RootSystem& rs, const std::vector<Weight>& weights);

// #{beta > 0 : x beta < 0 and (beta, nu) = k_beta}
long tau(const WeylGroup& W, long x, const Weight& nu);
// #{alpha simple : x alpha < 0}
long tau0(const WeylGroup& W, long x);
// (-1)^{#{beta > 0 : 0 < (beta, s) < k_beta and x beta < 0}}
int orientation_sign(const WeylGroup& W, long x, const Weight& s);

// A-character of the induced module at parameter t (weights with multiplicity)
std::vector<std::pair<Weight, long>> a_character(const InducedDatum& d, const Rational& t);

// Integer polynomials in q.
struct HKLPoly {
    std::vector<long> coeffs;  // lowest degree first
    HKLPoly() {}
    explicit HKLPoly(std::vector<long> c) : coeffs(std::move(c)) { trim(); }
    static HKLPoly monomial(long coef, long deg);
    void trim();
    bool is_zero() const { return coeffs.empty(); }
    HKLPoly at_minus_q() const;
    friend HKLPoly operator+(const HKLPoly& a, const HKLPoly& b);
    friend bool operator==(const HKLPoly& a, const HKLPoly& b) { return a.coeffs == b.coeffs; }
    std::string str() const;
};

// single Jantzen-level contribution (p-q) q^{(dimO' - dimO - level)/2};
// throws on parity violation
HKLPoly hkl_term(long p_minus_q, long dim_row, long dim_col, long level);

// Composition data at regular central character.
struct RegularCC {
    Weight s;
    std::vector<long> PiM;                  // w Delta_s, as simple indices
    std::vector<std::vector<long>> labels;  // all subsets J of PiM
    std::vector<long> xJ;                   // weight lambda_{L(J)} = xJ . s
    std::vector<int> eps;                   // orientation numbers
    std::vector<std::vector<Weight>> omega_L;  // weights of each constituent
    long label_index(const std::vector<long>& J) const;
};

RegularCC regular_cc_analyze(const WeylGroup& W, const Weight& s);
// index of the constituent whose weight set contains x.s
long regular_cc_constituent(const RegularCC& cc, const WeylGroup& W, long x);

struct HKLRegularResult {
    RegularCC cc;
    std::vector<std::vector<HKLPoly>> ph;          // Jantzen-signature route
    std::vector<std::vector<HKLPoly>> ph_formula;  // orientation-formula route
    std::vector<std::vector<HKLPoly>> kl;          // 1 iff J subset J'
    bool routes_agree = false;
    bool conjecture_holds = false;
};

HKLRegularResult hkl_regular(const WeylGroup& W, const Weight& s);

}  // namespace hecke
