// Conjugacy classes, embedded character tables for the rank <= 2 Weyl groups,
// isotypic projectors and module W-characters.
#pragma once

#include "hecke/modforms.hpp"

namespace hecke {

struct CharTable {
    std::string type;
    std::vector<std::string> labels;
    std::vector<std::vector<long>> class_rep_words;
    std::vector<long> class_sizes;
    std::vector<std::vector<Rational>> chars;  // [irrep][class]
    std::vector<long> dims;
    // generator matrices per irrep (one per simple reflection); 1x1 for linear
    // characters, embedded 2x2 integral models for the two-dimensional types
    std::vector<std::vector<RationalMatrix>> rep_gens;

    long num_irreps() const { return static_cast<long>(labels.size()); }
    long index_of(const std::string& label) const;
};

// embedded and validated table; type in {A1, A1xA1, A2, B2, G2}
CharTable char_table(const std::string& type);

std::vector<std::vector<long>> conj_classes(const WeylGroup& W);
// class index per group element, following the table's representative words
std::vector<long> class_map(const WeylGroup& W, const CharTable& ct);
// validates orthogonality, class sizes, sum of squares, matrix-rep traces
void validate_table(const WeylGroup& W, const CharTable& ct);

// trace of pi(t_w) on the induced module, one value per class
std::vector<Rational> module_w_character(const InducedDatum& d, const CharTable& ct);
std::vector<long> multiplicities(const CharTable& ct, const std::vector<Rational>& chi);

RationalMatrix rep_matrix(const WeylGroup& W, const CharTable& ct, long mu, long w);
RationalMatrix isotypic_projector(const InducedDatum& d, const CharTable& ct, long mu);
// exact column reduction with first-nonzero pivoting; returns a basis of the image
RationalMatrix column_reduced_image(const RationalMatrix& P);

// restriction of the family to the mu-isotypic component (dim = dim mu * mult)
GramFamily isotypic_restrict(const GramFamily& g, const InducedDatum& d, const CharTable& ct,
                             long mu);
// per-copy block of size mult(mu), via the (1,1) matrix-coefficient projector
GramFamily isotypic_multiplicity_block(const GramFamily& g, const InducedDatum& d,
                                       const CharTable& ct, long mu);

long trivial_irrep(const CharTable& ct);
// The family rescaled so that the seed entry of the multiplicity-one type mu is
// the constant +1. This pins the canonical normalization (positive unit on the
// lowest W-type) even on lines where the (e,e) entry vanishes identically.
GramFamily canonical_family(const InducedDatum& d, const CharTable& ct, long mu,
                            GramRoute route = GramRoute::Auto);

}  // namespace hecke
