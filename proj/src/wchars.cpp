#include "hecke/wchars.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hecke {

namespace {

RationalMatrix mat2(long a, long b, long c, long d) {
    RationalMatrix m(2, 2);
    m(0, 0) = Rational(a);
    m(0, 1) = Rational(b);
    m(1, 0) = Rational(c);
    m(1, 1) = Rational(d);
    return m;
}

RationalMatrix mat1(long a) {
    RationalMatrix m(1, 1);
    m(0, 0) = Rational(a);
    return m;
}

std::vector<Rational> rq(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

}  // namespace

long CharTable::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<long>(i);
    throw std::invalid_argument("char table: no such type label '" + label + "'");
}

CharTable char_table(const std::string& type) {
    CharTable t;
    t.type = type;
    if (type == "A1") {
        t.labels = {"triv", "sgn"};
        t.class_rep_words = {{}, {0}};
        t.class_sizes = {1, 1};
        t.chars = {rq({1, 1}), rq({1, -1})};
        t.rep_gens = {{mat1(1)}, {mat1(-1)}};
    } else if (type == "A1xA1") {
        t.labels = {"triv", "sgn1", "sgn2", "sgn"};
        t.class_rep_words = {{}, {0}, {1}, {0, 1}};
        t.class_sizes = {1, 1, 1, 1};
        t.chars = {rq({1, 1, 1, 1}), rq({1, -1, 1, -1}), rq({1, 1, -1, -1}),
                   rq({1, -1, -1, 1})};
        t.rep_gens = {{mat1(1), mat1(1)},
                      {mat1(-1), mat1(1)},
                      {mat1(1), mat1(-1)},
                      {mat1(-1), mat1(-1)}};
    } else if (type == "A2") {
        t.labels = {"triv", "sgn", "std"};
        t.class_rep_words = {{}, {0}, {0, 1}};
        t.class_sizes = {1, 3, 2};
        t.chars = {rq({1, 1, 1}), rq({1, -1, 1}), rq({2, 0, -1})};
        t.rep_gens = {{mat1(1), mat1(1)},
                      {mat1(-1), mat1(-1)},
                      // on the basis of simple roots
                      {mat2(-1, 1, 0, 1), mat2(1, 0, 1, -1)}};
    } else if (type == "B2") {
        // bipartition labels; s1 is the long simple reflection, s2 the short one
        t.labels = {"2x0", "11x0", "0x2", "0x11", "1x1"};
        t.class_rep_words = {{}, {0}, {1}, {0, 1}, {0, 1, 0, 1}};
        t.class_sizes = {1, 2, 2, 2, 1};
        t.chars = {rq({1, 1, 1, 1, 1}), rq({1, -1, 1, -1, 1}), rq({1, 1, -1, -1, 1}),
                   rq({1, -1, -1, 1, 1}), rq({2, 0, 0, 0, -2})};
        t.rep_gens = {{mat1(1), mat1(1)},
                      {mat1(-1), mat1(1)},
                      {mat1(1), mat1(-1)},
                      {mat1(-1), mat1(-1)},
                      // coordinate model: s_{e1-e2}, s_{e2}
                      {mat2(0, 1, 1, 0), mat2(1, 0, 0, -1)}};
    } else if (type == "G2") {
        // s1 is the short simple reflection, s2 the long one
        t.labels = {"1_1", "1_2", "1_3", "1_4", "2_1", "2_2"};
        t.class_rep_words = {{}, {1}, {0}, {0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1, 0, 1}};
        t.class_sizes = {1, 3, 3, 2, 2, 1};
        t.chars = {rq({1, 1, 1, 1, 1, 1}),   rq({1, -1, -1, 1, 1, 1}),
                   rq({1, -1, 1, -1, 1, -1}), rq({1, 1, -1, -1, 1, -1}),
                   rq({2, 0, 0, 1, -1, -2}), rq({2, 0, 0, -1, -1, 2})};
        // reflection representation on the basis (alpha_s, alpha_l); 2_2 = 2_1 (x) 1_3
        t.rep_gens = {{mat1(1), mat1(1)},
                      {mat1(-1), mat1(-1)},
                      {mat1(1), mat1(-1)},
                      {mat1(-1), mat1(1)},
                      {mat2(-1, 3, 0, 1), mat2(1, 0, 1, -1)},
                      {mat2(-1, 3, 0, 1), mat2(-1, 0, -1, 1)}};
    } else {
        throw std::invalid_argument("char table: unsupported type '" + type + "'");
    }
    for (const auto& row : t.chars) t.dims.push_back(std::stol(row[0].str()));
    return t;
}

std::vector<std::vector<long>> conj_classes(const WeylGroup& W) {
    std::vector<long> cls(W.size(), -1);
    std::vector<std::vector<long>> out;
    for (long g = 0; g < W.size(); ++g) {
        if (cls[g] >= 0) continue;
        std::vector<long> c;
        for (long h = 0; h < W.size(); ++h) {
            long x = W.mul(W.mul(h, g), W.inverse(h));
            if (cls[x] < 0) {
                cls[x] = static_cast<long>(out.size());
                c.push_back(x);
            }
        }
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

std::vector<long> class_map(const WeylGroup& W, const CharTable& ct) {
    std::vector<long> cm(W.size(), -1);
    for (size_t ci = 0; ci < ct.class_rep_words.size(); ++ci) {
        long rep = W.from_word(ct.class_rep_words[ci]);
        for (long h = 0; h < W.size(); ++h) {
            long x = W.mul(W.mul(h, rep), W.inverse(h));
            if (cm[x] >= 0 && cm[x] != static_cast<long>(ci))
                throw std::logic_error("char table classes are not disjoint");
            cm[x] = static_cast<long>(ci);
        }
    }
    for (long g = 0; g < W.size(); ++g)
        if (cm[g] < 0) throw std::logic_error("char table classes do not cover the group");
    return cm;
}

RationalMatrix rep_matrix(const WeylGroup& W, const CharTable& ct, long mu, long w) {
    long d = ct.dims[mu];
    RationalMatrix m = RationalMatrix::Zero(d, d);
    for (long i = 0; i < d; ++i) m(i, i) = Rational(1);
    for (long i : W.word(w)) m = m * ct.rep_gens[mu][i];
    return m;
}

void validate_table(const WeylGroup& W, const CharTable& ct) {
    auto cm = class_map(W, ct);
    std::vector<long> sizes(ct.class_sizes.size(), 0);
    for (long g = 0; g < W.size(); ++g) ++sizes[cm[g]];
    if (sizes != ct.class_sizes) throw std::logic_error("embedded class sizes are wrong");
    long sumsq = 0;
    for (long d : ct.dims) sumsq += d * d;
    if (sumsq != W.size()) throw std::logic_error("sum of squares of dims != |W|");
    for (long i = 0; i < ct.num_irreps(); ++i)
        for (long j = 0; j < ct.num_irreps(); ++j) {
            Rational s(0);
            for (size_t c = 0; c < ct.class_sizes.size(); ++c)
                s += Rational(ct.class_sizes[c]) * ct.chars[i][c] * ct.chars[j][c];
            if (s != Rational(i == j ? W.size() : 0))
                throw std::logic_error("character orthogonality fails");
        }
    // matrix models must reproduce the characters
    for (long mu = 0; mu < ct.num_irreps(); ++mu)
        for (size_t c = 0; c < ct.class_rep_words.size(); ++c) {
            RationalMatrix m = rep_matrix(W, ct, mu, W.from_word(ct.class_rep_words[c]));
            Rational tr(0);
            for (long i = 0; i < m.rows(); ++i) tr += m(i, i);
            if (tr != ct.chars[mu][c]) throw std::logic_error("rep matrices disagree with table");
        }
}

std::vector<Rational> module_w_character(const InducedDatum& d, const CharTable& ct) {
    std::vector<Rational> out;
    for (const auto& w : ct.class_rep_words) {
        RationalMatrix A = action_t(d, d.W->from_word(w));
        Rational tr(0);
        for (long i = 0; i < A.rows(); ++i) tr += A(i, i);
        out.push_back(tr);
    }
    return out;
}

std::vector<long> multiplicities(const CharTable& ct, const std::vector<Rational>& chi) {
    std::vector<long> out;
    long order = 0;
    for (long s : ct.class_sizes) order += s;
    for (long mu = 0; mu < ct.num_irreps(); ++mu) {
        Rational s(0);
        for (size_t c = 0; c < chi.size(); ++c)
            s += Rational(ct.class_sizes[c]) * ct.chars[mu][c] * chi[c];
        s /= Rational(order);
        std::string str = s.str();
        if (str.find('/') != std::string::npos || s.sign() < 0)
            throw std::logic_error("non-integral W-type multiplicity");
        out.push_back(std::stol(str));
    }
    return out;
}

RationalMatrix isotypic_projector(const InducedDatum& d, const CharTable& ct, long mu) {
    const WeylGroup& W = *d.W;
    auto cm = class_map(W, ct);
    long n = d.dim();
    RationalMatrix P = RationalMatrix::Zero(n, n);
    for (long g = 0; g < W.size(); ++g) P += ct.chars[mu][cm[g]] * action_t(d, g);
    P *= Rational(ct.dims[mu], W.size());
    return P;
}

RationalMatrix column_reduced_image(const RationalMatrix& P) {
    RationalMatrix A = P;
    long n = A.rows(), m = A.cols();
    std::vector<long> pivots;
    long col = 0;
    for (long row = 0; row < n && col < m; ++row) {
        long pc = -1;
        for (long c = col; c < m; ++c)
            if (!A(row, c).is_zero()) { pc = c; break; }
        if (pc < 0) continue;
        for (long r = 0; r < n; ++r) std::swap(A(r, pc), A(r, col));
        Rational inv = A(row, col).inverse();
        for (long r = 0; r < n; ++r) A(r, col) *= inv;
        for (long c = 0; c < m; ++c) {
            if (c == col || A(row, c).is_zero()) continue;
            Rational f = A(row, c);
            for (long r = 0; r < n; ++r) A(r, c) -= f * A(r, col);
        }
        pivots.push_back(col);
        ++col;
    }
    RationalMatrix B(n, static_cast<long>(pivots.size()));
    for (size_t j = 0; j < pivots.size(); ++j)
        for (long r = 0; r < n; ++r) B(r, static_cast<long>(j)) = A(r, pivots[j]);
    return B;
}

namespace {

GramFamily restrict_by(const GramFamily& g, const RationalMatrix& B) {
    long n = B.rows(), r = B.cols();
    RatFunMatrix Bf = RatFunMatrix::Zero(n, r);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < r; ++j) Bf(i, j) = RatFun(B(i, j));
    GramFamily out;
    out.kind = g.kind;
    out.labels.assign(r, -1);
    out.entries = Bf.transpose() * g.entries * Bf;
    return out;
}

}  // namespace

GramFamily isotypic_restrict(const GramFamily& g, const InducedDatum& d, const CharTable& ct,
                             long mu) {
    RationalMatrix B = column_reduced_image(isotypic_projector(d, ct, mu));
    if (B.cols() == 0) throw std::invalid_argument("isotypic_restrict: type absent from module");
    return restrict_by(g, B);
}

GramFamily isotypic_multiplicity_block(const GramFamily& g, const InducedDatum& d,
                                       const CharTable& ct, long mu) {
    const WeylGroup& W = *d.W;
    long n = d.dim();
    // matrix-coefficient projector onto the first coordinate of each copy
    RationalMatrix P = RationalMatrix::Zero(n, n);
    for (long w = 0; w < W.size(); ++w) {
        RationalMatrix m = rep_matrix(W, ct, mu, W.inverse(w));
        if (m(0, 0).is_zero()) continue;
        P += m(0, 0) * action_t(d, w);
    }
    P *= Rational(ct.dims[mu], W.size());
    RationalMatrix PP = P * P;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (!(PP(i, j) == P(i, j)))
                throw std::logic_error("seed projector is not idempotent");
    RationalMatrix B = column_reduced_image(P);
    if (B.cols() == 0)
        throw std::invalid_argument("isotypic_multiplicity_block: type absent from module");
    return restrict_by(g, B);
}

long trivial_irrep(const CharTable& ct) {
    for (long mu = 0; mu < ct.num_irreps(); ++mu) {
        bool all_one = true;
        for (const auto& v : ct.chars[mu])
            if (v != Rational(1)) all_one = false;
        if (all_one) return mu;
    }
    throw std::logic_error("char table without a trivial character");
}

GramFamily canonical_family(const InducedDatum& d, const CharTable& ct, long mu,
                            GramRoute route) {
    GramFamily g = gram_family(d, route, /*normalized=*/false);
    GramFamily seed = isotypic_multiplicity_block(g, d, ct, mu);
    if (seed.entries.rows() != 1)
        throw std::invalid_argument("canonical_family: anchor type has multiplicity > 1");
    RatFun f = seed.entries(0, 0);
    if (f.is_zero())
        throw std::runtime_error("canonical_family: the family is identically degenerate on "
                                 "the anchor type");
    for (long i = 0; i < g.entries.rows(); ++i)
        for (long j = 0; j < g.entries.cols(); ++j)
            if (!g.entries(i, j).is_zero()) g.entries(i, j) /= f;
    return g;
}

}  // namespace hecke
