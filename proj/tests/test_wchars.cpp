#include <doctest.h>

#include "hecke/wchars.hpp"

using namespace hecke;

TEST_CASE("embedded tables validate against the groups") {
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::build(type);
        WeylGroup W(rs);
        CharTable ct = char_table(type);
        CHECK_NOTHROW(validate_table(W, ct));
        CHECK(conj_classes(W).size() == ct.class_sizes.size());
    }
    CHECK_THROWS(char_table("F4"));
}

TEST_CASE("A1xA1 table orthogonality") {
    CharTable ct = char_table("A1xA1");
    long order = 0;
    for (long s : ct.class_sizes) order += s;
    CHECK(order == 4);
    for (long i = 0; i < ct.num_irreps(); ++i)
        for (long j = 0; j < ct.num_irreps(); ++j) {
            Rational s(0);
            for (size_t c = 0; c < ct.class_sizes.size(); ++c)
                s += Rational(ct.class_sizes[c]) * ct.chars[i][c] * ct.chars[j][c];
            CHECK(s == Rational(i == j ? order : 0));
        }
}

TEST_CASE("dimension vectors") {
    CHECK(char_table("B2").dims == std::vector<long>{1, 1, 1, 1, 2});
    CHECK(char_table("G2").dims == std::vector<long>{1, 1, 1, 1, 2, 2});
    // sign character is -1 on every reflection class
    CharTable b2 = char_table("B2");
    long sgn = b2.index_of("0x11");
    CHECK(b2.chars[sgn][1] == Rational(-1));
    CHECK(b2.chars[sgn][2] == Rational(-1));
}

TEST_CASE("class counts") {
    RootSystem a1 = RootSystem::build("A1");
    WeylGroup W1(a1);
    CHECK(conj_classes(W1).size() == 2);
    RootSystem b2 = RootSystem::build("B2");
    WeylGroup W2(b2);
    CHECK(conj_classes(W2).size() == 5);
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup W3(g2);
    CHECK(conj_classes(W3).size() == 6);
}

TEST_CASE("module characters and multiplicities") {
    RootSystem b2 = RootSystem::build("B2");
    WeylGroup W(b2);
    CharTable ct = char_table("B2");

    // the principal series is the regular representation
    InducedDatum ps = InducedDatum::minimal_ps(W, parse_weight("1,0", 2), parse_weight("1,1", 2));
    auto mults = multiplicities(ct, module_w_character(ps, ct));
    CHECK(mults == ct.dims);

    // St induced from the long A1: 11x0 + 1x1 + 0x11
    InducedDatum st = InducedDatum::make(W, OneDimSigma{{0}, true}, Weight::Zero(2),
                                         parse_weight("1,1", 2));
    auto m2 = multiplicities(ct, module_w_character(st, ct));
    std::vector<long> expect(5, 0);
    expect[ct.index_of("11x0")] = 1;
    expect[ct.index_of("1x1")] = 1;
    expect[ct.index_of("0x11")] = 1;
    CHECK(m2 == expect);
}

TEST_CASE("G2 Steinberg induction from the short root") {
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup W(g2);
    CharTable ct = char_table("G2");
    InducedDatum st = InducedDatum::make(W, OneDimSigma{{0}, true}, Weight::Zero(3),
                                         parse_weight("0,1,-1", 3));
    auto m = multiplicities(ct, module_w_character(st, ct));
    std::vector<long> expect(6, 0);
    expect[ct.index_of("2_2")] = 1;
    expect[ct.index_of("2_1")] = 1;
    expect[ct.index_of("1_4")] = 1;
    expect[ct.index_of("1_2")] = 1;
    CHECK(m == expect);
}

TEST_CASE("projectors") {
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup W(g2);
    CharTable ct = char_table("G2");
    InducedDatum ps = InducedDatum::minimal_ps(W, Weight::Zero(3), parse_weight("1,2,-3", 3));

    RationalMatrix sum = RationalMatrix::Zero(ps.dim(), ps.dim());
    for (long mu = 0; mu < ct.num_irreps(); ++mu) {
        RationalMatrix P = isotypic_projector(ps, ct, mu);
        // idempotent
        RationalMatrix PP = P * P;
        bool idem = true;
        for (long i = 0; i < P.rows(); ++i)
            for (long j = 0; j < P.cols(); ++j)
                if (!(PP(i, j) == P(i, j))) idem = false;
        CHECK(idem);
        // commutes with the W-action
        for (long i = 0; i < g2.rank(); ++i) {
            RationalMatrix A = action_t(ps, W.simple(i));
            RationalMatrix l = P * A, r = A * P;
            bool comm = true;
            for (long a = 0; a < P.rows(); ++a)
                for (long b = 0; b < P.cols(); ++b)
                    if (!(l(a, b) == r(a, b))) comm = false;
            CHECK(comm);
        }
        CHECK(column_reduced_image(P).cols() == ct.dims[mu] * ct.dims[mu]);
        sum += P;
    }
    for (long i = 0; i < sum.rows(); ++i)
        for (long j = 0; j < sum.cols(); ++j)
            CHECK(sum(i, j) == Rational(i == j ? 1 : 0));

    // trivial isotypic of the principal series is one-dimensional
    CHECK(column_reduced_image(isotypic_projector(ps, ct, ct.index_of("1_1"))).cols() == 1);
}

TEST_CASE("cross-isotypic blocks of an invariant family vanish") {
    RootSystem b2 = RootSystem::build("B2");
    WeylGroup W(b2);
    CharTable ct = char_table("B2");
    InducedDatum d =
        InducedDatum::minimal_ps(W, parse_weight("1/3,1/5", 2), parse_weight("7/3,5/4", 2));
    GramFamily g = gram_family(d);
    for (long mu = 0; mu < ct.num_irreps(); ++mu)
        for (long nu = 0; nu < ct.num_irreps(); ++nu) {
            if (mu == nu) continue;
            RationalMatrix Bm = column_reduced_image(isotypic_projector(d, ct, mu));
            RationalMatrix Bn = column_reduced_image(isotypic_projector(d, ct, nu));
            if (Bm.cols() == 0 || Bn.cols() == 0) continue;
            RatFunMatrix Bmf(Bm.rows(), Bm.cols()), Bnf(Bn.rows(), Bn.cols());
            for (long i = 0; i < Bm.rows(); ++i)
                for (long j = 0; j < Bm.cols(); ++j) Bmf(i, j) = RatFun(Bm(i, j));
            for (long i = 0; i < Bn.rows(); ++i)
                for (long j = 0; j < Bn.cols(); ++j) Bnf(i, j) = RatFun(Bn(i, j));
            RatFunMatrix cross = Bmf.transpose() * g.entries * Bnf;
            for (long i = 0; i < cross.rows(); ++i)
                for (long j = 0; j < cross.cols(); ++j) CHECK(cross(i, j).is_zero());
        }
}

TEST_CASE("isotypic restriction sizes") {
    RootSystem b2 = RootSystem::build("B2");
    WeylGroup W(b2);
    CharTable ct = char_table("B2");
    InducedDatum d =
        InducedDatum::minimal_ps(W, parse_weight("1/3,1/5", 2), parse_weight("7/3,5/4", 2));
    GramFamily g = gram_family(d);
    GramFamily triv = isotypic_restrict(g, d, ct, ct.index_of("2x0"));
    CHECK(triv.entries.rows() == 1);
    GramFamily refl = isotypic_restrict(g, d, ct, ct.index_of("1x1"));
    CHECK(refl.entries.rows() == 4);
    GramFamily block = isotypic_multiplicity_block(g, d, ct, ct.index_of("1x1"));
    CHECK(block.entries.rows() == 2);
}
