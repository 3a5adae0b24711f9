#include <doctest.h>

#include <random>

#include "hecke/langdata.hpp"

using namespace hecke;

namespace {

Weight random_coroot_span_weight(const RootSystem& rs, std::mt19937_64& rng) {
    Weight v = Weight::Zero(rs.dim());
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (long i = 0; i < rs.rank(); ++i)
        v += rs.simple_coroots()[i] * Rational(num(rng), den(rng));
    return v;
}

}  // namespace

TEST_CASE("langlands decomposition basics") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    // dominant regular: F empty
    Weight dom = rs.rho_check();
    LanglandsDatum l1 = f_decompose(rs, W, dom);
    CHECK(l1.F.empty());
    CHECK(l1.v0 == dom);
    // antidominant: F = all simple indices, v0 = 0
    LanglandsDatum l2 = f_decompose(rs, W, Weight(-rs.rho_check()));
    CHECK(l2.F == std::vector<long>{0, 1});
    CHECK(l2.v0 == Weight::Zero(2));
    // the reference point (1,0): F = {short simple}, v0 = (1,0)
    LanglandsDatum l3 = f_decompose(rs, W, parse_weight("1,0", 2));
    CHECK(l3.F == std::vector<long>{1});
    CHECK(l3.v0 == parse_weight("1,0", 2));
}

TEST_CASE("langlands decomposition reconstructs, randomized") {
    std::mt19937_64 rng(123456);
    for (const char* type : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::build(type);
        WeylGroup W(rs);
        for (int trial = 0; trial < 1000; ++trial) {
            Weight v = random_coroot_span_weight(rs, rng);
            LanglandsDatum l = f_decompose(rs, W, v);  // uniqueness asserted inside
            Weight rec = l.v0;
            for (size_t i = 0; i < l.F.size(); ++i)
                rec -= rs.simple_coroots()[l.F[i]] * l.d[i];
            CHECK(rec == v);
            for (const auto& c : l.c) CHECK(c.sign() > 0);
            for (const auto& d : l.d) CHECK(d.sign() >= 0);
        }
    }
}

TEST_CASE("dominance order monotonicity of the positive part") {
    std::mt19937_64 rng(98765);
    for (const char* type : {"A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::build(type);
        WeylGroup W(rs);
        std::uniform_int_distribution<long> num(0, 6), den(1, 4);
        for (int trial = 0; trial < 200; ++trial) {
            Weight v1 = random_coroot_span_weight(rs, rng);
            Weight v2 = v1;
            for (long b = 0; b < rs.num_positive(); ++b)
                v2 -= rs.positive_coroots()[b] * Rational(num(rng), den(rng));
            REQUIRE(dominance_geq(rs, v1, v2));
            Weight u1 = f_decompose(rs, W, v1).v0;
            Weight u2 = f_decompose(rs, W, v2).v0;
            CHECK(dominance_geq(rs, u1, u2));
        }
    }
}

TEST_CASE("temperedness via the Casselman inequalities") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    // Steinberg weight: minus the sum of the k-weighted fundamental coweights
    Weight st = -(rs.fundamental_coweight(0) + rs.fundamental_coweight(1));
    CHECK(is_discrete_series(rs, {st}));
    CHECK(is_tempered(rs, {st}));
    CHECK(is_tempered(rs, {Weight::Zero(2)}));
    CHECK_FALSE(is_discrete_series(rs, {Weight::Zero(2)}));
    // dominant regular orbit is not tempered
    std::vector<Weight> orbit;
    for (long g = 0; g < W.size(); ++g) orbit.push_back(W.act_dual(g, rs.rho_check()));
    CHECK_FALSE(is_tempered(rs, orbit));
}

TEST_CASE("tau counts") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    Weight rho = rs.rho_check();
    CHECK(tau(W, W.identity(), rho) == 0);
    CHECK(tau(W, W.w0(), rho) == rs.rank());
    for (long x = 0; x < W.size(); ++x) CHECK(tau(W, x, rho) == tau0(W, x));
}

TEST_CASE("orientation signs") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    CHECK(orientation_sign(W, W.identity(), rs.rho_check()) == 1);
    for (long x = 0; x < W.size(); ++x) CHECK(orientation_sign(W, x, rs.rho_check()) == 1);
    // s = (3/2,1/2): the only root with 0 < (beta,s) < 1 is e2
    Weight s = parse_weight("3/2,1/2", 2);
    long e2 = rs.pos_root_index(parse_weight("0,1", 2));
    for (long x = 0; x < W.size(); ++x)
        CHECK(orientation_sign(W, x, s) == (W.inverts(x, e2) ? -1 : 1));
}

TEST_CASE("regular composition data") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    {
        RegularCC cc = regular_cc_analyze(W, parse_weight("3/2,1/2", 2));
        CHECK(cc.labels.size() == 2);
        CHECK(cc.omega_L[0].size() + cc.omega_L[1].size() == 8);
        CHECK(cc.omega_L[0].size() == 4);
        CHECK(cc.omega_L[1].size() == 4);
    }
    {
        RegularCC cc = regular_cc_analyze(W, rs.rho_check());
        CHECK(cc.labels.size() == 4);
        std::vector<long> sizes;
        for (const auto& o : cc.omega_L) sizes.push_back(static_cast<long>(o.size()));
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<long>{1, 1, 3, 3});
        // leading weights decompose with F = J
        for (size_t j = 0; j < cc.labels.size(); ++j) {
            LanglandsDatum l = f_decompose(rs, W, W.act_dual(cc.xJ[j], cc.s));
            CHECK(l.F == cc.labels[j]);
        }
        // the identity belongs to the open constituent
        CHECK(regular_cc_constituent(cc, W, W.identity()) == cc.label_index({}));
    }
    CHECK_THROWS(regular_cc_analyze(W, parse_weight("1,0", 2)));
}

TEST_CASE("a-characters of standard modules") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    InducedDatum ps = InducedDatum::minimal_ps(W, parse_weight("1,0", 2), parse_weight("0,0", 2));
    auto ch = a_character(ps, Rational(0));
    CHECK(ch.size() == 4);
    for (const auto& [w, m] : ch) CHECK(m == 2);

    InducedDatum st =
        InducedDatum::make(W, OneDimSigma{{0}, true}, Weight::Zero(2), parse_weight("1,1", 2));
    // generic parameter: four distinct weights, each of multiplicity one
    auto generic = a_character(st, Rational(1, 3));
    CHECK(generic.size() == 4);
    for (const auto& [w, m] : generic) CHECK(m == 1);
    // at the reducibility point two of them collide
    auto ch2 = a_character(st, Rational(1, 2));
    CHECK(ch2.size() == 3);

    // same central character as X((1,0)) but a different A-character multiset
    bool same = ch.size() == ch2.size();
    CHECK_FALSE(same);
}

TEST_CASE("hermitian KL term parity") {
    CHECK(hkl_term(1, 0, 2, 2) == HKLPoly::monomial(1, 0));
    CHECK(hkl_term(-1, 0, 3, 1) == HKLPoly::monomial(-1, 1));
    CHECK_THROWS(hkl_term(1, 0, 3, 2));   // odd exponent
    CHECK_THROWS(hkl_term(1, 2, 1, 1));   // negative exponent
    CHECK(HKLPoly::monomial(1, 1).at_minus_q() == HKLPoly::monomial(-1, 1));
    CHECK((HKLPoly::monomial(1, 0) + HKLPoly::monomial(-1, 1)).str() == "-q + 1");
}

TEST_CASE("regular theorem in rank one") {
    RootSystem rs = RootSystem::build("A1");
    WeylGroup W(rs);
    HKLRegularResult res = hkl_regular(W, rs.rho_check());
    CHECK(res.routes_agree);
    CHECK(res.conjecture_holds);
    CHECK(res.cc.labels.size() == 2);
}
