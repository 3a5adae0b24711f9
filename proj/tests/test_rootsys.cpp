#include <doctest.h>

#include "hecke/rootsys.hpp"

using namespace hecke;

TEST_CASE("A1 has a single positive root") {
    RootSystem rs = RootSystem::build("A1");
    CHECK(rs.num_positive() == 1);
    CHECK(pairing(rs.positive_roots()[0], rs.positive_coroots()[0]) == Rational(2));
}

TEST_CASE("B2 heights and rho-check") {
    RootSystem rs = RootSystem::build("B2");
    CHECK(rs.num_positive() == 4);
    std::vector<long> hts;
    for (long b = 0; b < 4; ++b) hts.push_back(rs.height(b));
    std::sort(hts.begin(), hts.end());
    CHECK(hts == std::vector<long>{1, 1, 2, 3});
    Weight rho = rs.rho_check();
    for (long b = 0; b < 4; ++b)
        CHECK(pairing(rs.positive_roots()[b], rho) == Rational(rs.height(b)));
    CHECK(rs.rho_check({}) == Weight::Zero(2));
}

TEST_CASE("G2 reference coordinates") {
    RootSystem rs = RootSystem::build("G2");
    Weight as = parse_weight("2/3,-1/3,-1/3", 3);
    Weight al = parse_weight("-1,1,0", 3);
    CHECK(rs.simple_roots()[0] == as);
    CHECK(rs.simple_roots()[1] == al);
    CHECK(rs.fundamental_coweight(0) == parse_weight("1,1,-2", 3));
    CHECK(rs.fundamental_coweight(1) == parse_weight("0,1,-1", 3));
    Weight s = parse_weight("0,1,-1", 3);
    CHECK(pairing(as, s) == Rational(0));
    CHECK(pairing(al, s) == Rational(1));
    CHECK(rs.num_positive() == 6);
}

TEST_CASE("pairing of simples with coweights is the identity") {
    for (const char* type : {"A2", "B2", "B3", "C3", "D4", "G2"}) {
        RootSystem rs = RootSystem::build(type);
        for (long i = 0; i < rs.rank(); ++i)
            for (long j = 0; j < rs.rank(); ++j)
                CHECK(pairing(rs.simple_roots()[i], rs.fundamental_coweight(j)) ==
                      Rational(i == j ? 1 : 0));
        for (long b = 0; b < rs.num_positive(); ++b)
            CHECK(pairing(rs.positive_roots()[b], rs.positive_coroots()[b]) == Rational(2));
    }
}

TEST_CASE("A1 rho-check of the full subsystem") {
    RootSystem rs = RootSystem::build("A1");
    Weight r = rs.rho_check({0});
    CHECK(pairing(rs.simple_roots()[0], r) == Rational(1));
}

TEST_CASE("parameter conjugation invariance") {
    CHECK_NOTHROW(RootSystem::build("B2", {Rational(1), Rational(2)}));
    CHECK_THROWS(RootSystem::build("A2", {Rational(1), Rational(2)}));
    CHECK_THROWS(RootSystem::build("D4", {Rational(1), Rational(1), Rational(1), Rational(2)}));
    CHECK_THROWS(RootSystem::build("B2", {Rational(0), Rational(1)}));
}

TEST_CASE("unsupported labels are rejected") {
    CHECK_THROWS(RootSystem::build("E8"));
    CHECK_THROWS(RootSystem::build("B9"));
    CHECK_THROWS(RootSystem::build("Q2"));
    CHECK_THROWS(RootSystem::build("G"));
}

TEST_CASE("weight literals") {
    Weight w = parse_weight("3/2,1/2", 2);
    CHECK(w[0] == Rational(3, 2));
    CHECK(weight_str(w) == "3/2,1/2");
    CHECK_THROWS(parse_weight("1,2,3", 2));
    CHECK_THROWS(parse_weight("1,x", 2));
}

TEST_CASE("regular and dominant tests") {
    RootSystem rs = RootSystem::build("B2");
    CHECK(rs.is_regular_dominant(parse_weight("2,1", 2)));
    CHECK(!rs.is_regular(parse_weight("1,0", 2)));
    CHECK(!rs.is_dominant(parse_weight("1,2", 2)));
}
