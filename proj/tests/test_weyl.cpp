#include <doctest.h>

#include "hecke/weyl.hpp"

using namespace hecke;

TEST_CASE("B2 group structure") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    CHECK(W.size() == 8);
    CHECK(W.length(W.w0()) == 4);
    long a = W.from_word({0, 1, 0, 1});
    long b = W.from_word({1, 0, 1, 0});
    CHECK(a == b);
    CHECK(a == W.w0());
    for (long x = 0; x < W.size(); ++x) CHECK(W.mul(x, W.inverse(x)) == W.identity());
    CHECK(W.w0_is_minus_one());
}

TEST_CASE("matrix action agrees with the root permutation") {
    for (const char* type : {"A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::build(type);
        WeylGroup W(rs);
        for (long g = 0; g < W.size(); ++g)
            for (long b = 0; b < rs.num_positive(); ++b) {
                Weight img = W.act(g, rs.positive_roots()[b]);
                long idx = W.act_root(g, b);
                Weight expect = idx < rs.num_positive()
                                    ? rs.positive_roots()[idx]
                                    : Weight(-rs.positive_roots()[idx - rs.num_positive()]);
                CHECK(img == expect);
            }
    }
}

TEST_CASE("delta automorphism") {
    RootSystem a2 = RootSystem::build("A2");
    WeylGroup WA(a2);
    CHECK_FALSE(WA.w0_is_minus_one());
    CHECK(WA.delta(WA.simple(0)) == WA.simple(1));
    RootSystem b2 = RootSystem::build("B2");
    WeylGroup WB(b2);
    for (long w = 0; w < WB.size(); ++w) CHECK(WB.delta(w) == w);
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup WG(g2);
    for (long w = 0; w < WG.size(); ++w) CHECK(WG.delta(WG.delta(w)) == w);
}

TEST_CASE("coset representatives") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    CHECK(W.min_coset_reps({}).size() == 8);
    CHECK(W.min_coset_reps({0, 1}) == std::vector<long>{W.identity()});
    CHECK(W.min_coset_reps({0}).size() == 4);

    // unique minimal element per coset, exhaustively
    for (const std::vector<long>& M : {std::vector<long>{0}, std::vector<long>{1}}) {
        auto sub = W.subgroup(M);
        for (long z = 0; z < W.size(); ++z) {
            auto [c, m] = W.coset_decompose(z, M);
            CHECK(W.mul(c, m) == z);
            CHECK(W.is_minimal_rep(c, M));
            CHECK(std::find(sub.begin(), sub.end(), m) != sub.end());
            long count = 0;
            for (long mm : sub)
                if (W.is_minimal_rep(W.mul(z, mm), M)) ++count;
            CHECK(count == 1);
        }
    }

    // z in W_M and z minimal cases
    auto [c1, m1] = W.coset_decompose(W.simple(0), {0});
    CHECK(c1 == W.identity());
    CHECK(m1 == W.simple(0));
    auto [c2, m2] = W.coset_decompose(W.simple(1), {0});
    CHECK(c2 == W.simple(1));
    CHECK(m2 == W.identity());
    // w0 = c * s1 with c = w0 s1
    auto [c3, m3] = W.coset_decompose(W.w0(), {0});
    CHECK(c3 == W.mul(W.w0(), W.simple(0)));
    CHECK(m3 == W.simple(0));
}

TEST_CASE("w0 of Levi factorizations") {
    for (const char* type : {"A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::build(type);
        WeylGroup W(rs);
        std::vector<std::vector<long>> subsets = {{}, {0}, {1}, {0, 1}};
        for (const auto& M : subsets) {
            auto Md = W.delta_of_subset(M);
            CHECK(W.mul(W.w0(), W.w0_of(Md)) == W.mul(W.w0_of(M), W.w0()));
        }
    }
}

TEST_CASE("reduced words multiply out") {
    RootSystem rs = RootSystem::build("G2");
    WeylGroup W(rs);
    for (long w = 0; w < W.size(); ++w) {
        CHECK(W.from_word(W.word(w)) == w);
        CHECK(static_cast<long>(W.word(w).size()) == W.length(w));
    }
    CHECK(W.word_str(W.identity()) == "e");
    CHECK(W.word_str(W.simple(0)) == "s1");
}

TEST_CASE("reflections") {
    RootSystem rs = RootSystem::build("B2");
    WeylGroup W(rs);
    for (long b = 0; b < rs.num_positive(); ++b) {
        long r = W.reflection(b);
        CHECK(W.mul(r, r) == W.identity());
        CHECK(W.act(r, rs.positive_roots()[b]) == Weight(-rs.positive_roots()[b]));
    }
}
