// Acceptance suite: one pass/fail line per criterion, exact arithmetic only.
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "hecke/verify.hpp"

using namespace hecke;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << what << note
              << std::endl;
    if (!ok) ++failures;
}

bool all_pass_print(const VerifyReport& rep) {
    if (!rep.all_pass()) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                std::cout << "       mismatch: " << c.name << ": expected " << c.expected
                          << ", got " << c.got << std::endl;
    }
    return rep.all_pass();
}

InducedDatum dominant_ps(const WeylGroup& W, const Weight& base, const Weight& dir) {
    return InducedDatum::minimal_ps(W, base, dir);
}

}  // namespace

int main() {
    criterion(1, "R-calculus identity suite on seeded non-degenerate lines", [] {
        return all_pass_print(verify_identities());
    });

    criterion(2, "T-basis family converts to the diagonal closed form in the R-basis", [] {
        bool ok = true;
        for (const char* type : {"A2", "B2", "G2"}) {
            RootSystem rs = RootSystem::build(type);
            WeylGroup W(rs);
            // seeded random dominant regular rational line
            std::mt19937_64 rng(type[0] * 101 + type[1]);
            std::uniform_int_distribution<long> num(1, 5), den(1, 4);
            Weight dir = Weight::Zero(rs.dim());
            for (long i = 0; i < rs.rank(); ++i)
                dir += rs.fundamental_coweight(i) * Rational(num(rng), den(rng));
            Weight base = dir * Rational(num(rng), 7 * den(rng));
            InducedDatum d = dominant_ps(W, base, dir);
            if (!d.line->multiplication_safe()) return false;
            GramFamily raw = gram_family(d, GramRoute::Formula, /*normalized=*/false);
            GramFamily r = to_r_basis(raw, d);
            RatFun pref = gram_prefactor(d);
            for (long i = 0; i < d.dim(); ++i) {
                for (long j = 0; j < d.dim(); ++j)
                    if (i != j && !r.entries(i, j).is_zero()) ok = false;
                if (!(r.entries(i, i) == pref * r_diagonal_closed_form(d, d.basis[i])))
                    ok = false;
            }
            // normalized family: the Opdam product for the trivial inducing character
            GramFamily norm = gram_family(d);
            GramFamily rn = to_r_basis(norm, d);
            for (long i = 0; i < d.dim(); ++i)
                if (!(rn.entries(i, i) == r_diagonal_closed_form(d, d.basis[i]))) ok = false;
        }
        return ok;
    });

    criterion(3, "invariance for every generator and the hermitian-dual identification", [] {
        bool ok = true;
        for (const char* type : {"B2", "G2"}) {
            RootSystem rs = RootSystem::build(type);
            WeylGroup W(rs);
            Weight base = rs.fundamental_coweight(0) * Rational(1, 5);
            Weight dir = rs.rho_check() + rs.fundamental_coweight(1) * Rational(1, 2);
            InducedDatum d = dominant_ps(W, base, dir);
            if (!invariance_check(gram_family(d), d)) ok = false;
            if (!herm_dual_check(W, base, dir)) ok = false;
        }
        RootSystem a1 = RootSystem::build("A1");
        WeylGroup W1(a1);
        if (!herm_dual_check(W1, Weight::Zero(2), a1.fundamental_coweight(0))) ok = false;
        return ok;
    });

    criterion(4, "Jantzen signature bookkeeping on the B2 and G2 reference lines", [] {
        RootSystem b2 = RootSystem::build("B2");
        WeylGroup WB(b2);
        CharTable cb = char_table("B2");
        InducedDatum db =
            InducedDatum::minimal_ps(WB, Weight::Zero(2), parse_weight("1,0", 2));
        JantzenReport rb =
            jantzen_report(canonical_family(db, cb, trivial_irrep(cb)).entries, Rational(1));
        RootSystem g2 = RootSystem::build("G2");
        WeylGroup WG(g2);
        CharTable cg = char_table("G2");
        InducedDatum dg =
            InducedDatum::minimal_ps(WG, Weight::Zero(3), parse_weight("0,1,-1", 3));
        JantzenReport rg =
            jantzen_report(canonical_family(dg, cg, trivial_irrep(cg)).entries, Rational(1));
        return rb.bookkeeping_ok && rg.bookkeeping_ok;
    });

    criterion(5, "regular central character theorem, two independent routes", [] {
        return all_pass_print(verify_regular_suite());
    });

    criterion(6, "B2 subregular reproduction against the embedded tables", [] {
        return all_pass_print(verify_b2_subregular());
    });

    criterion(7, "G2 subregular reproduction against the embedded tables", [] {
        return all_pass_print(verify_g2_subregular());
    });

    criterion(8, "signature at infinity along dominant lines", [] {
        bool ok = true;
        for (const char* type : {"B2", "G2"}) {
            RootSystem rs = RootSystem::build(type);
            WeylGroup W(rs);
            InducedDatum d = dominant_ps(W, Weight::Zero(rs.dim()), rs.rho_check());
            GramFamily r = to_r_basis(gram_family(d), d);
            for (long i = 0; i < d.dim(); ++i) {
                const RatFun& f = r.entries(i, i);
                if (!(f.eval(Rational(1000)).sign() > 0)) ok = false;
                if (f.inf_degree() != 0 || !(f.leading_ratio() == Rational(1))) ok = false;
            }
        }
        return ok;
    });

    criterion(9, "character tables, regular-representation and induced W-structures", [] {
        bool ok = true;
        for (const char* type : {"A1", "A2", "B2", "G2"}) {
            RootSystem rs = RootSystem::build(type);
            WeylGroup W(rs);
            CharTable ct = char_table(type);
            try {
                validate_table(W, ct);
            } catch (...) {
                ok = false;
            }
        }
        // X(nu) restricted to W is the regular representation
        for (const char* type : {"B2", "G2"}) {
            RootSystem rs = RootSystem::build(type);
            WeylGroup W(rs);
            CharTable ct = char_table(type);
            InducedDatum ps =
                dominant_ps(W, Weight::Zero(rs.dim()), rs.rho_check());
            if (multiplicities(ct, module_w_character(ps, ct)) != ct.dims) ok = false;
        }
        // reference induced decompositions
        {
            RootSystem rs = RootSystem::build("B2");
            WeylGroup W(rs);
            CharTable ct = char_table("B2");
            InducedDatum st = InducedDatum::make(W, OneDimSigma{{0}, true}, Weight::Zero(2),
                                                 parse_weight("1,1", 2));
            std::vector<long> expect(5, 0);
            expect[ct.index_of("11x0")] = 1;
            expect[ct.index_of("1x1")] = 1;
            expect[ct.index_of("0x11")] = 1;
            if (multiplicities(ct, module_w_character(st, ct)) != expect) ok = false;
        }
        {
            RootSystem rs = RootSystem::build("G2");
            WeylGroup W(rs);
            CharTable ct = char_table("G2");
            InducedDatum sts = InducedDatum::make(W, OneDimSigma{{0}, true}, Weight::Zero(3),
                                                  parse_weight("0,1,-1", 3));
            std::vector<long> e1(6, 0);
            e1[ct.index_of("2_2")] = e1[ct.index_of("2_1")] = e1[ct.index_of("1_4")] =
                e1[ct.index_of("1_2")] = 1;
            if (multiplicities(ct, module_w_character(sts, ct)) != e1) ok = false;
            InducedDatum stl = InducedDatum::make(W, OneDimSigma{{1}, true}, Weight::Zero(3),
                                                  parse_weight("1,1,-2", 3));
            std::vector<long> e2(6, 0);
            e2[ct.index_of("1_3")] = e2[ct.index_of("2_1")] = e2[ct.index_of("2_2")] =
                e2[ct.index_of("1_2")] = 1;
            if (multiplicities(ct, module_w_character(stl, ct)) != e2) ok = false;
        }
        return ok;
    });

    criterion(10, "property suite: decomposition, dominance, tau versus Jantzen orders", [] {
        bool ok = true;
        std::mt19937_64 rng(424242);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        for (const char* type : {"A1", "A2", "B2", "G2"}) {
            RootSystem rs = RootSystem::build(type);
            WeylGroup W(rs);
            for (int trial = 0; trial < 1000; ++trial) {
                Weight v = Weight::Zero(rs.dim());
                for (long i = 0; i < rs.rank(); ++i)
                    v += rs.simple_coroots()[i] * Rational(num(rng), den(rng));
                LanglandsDatum l = f_decompose(rs, W, v);
                Weight rec = l.v0;
                for (size_t i = 0; i < l.F.size(); ++i)
                    rec -= rs.simple_coroots()[l.F[i]] * l.d[i];
                if (rec != v) ok = false;
            }
            std::uniform_int_distribution<long> pos(0, 5);
            for (int trial = 0; trial < 200; ++trial) {
                Weight v1 = Weight::Zero(rs.dim());
                for (long i = 0; i < rs.rank(); ++i)
                    v1 += rs.simple_coroots()[i] * Rational(num(rng), den(rng));
                Weight v2 = v1;
                for (long b = 0; b < rs.num_positive(); ++b)
                    v2 -= rs.positive_coroots()[b] * Rational(pos(rng), den(rng));
                if (!dominance_geq(rs, f_decompose(rs, W, v1).v0, f_decompose(rs, W, v2).v0))
                    ok = false;
            }
        }
        // tau agrees with the Jantzen order of the R-basis vector at regular cc
        RootSystem rs = RootSystem::build("B2");
        WeylGroup W(rs);
        for (const char* sstr : {"2,1", "3/2,1/2"}) {
            Weight s = parse_weight(sstr, 2);
            InducedDatum d = InducedDatum::minimal_ps(W, Weight::Zero(2), s);
            GramFamily r = to_r_basis(gram_family(d), d);
            std::vector<long> orders;
            for (long i = 0; i < d.dim(); ++i) {
                auto v = r.entries(i, i).valuation_and_sign(Rational(1));
                if (v.order != tau(W, d.basis[i], s)) ok = false;
                orders.push_back(v.order);
            }
            JantzenCore core = dvr_diagonalize(gram_family(d).entries, Rational(1));
            std::sort(orders.begin(), orders.end());
            if (orders != core.orders) ok = false;
        }
        return ok;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
