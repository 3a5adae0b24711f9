// hecke-herm: exact hermitian-form computations for graded affine Hecke algebras.
#include <CLI11.hpp>
#include <json.hpp>
#include <cstdlib>
#include <iostream>

#include "hecke/verify.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

json ratfun_json(const RatFun& f) {
    json num = json::array(), den = json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(c.str());
    for (const auto& c : f.den().coeffs()) den.push_back(c.str());
    return json{{"num", num}, {"den", den}};
}

json gram_json(const GramFamily& g, const WeylGroup& W) {
    json basis = json::array();
    for (long w : g.labels) basis.push_back(w >= 0 ? W.word_str(w) : "iso");
    json entries = json::array();
    for (long i = 0; i < g.entries.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < g.entries.cols(); ++j) row.push_back(ratfun_json(g.entries(i, j)));
        entries.push_back(row);
    }
    return json{{"basis", basis},
                {"kind", g.kind == GramFamily::Basis::T ? "T" : "R"},
                {"entries", entries}};
}

std::string gram_tsv(const GramFamily& g, const WeylGroup& W) {
    std::ostringstream os;
    os << "basis";
    for (long w : g.labels) os << "\t" << (w >= 0 ? W.word_str(w) : "iso");
    os << "\n";
    for (long i = 0; i < g.entries.rows(); ++i) {
        os << (g.labels[i] >= 0 ? W.word_str(g.labels[i]) : "iso");
        for (long j = 0; j < g.entries.cols(); ++j) os << "\t" << g.entries(i, j).str();
        os << "\n";
    }
    return os.str();
}

std::vector<Rational> parse_k(const std::string& s) {
    std::vector<Rational> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string cur;
    while (std::getline(is, cur, ',')) out.push_back(Rational::parse(cur));
    return out;
}

std::vector<long> parse_levi(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string cur;
    while (std::getline(is, cur, ',')) out.push_back(std::stol(cur) - 1);  // 1-based on the CLI
    return out;
}

struct DatumArgs {
    std::string type;
    std::string levi;
    std::string sigma = "triv";
    std::string nu0, dir, kvals;
};

InducedDatum build_datum(const DatumArgs& a, std::unique_ptr<RootSystem>& rs,
                         std::unique_ptr<WeylGroup>& W) {
    rs = std::make_unique<RootSystem>(RootSystem::build(a.type, parse_k(a.kvals)));
    W = std::make_unique<WeylGroup>(*rs);
    OneDimSigma sigma;
    sigma.M = parse_levi(a.levi);
    for (long i : sigma.M)
        if (i < 0 || i >= rs->rank()) throw std::invalid_argument("levi index out of range");
    if (a.sigma == "triv")
        sigma.sign_char = false;
    else if (a.sigma == "st")
        sigma.sign_char = true;
    else
        throw std::invalid_argument("sigma must be 'triv' or 'st'");
    Weight nu0 = parse_weight(a.nu0, rs->dim());
    Weight dir = parse_weight(a.dir, rs->dim());
    return InducedDatum::make(*W, sigma, nu0, dir);
}

int default_jobs() {
    if (const char* env = std::getenv("HECKE_HERM_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant hermitian forms for graded affine Hecke algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    int jobs = default_jobs();
    app.add_option("--jobs,-j", jobs, "worker threads for independent Gram entries");

    DatumArgs ga;
    std::string basis = "T";
    bool raw = false;
    auto* gram_cmd = app.add_subcommand("gram", "invariant hermitian Gram family");
    gram_cmd->add_option("type", ga.type, "root system label, e.g. B2")->required();
    gram_cmd->add_option("--levi", ga.levi, "Levi subset as 1-based simple indices, e.g. 1,2");
    gram_cmd->add_option("--sigma", ga.sigma, "inducing character: triv or st");
    gram_cmd->add_option("--nu0", ga.nu0, "base point of the parameter line")->required();
    gram_cmd->add_option("--dir", ga.dir, "direction of the parameter line")->required();
    gram_cmd->add_option("--k", ga.kvals, "parameter values per simple root");
    gram_cmd->add_option("--basis", basis, "T (coset) or R (intertwiner) basis")
        ->check(CLI::IsMember({"T", "R"}));
    gram_cmd->add_flag("--raw", raw, "skip the normalization of the (e,e) entry");

    DatumArgs ja;
    std::string t0_str, delta_str;
    auto* jz_cmd = app.add_subcommand("jantzen", "Jantzen filtration data of the family");
    jz_cmd->add_option("type", ja.type)->required();
    jz_cmd->add_option("--levi", ja.levi);
    jz_cmd->add_option("--sigma", ja.sigma);
    jz_cmd->add_option("--nu0", ja.nu0)->required();
    jz_cmd->add_option("--dir", ja.dir)->required();
    jz_cmd->add_option("--k", ja.kvals);
    jz_cmd->add_option("--t0", t0_str, "filtration point")->required();
    jz_cmd->add_option("--delta", delta_str, "side-signature sample distance");

    std::string hkl_type, hkl_s, hkl_k;
    auto* hkl_cmd = app.add_subcommand("hkl-regular",
                                       "hermitian KL table at a regular central character");
    hkl_cmd->add_option("type", hkl_type)->required();
    hkl_cmd->add_option("--s", hkl_s, "regular dominant weight")->required();

    DatumArgs wa;
    std::string nu_str;
    auto* w_cmd = app.add_subcommand("weights", "A-character and temperedness");
    w_cmd->add_option("type", wa.type)->required();
    w_cmd->add_option("--levi", wa.levi);
    w_cmd->add_option("--sigma", wa.sigma);
    w_cmd->add_option("--nu", nu_str, "moving parameter value")->required();
    w_cmd->add_option("--k", wa.kvals);

    std::string ct_type;
    auto* ct_cmd = app.add_subcommand("char-table", "embedded character table");
    ct_cmd->add_option("type", ct_type)->required();

    std::string verify_what, verify_type, verify_s;
    auto* v_cmd = app.add_subcommand("verify", "reproduction pipelines");
    v_cmd->add_option("what", verify_what, "regular | b2-subregular | g2-subregular | identities")
        ->required();
    v_cmd->add_option("--type", verify_type, "root system for 'regular' with --s");
    v_cmd->add_option("--s", verify_s, "central character for 'regular' with --type");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gram_cmd->parsed()) {
            std::unique_ptr<RootSystem> rs;
            std::unique_ptr<WeylGroup> W;
            InducedDatum d = build_datum(ga, rs, W);
            GramFamily g = gram_family(d, GramRoute::Auto, !raw, jobs);
            if (basis == "R") g = to_r_basis(g, d);
            std::cout << (format == "json" ? gram_json(g, *W).dump(2) : gram_tsv(g, *W)) << "\n";
            return 0;
        }
        if (jz_cmd->parsed()) {
            std::unique_ptr<RootSystem> rs;
            std::unique_ptr<WeylGroup> W;
            InducedDatum d = build_datum(ja, rs, W);
            GramFamily g;
            try {
                g = gram_family(d);
            } catch (const std::runtime_error&) {
                // the (e,e) normalization can degenerate on singular lines; fall
                // back to the canonical rescale on the trivial W-type
                CharTable ct = char_table(ja.type);
                g = canonical_family(d, ct, trivial_irrep(ct));
            }
            std::optional<Rational> delta;
            if (!delta_str.empty()) delta = Rational::parse(delta_str);
            JantzenReport rep = jantzen_report(g.entries, Rational::parse(t0_str), delta);
            json j;
            j["t0"] = t0_str;
            j["orders"] = rep.core.orders;
            j["signs"] = rep.core.signs;
            j["graded_dims"] = rep.graded_dims;
            j["filtration_dims"] = rep.filtration_dims;
            json sigs = json::array();
            for (auto [p, q] : rep.level_signatures) sigs.push_back({{"p", p}, {"q", q}});
            j["level_signatures"] = sigs;
            j["delta"] = rep.delta.str();
            j["signature_below"] = {{"p", rep.sig_below.first}, {"q", rep.sig_below.second}};
            j["signature_above"] = {{"p", rep.sig_above.first}, {"q", rep.sig_above.second}};
            j["bookkeeping"] = rep.bookkeeping_ok;
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "orders";
                for (long o : rep.core.orders) std::cout << "\t" << o;
                std::cout << "\nsigns";
                for (int s : rep.core.signs) std::cout << "\t" << s;
                std::cout << "\ngraded_dims";
                for (long d2 : rep.graded_dims) std::cout << "\t" << d2;
                std::cout << "\nbookkeeping\t" << (rep.bookkeeping_ok ? "holds" : "fails")
                          << "\n";
            }
            return rep.bookkeeping_ok ? 0 : 1;
        }
        if (hkl_cmd->parsed()) {
            RootSystem rs = RootSystem::build(hkl_type);
            WeylGroup W(rs);
            Weight s = parse_weight(hkl_s, rs.dim());
            HKLRegularResult res = hkl_regular(W, s);
            auto label_str = [&](const std::vector<long>& J) {
                std::string t = "{";
                for (size_t i = 0; i < J.size(); ++i) {
                    if (i) t += ",";
                    t += "s" + std::to_string(J[i] + 1);
                }
                return t + "}";
            };
            json j;
            j["type"] = hkl_type;
            j["s"] = hkl_s;
            json labels = json::array();
            for (const auto& J : res.cc.labels) labels.push_back(label_str(J));
            j["labels"] = labels;
            j["eps"] = res.cc.eps;
            json ph = json::array(), kl = json::array();
            for (size_t r = 0; r < res.cc.labels.size(); ++r) {
                json phr = json::array(), klr = json::array();
                for (size_t c = 0; c < res.cc.labels.size(); ++c) {
                    phr.push_back(res.ph[r][c].str());
                    klr.push_back(res.kl[r][c].str());
                }
                ph.push_back(phr);
                kl.push_back(klr);
            }
            j["ph"] = ph;
            j["kl"] = kl;
            j["routes_agree"] = res.routes_agree;
            j["conjecture_holds"] = res.conjecture_holds;
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "label\teps";
                for (const auto& J : res.cc.labels) std::cout << "\t" << label_str(J);
                std::cout << "\n";
                for (size_t r = 0; r < res.cc.labels.size(); ++r) {
                    std::cout << label_str(res.cc.labels[r]) << "\t" << res.cc.eps[r];
                    for (size_t c = 0; c < res.cc.labels.size(); ++c)
                        std::cout << "\t" << res.ph[r][c].str();
                    std::cout << "\n";
                }
            }
            return res.conjecture_holds ? 0 : 1;
        }
        if (w_cmd->parsed()) {
            wa.nu0 = nu_str;
            std::unique_ptr<RootSystem> rs;
            std::unique_ptr<WeylGroup> W;
            // constant line through nu: direction 0 is fine for weight data
            wa.dir = nu_str;
            InducedDatum d = build_datum(wa, rs, W);
            auto weights = a_character(d, Rational(0));  // lambda(0) = sigma0 + nu
            std::vector<Weight> pts;
            for (const auto& [v, m] : weights)
                for (long i = 0; i < m; ++i) pts.push_back(v);
            json j;
            json ws = json::array();
            for (const auto& [v, m] : weights)
                ws.push_back({{"weight", weight_str(v)}, {"mult", m}});
            j["weights"] = ws;
            j["tempered"] = is_tempered(*rs, pts);
            j["discrete_series"] = is_discrete_series(*rs, pts);
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [v, m] : weights)
                    std::cout << weight_str(v) << "\t" << m << "\n";
                std::cout << "tempered\t" << (j["tempered"].get<bool>() ? "yes" : "no") << "\n";
                std::cout << "discrete_series\t"
                          << (j["discrete_series"].get<bool>() ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (ct_cmd->parsed()) {
            CharTable ct = char_table(ct_type);
            RootSystem rs = RootSystem::build(ct_type == "A1xA1" ? "B2" : ct_type);
            if (ct_type != "A1xA1") {
                WeylGroup W(rs);
                validate_table(W, ct);
            }
            json j;
            j["type"] = ct.type;
            j["labels"] = ct.labels;
            j["class_sizes"] = ct.class_sizes;
            json rows = json::array();
            for (const auto& row : ct.chars) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.str());
                rows.push_back(r);
            }
            j["table"] = rows;
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                for (long i = 0; i < ct.num_irreps(); ++i) {
                    std::cout << ct.labels[i];
                    for (const auto& v : ct.chars[i]) std::cout << "\t" << v.str();
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (v_cmd->parsed()) {
            VerifyReport rep;
            if (verify_what == "b2-subregular") {
                rep = verify_b2_subregular();
            } else if (verify_what == "g2-subregular") {
                rep = verify_g2_subregular();
            } else if (verify_what == "identities") {
                rep = verify_identities();
            } else if (verify_what == "regular") {
                if (!verify_type.empty() && !verify_s.empty()) {
                    RootSystem rs = RootSystem::build(verify_type);
                    WeylGroup W(rs);
                    rep = verify_regular(W, parse_weight(verify_s, rs.dim()));
                } else {
                    rep = verify_regular_suite();
                }
            } else {
                throw std::invalid_argument("unknown verify pipeline '" + verify_what + "'");
            }
            std::cout << (format == "json" ? report_json(rep) : report_tsv(rep)) << "\n";
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const DegenerateLineError& e) {
        std::cerr << "degenerate line: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
