// End-to-end reproduction pipelines against embedded expected tables.
#pragma once

#include "hecke/langdata.hpp"

namespace hecke {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string got;
    std::string source;
    bool pass = false;
};

struct VerifyReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, const std::string& expected, const std::string& got,
             const std::string& source) {
        checks.push_back({name, expected, got, source, expected == got});
    }
};

VerifyReport verify_regular(const WeylGroup& W, const Weight& s);
VerifyReport verify_regular_suite();
VerifyReport verify_b2_subregular();
VerifyReport verify_g2_subregular();
VerifyReport verify_identities();

std::string report_json(const VerifyReport& r);
std::string report_tsv(const VerifyReport& r);

}  // namespace hecke
