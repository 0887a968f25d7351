#include "dpfg/audit.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>

using dpfg::AuditReport;
using dpfg::Rational;
using dpfg::Verdict;

namespace {

// One shared seeded run; the suite asserts different facets of it.
const AuditReport& seeded_report() {
    static AuditReport rep = dpfg::audit_all(42, 8, 3);
    return rep;
}

const dpfg::VariantOutcome& find_variant(const AuditReport& rep, const std::string& case_id,
                                         const std::string& variant) {
    for (const auto& c : rep.cases) {
        if (c.id != case_id) continue;
        for (const auto& v : c.variants)
            if (v.name == variant) return v;
    }
    FAIL("missing " + case_id + "/" + variant);
    static dpfg::VariantOutcome dummy;
    return dummy;
}

}  // namespace

TEST_CASE("catalog covers every identity exactly once") {
    auto catalog = dpfg::identity_catalog();
    CHECK(catalog.size() == 19);
    std::set<std::string> ids;
    for (const auto& c : catalog) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.variants.empty());
        std::set<std::string> names;
        for (const auto& v : c.variants) CHECK(names.insert(v.name).second);
    }
    for (const char* id :
         {"rel-i", "rel-ii", "rel-iii", "thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7",
          "final-thm", "eq21-decomposition", "eq22-decomposition", "eq16-expansion", "eq6-stirling",
          "pythagorean", "trig-addition", "log-exp-inverse", "polyexp-derivative"}) {
        CHECK(ids.count(id) == 1);
    }
}

TEST_CASE("report lists every case in id order") {
    const AuditReport& rep = seeded_report();
    CHECK(rep.cases.size() == 19);
    for (std::size_t i = 1; i < rep.cases.size(); ++i) CHECK(rep.cases[i - 1].id < rep.cases[i].id);
    CHECK(rep.version == dpfg::kVersion);
    CHECK(rep.seed == 42);
    CHECK(rep.samples.size() == 3);
}

TEST_CASE("hard variants all hold at the default seed") {
    const AuditReport& rep = seeded_report();
    CHECK_FALSE(rep.has_hard_failure());
    for (const auto& c : rep.cases)
        for (const auto& v : c.variants)
            if (v.hard) {
                INFO(c.id + "/" + v.name);
                CHECK(v.verdict == Verdict::HoldsExactly);
            }
}

TEST_CASE("soft verdicts separate printed typos from corrected readings") {
    // Which printed readings fail is a property of the statements, not of
    // the sample draw; the set below was confirmed against hand analysis of
    // the smallest failing indices.
    const std::set<std::pair<std::string, std::string>> expected_failures = {
        {"rel-i", "as-printed"},
        {"rel-ii", "as-printed"},
        {"rel-ii", "as-printed-swapped"},
        {"rel-iii", "as-printed"},
        {"thm1", "as-printed-fg-reading"},
        {"thm3", "as-printed-x-zero"},
        {"thm3", "t-shift-free-x"},
        {"thm5", "cos-as-printed"},
        {"thm5", "sin-as-printed"},
        {"log-exp-inverse", "exp-after-log-as-printed"},
    };
    const AuditReport& rep = seeded_report();
    int failures = 0;
    for (const auto& c : rep.cases) {
        for (const auto& v : c.variants) {
            const bool should_fail = expected_failures.count({c.id, v.name}) > 0;
            INFO(c.id + "/" + v.name);
            CHECK((v.verdict == Verdict::FailsWithWitness) == should_fail);
            CHECK(v.witness.has_value() == should_fail);
            failures += v.verdict == Verdict::FailsWithWitness;
        }
    }
    CHECK(failures == 10);
}

TEST_CASE("witnesses sit at the smallest failing index") {
    const AuditReport& rep = seeded_report();

    // The constant coefficient of exp(log) is 1 for every lambda, so the
    // literal claim already fails at n = 0.
    const auto& exp_log = find_variant(rep, "log-exp-inverse", "exp-after-log-as-printed");
    REQUIRE(exp_log.witness.has_value());
    CHECK(exp_log.witness->n == 0);
    CHECK(exp_log.witness->lhs == "1");
    CHECK(exp_log.witness->rhs == "0");

    // Index 0 of the poly family vanishes while the unshifted right side
    // starts at 1.
    const auto& thm3 = find_variant(rep, "thm3", "as-printed-x-zero");
    REQUIRE(thm3.witness.has_value());
    CHECK(thm3.witness->n == 0);
    CHECK(thm3.witness->lhs == "0");
    CHECK(thm3.witness->rhs == "1");

    // At n = 1 the printed inner index inflates the right side by (x)_1; the
    // first sampled point has a nonzero x, so the witness lands there.
    const auto& reli = find_variant(rep, "rel-i", "as-printed");
    REQUIRE(reli.witness.has_value());
    CHECK(reli.witness->n == 1);
}

TEST_CASE("sampling is deterministic and respects the parameter ranges") {
    auto a = dpfg::sample_params(123, 9, 8);
    auto b = dpfg::sample_params(123, 9, 8);
    REQUIRE(a.size() == 8);
    const Rational two(2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lambda == b[i].lambda);
        CHECK(a[i].u == b[i].u);
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
        CHECK_FALSE(a[i].lambda.is_zero());
        CHECK_FALSE(a[i].u == Rational(1));
        CHECK(dpfg::abs(a[i].x) <= two);
        CHECK(dpfg::abs(a[i].y) <= two);
        CHECK(a[i].k == 1 + static_cast<long long>(i) % 3);
        CHECK(a[i].n_max == 9);
    }
}

TEST_CASE("reports serialize canonically and reproducibly") {
    auto r1 = dpfg::audit_all(7, 4, 2);
    auto r2 = dpfg::audit_all(7, 4, 2);
    std::string s1 = dpfg::canonical_json(dpfg::report_to_json(r1));
    std::string s2 = dpfg::canonical_json(dpfg::report_to_json(r2));
    CHECK(s1 == s2);
    CHECK(s1.back() == '\n');
    CHECK(nlohmann::json::parse(s1) == dpfg::report_to_json(r1));

    std::string text = dpfg::report_to_text(r1);
    CHECK(text.find("rel-i") != std::string::npos);
    CHECK(text.find("holds-exactly") != std::string::npos);
}

TEST_CASE("report schema validation") {
    nlohmann::json good = dpfg::report_to_json(seeded_report());
    std::string why;
    CHECK(dpfg::validate_report_json(good, &why));
    CHECK(why.empty());

    nlohmann::json bad = good;
    bad.erase("version");
    CHECK_FALSE(dpfg::validate_report_json(bad, &why));
    CHECK_FALSE(why.empty());

    bad = good;
    bad["cases"][0]["variants"][0]["verdict"] = "maybe";
    CHECK_FALSE(dpfg::validate_report_json(bad));

    // A witness on a holding variant (or a missing one on a failure) is
    // structurally invalid.
    bad = good;
    for (auto& c : bad["cases"]) {
        for (auto& v : c["variants"]) {
            if (v["verdict"] == "holds-exactly") {
                v["witness"] = {{"n", 0},
                                {"params", dpfg::param_set_to_json(dpfg::ParamSet{})},
                                {"lhs", "0"},
                                {"rhs", "0"}};
            }
        }
    }
    CHECK_FALSE(dpfg::validate_report_json(bad));

    bad = good;
    bad["samples"][0]["lambda"] = "not-a-rational";
    CHECK_FALSE(dpfg::validate_report_json(bad));
}

TEST_CASE("hard failures are detected") {
    AuditReport rep;
    dpfg::CaseOutcome c;
    c.id = "synthetic";
    dpfg::VariantOutcome soft;
    soft.name = "soft";
    soft.hard = false;
    soft.verdict = Verdict::FailsWithWitness;
    c.variants.push_back(soft);
    rep.cases.push_back(c);
    CHECK_FALSE(rep.has_hard_failure());

    dpfg::VariantOutcome hard = soft;
    hard.name = "hard";
    hard.hard = true;
    rep.cases[0].variants.push_back(hard);
    CHECK(rep.has_hard_failure());
}
