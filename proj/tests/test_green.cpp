#include <random>

#include "doctest.h"
#include "greenring/green.hpp"
#include "greenring/suites.hpp"

using namespace greenring;

namespace {

GreenElement G(const std::string& alg, std::initializer_list<std::pair<int, const char*>> terms) {
    GreenElement e(alg);
    for (auto [c, s] : terms) e.add(IndecLabel::parse(s), c);
    return e;
}

GreenElement B(const std::string& alg, const char* s) { return GreenElement::parse_label(alg, s); }

GreenElement random_element(const std::string& alg, std::mt19937& rng, int max_rank) {
    std::vector<std::string> pool = {"1", "S(-,-)", "P", "M1", "W1"};
    pool.push_back(alg == "DH4" ? "P(+,-)" : "S(+,-)");
    for (int r = 1; r <= max_rank; ++r) {
        pool.push_back("N" + std::to_string(r));
        pool.push_back("N'" + std::to_string(r));
        pool.push_back("C(" + std::to_string(r) + ",2)");
        pool.push_back("M" + std::to_string(r));
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    GreenElement e(alg);
    for (int k = 0; k < 3; ++k) e.add(IndecLabel::parse(pool[pick(rng)]), coef(rng));
    return e;
}

}  // namespace

TEST_CASE("documented products") {
    CHECK(multiply_closed_form(B("mabar", "M1"), B("mabar", "W1")) == G("mabar", {{2, "P"}, {1, "S(-,-)"}}));
    CHECK(multiply_bruteforce(B("mabar", "M1"), B("mabar", "W1")) == G("mabar", {{2, "P"}, {1, "S(-,-)"}}));
    CHECK(multiply_closed_form(B("DH4", "P(+,-)"), B("DH4", "P(+,-)")) == G("DH4", {{1, "P(-,-)"}}));
    CHECK(multiply_bruteforce(B("DH4", "P(+,-)"), B("DH4", "P(+,-)")) == G("DH4", {{1, "P(-,-)"}}));
    CHECK(multiply_closed_form(B("HH", "N2"), B("HH", "N'3")) == G("HH", {{3, "P"}, {3, "P(-,-)"}}));
    CHECK(multiply_bruteforce(B("HH", "N2"), B("HH", "N'3")) == G("HH", {{3, "P"}, {3, "P(-,-)"}}));
    CHECK(multiply_bruteforce(B("mabar", "P"), B("mabar", "P")) == G("mabar", {{2, "P"}, {2, "P(-,-)"}}));
    CHECK(multiply_bruteforce(B("HH", "C(1,2)"), B("HH", "C(1,2)")) ==
          G("HH", {{1, "P"}, {1, "P(-,-)"}, {1, "C(1,2)"}, {1, "C(1,2)_+-"}}));
    CHECK(multiply_bruteforce(B("HH", "C(1,2)"), B("HH", "C(1,3)")) == G("HH", {{2, "P"}, {2, "P(-,-)"}}));
    for (const char* alg : {"mabar", "DH4", "HH"})
        for (const char* l : {"M3", "W2", "N'2", "C(2,-1)"}) CHECK(multiply_bruteforce(GreenElement::one(alg), B(alg, l)) == B(alg, l));
}

TEST_CASE("stable quotient") {
    CHECK(stable_quotient(G("mabar", {{2, "P"}, {1, "S(-,-)"}})) == B("mabar", "S(-,-)"));
    CHECK(stable_quotient(B("DH4", "P(+,-)")).is_zero());
    CHECK(stable_quotient(multiply_closed_form(B("mabar", "M1"), B("mabar", "W1"))) == B("mabar", "S(-,-)"));
}

TEST_CASE("labels are canonical inside elements") {
    // over HH a band absorbs the (-,-) twist
    CHECK(B("HH", "C(2,3)_--") == B("HH", "C(2,3)"));
    CHECK_FALSE(B("mabar", "C(2,3)_--") == B("mabar", "C(2,3)"));
    auto e = B("HH", "C(1,2)") - B("HH", "C(1,2)_--");
    CHECK(e.is_zero());
}

TEST_CASE("mabar is not commutative on S(+,-) and bands") {
    auto s = B("mabar", "S(+,-)"), c = B("mabar", "C(1,1)");
    CHECK_FALSE(multiply_bruteforce(s, c) == multiply_bruteforce(c, s));
    CHECK(multiply_bruteforce(s, c) == B("mabar", "C(1,-1)_+-"));
    CHECK(multiply_closed_form(s, c) == multiply_bruteforce(s, c));
    CHECK(multiply_closed_form(c, s) == multiply_bruteforce(c, s));
}

TEST_CASE("stated M(r)N'(s) twist fails for even r; corrected rule matches the bridge") {
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 3; ++s) {
            CAPTURE(r);
            CAPTURE(s);
            auto a = IndecLabel::string(Family::M, r), b = IndecLabel::string(Family::Nprime, s);
            auto bridge = bruteforce_product("HH", a, b);
            CHECK(closed_form_product("HH", a, b, RuleSet::Corrected) == bridge);
            CHECK((closed_form_product("HH", a, b, RuleSet::Stated) == bridge) == (r % 2 == 1));
        }
    // the stated table is not associative: (M1 M1) N'1 against M1 (M1 N'1)
    auto m1 = B("HH", "M1"), n1 = B("HH", "N'1");
    auto left = multiply_closed_form(multiply_closed_form(m1, m1, RuleSet::Stated), n1, RuleSet::Stated);
    auto right = multiply_closed_form(m1, multiply_closed_form(m1, n1, RuleSet::Stated), RuleSet::Stated);
    CHECK_FALSE(left == right);
    auto lc = multiply_closed_form(multiply_closed_form(m1, m1, RuleSet::Corrected), n1, RuleSet::Corrected);
    auto rc = multiply_closed_form(m1, multiply_closed_form(m1, n1, RuleSet::Corrected), RuleSet::Corrected);
    CHECK(lc == rc);
    CHECK(lc == multiply_bruteforce(multiply_bruteforce(m1, m1), n1));
    CHECK_FALSE(rule_corrections().empty());
}

TEST_CASE("property: ring laws on random elements") {
    std::mt19937 rng(11);
    for (std::string alg : {"mabar", "DH4", "HH"}) {
        CAPTURE(alg);
        for (int t = 0; t < 20; ++t) {
            auto a = random_element(alg, rng, 2), b = random_element(alg, rng, 2), c = random_element(alg, rng, 2);
            auto ab = multiply_closed_form(a, b, RuleSet::Corrected);
            CHECK(multiply_closed_form(ab, c, RuleSet::Corrected) ==
                  multiply_closed_form(a, multiply_closed_form(b, c, RuleSet::Corrected), RuleSet::Corrected));
            CHECK(ab.dim() == a.dim() * b.dim());
            CHECK(ab == multiply_bruteforce(a, b));
            if (alg != "mabar") CHECK(ab == multiply_closed_form(b, a, RuleSet::Corrected));
            CHECK(multiply_closed_form(a + b, c) == multiply_closed_form(a, c) + multiply_closed_form(b, c));
            CHECK(stable_quotient(ab) ==
                  stable_quotient(multiply_closed_form(stable_quotient(a), stable_quotient(b), RuleSet::Corrected)));
        }
    }
}

TEST_CASE("powers") {
    auto s = B("HH", "S(-,-)");
    CHECK(power_closed_form(s, 2) == GreenElement::one("HH"));
    CHECK(power_closed_form(s, 0) == GreenElement::one("HH"));
    auto p = B("mabar", "P");
    CHECK(power_closed_form(p, 2) == multiply_closed_form(p, p));
}

TEST_CASE("rule families per algebra at small rank") {
    SweepOptions o;
    o.max_rank = 2;
    auto m = verify_rule_families("mabar", o);
    CHECK(m.all());
    CHECK(m.cases.size() > 500);
    auto d = verify_rule_families("DH4", o);
    CHECK(d.all());
    auto h = verify_rule_families("HH", o);
    for (const auto& c : h.cases) {
        if (c.pass) continue;
        CAPTURE(c.key);
        CHECK(c.key.rfind("M⊗N' ", 0) == 0);
        CHECK(c.key.find("M(2)") != std::string::npos);
        CHECK(c.note.find("corrected rule agrees") != std::string::npos);
    }
    CHECK(h.failed() == 64);
}

TEST_CASE("relation lists at small rank") {
    SweepOptions o;
    o.max_rank = 2;
    CHECK(verify_green_relations("mabar", o).all());
    CHECK(verify_green_relations("DH4", o).all());
    auto h = verify_green_relations("HH", o);
    for (const auto& c : h.cases)
        if (!c.pass) CHECK(c.key.find("(second value)") != std::string::npos);
    CHECK(h.failed() == 4);
    CHECK(verify_ring_properties("HH", o).all());
}

TEST_CASE("projective class algebras") {
    auto m = projective_class_algebra("mabar");
    CHECK(m.report.all());
    CHECK(m.quotient_dim == 6);
    CHECK(m.basis.size() == 8);
    auto d = projective_class_algebra("DH4");
    CHECK(d.report.all());
    CHECK(d.quotient_dim == 4);
    CHECK(d.monomial_count == 6);
    auto h = projective_class_algebra("HH");
    CHECK(h.report.all());
    CHECK(h.quotient_dim == 5);
    CHECK(h.monomial_count == 8);
    CHECK(h.radical_dim == 3);
}

TEST_CASE("radicals and alternating idempotents") {
    SweepOptions o;
    o.max_rank = 3;
    for (const char* alg : {"mabar", "DH4", "HH"}) {
        CAPTURE(alg);
        CHECK(verify_radical_generators(alg, o).all());
    }
    auto alt = verify_alternating_idempotents(o);
    CHECK(alt.all());
    bool seen = false;
    for (const auto& c : alt.cases)
        if (c.key.find("S_-(1+S)Ñ_1/4 · (1+S)Ñ'_2/4") != std::string::npos) seen = c.pass;
    CHECK(seen);
}

TEST_CASE("report JSON round trip") {
    SweepOptions o;
    o.max_rank = 1;
    for (const char* s : {"alias-table", "quivers", "theorem-dec1"}) {
        auto r = run_suite(s, o);
        auto back = VerificationReport::from_json(r.json());
        CHECK(back == r);
        CHECK(back.json() == r.json());
    }
    CHECK_THROWS(VerificationReport::from_json(R"({"suite":"x","summary":{"total":2,"passed":1,"failed":1},"seconds":0,"cases":[]})"));
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("suites are deterministic under a fixed seed") {
    SweepOptions o;
    o.max_rank = 2;
    auto a = run_suite("commutativity", o);
    clear_product_cache();
    auto b = run_suite("commutativity", o);
    CHECK(a == b);
}

TEST_CASE("stable products of DH4 and mabar agree on the (+,+) and (-,-) twists") {
    SweepOptions o;
    o.max_rank = 1;
    auto r = verify_stable_comparison(o);
    CHECK(r.all());
    CHECK(r.cases.size() == 256);
}
