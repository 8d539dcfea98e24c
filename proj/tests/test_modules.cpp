#include "doctest.h"
#include "greenring/modules.hpp"

using namespace greenring;

namespace {

std::size_t top_dim(const ModuleRep& m) {
    // dim M - dim JM, with JM spanned by the images of x and y
    return m.dim() - rank(hstack({m.action("x"), m.action("y")}));
}

Rational trace_of(const ModuleRep& m, const std::string& g) { return trace(m.action(g)); }

}  // namespace

TEST_CASE("labels parse and print") {
    CHECK(IndecLabel::parse("1") == IndecLabel::simple(1, 1));
    CHECK(IndecLabel::parse("S") == IndecLabel::simple(-1, -1));
    CHECK(IndecLabel::parse("P_-") == IndecLabel::projective(-1, -1));
    CHECK(IndecLabel::parse("S(+,-)") == IndecLabel::simple(1, -1));
    CHECK(IndecLabel::parse("M2") == IndecLabel::string(Family::M, 2));
    CHECK(IndecLabel::parse("N'3_+-") == IndecLabel::string(Family::Nprime, 3, 1, -1));
    CHECK(IndecLabel::parse("C(2,-1/2)_--") == IndecLabel::band(2, Rational(-1, 2), -1, -1));
    CHECK_THROWS(IndecLabel::parse("C(2,0)"));
    CHECK_THROWS(IndecLabel::parse("Q7"));
    for (auto s : {"S(-,+)", "P(+,+)", "M(3)", "W(1)_-+", "N(2)", "N'(4)_--", "C(1,3/2)_+-"})
        CHECK(IndecLabel::parse(s).str() == s);
    CHECK(IndecLabel::simple(1, 1) < IndecLabel::simple(1, -1));
    CHECK(IndecLabel::string(Family::M, 2, -1, -1) < IndecLabel::string(Family::W, 1));
}

TEST_CASE("simple modules") {
    auto m = build_algebra("mabar");
    auto s = simple(m, {-1, -1});
    CHECK(s.dim() == 1);
    CHECK(s.action("g")(0, 0) == -1);
    CHECK(s.action("x").is_zero());
    CHECK(validate_module(s).all());
    CHECK_THROWS_AS(simple(build_algebra("DH4"), {1, -1}), std::invalid_argument);
}

TEST_CASE("projective P(+,+) over mabar") {
    auto m = build_algebra("mabar");
    auto p = projective(m, {1, 1});
    REQUIRE(p.dim() == 4);
    CHECK(p.basis_names == std::vector<std::string>{"e", "xe", "ye", "xye"});
    CHECK(rank(p.action("x")) == 2);
    // y . xe = -xye
    CHECK(p.action("y")(3, 1) == -1);
    CHECK(validate_module(p).all());
    CHECK(top_dim(p) == 1);
}

TEST_CASE("P+ over DH4 is two dimensional with weight 2") {
    auto d = build_algebra("DH4");
    auto p = projective(d, {1, -1});
    REQUIRE(p.dim() == 2);
    CHECK(p.basis_names == std::vector<std::string>{"e", "ye"});
    CHECK(p.action("y")(1, 0) == 1);
    CHECK(p.action("x")(0, 1) == 2);
    CHECK(validate_module(p).all());
    CHECK(projective(d, {1, 1}).dim() == 4);
    CHECK(projective(d, {-1, 1}).dim() == 2);
}

TEST_CASE("projective P(+,+) over HH: top S(+,+), socle S(-,-)") {
    auto hh = build_algebra("HH");
    auto p = projective(hh, {1, 1});
    REQUIRE(p.dim() == 4);
    CHECK(validate_module(p).all());
    CHECK(p.action("g")(0, 0) == 1);
    CHECK(p.action("h")(0, 0) == 1);
    CHECK(p.action("g")(3, 3) == -1);
    CHECK(p.action("h")(3, 3) == -1);
    Matrix soc = nullspace(vstack({p.action("x"), p.action("y")}));
    CHECK(soc.cols() == 1);
}

TEST_CASE("string modules over mabar") {
    auto m = build_algebra("mabar");
    auto m1 = string_module(m, Family::M, 1);
    REQUIRE(m1.dim() == 3);
    CHECK(m1.action("x")(1, 0) == 1);
    CHECK(m1.action("y")(2, 0) == 1);
    auto w2 = string_module(m, Family::W, 2);
    CHECK(w2.dim() == 5);
    CHECK(top_dim(w2) == 3);
    CHECK(rank(hstack({w2.action("x"), w2.action("y")})) == 2);
}

TEST_CASE("N(2) over HH alternates signs") {
    auto hh = build_algebra("HH");
    auto n2 = string_module(hh, Family::N, 2);
    REQUIRE(n2.dim() == 4);
    CHECK(validate_module(n2).all());
    CHECK(n2.action("g")(0, 0) == 1);
    CHECK(n2.action("g")(1, 1) == -1);
    CHECK(n2.action("h")(1, 1) == -1);
}

TEST_CASE("band modules") {
    auto m = build_algebra("mabar");
    auto c11 = band_module(m, 1, 1);
    CHECK(c11.dim() == 2);
    CHECK(c11.action("x")(1, 0) == 1);
    CHECK(c11.action("y")(1, 0) == 1);
    auto c23 = band_module(m, 2, 3);
    REQUIRE(c23.dim() == 4);
    // y . u2 = 3 v2 + v1
    CHECK(c23.action("y")(3, 1) == 3);
    CHECK(c23.action("y")(2, 1) == 1);
    CHECK_THROWS_AS(band_module(m, 1, 0), std::invalid_argument);

    auto hh = build_algebra("HH");
    auto c = band_module(hh, 1, 2);
    REQUIRE(c.dim() == 4);
    CHECK(c.action("g")(0, 0) == -1);
    CHECK(c.action("h")(0, 0) == -1);
    CHECK(c.action("g")(1, 1) == 1);
    CHECK(validate_module(c).all());
}

TEST_CASE("every canonical constructor validates") {
    for (const char* name : {"mabar", "DH4", "HH"}) {
        CAPTURE(name);
        auto h = build_algebra(name);
        for (int r = 1; r <= 6; ++r)
            for (Family f : {Family::M, Family::W, Family::N, Family::Nprime}) {
                auto mod = string_module(h, f, r);
                CHECK(mod.dim() == label_dim(IndecLabel::string(f, r), name));
                CHECK(validate_module(mod).all());
            }
        for (int r = 1; r <= 4; ++r)
            for (Rational eta : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
                auto mod = band_module(h, r, eta);
                CHECK(mod.dim() == label_dim(IndecLabel::band(r, eta), name));
                CHECK(validate_module(mod).all());
            }
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                auto p = projective(h, {s1, s2});
                CHECK(p.dim() == label_dim(IndecLabel::projective(s1, s2), name));
                CHECK(validate_module(p).all());
            }
    }
}

TEST_CASE("validation catches broken modules") {
    auto m = build_algebra("mabar");
    auto p = projective(m, {1, 1});
    p.actions[m->generator_id("x")] = Matrix(4, 4);
    auto rep = validate_module(p);
    CHECK_FALSE(rep.all());
    CHECK_FALSE(rep.passed("left ideal closure"));
    CHECK(rep.passed("gx=-xg"));

    auto bad = string_module(m, Family::M, 1);
    bad.actions[m->generator_id("x")](2, 1) = 5;  // x.v1 = 5 v2, so x^2 != 0
    auto rep2 = validate_module(bad);
    CHECK_FALSE(rep2.passed("xx=0"));
}

TEST_CASE("tensor products") {
    auto m = build_algebra("mabar");
    auto one = simple(m, {1, 1});
    auto m1 = string_module(m, Family::M, 1);
    auto t = tensor(one, m1);
    CHECK(t.actions == m1.actions);
    auto big = tensor(string_module(m, Family::M, 2), string_module(m, Family::W, 3));
    CHECK(big.dim() == 35);
    CHECK(validate_module(big).all());
    auto pp = tensor(projective(m, {1, 1}), projective(m, {1, 1}));
    CHECK(pp.dim() == 16);
    CHECK(validate_module(pp).all());
    CHECK(sign_twist(m1, {1, 1}).actions == m1.actions);
}

TEST_CASE("characters multiply under tensor") {
    for (const char* name : {"mabar", "DH4", "HH"}) {
        CAPTURE(name);
        auto h = build_algebra(name);
        std::vector<ModuleRep> mods = {projective(h, {1, 1}), string_module(h, Family::M, 2),
                                       string_module(h, Family::N, 3), band_module(h, 2, 2)};
        for (const auto& a : mods)
            for (const auto& b : mods) {
                auto t = tensor(a, b);
                CHECK(trace_of(t, "g") == trace_of(a, "g") * trace_of(b, "g"));
                CHECK(trace_of(t, "h") == trace_of(a, "h") * trace_of(b, "h"));
                CHECK(t.dim() == a.dim() * b.dim());
            }
    }
}

TEST_CASE("module export") {
    auto m = build_algebra("mabar");
    auto c = band_module(m, 1, 2);
    auto dot = module_dot(c);
    CHECK(dot.find("\"u1\" -> \"v1\" [style=solid]") != std::string::npos);
    CHECK(dot.find("\"u1\" -> \"v1\" [style=dashed, label=\"2\"]") != std::string::npos);
    auto js = module_json(c);
    CHECK(js.find("\"algebra\": \"mabar\"") != std::string::npos);
    CHECK(js.find("\"dim\": 2") != std::string::npos);
}
