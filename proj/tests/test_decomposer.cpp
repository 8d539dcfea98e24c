#include "doctest.h"
#include "greenring/decomposer.hpp"

using namespace greenring;

namespace {

IndecLabel L(const char* s) { return IndecLabel::parse(s); }

std::map<IndecLabel, int> mults(std::initializer_list<std::pair<const char*, int>> xs) {
    std::map<IndecLabel, int> out;
    for (auto [s, k] : xs) out[L(s)] += k;
    return out;
}

std::vector<Signs> valid_signs(const std::string& alg, Family f) {
    if (alg == "DH4" && f != Family::P) return {{1, 1}, {-1, -1}};
    return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
}

}  // namespace

TEST_CASE("endomorphism algebra dimensions") {
    auto m = build_algebra("mabar");
    CHECK(endomorphism_basis(simple(m, {1, 1})).size() == 1);
    // End(Ae) is (eAe)^op
    Vec e = primitive_idempotent(*m, {1, 1});
    Matrix eae(16, 16);
    for (std::size_t b = 0; b < 16; ++b) {
        Vec v = m->multiply(m->multiply(e, m->basis_vector(b)), e);
        for (std::size_t i = 0; i < 16; ++i) eae(i, b) = v[i];
    }
    CHECK(rank(eae) == 2);
    CHECK(endomorphism_basis(projective(m, {1, 1})).size() == 2);
    auto m1 = string_module(m, Family::M, 1);
    CHECK(endomorphism_basis(direct_sum(m1, m1)).size() == 4);
    for (const auto& phi : endomorphism_basis(m1))
        for (const auto& a : m1.actions) CHECK(phi * a == a * phi);
}

TEST_CASE("hom spaces in a non-weight basis") {
    auto m = build_algebra("mabar");
    auto p = projective(m, {1, 1});
    // conjugate by a unipotent change of basis so g is no longer diagonal
    Matrix q = Matrix::identity(4);
    q(0, 1) = 1;
    q(2, 3) = -2;
    ModuleRep pq = p;
    auto qi = *inverse(q);
    for (auto& a : pq.actions) a = qi * a * q;
    pq.ideal_basis = Matrix();
    auto hom = hom_basis(p, pq);
    CHECK(hom.size() == 2);
    for (const auto& f : hom)
        for (std::size_t g = 0; g < 4; ++g) CHECK(f * p.actions[g] == pq.actions[g] * f);
    CHECK(iso_check(p, pq));
    CHECK(identify(pq) == L("P(+,+)"));
}

TEST_CASE("splitting idempotents") {
    auto m = build_algebra("mabar");
    auto ms = direct_sum(string_module(m, Family::M, 1), simple(m, {-1, -1}));
    auto sp = find_splitting_idempotent(ms);
    REQUIRE_FALSE(sp.local());
    CHECK(*sp.idempotent * *sp.idempotent == *sp.idempotent);
    CHECK(find_splitting_idempotent(band_module(m, 1, 1)).local());
    auto p = projective(m, {1, 1});
    CHECK_FALSE(find_splitting_idempotent(tensor(p, p)).local());
}

TEST_CASE("idempotent splits reconstruct the module") {
    auto m = build_algebra("mabar");
    auto mod = tensor(string_module(m, Family::M, 1), string_module(m, Family::W, 1));
    auto sp = find_splitting_idempotent(mod);
    REQUIRE_FALSE(sp.local());
    Matrix e = *sp.idempotent;
    auto im = restrict_module(mod, column_basis(e));
    auto ker = restrict_module(mod, column_basis(Matrix::identity(mod.dim()) - e));
    CHECK(iso_check(direct_sum(im, ker), mod));
}

TEST_CASE("decompose: documented examples over mabar") {
    auto m = build_algebra("mabar");
    auto p = projective(m, {1, 1});
    CHECK(decompose(tensor(p, p)).multiplicities() == mults({{"P(+,+)", 2}, {"P(-,-)", 2}}));
    auto mw = tensor(string_module(m, Family::M, 2), string_module(m, Family::W, 2));
    CHECK(decompose(mw).multiplicities() == mults({{"P(+,+)", 6}, {"S(-,-)", 1}}));
    auto cc = tensor(band_module(m, 1, 2), band_module(m, 1, 3));
    CHECK(decompose(cc).multiplicities() == mults({{"P(+,+)", 1}}));
    auto mm = tensor(string_module(m, Family::M, 1), string_module(m, Family::M, 1));
    CHECK(decompose(mm).multiplicities() == mults({{"P(+,+)", 1}, {"M(2)_--", 1}}));
}

TEST_CASE("generic splitting agrees with projective stripping") {
    auto m = build_algebra("mabar");
    DecomposeOptions generic;
    generic.strip_projectives = false;
    std::vector<std::pair<ModuleRep, ModuleRep>> pairs = {
        {string_module(m, Family::M, 1), string_module(m, Family::M, 1)},
        {string_module(m, Family::M, 1), string_module(m, Family::W, 1)},
        {band_module(m, 1, 2), band_module(m, 1, 2)},
        {string_module(m, Family::N, 1), string_module(m, Family::Nprime, 1)},
        {projective(m, {1, 1}), simple(m, {1, -1})},
    };
    for (const auto& [a, b] : pairs) {
        auto t = tensor(a, b);
        CHECK(decompose(t).summands == decompose(t, generic).summands);
    }
}

TEST_CASE("identify examples") {
    auto m = build_algebra("mabar");
    CHECK(identify(band_module(m, 2, 5)) == L("C(2,5)"));
    auto hh = build_algebra("HH");
    auto tw = sign_twist(band_module(hh, 1, 1), {1, -1});
    CHECK(identify(tw) == L("C(1,1)_+-"));
    CHECK_FALSE(identify(tw) == L("C(1,1)"));
    CHECK_THROWS_AS(identify(direct_sum(simple(m, {1, 1}), simple(m, {1, 1}))), IdentificationFailure);
}

TEST_CASE("iso_check examples") {
    auto m = build_algebra("mabar");
    CHECK(iso_check(string_module(m, Family::M, 1), string_module(m, Family::M, 1)));
    CHECK_FALSE(iso_check(string_module(m, Family::N, 1), string_module(m, Family::Nprime, 1)));
    CHECK_FALSE(iso_check(band_module(m, 1, 1), band_module(m, 1, -1)));
    CHECK(iso_check(sign_twist(projective(m, {1, 1}), {-1, -1}), projective(m, {-1, -1})));
}

TEST_CASE("canonicalize") {
    CHECK(canonicalize(L("C(2,3)_--"), "HH") == L("C(2,3)"));
    CHECK(canonicalize(L("C(2,3)_-+"), "HH") == L("C(2,3)_+-"));
    CHECK(canonicalize(L("M(1)"), "mabar") == L("M(1)"));
    const auto& t = alias_table("mabar");
    for (const auto& [f, stab] : t.stabilizers) CHECK(stab.size() == 1);
    const auto& th = alias_table("HH");
    CHECK(th.stabilizers.at(Family::C) == std::vector<Signs>{{1, 1}, {-1, -1}});
    CHECK(th.stabilizers.at(Family::M).size() == 1);
}

TEST_CASE("round trip identify(constructor(label)) = label") {
    for (const char* alg : {"mabar", "DH4", "HH"}) {
        CAPTURE(alg);
        auto h = build_algebra(alg);
        std::vector<IndecLabel> labels;
        for (Family f : {Family::S, Family::P}) {
            for (auto s : {Signs{1, 1}, Signs{1, -1}, Signs{-1, 1}, Signs{-1, -1}}) {
                if (f == Family::S && std::string(alg) == "DH4" && s.first != s.second) continue;
                labels.push_back({f, 0, s.first, s.second, {}});
            }
        }
        for (int r = 1; r <= 6; ++r)
            for (Family f : {Family::M, Family::W, Family::N, Family::Nprime})
                for (auto s : valid_signs(alg, f)) labels.push_back(IndecLabel::string(f, r, s.first, s.second));
        for (int r = 1; r <= 3; ++r)
            for (Rational eta : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)})
                for (auto s : valid_signs(alg, Family::C)) labels.push_back(IndecLabel::band(r, eta, s.first, s.second));
        for (const auto& l : labels) {
            CAPTURE(l.str());
            CHECK(identify(make_module(h, l)) == canonicalize(l, alg));
        }
    }
}

TEST_CASE("decomposition is seed independent and conserves dimension") {
    auto m = build_algebra("mabar");
    auto mod = tensor(direct_sum(string_module(m, Family::M, 2), band_module(m, 1, 2)), string_module(m, Family::N, 2));
    std::vector<IndecLabel> first;
    for (std::uint64_t seed : {1u, 7u, 42u, 1234u, 99999u}) {
        DecomposeOptions opt;
        opt.seed = seed;
        auto d = decompose(mod, opt);
        std::size_t total = 0;
        for (const auto& l : d.summands) total += label_dim(l, "mabar");
        CHECK(total == mod.dim());
        if (first.empty())
            first = d.summands;
        else
            CHECK(d.summands == first);
    }
}

TEST_CASE("sign twist laws over mabar") {
    auto m = build_algebra("mabar");
    for (auto s : {Signs{1, 1}, Signs{1, -1}, Signs{-1, 1}, Signs{-1, -1}}) {
        auto sm = simple(m, s);
        for (int r = 1; r <= 4; ++r)
            for (Rational eta : {Rational(1), Rational(2), Rational(-1)}) {
                auto lhs = tensor(sm, band_module(m, r, eta));
                auto rhs = tensor(band_module(m, r, eta * Rational(s.first * s.second)), sm);
                CHECK(iso_check(lhs, rhs));
            }
        std::vector<ModuleRep> others = {simple(m, {1, 1}), projective(m, {1, 1})};
        for (int r = 1; r <= 3; ++r)
            for (Family f : {Family::M, Family::W, Family::N, Family::Nprime}) others.push_back(string_module(m, f, r));
        for (const auto& o : others) CHECK(iso_check(tensor(o, sm), tensor(sm, o)));
    }
}

TEST_CASE("fingerprints") {
    auto m = build_algebra("mabar");
    auto fp = fingerprint(projective(m, {1, 1}));
    CHECK(fp.loewy_length == 3);
    CHECK(fp.top_dim == 1);
    CHECK(fp.socle_dim == 1);
    auto fc = fingerprint(band_module(m, 2, 3));
    REQUIRE(fc.band_eta);
    CHECK(*fc.band_eta == 3);
    CHECK(fc.loewy_length == 2);
    auto d = build_algebra("DH4");
    auto fpp = fingerprint(projective(d, {1, -1}));
    CHECK(fpp.loewy_length == 1);
    auto hh = build_algebra("HH");
    auto fh = fingerprint(band_module(hh, 2, Rational(-1, 2)));
    REQUIRE(fh.band_eta);
    CHECK(*fh.band_eta == Rational(-1, 2));
}

TEST_CASE("decomposition json") {
    auto m = build_algebra("mabar");
    auto d = decompose(tensor(band_module(m, 1, 2), band_module(m, 1, 2)));
    auto js = d.json("C(1,2)⊗C(1,2)");
    CHECK(js.find("\"summands\"") != std::string::npos);
    CHECK(js.find("\"seed\"") != std::string::npos);
    CHECK(decompose(ModuleRep{m, std::vector<Matrix>(4), {}, {}}).summands.empty());
}
