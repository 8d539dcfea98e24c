#include "doctest.h"
#include "greenring/hopf.hpp"

using namespace greenring;

namespace {

Vec scaled(Vec v, const Rational& c) {
    for (auto& x : v) x *= c;
    return v;
}

Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

TEST_CASE("all algebras satisfy the Hopf axioms") {
    for (const char* name : {"H4", "mabar", "DH4", "HH", "Z2", "H4xH4"}) {
        CAPTURE(name);
        auto h = build_algebra(name);
        auto rep = check_hopf_axioms(*h);
        for (const auto& item : rep.items) {
            CAPTURE(item.name);
            CHECK(item.pass);
        }
    }
}

TEST_CASE("presentation relations hold in the structure constants") {
    auto m = build_algebra("mabar");
    CHECK(m->dim == 16);
    CHECK(m->element("gx") == scaled(m->element("xg"), -1));
    CHECK(m->element("xx") == Vec(16));
    CHECK(m->element("hg") == m->element("gh"));

    auto d = build_algebra("DH4");
    Vec lhs = add(d->element("xy"), d->element("yx"));
    Vec rhs = add(d->one(), scaled(d->element("gh"), -1));
    CHECK(lhs == rhs);

    auto hh = build_algebra("HH");
    CHECK(hh->element("gy") == hh->element("yg"));
    CHECK(hh->element("xy") == hh->element("yx"));
    CHECK(hh->element("hy") == scaled(hh->element("yh"), -1));

    auto h4 = build_algebra("H4");
    CHECK(h4->dim == 4);
    Vec db = h4->coproduct(h4->element("b"));
    Vec expect(16);
    expect[h4->generator_basis[0] * 4 + 0] = 1;             // b⊗1
    expect[h4->generator_basis[1] * 4 + h4->generator_basis[0]] = 1;  // a⊗b
    CHECK(db == expect);
    CHECK(h4->apply_antipode(h4->element("b")) == h4->element("ba"));
}

TEST_CASE("replacing the antipode by the identity breaks the antipode axiom") {
    auto m = build_algebra("mabar");
    auto bad = with_antipode(m, Matrix::identity(16));
    auto rep = check_hopf_axioms(*bad);
    CHECK(rep.passed("associativity"));
    CHECK_FALSE(rep.passed("antipode m(S⊗id)Δ = uε"));
}

TEST_CASE("cocycle examples") {
    auto m = build_algebra("mabar");
    CHECK(verify_cocycle(*m, sigma1(m)));
    auto h4 = build_algebra("H4");
    for (int alpha : {0, 1, 5}) {
        CAPTURE(alpha);
        CHECK(verify_cocycle(*h4, sigma_alpha(h4, alpha)));
    }
    Matrix ones(16, 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) ones(i, j) = 1;
    CHECK_FALSE(verify_cocycle(*m, make_cocycle(m, ones)));
}

TEST_CASE("trivial twist changes nothing") {
    auto m = build_algebra("mabar");
    auto t = cocycle_twist(m, trivial_cocycle(m));
    CHECK(t->mult == m->mult);
    CHECK(t->antipode == m->antipode);
}

TEST_CASE("twist of H4 by sigma_alpha is the opposite algebra") {
    auto h4 = build_algebra("H4");
    for (int alpha : {0, 1, 5}) {
        CAPTURE(alpha);
        auto t = cocycle_twist(h4, sigma_alpha(h4, alpha));
        bool opposite = true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) opposite &= t->mult[i * 4 + j] == h4->mult[j * 4 + i];
        CHECK(opposite);
        CHECK(check_hopf_axioms(*t).all());
    }
}

TEST_CASE("twist preserves comultiplication and counit") {
    auto m = build_algebra("mabar");
    auto t = cocycle_twist(m, sigma1(m));
    CHECK(t->counit == m->counit);
    bool same = true;
    for (std::size_t i = 0; i < 16; ++i) {
        same &= t->comult[i].size() == m->comult[i].size();
        for (std::size_t k = 0; same && k < t->comult[i].size(); ++k)
            same &= t->comult[i][k].left == m->comult[i][k].left && t->comult[i][k].right == m->comult[i][k].right &&
                    t->comult[i][k].coef == m->comult[i][k].coef;
    }
    CHECK(same);
    CHECK(check_hopf_axioms(*t).all());
}

TEST_CASE("sigma1 twist of mabar is isomorphic to HH") {
    auto m = build_algebra("mabar");
    auto hh = build_algebra("HH");
    auto t = cocycle_twist(m, sigma1(m));
    auto found = search_generator_assignment(*t, *hh);
    REQUIRE(found);
    CHECK(hopf_isomorphism_check(*t, *hh, *found));
    std::vector<Vec> same;
    for (std::size_t g = 0; g < 4; ++g) same.push_back(hh->basis_vector(hh->generator_basis[g]));
    CHECK(hopf_isomorphism_check(*t, *hh, same));
}

TEST_CASE("skew pairing and phi") {
    auto h4 = build_algebra("H4");
    auto p = standard_pairing(h4);
    CHECK(check_skew_pairing(p).all());
    auto h4h4 = build_algebra("H4xH4");
    auto s2 = pairing_to_cocycle(p, h4h4);
    CHECK(verify_cocycle(*h4h4, s2));
    auto tw = cocycle_twist(h4h4, s2);
    auto d = build_algebra("DH4");
    Matrix phi = phi_matrix(*h4h4, *d);
    CHECK(check_hopf_map(*tw, *d, phi).all());
    std::vector<Vec> images;
    for (std::size_t g = 0; g < 4; ++g) images.push_back(d->basis_vector(d->generator_basis[g]));
    CHECK(hopf_isomorphism_check(*tw, *d, images));
}

TEST_CASE("counit pairing gives the trivial cocycle") {
    auto h4 = build_algebra("H4");
    auto s = pairing_to_cocycle(counit_pairing(h4, h4));
    auto h4h4 = build_algebra("H4xH4");
    CHECK(s.form == trivial_cocycle(h4h4).form);
}

TEST_CASE("pairing with <a,a> = +1 fails the axioms") {
    auto h4 = build_algebra("H4");
    auto p = standard_pairing(h4, 1, 1);
    CHECK_FALSE(check_skew_pairing(p).all());
    CHECK_THROWS_AS(pairing_to_cocycle(p), std::invalid_argument);
}

TEST_CASE("identity is a Hopf isomorphism; same-name map mabar -> HH is not") {
    auto m = build_algebra("mabar");
    auto hh = build_algebra("HH");
    std::vector<Vec> same_m, same_hh;
    for (std::size_t g = 0; g < 4; ++g) {
        same_m.push_back(m->basis_vector(m->generator_basis[g]));
        same_hh.push_back(hh->basis_vector(hh->generator_basis[g]));
    }
    CHECK(hopf_isomorphism_check(*m, *m, same_m));
    CHECK_FALSE(hopf_isomorphism_check(*m, *hh, same_hh));
    CHECK_FALSE(check_hopf_map(*m, *hh, Matrix::identity(16)).passed("multiplicative"));
}
