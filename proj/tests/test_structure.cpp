#include "doctest.h"
#include "greenring/structure.hpp"

using namespace greenring;

TEST_CASE("named idempotent systems") {
    auto m = build_algebra("mabar");
    CHECK(verify_idempotent_system(named_idempotents(m, "e"), true).all());
    CHECK(verify_idempotent_system(named_idempotents(m, "f"), true).all());
    // as ordinary idempotents f1 = e1 + e4 splits
    auto f = named_idempotents(m, "f");
    f.central = false;
    auto r = verify_idempotent_system(f, true);
    CHECK(r.failed() == 2);
    CHECK(verify_idempotent_system(named_idempotents(build_algebra("DH4"), "e"), true).all());
    CHECK(verify_idempotent_system(named_idempotents(build_algebra("HH"), "e"), true).all());
    CHECK_THROWS_AS(named_idempotents(build_algebra("HH"), "f"), std::invalid_argument);
}

TEST_CASE("broken systems are reported") {
    auto m = build_algebra("mabar");
    auto s = named_idempotents(m, "e");
    s.elements.pop_back();
    auto r = verify_idempotent_system(s, false);
    CHECK_FALSE(r.all());
    s = named_idempotents(m, "e");
    s.elements[0] = s.elements[1];
    CHECK_FALSE(verify_idempotent_system(s, false).all());
}

TEST_CASE("block counts") {
    CHECK(central_idempotents(build_algebra("mabar")).elements.size() == 2);
    CHECK(central_idempotents(build_algebra("DH4")).elements.size() == 3);
    CHECK(central_idempotents(build_algebra("HH")).elements.size() == 1);
    CHECK(central_idempotents(build_algebra("Z2")).elements.size() == 2);
    for (const char* a : {"mabar", "DH4", "HH"}) {
        auto c = central_idempotents(build_algebra(a));
        CHECK(verify_idempotent_system(c, true).all());
    }
}

TEST_CASE("split primitive idempotents agree with the named ones") {
    for (const char* a : {"mabar", "DH4", "HH"}) {
        CAPTURE(a);
        auto h = build_algebra(a);
        auto p = primitive_idempotents(h);
        CHECK(p.elements.size() == named_idempotents(h).elements.size());
        CHECK(verify_idempotent_system(p, true).all());
        auto q1 = ext_quiver(p), q2 = ext_quiver(named_idempotents(h));
        CHECK(q1.arrow_count() == q2.arrow_count());
        CHECK(q1.vertices.size() == q2.vertices.size());
    }
}

TEST_CASE("Ext quivers") {
    using M = std::vector<std::vector<std::size_t>>;
    CHECK(ext_quiver(build_algebra("mabar")).arrows == M{{0, 0, 0, 2}, {0, 0, 2, 0}, {0, 2, 0, 0}, {2, 0, 0, 0}});
    CHECK(ext_quiver(build_algebra("HH")).arrows == M{{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}});
    auto d = ext_quiver(build_algebra("DH4"));
    CHECK(d.arrows == M{{0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(d.arrow_count() == 4);
    auto z = ext_quiver(build_algebra("Z2"));
    CHECK(z.vertices.size() == 2);
    CHECK(z.arrow_count() == 0);
    auto dot = ext_quiver(build_algebra("HH")).dot();
    CHECK(dot.find("\"e1\" -> \"e2\"") != std::string::npos);
}

TEST_CASE("DH4 idempotents pair up by projective cover") {
    auto h = build_algebra("DH4");
    auto e = named_idempotents(h);
    auto q = ext_quiver(e);
    for (const auto& members : q.members) {
        if (members.size() != 2) continue;
        auto i = std::stoi(members[0].substr(1)) - 1, j = std::stoi(members[1].substr(1)) - 1;
        CHECK(iso_check(left_ideal_module(h, e.elements[i]), left_ideal_module(h, e.elements[j])));
    }
    CHECK_FALSE(iso_check(left_ideal_module(h, e.elements[2]), left_ideal_module(h, e.elements[3])));
}

TEST_CASE("radical and center dimensions") {
    auto m = build_algebra("mabar");
    CHECK(jacobson_radical(*m).cols() == 12);
    CHECK(jacobson_radical(*build_algebra("Z2")).cols() == 0);
    CHECK(center_basis(*build_algebra("HH")).cols() == 1);
    CHECK(jacobson_radical(*build_algebra("DH4")).cols() == 6);
}
