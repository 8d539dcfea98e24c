#include <random>

#include "doctest.h"
#include "greenring/matrix.hpp"
#include "greenring/polynomial.hpp"

using namespace greenring;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

Matrix jordan_shift(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK((Rational(1, 3) * Rational(3)).is_one());
    CHECK(Rational::parse("10/-4").str() == "-5/2");
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational overflow promotes and demotes") {
    Rational big = Rational((long long)1 << 62);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    CHECK(sq.str() == "21267647932558653966460912964485513216");
    Rational back = sq / big;
    CHECK(back.is_small());
    CHECK(back == big);
    Rational f = Rational(1, (long long)1 << 62) * Rational(1, 3);
    CHECK_FALSE(f.is_small());
    CHECK((f * Rational(3)).is_small());
    CHECK((sq - sq).is_zero());
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix(2, 2)) == 0);
    Matrix m{{1, 2}, {2, 4}};
    CHECK(rank(m) == 1);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix::identity(3)).cols() == 0);
    Matrix z = nullspace(Matrix(2, 2));
    CHECK(z.cols() == 2);
    CHECK(rank(z) == 2);
    Matrix k = nullspace(jordan_shift(3));
    CHECK(k.cols() == 1);
    CHECK(k == Matrix{{1}, {0}, {0}});
}

TEST_CASE("solve examples") {
    Matrix b{{1, 2}, {3, 4}, {5, 6}};
    auto x = solve(Matrix::identity(3), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK_FALSE(solve(Matrix(3, 3), b));
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly(Matrix::identity(2)) == pow(Polynomial::linear(1), 2));
    CHECK(char_poly(jordan_shift(5)) == Polynomial::monomial(1, 5));
    Matrix d{{2, 0}, {0, 3}};
    CHECK(char_poly(d) == Polynomial({6, -5, 1}));
}

TEST_CASE("squarefree_split examples") {
    auto s = squarefree_split(Polynomial({-1, 0, 1}));
    REQUIRE(s.size() == 2);
    CHECK(s[0].poly == Polynomial::linear(-1));
    CHECK(s[1].poly == Polynomial::linear(1));
    CHECK(s[0].multiplicity == 1);

    auto c = squarefree_split(Polynomial::monomial(1, 3));
    REQUIRE(c.size() == 1);
    CHECK(c[0].poly == Polynomial::monomial(1, 1));
    CHECK(c[0].multiplicity == 3);

    Polynomial p = pow(Polynomial::linear(2), 2) * Polynomial::linear(-1);
    auto f = squarefree_split(p);
    REQUIRE(f.size() == 2);
    bool saw2 = false, saw1 = false;
    for (const auto& fac : f) {
        if (fac.poly == Polynomial::linear(2)) saw2 = fac.multiplicity == 2;
        if (fac.poly == Polynomial::linear(-1)) saw1 = fac.multiplicity == 1;
    }
    CHECK(saw2);
    CHECK(saw1);
}

TEST_CASE("irreducible quadratic stays whole") {
    auto f = squarefree_split(Polynomial({2, 0, 1}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].poly.degree() == 2);
    auto r = rational_roots(Polynomial({-1, 0, 4}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Rational(-1, 2));
    CHECK(r[1] == Rational(1, 2));
}

TEST_CASE("property: rank-nullity, solve round trip, Cayley-Hamilton") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix m = random_matrix(rng, r, c);
        if (trial % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2);
        Matrix n = nullspace(m);
        CHECK(rank(m) + n.cols() == c);
        CHECK((m * n).is_zero());
        CHECK(rank(n) == n.cols());

        Matrix x0 = random_matrix(rng, c, 2);
        Matrix b = m * x0;
        auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m * *x == b);

        std::size_t k = 1 + rng() % 6;
        Matrix sq = random_matrix(rng, k, k);
        CHECK(char_poly(sq).eval(sq).is_zero());
        CHECK(char_poly(sq).coeff(0) == (k % 2 ? -determinant(sq) : determinant(sq)));
    }
}

TEST_CASE("property: squarefree_split multiplies back") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p = Polynomial::constant(1);
        int nf = 1 + int(rng() % 4);
        for (int k = 0; k < nf; ++k) {
            Rational root(int(rng() % 7) - 3, 1 + int(rng() % 3));
            p = p * pow(Polynomial::linear(root), 1 + unsigned(rng() % 3));
        }
        if (trial % 2) p = p * Polynomial({3, 0, 1});
        auto f = squarefree_split(p);
        Polynomial prod = Polynomial::constant(1);
        for (const auto& fac : f) prod = prod * pow(fac.poly, fac.multiplicity);
        CHECK(prod == p.monic());
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(gcd(f[i].poly, f[i].poly.derivative()).degree() == 0);
            for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(gcd(f[i].poly, f[j].poly).degree() == 0);
        }
    }
}

TEST_CASE("sparse nullspace matches dense") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        Matrix m = random_matrix(rng, r, c, -1, 1);
        std::vector<SparseRow> rows(r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (!m(i, j).is_zero()) rows[i].emplace_back(j, m(i, j));
        Matrix n = sparse_nullspace(rows, c);
        CHECK(n.cols() == c - rank(m));
        CHECK((m * n).is_zero());
    }
}

TEST_CASE("inverse and kronecker") {
    Matrix a{{1, 2}, {3, 4}};
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK((a * *inv).is_identity());
    CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
    Matrix k = kronecker(a, Matrix::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k(2, 0) == Rational(3));
    CHECK(determinant(k) == Rational(4));
}
