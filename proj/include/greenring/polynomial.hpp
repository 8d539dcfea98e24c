#pragma once

#include <string>
#include <utility>
#include <vector>

#include "greenring/matrix.hpp"
#include "greenring/rational.hpp"

namespace greenring {

// Univariate polynomial over Q, coefficients lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t deg);
    // t - root
    static Polynomial linear(const Rational& root);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    Polynomial monic() const;
    Polynomial derivative() const;
    Rational eval(const Rational& t) const;
    Matrix eval(const Matrix& m) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Quotient and remainder; b nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned e);

Polynomial char_poly(const Matrix& m);

struct Factor {
    Polynomial poly;
    unsigned multiplicity;
};
// Pairwise coprime squarefree monic factors; rational roots split off as linear factors.
std::vector<Factor> squarefree_split(const Polynomial& p);
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace greenring
