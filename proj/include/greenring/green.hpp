#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "greenring/decomposer.hpp"
#include "greenring/label.hpp"
#include "greenring/report.hpp"

namespace greenring {

// Element of the Green algebra R(H): rational combination of indecomposable classes.
// Elements of r(H) are the ones with integer coefficients.
struct GreenElement {
    std::string algebra;
    std::map<IndecLabel, Rational> terms;  // canonical labels, no zero coefficients

    GreenElement() = default;
    explicit GreenElement(std::string alg) : algebra(std::move(alg)) {}
    static GreenElement basis(const std::string& alg, const IndecLabel& l, const Rational& c = 1);
    static GreenElement parse_label(const std::string& alg, const std::string& label);
    static GreenElement one(const std::string& alg) { return basis(alg, IndecLabel::simple(1, 1)); }

    void add(const IndecLabel& l, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    bool integral() const;
    Rational coefficient(const IndecLabel& l) const;
    // sum of coefficient * dimension
    Rational dim() const;
    std::string str() const;

    GreenElement& operator+=(const GreenElement& o);
    GreenElement& operator-=(const GreenElement& o);
    GreenElement& operator*=(const Rational& c);
    friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
    friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }
    friend GreenElement operator*(GreenElement a, const Rational& c) { return a *= c; }
    friend GreenElement operator*(const Rational& c, GreenElement a) { return a *= c; }
    friend bool operator==(const GreenElement& a, const GreenElement& b) {
        return a.algebra == b.algebra && a.terms == b.terms;
    }
};

// Stated: the relation tables as stated. Corrected: the same tables with the entries
// the bridge refutes replaced by the rule it finds (see rule_corrections()).
enum class RuleSet { Stated, Corrected };

struct RuleCorrection {
    std::string algebra;
    std::string item;
    std::string stated;
    std::string corrected;
};
const std::vector<RuleCorrection>& rule_corrections();

// Product of two indecomposable classes from the closed-form relation tables,
// with sign twists carried across (order-sensitive over mabar).
GreenElement closed_form_product(const std::string& alg, const IndecLabel& a, const IndecLabel& b,
                                 RuleSet rules = RuleSet::Stated);
// Tensor product of the canonical modules, decomposed. Cached per ordered pair.
GreenElement bruteforce_product(const std::string& alg, const IndecLabel& a, const IndecLabel& b,
                                std::uint64_t seed = kDefaultSeed);

// Forget every cached bridge product.
void clear_product_cache();

GreenElement multiply_closed_form(const GreenElement& a, const GreenElement& b, RuleSet rules = RuleSet::Stated);
GreenElement multiply_bruteforce(const GreenElement& a, const GreenElement& b, std::uint64_t seed = kDefaultSeed);
GreenElement power_closed_form(const GreenElement& a, unsigned n, RuleSet rules = RuleSet::Stated);

// Closed-form rule covering the product of two base labels, e.g. "M⊗W", or "" when none does.
std::string rule_family(const std::string& alg, const IndecLabel& a, const IndecLabel& b);
// Products the closed-form tables could not answer and that were learned from the bridge.
std::vector<std::pair<IndecLabel, IndecLabel>> derived_rules(const std::string& alg);

// Drops every projective class.
GreenElement stable_quotient(const GreenElement& e);

struct SweepOptions {
    int max_rank = 4;
    std::vector<Rational> etas = {1, 2, -1};
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Every rule family over all sign twists: closed form against the bridge.
VerificationReport verify_rule_families(const std::string& alg, const SweepOptions& opt = {});
// The Green ring relation list of the algebra, each instance against the bridge.
VerificationReport verify_green_relations(const std::string& alg, const SweepOptions& opt = {});
// Sign-twist commutation families, each certified by an explicit isomorphism.
VerificationReport verify_twist_commutation(const SweepOptions& opt = {});
// ab = ba through the bridge for all pairs of generators with rank <= max_rank.
VerificationReport commutativity_probe(const std::string& alg, const SweepOptions& opt = {});
VerificationReport commutativity_probe(const std::string& alg, const std::vector<std::pair<IndecLabel, IndecLabel>>& pairs,
                                       std::uint64_t seed = kDefaultSeed);
// Associativity, unit, S^2 = 1, dimension and stable-quotient compatibility.
VerificationReport verify_ring_properties(const std::string& alg, const SweepOptions& opt = {});

// Stable products of DH4 and mabar compared label for label on the (+,+)/(-,-) twists, both by the bridge.
VerificationReport verify_stable_comparison(const SweepOptions& opt = {});

struct ProjectiveClassAlgebra {
    std::string algebra;
    std::vector<IndecLabel> basis;
    // mult[i][j] = coordinates of basis[i] * basis[j]
    std::vector<std::vector<std::vector<Rational>>> mult;
    std::size_t radical_dim = 0;
    std::size_t quotient_dim = 0;
    std::size_t monomial_count = 0;
    VerificationReport report;
};
ProjectiveClassAlgebra projective_class_algebra(const std::string& alg, std::uint64_t seed = kDefaultSeed);

VerificationReport verify_radical_generators(const std::string& alg, const SweepOptions& opt = {});
VerificationReport verify_alternating_idempotents(const SweepOptions& opt = {});

}  // namespace greenring
