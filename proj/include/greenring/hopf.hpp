#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenring/matrix.hpp"
#include "greenring/rational.hpp"

namespace greenring {

using Vec = std::vector<Rational>;
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
using Word = std::vector<std::size_t>;
using Combination = std::vector<std::pair<Rational, Word>>;

struct CoproductTerm {
    std::size_t left, right;
    Rational coef;
};

struct Relation {
    std::string name;
    Word lhs;
    Combination rhs;
};

// Finite-dimensional Hopf algebra given by structure constants on a fixed basis.
struct HopfAlgebra {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> generators;
    std::vector<std::string> basis_labels;
    // basis element i is the product of generators along basis_words[i] (when words_valid)
    std::vector<Word> basis_words;
    bool words_valid = true;
    std::vector<std::size_t> generator_basis;
    std::vector<bool> grouplike;
    std::vector<Relation> relations;

    std::vector<SparseVec> mult;  // mult[i*dim+j] = b_i b_j
    Vec unit;
    std::vector<std::vector<CoproductTerm>> comult;
    Vec counit;
    Matrix antipode;  // column j = S(b_j)

    Vec basis_vector(std::size_t i) const;
    Vec one() const { return unit; }
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec apply_antipode(const Vec& a) const;
    Rational apply_counit(const Vec& a) const;
    // (dim*dim) vector, index i*dim+j for b_i (x) b_j
    Vec coproduct(const Vec& a) const;
    // product of generators along a word, in this algebra's multiplication
    Vec word_element(const Word& w) const;
    // generator word written with generator names, e.g. "xy"; single-letter names only
    Vec element(const std::string& word) const;
    std::size_t generator_id(const std::string& g) const;
    Matrix left_mult(const Vec& a) const;
    Matrix right_mult(const Vec& a) const;
    std::string format(const Vec& a) const;
};

using AlgebraPtr = std::shared_ptr<const HopfAlgebra>;

// Presentation data for normal-form rewriting. Normal words are strictly
// increasing in generator order; rules[(i,j)] rewrites the word i j with i >= j.
struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<bool> grouplike;
    std::map<std::pair<std::size_t, std::size_t>, Combination> rules;
    std::vector<std::vector<std::tuple<Rational, Word, Word>>> coproduct;
    std::vector<Rational> counit;
    std::vector<Combination> antipode;
};

Presentation presentation(const std::string& name);
AlgebraPtr build_from_presentation(const Presentation& p);

// Basis labels and sparse structure constants; fractions as strings.
// {"name", "dim", "generators", "basis", "unit", "counit",
//  "mult": [[i, j, k, c]...], "comult": [[i, l, r, c]...], "antipode": [[i, j, c]...]}
std::string algebra_json(const HopfAlgebra& h, int indent = 2);
// Recognized: H4, mabar, DH4, HH, Z2, H4xH4
AlgebraPtr build_algebra(const std::string& name);
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const std::string& name = "");
// Reduce a combination of generator words to normal form.
Combination normal_form(const Presentation& p, Combination c);

// Same structure constants with a replaced antipode (used to exercise failures).
AlgebraPtr with_antipode(const AlgebraPtr& h, const Matrix& s);

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all() const;
    bool passed(const std::string& name) const;
    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
};

CheckReport check_hopf_axioms(const HopfAlgebra& h);

struct TwoCocycle {
    AlgebraPtr algebra;
    Matrix form;          // form(i,j) = sigma(b_i, b_j)
    Matrix inverse_form;  // convolution inverse, empty if none
};

// Convolution inverse of a bilinear form, if it exists.
std::optional<Matrix> convolution_inverse(const HopfAlgebra& h, const Matrix& form);
TwoCocycle make_cocycle(const AlgebraPtr& h, const Matrix& form);
CheckReport cocycle_report(const HopfAlgebra& h, const TwoCocycle& s);
bool verify_cocycle(const HopfAlgebra& h, const TwoCocycle& s);
AlgebraPtr cocycle_twist(const AlgebraPtr& h, const TwoCocycle& s);

TwoCocycle trivial_cocycle(const AlgebraPtr& h);
TwoCocycle sigma1(const AlgebraPtr& mabar);
TwoCocycle sigma_alpha(const AlgebraPtr& h4, const Rational& alpha);

// <b, a> for b in the left algebra, a in the right algebra.
struct SkewPairing {
    AlgebraPtr left_algebra;
    AlgebraPtr right_algebra;
    Matrix values;
};

// Extends a table of generator values to all basis words via the pairing axioms.
SkewPairing extend_pairing(const AlgebraPtr& left, const AlgebraPtr& right,
                           const std::map<std::pair<std::string, std::string>, Rational>& generator_values);
SkewPairing standard_pairing(const AlgebraPtr& h4, const Rational& aa = -1, const Rational& bb = 1);
SkewPairing counit_pairing(const AlgebraPtr& left, const AlgebraPtr& right);
CheckReport check_skew_pairing(const SkewPairing& p);
// Cocycle on B (x) A for a pairing B (x) A -> K.
// Throws std::invalid_argument when the pairing axioms fail.
TwoCocycle pairing_to_cocycle(const SkewPairing& p, const AlgebraPtr& tensor = nullptr);

CheckReport check_hopf_map(const HopfAlgebra& h1, const HopfAlgebra& h2, const Matrix& phi);
// Linear map induced by generator images through h1's multiplication, if consistent.
std::optional<Matrix> induced_map(const HopfAlgebra& h1, const HopfAlgebra& h2, const std::vector<Vec>& images);
bool hopf_isomorphism_check(const HopfAlgebra& h1, const HopfAlgebra& h2, const std::vector<Vec>& images);
// Search over signed monomial images of matching type; returns the first certified assignment.
std::optional<std::vector<Vec>> search_generator_assignment(const HopfAlgebra& h1, const HopfAlgebra& h2);

// Index map for b^i a^j (x) b^k a^l -> x^i g^j y^k h^l.
Matrix phi_matrix(const HopfAlgebra& h4h4, const HopfAlgebra& dh4);

}  // namespace greenring
