#pragma once

#include <string>
#include <utility>
#include <vector>

#include "greenring/hopf.hpp"
#include "greenring/label.hpp"
#include "greenring/matrix.hpp"

namespace greenring {

using Signs = std::pair<int, int>;

// Finite-dimensional left module, one action matrix per algebra generator.
struct ModuleRep {
    AlgebraPtr algebra;
    std::vector<Matrix> actions;
    std::vector<std::string> basis_names;
    // columns are the basis vectors as algebra elements (left ideal modules only)
    Matrix ideal_basis;

    std::size_t dim() const { return actions.empty() ? 0 : actions[0].rows(); }
    const Matrix& action(const std::string& generator) const;
    Matrix word_action(const Word& w) const;
    Matrix basis_action(std::size_t i) const;
    Matrix element_action(const Vec& a) const;
};

ModuleRep simple(const AlgebraPtr& h, Signs s);
// Left ideal h*e for the primitive idempotent of the given sign pair.
ModuleRep projective(const AlgebraPtr& h, Signs s);
ModuleRep string_module(const AlgebraPtr& h, Family family, int r);
ModuleRep band_module(const AlgebraPtr& h, int r, const Rational& eta);
ModuleRep sign_twist(const ModuleRep& m, Signs s);
ModuleRep tensor(const ModuleRep& m, const ModuleRep& n);
ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);
// Module with the given label, sign twist applied on the right.
ModuleRep make_module(const AlgebraPtr& h, const IndecLabel& label);

// Primitive idempotent whose left ideal is projective(h, s).
Vec primitive_idempotent(const HopfAlgebra& h, Signs s);

CheckReport validate_module(const ModuleRep& m);

std::string module_dot(const ModuleRep& m);
std::string module_json(const ModuleRep& m);

}  // namespace greenring
