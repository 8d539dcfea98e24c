#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greenring/decomposer.hpp"
#include "greenring/hopf.hpp"
#include "greenring/report.hpp"

namespace greenring {

struct IdempotentSystem {
    AlgebraPtr algebra;
    std::vector<std::string> names;
    std::vector<Vec> elements;
    // primitivity is checked among central idempotents
    bool central = false;
};

// Named systems: "e" for mabar, DH4, HH; "f" (the two block idempotents) for mabar.
IdempotentSystem named_idempotents(const AlgebraPtr& h, const std::string& which = "e");

// Left ideal A e as a module.
ModuleRep left_ideal_module(const AlgebraPtr& h, const Vec& e);

// Splits 1 into primitive orthogonal idempotents through the decomposer.
IdempotentSystem primitive_idempotents(const AlgebraPtr& h, std::uint64_t seed = kDefaultSeed);

VerificationReport verify_idempotent_system(const IdempotentSystem& sys, bool require_primitive);

// Columns span the center.
Matrix center_basis(const HopfAlgebra& h);
// Columns span J(A) (kernel of the trace form of the regular representation).
Matrix jacobson_radical(const HopfAlgebra& h);

// Primitive central idempotents; one per block.
IdempotentSystem central_idempotents(const AlgebraPtr& h, std::uint64_t seed = kDefaultSeed);

struct Quiver {
    std::string algebra;
    std::vector<std::string> vertices;
    // arrows[i][j]: arrows from vertex i to vertex j
    std::vector<std::vector<std::size_t>> arrows;
    // idempotents sharing the vertex's projective cover
    std::vector<std::vector<std::string>> members;

    std::size_t arrow_count() const;
    std::string dot() const;
    std::string json(int indent = 2) const;
};

Quiver ext_quiver(const IdempotentSystem& primitive);
// Uses the named "e" system when there is one, otherwise primitive_idempotents().
Quiver ext_quiver(const AlgebraPtr& h);

}  // namespace greenring
