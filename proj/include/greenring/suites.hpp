#pragma once

#include <string>
#include <vector>

#include "greenring/green.hpp"
#include "greenring/report.hpp"

namespace greenring {

// hopf-axioms, cocycles, twist-iso, idempotents, quivers, theorem-dec, theorem-dec1,
// green-relations, radicals, proj-class, commutativity, alias-table
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(const std::string& name, const SweepOptions& opt = {});

}  // namespace greenring
