#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenring/label.hpp"
#include "greenring/modules.hpp"

namespace greenring {

inline constexpr std::uint64_t kDefaultSeed = 20240613;

struct NonSplitEndo : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdentificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Fingerprint {
    std::size_t dim = 0;
    std::map<Signs, std::size_t> sign_multiplicities;
    std::size_t top_dim = 0, socle_dim = 0;
    std::size_t x_rank = 0, y_rank = 0;
    std::size_t loewy_length = 0;
    std::optional<Rational> band_eta;
};

Fingerprint fingerprint(const ModuleRep& m);

struct Decomposition {
    std::size_t input_dim = 0;
    std::uint64_t seed = kDefaultSeed;
    std::vector<IndecLabel> summands;  // sorted

    std::map<IndecLabel, int> multiplicities() const;
    std::string str() const;
    std::string json(const std::string& input = "") const;
};

// Hom(m, n) as matrices n.dim x m.dim.
std::vector<Matrix> hom_basis(const ModuleRep& m, const ModuleRep& n);
std::vector<Matrix> endomorphism_basis(const ModuleRep& m);

// Idempotent from the algebra spanned by `basis`, or nullopt when that algebra is local.
// Throws NonSplitEndo when the semisimple quotient has no rational idempotent in reach.
std::optional<Matrix> split_algebra(const std::vector<Matrix>& basis, std::uint64_t seed, unsigned retries = 32);

struct SplitResult {
    std::optional<Matrix> idempotent;
    bool local() const { return !idempotent; }
};
SplitResult find_splitting_idempotent(const ModuleRep& m, std::uint64_t seed = kDefaultSeed);

// Submodule on the columns of `basis` (an invariant subspace).
ModuleRep restrict_module(const ModuleRep& m, const Matrix& basis);

struct DecomposeOptions {
    std::uint64_t seed = kDefaultSeed;
    // Split projective summands off through socle ranks before idempotent splitting.
    bool strip_projectives = true;
    // Confirm each summand against its canonical constructor.
    bool certify = true;
};

Decomposition decompose(const ModuleRep& m, const DecomposeOptions& opt = {});
IndecLabel identify(const ModuleRep& m, bool certified_indecomposable = false);
bool iso_check(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = kDefaultSeed);
// An invertible module map m -> n, if one is found.
std::optional<Matrix> find_isomorphism(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = kDefaultSeed);

// Sign twists t with L (x) S(t) isomorphic to L for every probed label of the family.
struct AliasTable {
    std::string algebra;
    std::map<Family, std::vector<Signs>> stabilizers;
    std::size_t checks = 0;
};
AliasTable build_alias_table(const std::string& algebra, int max_rank = 4);
const AliasTable& alias_table(const std::string& algebra);
IndecLabel canonicalize(const IndecLabel& label, const std::string& algebra);

// Multiplicity of each projective summand, read from socle ranks.
std::map<Signs, std::size_t> projective_multiplicities(const ModuleRep& m);

}  // namespace greenring
