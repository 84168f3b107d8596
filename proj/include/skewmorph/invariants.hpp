#pragma once

// Structural identities every skew morphism of an abelian group satisfies,
// checked exhaustively against the stored tables.

#include <optional>
#include <string>

#include "skewmorph/skew_morphism.hpp"

namespace skewmorph {

struct InvariantFailure {
    std::string property;
    std::optional<Element> a;
    std::optional<Element> b;
};

/// Runs, in order: defining identity, kernel is a subgroup, phi(Ker) = Ker,
/// nontrivial kernel, pi(a) == pi(b) iff a - b in Ker, core = kernel,
/// smoothness as constancy of pi on cycles, sum identity for pi(a + b),
/// skew product group order and core of translations. Returns the first
/// failure.
std::optional<InvariantFailure> check_invariants(const SkewMorphism& phi);

}  // namespace skewmorph
