#pragma once

#include <cstdint>
#include <random>

#include "surf/background.hpp"
#include "surf/reaction.hpp"

namespace surf {

using Rng = std::mt19937_64;

/// Small randomized background of the given kind, for law suites and
/// sampled checks. Sizes stay within the enumeration cap.
Background random_background(Kind kind, Rng& rng, int max_size = 4);

/// Random background over a registry scheme (diagram kind).
Background random_diagram_background(const std::string& scheme_name, Rng& rng, int max_size = 3);

/// Uniform-ish valid subobject: random raw element subset, closed.
Subobject random_subobject(const Background& b, Rng& rng, double density = 0.5);

/// Random subobject included in `within`.
Subobject random_subobject_within(const Background& b, const Subobject& within, Rng& rng,
                                  double density = 0.5);

/// Random system over b: uninhibited and inhibited reactions with
/// random non-empty reactants and products.
ReactionSystem random_system(const Background& b, Rng& rng, int reaction_count);

} // namespace surf
