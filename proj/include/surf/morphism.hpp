#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "surf/reaction.hpp"

namespace surf {

/// Per-component element map between two backgrounds of the same kind.
/// For posets only the "A" component is given; the relation map is the
/// induced pair map.
struct BackgroundMorphism {
    std::string source_id;
    std::string target_id;
    std::map<std::string, std::map<std::string, std::string>> maps;
};

BackgroundMorphism identity_morphism(const Background& b);

/// Inclusion morphism; every element of `source` must exist in `target`
/// under the same key.
BackgroundMorphism inclusion_morphism(const Background& source, const Background& target);

/// Total + structure-preserving + injective in every component; throws
/// NotStructurePreserving or NotInjective with a witness.
void check_background_mono(const BackgroundMorphism& f, const Background& source,
                           const Background& target);

/// Same checks, but reports instead of throwing. `mono` is meaningful
/// only when `structure_ok` holds.
struct MorphismReport {
    bool structure_ok = false;
    bool mono = false;
    std::string witness;
};
MorphismReport check_background_morphism(const BackgroundMorphism& f, const Background& source,
                                         const Background& target);

/// Elementwise image of a subobject of the source.
Subobject apply_morphism(const BackgroundMorphism& f, const Background& source,
                         const Background& target, const Subobject& s);

/// f(a) = (f o r, (f o i, i0), f o p); requires f mono.
Reaction map_reaction(const BackgroundMorphism& f, const Background& source,
                      const Background& target, const Reaction& a);

/// f(A) = (B', {f(a) | a in A}); ids preserved.
ReactionSystem induced_system(const BackgroundMorphism& f, const ReactionSystem& sys,
                              const Background& target);

/// f(A) <= A', comparing semantic triples, not ids.
bool is_rs_morphism(const BackgroundMorphism& f, const ReactionSystem& a,
                    const ReactionSystem& a_prime);

struct ExhaustiveMode {
    std::uint64_t cap;
    ExhaustiveMode(std::uint64_t cap_ = enumeration_cap()) : cap(cap_) {}
};
struct SampleMode {
    std::size_t cases;
    std::uint64_t seed;
};
using StrongCheckMode = std::variant<ExhaustiveMode, SampleMode>;

struct StrongReport {
    bool strong = true;
    std::size_t states_checked = 0;
    std::optional<Subobject> witness; // state with f o res_A(t) != res_A'(f o t)
};

/// Verifies f o res_A(t) = res_A'(f o t) over enumerated or sampled
/// states. The one-sided inclusion f o res_A(t) <= res_A'(f o t) is
/// asserted as a side invariant in every mode.
StrongReport is_strong(const BackgroundMorphism& f, const ReactionSystem& a,
                       const ReactionSystem& a_prime, const StrongCheckMode& mode);

} // namespace surf
