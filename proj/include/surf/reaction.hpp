#pragma once

#include <string>
#include <vector>

#include "surf/background.hpp"
#include "surf/subobject.hpp"

namespace surf {

/// A reaction (r, (i, i0), p) over one background. The inhibitor's
/// second leg is stored pre-composed as a subobject of B with i0 <= i.
struct Reaction {
    std::string id;
    Subobject reactant;
    Subobject inhibitor;      // i
    Subobject inhibitor_core; // i0, included in i
    Subobject product;

    bool operator==(const Reaction&) const = default;

    bool uninhibited() const { return inhibitor.empty(); }
    /// The semantic triple, ignoring the id.
    bool same_triple(const Reaction& other) const;
};

struct ReactionSystem {
    Background background;
    std::vector<Reaction> reactions; // unique ids
};

/// Validates the triple: r and p non-empty, i0 <= i, all over the same
/// background.
Reaction make_reaction(std::string id, Subobject reactant, Subobject inhibitor,
                       Subobject inhibitor_core, Subobject product);

/// Shorthand with the empty inhibitor pair; enabled whenever r <= t.
Reaction make_uninhibited_reaction(const Background& b, std::string id, Subobject reactant,
                                   Subobject product);

ReactionSystem make_system(Background background, std::vector<Reaction> reactions);

const Reaction* find_reaction(const ReactionSystem& sys, const std::string& id);

/// en_a(t): r <= t and t /\ i <= i0.
bool is_enabled(const Reaction& a, const Subobject& t);

/// p_a if enabled, else the empty subobject.
Subobject result_of_reaction(const Background& b, const Reaction& a, const Subobject& t);

/// Cumulative parallel result: union of the per-reaction results. A
/// pure, order-independent function of t.
Subobject result_of_set(const Background& b, const std::vector<Reaction>& reactions,
                        const Subobject& t);

Subobject result_of_system(const ReactionSystem& sys, const Subobject& t);

std::vector<std::string> enabled_reaction_ids(const ReactionSystem& sys, const Subobject& t);

} // namespace surf
