#include "surf/reaction.hpp"

#include <set>

#include "surf/error.hpp"

namespace surf {

bool Reaction::same_triple(const Reaction& other) const {
    return reactant == other.reactant && inhibitor == other.inhibitor &&
           inhibitor_core == other.inhibitor_core && product == other.product;
}

Reaction make_reaction(std::string id, Subobject reactant, Subobject inhibitor,
                       Subobject inhibitor_core, Subobject product) {
    require_same_background(reactant, inhibitor);
    require_same_background(reactant, inhibitor_core);
    require_same_background(reactant, product);
    if (reactant.empty()) throw Error(ErrorCode::EmptyReactant, "reaction '" + id + "'", id);
    if (product.empty()) throw Error(ErrorCode::EmptyProduct, "reaction '" + id + "'", id);
    if (!is_included(inhibitor_core, inhibitor))
        throw Error(ErrorCode::InhibitorCoreNotIncluded, "reaction '" + id + "'", id);
    return Reaction{std::move(id), std::move(reactant), std::move(inhibitor),
                    std::move(inhibitor_core), std::move(product)};
}

Reaction make_uninhibited_reaction(const Background& b, std::string id, Subobject reactant,
                                   Subobject product) {
    Subobject empty = empty_subobject(b);
    return make_reaction(std::move(id), std::move(reactant), empty, empty, std::move(product));
}

ReactionSystem make_system(Background background, std::vector<Reaction> reactions) {
    std::set<std::string> ids;
    for (const auto& a : reactions) {
        if (!ids.insert(a.id).second)
            throw Error(ErrorCode::DuplicateId, "reaction id '" + a.id + "'", a.id);
        require_background(background, a.reactant);
    }
    return ReactionSystem{std::move(background), std::move(reactions)};
}

const Reaction* find_reaction(const ReactionSystem& sys, const std::string& id) {
    for (const auto& a : sys.reactions)
        if (a.id == id) return &a;
    return nullptr;
}

bool is_enabled(const Reaction& a, const Subobject& t) {
    require_same_background(a.reactant, t);
    return is_included(a.reactant, t) && is_included(intersect(t, a.inhibitor), a.inhibitor_core);
}

Subobject result_of_reaction(const Background& b, const Reaction& a, const Subobject& t) {
    require_background(b, t);
    return is_enabled(a, t) ? a.product : empty_subobject(b);
}

Subobject result_of_set(const Background& b, const std::vector<Reaction>& reactions,
                        const Subobject& t) {
    require_background(b, t);
    std::vector<Subobject> products;
    for (const auto& a : reactions)
        if (is_enabled(a, t)) products.push_back(a.product);
    return union_all(b, products);
}

Subobject result_of_system(const ReactionSystem& sys, const Subobject& t) {
    return result_of_set(sys.background, sys.reactions, t);
}

std::vector<std::string> enabled_reaction_ids(const ReactionSystem& sys, const Subobject& t) {
    std::vector<std::string> ids;
    for (const auto& a : sys.reactions)
        if (is_enabled(a, t)) ids.push_back(a.id);
    return ids;
}

} // namespace surf
