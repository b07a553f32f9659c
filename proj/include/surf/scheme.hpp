#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surf/subobject.hpp"

namespace surf {

/// Shape graph for diagram universes. Components are placeholders for
/// finite sets; a fixed component is instantiated by the same set in
/// every diagram and must not be the source of any arrow.
struct SchemeComponent {
    std::string name;
    bool fixed = false;
    KeySet fixed_set; // only for fixed components

    bool operator==(const SchemeComponent&) const = default;
};

struct SchemeArrow {
    std::string name;
    std::string source;
    std::string target;

    bool operator==(const SchemeArrow&) const = default;
};

struct Scheme {
    std::string name;
    std::vector<SchemeComponent> components;
    std::vector<SchemeArrow> arrows;

    bool operator==(const Scheme&) const = default;

    const SchemeComponent* find_component(const std::string& name) const;
    std::vector<std::string> free_components() const;
};

/// Throws FixedSourceArrow or DuplicateName on violation.
void validate_scheme(const Scheme& scm);

/// Instantiation data for one diagram: a finite set per free component
/// and a total map per arrow. Fixed components are taken from the scheme.
struct DiagramData {
    std::map<std::string, KeySet> sets;                            // free component -> elements
    std::map<std::string, std::map<std::string, std::string>> maps; // arrow -> element map
};

/// Componentwise morphism check between two diagrams of the same scheme.
/// Fixed components implicitly carry the identity. Throws SquareFails
/// (naming the arrow and a witness element) or SchemeMismatch.
struct DiagramMorphismReport {
    bool mono; // all component maps injective
};
DiagramMorphismReport check_diagram_morphism(
    const Scheme& scm,
    const std::map<std::string, std::map<std::string, std::string>>& g,
    const DiagramData& d1, const DiagramData& d2);

/// Registry of the shipped schemes ("pairs", "sigma-sets", "maps",
/// "graphs", "sigma-graphs", "vl-el-graphs", "bipartite", "hg3", "hg4").
/// `alphabet` fills fixed components where the scheme has any.
Scheme scheme_by_name(const std::string& name, const KeySet& alphabet = {},
                      const KeySet& alphabet2 = {});
std::vector<std::string> scheme_registry_names();

} // namespace surf
