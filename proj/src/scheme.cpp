#include "surf/scheme.hpp"

#include <algorithm>
#include <set>

#include "surf/error.hpp"

namespace surf {

const SchemeComponent* Scheme::find_component(const std::string& cname) const {
    for (const auto& c : components)
        if (c.name == cname) return &c;
    return nullptr;
}

std::vector<std::string> Scheme::free_components() const {
    std::vector<std::string> out;
    for (const auto& c : components)
        if (!c.fixed) out.push_back(c.name);
    std::sort(out.begin(), out.end());
    return out;
}

void validate_scheme(const Scheme& scm) {
    std::set<std::string> names;
    for (const auto& c : scm.components)
        if (!names.insert(c.name).second)
            throw Error(ErrorCode::DuplicateName, "component '" + c.name + "'", c.name);
    std::set<std::string> arrow_names;
    for (const auto& a : scm.arrows) {
        if (!arrow_names.insert(a.name).second)
            throw Error(ErrorCode::DuplicateName, "arrow '" + a.name + "'", a.name);
        const SchemeComponent* src = scm.find_component(a.source);
        const SchemeComponent* tgt = scm.find_component(a.target);
        if (!src || !tgt)
            throw Error(ErrorCode::DuplicateName,
                        "arrow '" + a.name + "' references unknown component", a.name);
        if (src->fixed)
            throw Error(ErrorCode::FixedSourceArrow,
                        "arrow '" + a.name + "' has fixed source '" + a.source + "'", a.name);
    }
}

DiagramMorphismReport check_diagram_morphism(
    const Scheme& scm, const std::map<std::string, std::map<std::string, std::string>>& g,
    const DiagramData& d1, const DiagramData& d2) {
    validate_scheme(scm);
    // totality of the component maps
    for (const auto& cname : scm.free_components()) {
        auto s1 = d1.sets.find(cname);
        auto s2 = d2.sets.find(cname);
        if (s1 == d1.sets.end() || s2 == d2.sets.end())
            throw Error(ErrorCode::SchemeMismatch, "missing component '" + cname + "'", cname);
        auto gc = g.find(cname);
        for (const auto& x : s1->second) {
            if (gc == g.end() || !gc->second.count(x))
                throw Error(ErrorCode::SchemeMismatch,
                            "map for component '" + cname + "' undefined on '" + x + "'", x);
            const std::string& y = gc->second.at(x);
            if (!contains(s2->second, y))
                throw Error(ErrorCode::SchemeMismatch,
                            "image '" + y + "' not in target component '" + cname + "'", y);
        }
    }
    // naturality squares, fixed components carrying the identity
    auto image = [&](const std::string& cname, const std::string& x) -> std::string {
        const SchemeComponent* c = scm.find_component(cname);
        if (c->fixed) return x;
        return g.at(cname).at(x);
    };
    for (const auto& a : scm.arrows) {
        const auto& m1 = d1.maps.at(a.name);
        const auto& m2 = d2.maps.at(a.name);
        for (const auto& [x, y] : m1) {
            const std::string lhs = image(a.target, y);
            const std::string gx = image(a.source, x);
            auto it = m2.find(gx);
            if (it == m2.end() || it->second != lhs)
                throw Error(ErrorCode::SquareFails,
                            "arrow '" + a.name + "' does not commute at '" + x + "'", x);
        }
    }
    // monomorphism flag: injectivity of every free component map
    bool mono = true;
    for (const auto& cname : scm.free_components()) {
        std::set<std::string> seen;
        auto gc = g.find(cname);
        if (gc == g.end()) continue;
        for (const auto& x : d1.sets.at(cname))
            if (!seen.insert(gc->second.at(x)).second) mono = false;
    }
    return {mono};
}

namespace {

Scheme make_scheme(std::string name, std::vector<SchemeComponent> components,
                   std::vector<SchemeArrow> arrows) {
    Scheme scm{std::move(name), std::move(components), std::move(arrows)};
    validate_scheme(scm);
    return scm;
}

} // namespace

Scheme scheme_by_name(const std::string& name, const KeySet& alphabet, const KeySet& alphabet2) {
    if (name == "pairs")
        return make_scheme(name, {{"c1"}, {"c2"}}, {});
    if (name == "sigma-sets")
        return make_scheme(name, {{"X"}, {"Sigma", true, alphabet}},
                           {{"label", "X", "Sigma"}});
    if (name == "maps")
        return make_scheme(name, {{"X"}, {"Y"}}, {{"f", "X", "Y"}});
    if (name == "graphs")
        return make_scheme(name, {{"V"}, {"E"}}, {{"s", "E", "V"}, {"t", "E", "V"}});
    if (name == "sigma-graphs")
        return make_scheme(name, {{"V"}, {"E"}, {"Sigma", true, alphabet}},
                           {{"s", "E", "V"}, {"t", "E", "V"}, {"label", "E", "Sigma"}});
    if (name == "vl-el-graphs")
        return make_scheme(name,
                           {{"V"}, {"E"}, {"SigmaE", true, alphabet}, {"SigmaV", true, alphabet2}},
                           {{"s", "E", "V"},
                            {"t", "E", "V"},
                            {"elabel", "E", "SigmaE"},
                            {"vlabel", "V", "SigmaV"}});
    if (name == "bipartite")
        return make_scheme(name, {{"V1"}, {"V2"}, {"E1"}, {"E2"}},
                           {{"s1", "E1", "V1"},
                            {"t1", "E1", "V2"},
                            {"s2", "E2", "V2"},
                            {"t2", "E2", "V1"}});
    if (name == "hg3")
        return make_scheme(name, {{"V"}, {"E"}},
                           {{"l", "E", "V"}, {"r", "E", "V"}, {"top", "E", "V"}});
    if (name == "hg4")
        return make_scheme(name, {{"V"}, {"E"}},
                           {{"north", "E", "V"},
                            {"east", "E", "V"},
                            {"south", "E", "V"},
                            {"west", "E", "V"}});
    throw Error(ErrorCode::SchemaError, "unknown scheme '" + name + "'", name);
}

std::vector<std::string> scheme_registry_names() {
    return {"pairs",    "sigma-sets",   "maps", "graphs", "sigma-graphs",
            "vl-el-graphs", "bipartite", "hg3",  "hg4"};
}

} // namespace surf
