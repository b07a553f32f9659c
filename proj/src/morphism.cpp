#include "surf/morphism.hpp"

#include <algorithm>
#include <set>

#include "surf/error.hpp"
#include "surf/random.hpp"

namespace surf {

namespace {

// Component maps a morphism must carry explicitly per kind. Poset
// relation pairs and diagram fixed components map implicitly.
std::vector<std::string> mapped_components(const Background& b) {
    switch (b.kind) {
    case Kind::Set: return {"elems"};
    case Kind::Graph:
    case Kind::Hypergraph: return {"E", "V"};
    case Kind::Poset: return {"A"};
    case Kind::Diagram: return std::get<DiagramCarrier>(b.carrier).scheme.free_components();
    }
    return {};
}

const std::string& image_of(const BackgroundMorphism& f, const std::string& component,
                            const std::string& key) {
    auto it = f.maps.find(component);
    if (it == f.maps.end())
        throw Error(ErrorCode::NotStructurePreserving, "no map for component '" + component + "'",
                    component);
    auto jt = it->second.find(key);
    if (jt == it->second.end())
        throw Error(ErrorCode::NotStructurePreserving,
                    "map undefined on '" + key + "' in component '" + component + "'", key);
    return jt->second;
}

} // namespace

BackgroundMorphism identity_morphism(const Background& b) {
    BackgroundMorphism f{b.id, b.id, {}};
    const ElementMap full = b.all_elements();
    for (const auto& cname : mapped_components(b))
        for (const auto& k : full.at(cname)) f.maps[cname][k] = k;
    return f;
}

BackgroundMorphism inclusion_morphism(const Background& source, const Background& target) {
    BackgroundMorphism f{source.id, target.id, {}};
    const ElementMap full = source.all_elements();
    for (const auto& cname : mapped_components(source))
        for (const auto& k : full.at(cname)) f.maps[cname][k] = k;
    check_background_mono(f, source, target);
    return f;
}

MorphismReport check_background_morphism(const BackgroundMorphism& f, const Background& source,
                                         const Background& target) {
    MorphismReport report;
    try {
        check_background_mono(f, source, target);
        report.structure_ok = true;
        report.mono = true;
    } catch (const Error& err) {
        if (err.code() == ErrorCode::NotInjective) {
            report.structure_ok = true;
            report.mono = false;
        }
        report.witness = err.witness();
    }
    return report;
}

void check_background_mono(const BackgroundMorphism& f, const Background& source,
                           const Background& target) {
    if (source.kind != target.kind)
        throw Error(ErrorCode::NotStructurePreserving, "backgrounds of different kinds");
    const ElementMap src_full = source.all_elements();
    const ElementMap tgt_full = target.all_elements();

    // totality and well-typedness of the component maps
    for (const auto& cname : mapped_components(source)) {
        for (const auto& k : src_full.at(cname)) {
            const std::string& img = image_of(f, cname, k);
            auto it = tgt_full.find(cname);
            if (it == tgt_full.end() || !contains(it->second, img))
                throw Error(ErrorCode::NotStructurePreserving,
                            "image '" + img + "' not in target component '" + cname + "'", k);
        }
    }

    switch (source.kind) {
    case Kind::Set: break;
    case Kind::Graph: {
        const auto& sc = std::get<GraphCarrier>(source.carrier);
        const auto& tc = std::get<GraphCarrier>(target.carrier);
        for (const auto& [id, e] : sc.edges) {
            const GraphEdge& img = tc.edges.at(image_of(f, "E", id));
            if (img.source != image_of(f, "V", e.source) ||
                img.target != image_of(f, "V", e.target))
                throw Error(ErrorCode::NotStructurePreserving,
                            "edge '" + id + "' endpoints do not commute", id);
            if (img.label != e.label)
                throw Error(ErrorCode::NotStructurePreserving,
                            "edge '" + id + "' changes label", id);
        }
        break;
    }
    case Kind::Hypergraph: {
        const auto& sc = std::get<HypergraphCarrier>(source.carrier);
        const auto& tc = std::get<HypergraphCarrier>(target.carrier);
        for (const auto& [id, e] : sc.edges) {
            const Hyperedge& img = tc.edges.at(image_of(f, "E", id));
            if (img.attachment.size() != e.attachment.size())
                throw Error(ErrorCode::NotStructurePreserving,
                            "hyperedge '" + id + "' changes type", id);
            for (std::size_t i = 0; i < e.attachment.size(); ++i)
                if (img.attachment[i] != image_of(f, "V", e.attachment[i]))
                    throw Error(ErrorCode::NotStructurePreserving,
                                "hyperedge '" + id + "' attachment does not commute", id);
            if (img.label != e.label)
                throw Error(ErrorCode::NotStructurePreserving,
                            "hyperedge '" + id + "' changes label", id);
        }
        break;
    }
    case Kind::Poset: {
        const auto& sc = std::get<PosetCarrier>(source.carrier);
        const auto& tc = std::get<PosetCarrier>(target.carrier);
        for (const auto& [a, b] : sc.relation)
            if (!tc.relation.count({image_of(f, "A", a), image_of(f, "A", b)}))
                throw Error(ErrorCode::NotStructurePreserving,
                            "pair (" + a + "," + b + ") not preserved", pair_key(a, b));
        break;
    }
    case Kind::Diagram: {
        const auto& sc = std::get<DiagramCarrier>(source.carrier);
        const auto& tc = std::get<DiagramCarrier>(target.carrier);
        if (sc.scheme != tc.scheme)
            throw Error(ErrorCode::NotStructurePreserving, "different schemes");
        for (const auto& a : sc.scheme.arrows) {
            const bool tgt_fixed = sc.scheme.find_component(a.target)->fixed;
            for (const auto& [x, y] : sc.data.maps.at(a.name)) {
                const std::string gx = image_of(f, a.source, x);
                const std::string gy = tgt_fixed ? y : image_of(f, a.target, y);
                if (tc.data.maps.at(a.name).at(gx) != gy)
                    throw Error(ErrorCode::NotStructurePreserving,
                                "arrow '" + a.name + "' square fails at '" + x + "'", x);
            }
        }
        break;
    }
    }

    // injectivity in every component
    for (const auto& [cname, m] : f.maps) {
        std::set<std::string> images;
        for (const auto& [k, img] : m)
            if (!images.insert(img).second)
                throw Error(ErrorCode::NotInjective,
                            "component '" + cname + "' collapses onto '" + img + "'", img);
    }
}

Subobject apply_morphism(const BackgroundMorphism& f, const Background& source,
                         const Background& target, const Subobject& s) {
    require_background(source, s);
    Subobject out = empty_subobject(target);
    for (const auto& cname : mapped_components(source))
        for (const auto& k : s.part(cname)) insert_key(out.elements.at(cname), image_of(f, cname, k));
    if (source.kind == Kind::Poset)
        for (const auto& k : s.part("rel")) {
            auto [a, b] = split_pair_key(k);
            insert_key(out.elements.at("rel"), pair_key(image_of(f, "A", a), image_of(f, "A", b)));
        }
    return out;
}

namespace {

void require_mono(const BackgroundMorphism& f, const Background& source,
                  const Background& target) {
    try {
        check_background_mono(f, source, target);
    } catch (const Error& err) {
        if (err.code() == ErrorCode::NotInjective)
            throw Error(ErrorCode::MonoRequired, err.what(), err.witness());
        throw;
    }
}

Reaction map_reaction_unchecked(const BackgroundMorphism& f, const Background& source,
                                const Background& target, const Reaction& a) {
    return Reaction{a.id, apply_morphism(f, source, target, a.reactant),
                    apply_morphism(f, source, target, a.inhibitor),
                    apply_morphism(f, source, target, a.inhibitor_core),
                    apply_morphism(f, source, target, a.product)};
}

} // namespace

Reaction map_reaction(const BackgroundMorphism& f, const Background& source,
                      const Background& target, const Reaction& a) {
    require_mono(f, source, target);
    return map_reaction_unchecked(f, source, target, a);
}

ReactionSystem induced_system(const BackgroundMorphism& f, const ReactionSystem& sys,
                              const Background& target) {
    require_mono(f, sys.background, target);
    std::vector<Reaction> mapped;
    mapped.reserve(sys.reactions.size());
    for (const auto& a : sys.reactions)
        mapped.push_back(map_reaction_unchecked(f, sys.background, target, a));
    return ReactionSystem{target, std::move(mapped)};
}

bool is_rs_morphism(const BackgroundMorphism& f, const ReactionSystem& a,
                    const ReactionSystem& a_prime) {
    require_mono(f, a.background, a_prime.background);
    for (const auto& reaction : a.reactions) {
        Reaction mapped = map_reaction_unchecked(f, a.background, a_prime.background, reaction);
        bool found = false;
        for (const auto& candidate : a_prime.reactions)
            if (candidate.same_triple(mapped)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

StrongReport is_strong(const BackgroundMorphism& f, const ReactionSystem& a,
                       const ReactionSystem& a_prime, const StrongCheckMode& mode) {
    if (!is_rs_morphism(f, a, a_prime))
        throw Error(ErrorCode::NotAMorphism, "f(A) is not included in A'");
    const Background& src = a.background;
    const Background& tgt = a_prime.background;

    StrongReport report;
    auto check_state = [&](const Subobject& t) {
        const Subobject lhs = apply_morphism(f, src, tgt, result_of_system(a, t));
        const Subobject rhs = result_of_system(a_prime, apply_morphism(f, src, tgt, t));
        ++report.states_checked;
        if (!is_included(lhs, rhs))
            throw Error(ErrorCode::NotAMorphism,
                        "one-sided inclusion violated on state " + to_string(t));
        if (lhs != rhs && report.strong) {
            report.strong = false;
            report.witness = t;
        }
    };

    if (const auto* exhaustive = std::get_if<ExhaustiveMode>(&mode)) {
        for (const auto& t : enumerate_subobjects(src, exhaustive->cap)) check_state(t);
    } else {
        const auto& sample = std::get<SampleMode>(mode);
        Rng rng(sample.seed);
        for (std::size_t i = 0; i < sample.cases; ++i) check_state(random_subobject(src, rng));
    }
    return report;
}

} // namespace surf
