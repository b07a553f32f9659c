#include "surf/random.hpp"

#include <algorithm>

#include "surf/error.hpp"

namespace surf {

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool flip(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

KeySet fresh_keys(const std::string& prefix, int count) {
    KeySet keys;
    for (int i = 0; i < count; ++i) keys.push_back(prefix + std::to_string(i));
    return keys;
}

std::string pick_key(const KeySet& keys, Rng& rng) {
    return keys[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(keys.size()) - 1))];
}

} // namespace

Background random_background(Kind kind, Rng& rng, int max_size) {
    static int counter = 0;
    const std::string id = "rand" + std::to_string(counter++);
    switch (kind) {
    case Kind::Set: {
        return construct_background(id, Kind::Set, SetCarrier{fresh_keys("x", pick(rng, 1, max_size))});
    }
    case Kind::Graph: {
        GraphCarrier c;
        c.vertices = fresh_keys("v", pick(rng, 1, max_size));
        c.alphabet = {"a", "b"};
        const int edges = pick(rng, 0, max_size);
        for (int i = 0; i < edges; ++i)
            c.edges["e" + std::to_string(i)] =
                GraphEdge{pick_key(c.vertices, rng), pick_key(c.vertices, rng),
                          flip(rng, 0.5) ? "a" : "b"};
        return construct_background(id, Kind::Graph, std::move(c));
    }
    case Kind::Hypergraph: {
        HypergraphCarrier c;
        c.vertices = fresh_keys("v", pick(rng, 1, max_size));
        c.alphabet = {"*", "+"};
        const int edges = pick(rng, 0, max_size);
        for (int i = 0; i < edges; ++i) {
            Hyperedge e;
            const int type = pick(rng, 1, 3);
            for (int t = 0; t < type; ++t) e.attachment.push_back(pick_key(c.vertices, rng));
            e.label = flip(rng, 0.5) ? "*" : "+";
            c.edges["h" + std::to_string(i)] = std::move(e);
        }
        return construct_background(id, Kind::Hypergraph, std::move(c));
    }
    case Kind::Poset: {
        PosetCarrier c;
        c.elements = fresh_keys("p", pick(rng, 1, max_size));
        for (const auto& a : c.elements) c.relation.insert({a, a});
        // random order: add pairs along the key order, then close
        for (std::size_t i = 0; i < c.elements.size(); ++i)
            for (std::size_t j = i + 1; j < c.elements.size(); ++j)
                if (flip(rng, 0.4)) c.relation.insert({c.elements[i], c.elements[j]});
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, b] : c.relation)
                for (const auto& [b2, d] : c.relation)
                    if (b == b2 && c.relation.insert({a, d}).second) changed = true;
        }
        return construct_background(id, Kind::Poset, std::move(c));
    }
    case Kind::Diagram:
        return random_diagram_background("graphs", rng, max_size);
    }
    throw Error(ErrorCode::BadParameters, "unknown kind");
}

Background random_diagram_background(const std::string& scheme_name, Rng& rng, int max_size) {
    static int counter = 0;
    const Scheme scm = scheme_by_name(scheme_name, {"a", "b"}, {"c", "d"});
    DiagramData data;
    for (const auto& cname : scm.free_components())
        data.sets[cname] = fresh_keys(cname + "_", pick(rng, 1, max_size));
    auto component_set = [&](const std::string& cname) -> const KeySet& {
        const SchemeComponent* comp = scm.find_component(cname);
        return comp->fixed ? comp->fixed_set : data.sets.at(cname);
    };
    for (const auto& a : scm.arrows) {
        const KeySet& src = component_set(a.source);
        const KeySet& tgt = component_set(a.target);
        for (const auto& x : src) data.maps[a.name][x] = pick_key(tgt, rng);
        data.maps.try_emplace(a.name); // arrows with empty source still need a map entry
    }
    return instantiate_diagram_universe("rdiag" + std::to_string(counter++), scm, data);
}

Subobject random_subobject(const Background& b, Rng& rng, double density) {
    ElementMap raw;
    for (const auto& [cname, keys] : b.all_elements()) {
        raw.try_emplace(cname);
        for (const auto& k : keys)
            if (flip(rng, density)) raw[cname].push_back(k);
    }
    return close_raw(b, raw);
}

Subobject random_subobject_within(const Background& b, const Subobject& within, Rng& rng,
                                  double density) {
    ElementMap raw;
    for (const auto& [cname, keys] : within.elements) {
        raw.try_emplace(cname);
        for (const auto& k : keys)
            if (flip(rng, density)) raw[cname].push_back(k);
    }
    return close_raw(b, raw);
}

ReactionSystem random_system(const Background& b, Rng& rng, int reaction_count) {
    std::vector<Reaction> reactions;
    for (int i = 0; i < reaction_count; ++i) {
        Subobject r = random_subobject(b, rng, 0.4);
        Subobject p = random_subobject(b, rng, 0.4);
        if (r.empty() || p.empty()) continue; // skip degenerate draws
        const std::string id = "r" + std::to_string(i);
        if (flip(rng, 0.7)) {
            reactions.push_back(make_uninhibited_reaction(b, id, std::move(r), std::move(p)));
        } else {
            Subobject i_sub = random_subobject(b, rng, 0.4);
            Subobject i0 = random_subobject_within(b, i_sub, rng, 0.5);
            reactions.push_back(
                make_reaction(id, std::move(r), std::move(i_sub), std::move(i0), std::move(p)));
        }
    }
    return make_system(b, std::move(reactions));
}

} // namespace surf
