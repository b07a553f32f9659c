#include "surf/background.hpp"

#include <algorithm>
#include <cstdlib>

#include "surf/error.hpp"

namespace surf {

const char* to_string(Kind kind) {
    switch (kind) {
    case Kind::Set: return "set";
    case Kind::Graph: return "graph";
    case Kind::Hypergraph: return "hypergraph";
    case Kind::Poset: return "poset";
    case Kind::Diagram: return "diagram";
    }
    return "unknown";
}

Kind kind_from_string(const std::string& name) {
    if (name == "set") return Kind::Set;
    if (name == "graph") return Kind::Graph;
    if (name == "hypergraph") return Kind::Hypergraph;
    if (name == "poset") return Kind::Poset;
    if (name == "diagram") return Kind::Diagram;
    throw Error(ErrorCode::SchemaError, "unknown universe kind '" + name + "'", name);
}

std::string pair_key(const std::string& a, const std::string& b) { return a + "|" + b; }

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
    auto pos = key.find('|');
    return {key.substr(0, pos), key.substr(pos + 1)};
}

namespace {

void sort_unique(KeySet& keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

void check_no_duplicates(const KeySet& keys, const std::string& what) {
    for (std::size_t i = 0; i + 1 < keys.size(); ++i)
        if (keys[i] == keys[i + 1])
            throw Error(ErrorCode::DuplicateId, what + " '" + keys[i] + "'", keys[i]);
}

void check_nonempty_keys(const KeySet& keys, const std::string& what) {
    for (const auto& k : keys)
        if (k.empty()) throw Error(ErrorCode::DuplicateId, "empty " + what + " key");
}

} // namespace

std::vector<std::string> Background::components() const {
    switch (kind) {
    case Kind::Set: return {"elems"};
    case Kind::Graph:
    case Kind::Hypergraph: return {"E", "V"};
    case Kind::Poset: return {"A", "rel"};
    case Kind::Diagram: return std::get<DiagramCarrier>(carrier).scheme.free_components();
    }
    return {};
}

ElementMap Background::all_elements() const {
    ElementMap out;
    switch (kind) {
    case Kind::Set:
        out["elems"] = std::get<SetCarrier>(carrier).elements;
        break;
    case Kind::Graph: {
        const auto& c = std::get<GraphCarrier>(carrier);
        out["V"] = c.vertices;
        for (const auto& [id, e] : c.edges) out["E"].push_back(id);
        break;
    }
    case Kind::Hypergraph: {
        const auto& c = std::get<HypergraphCarrier>(carrier);
        out["V"] = c.vertices;
        for (const auto& [id, e] : c.edges) out["E"].push_back(id);
        break;
    }
    case Kind::Poset: {
        const auto& c = std::get<PosetCarrier>(carrier);
        out["A"] = c.elements;
        for (const auto& [a, b] : c.relation) out["rel"].push_back(pair_key(a, b));
        break;
    }
    case Kind::Diagram: {
        const auto& c = std::get<DiagramCarrier>(carrier);
        for (const auto& cname : c.scheme.free_components()) out[cname] = c.data.sets.at(cname);
        break;
    }
    }
    for (const auto& cname : components())
        out.try_emplace(cname); // every component present, possibly empty
    for (auto& [cname, keys] : out) std::sort(keys.begin(), keys.end());
    return out;
}

std::size_t Background::element_count() const {
    std::size_t n = 0;
    for (const auto& [cname, keys] : all_elements()) n += keys.size();
    return n;
}

namespace {

void validate_set_carrier(SetCarrier& c) {
    std::sort(c.elements.begin(), c.elements.end());
    check_no_duplicates(c.elements, "set element");
    check_nonempty_keys(c.elements, "set element");
}

void validate_graph_carrier(GraphCarrier& c) {
    std::sort(c.vertices.begin(), c.vertices.end());
    check_no_duplicates(c.vertices, "vertex");
    check_nonempty_keys(c.vertices, "vertex");
    for (const auto& [id, e] : c.edges) {
        if (id.empty()) throw Error(ErrorCode::DuplicateId, "empty edge key");
        if (!contains(c.vertices, e.source))
            throw Error(ErrorCode::DanglingReference,
                        "edge '" + id + "' source '" + e.source + "'", id);
        if (!contains(c.vertices, e.target))
            throw Error(ErrorCode::DanglingReference,
                        "edge '" + id + "' target '" + e.target + "'", id);
        if (!c.alphabet.count(e.label))
            throw Error(ErrorCode::UnknownLabel, "edge '" + id + "' label '" + e.label + "'", id);
    }
}

void validate_hypergraph_carrier(HypergraphCarrier& c) {
    std::sort(c.vertices.begin(), c.vertices.end());
    check_no_duplicates(c.vertices, "vertex");
    check_nonempty_keys(c.vertices, "vertex");
    for (const auto& [id, e] : c.edges) {
        if (id.empty()) throw Error(ErrorCode::DuplicateId, "empty hyperedge key");
        for (const auto& v : e.attachment)
            if (!contains(c.vertices, v))
                throw Error(ErrorCode::DanglingReference,
                            "hyperedge '" + id + "' attachment vertex '" + v + "'", id);
        if (!c.alphabet.count(e.label))
            throw Error(ErrorCode::UnknownLabel,
                        "hyperedge '" + id + "' label '" + e.label + "'", id);
    }
}

void validate_poset_carrier(PosetCarrier& c) {
    std::sort(c.elements.begin(), c.elements.end());
    check_no_duplicates(c.elements, "poset element");
    check_nonempty_keys(c.elements, "poset element");
    for (const auto& k : c.elements)
        if (k.find('|') != std::string::npos)
            throw Error(ErrorCode::DuplicateId, "poset element key '" + k + "' contains '|'", k);
    for (const auto& [a, b] : c.relation) {
        if (!contains(c.elements, a) || !contains(c.elements, b))
            throw Error(ErrorCode::DanglingReference, "pair (" + a + "," + b + ")",
                        pair_key(a, b));
    }
    for (const auto& a : c.elements)
        if (!c.relation.count({a, a}))
            throw Error(ErrorCode::NotAPartialOrder, "reflexivity fails at '" + a + "'", a);
    for (const auto& [a, b] : c.relation)
        if (a != b && c.relation.count({b, a}))
            throw Error(ErrorCode::NotAPartialOrder,
                        "anti-symmetry fails, witness (" + a + "," + b + ")", pair_key(a, b));
    for (const auto& [a, b] : c.relation)
        for (const auto& [b2, d] : c.relation)
            if (b == b2 && !c.relation.count({a, d}))
                throw Error(ErrorCode::NotAPartialOrder,
                            "transitivity fails, witness (" + a + "," + d + ")", pair_key(a, d));
}

void validate_diagram_carrier(DiagramCarrier& c) {
    validate_scheme(c.scheme);
    for (auto& comp : c.scheme.components)
        if (comp.fixed) {
            sort_unique(comp.fixed_set);
            check_nonempty_keys(comp.fixed_set, "fixed-set element");
        }
    for (const auto& cname : c.scheme.free_components()) {
        auto it = c.data.sets.find(cname);
        if (it == c.data.sets.end())
            throw Error(ErrorCode::SchemeMismatch, "missing component set '" + cname + "'", cname);
        sort_unique(it->second);
        check_nonempty_keys(it->second, "component element");
    }
    for (const auto& [cname, keys] : c.data.sets)
        if (const SchemeComponent* comp = c.scheme.find_component(cname);
            !comp || comp->fixed)
            throw Error(ErrorCode::SchemeMismatch,
                        "component set for non-free component '" + cname + "'", cname);
    auto component_set = [&](const std::string& cname) -> const KeySet& {
        const SchemeComponent* comp = c.scheme.find_component(cname);
        return comp->fixed ? comp->fixed_set : c.data.sets.at(cname);
    };
    for (const auto& a : c.scheme.arrows) {
        auto it = c.data.maps.find(a.name);
        if (it == c.data.maps.end())
            throw Error(ErrorCode::SchemeMismatch, "missing arrow map '" + a.name + "'", a.name);
        const KeySet& src = component_set(a.source);
        const KeySet& tgt = component_set(a.target);
        for (const auto& x : src) {
            auto jt = it->second.find(x);
            if (jt == it->second.end())
                throw Error(ErrorCode::DanglingReference,
                            "arrow '" + a.name + "' undefined on '" + x + "'", x);
            if (!contains(tgt, jt->second))
                throw Error(ErrorCode::DanglingReference,
                            "arrow '" + a.name + "' image '" + jt->second + "' outside target",
                            jt->second);
        }
        for (const auto& [x, y] : it->second)
            if (!contains(src, x))
                throw Error(ErrorCode::DanglingReference,
                            "arrow '" + a.name + "' defined on unknown '" + x + "'", x);
    }
    for (const auto& [aname, m] : c.data.maps)
        if (std::none_of(c.scheme.arrows.begin(), c.scheme.arrows.end(),
                         [&](const SchemeArrow& a) { return a.name == aname; }))
            throw Error(ErrorCode::SchemeMismatch, "map for unknown arrow '" + aname + "'", aname);
}

} // namespace

Background construct_background(std::string id, Kind kind, Carrier carrier) {
    Background b{std::move(id), kind, std::move(carrier)};
    switch (kind) {
    case Kind::Set: validate_set_carrier(std::get<SetCarrier>(b.carrier)); break;
    case Kind::Graph: validate_graph_carrier(std::get<GraphCarrier>(b.carrier)); break;
    case Kind::Hypergraph: validate_hypergraph_carrier(std::get<HypergraphCarrier>(b.carrier)); break;
    case Kind::Poset: validate_poset_carrier(std::get<PosetCarrier>(b.carrier)); break;
    case Kind::Diagram: validate_diagram_carrier(std::get<DiagramCarrier>(b.carrier)); break;
    }
    return b;
}

Background instantiate_diagram_universe(std::string id, const Scheme& scm,
                                        const DiagramData& data) {
    return construct_background(std::move(id), Kind::Diagram, DiagramCarrier{scm, data});
}

std::set<std::pair<std::string, std::string>> poset_closure(
    const Background& poset, const std::set<std::pair<std::string, std::string>>& raw) {
    const auto& c = std::get<PosetCarrier>(poset.carrier);
    for (const auto& p : raw)
        if (!c.relation.count(p))
            throw Error(ErrorCode::PairOutsideBackground,
                        "pair (" + p.first + "," + p.second + ")", pair_key(p.first, p.second));
    auto closed = raw;
    bool changed = true;
    while (changed) { // fixpoint of relational composition
        changed = false;
        for (const auto& [a, b] : closed)
            for (const auto& [b2, d] : closed)
                if (b == b2 && closed.insert({a, d}).second) changed = true;
    }
    return closed;
}

void require_background(const Background& b, const Subobject& s) {
    if (s.background_id != b.id)
        throw Error(ErrorCode::BackgroundMismatch,
                    "subobject of '" + s.background_id + "' used with background '" + b.id + "'");
}

Subobject empty_subobject(const Background& b) {
    Subobject s{b.id, {}};
    for (const auto& cname : b.components()) s.elements[cname];
    return s;
}

namespace {

// Closure obligations shared by validation and completion. `get` looks
// up whether an element is currently present; `demand` either reports a
// violation or adds the element.
template <typename Has, typename Demand>
bool walk_closure(const Background& b, const Has& has, const Demand& demand) {
    switch (b.kind) {
    case Kind::Set: return true;
    case Kind::Graph: {
        const auto& c = std::get<GraphCarrier>(b.carrier);
        for (const auto& [id, e] : c.edges)
            if (has("E", id)) {
                if (!demand("V", e.source, id)) return false;
                if (!demand("V", e.target, id)) return false;
            }
        return true;
    }
    case Kind::Hypergraph: {
        const auto& c = std::get<HypergraphCarrier>(b.carrier);
        for (const auto& [id, e] : c.edges)
            if (has("E", id))
                for (const auto& v : e.attachment)
                    if (!demand("V", v, id)) return false;
        return true;
    }
    case Kind::Poset: {
        const auto& c = std::get<PosetCarrier>(b.carrier);
        for (const auto& [a, bb] : c.relation)
            if (has("rel", pair_key(a, bb))) {
                if (!demand("A", a, pair_key(a, bb))) return false;
                if (!demand("A", bb, pair_key(a, bb))) return false;
            }
        // reflexivity on the selected part
        for (const auto& a : c.elements)
            if (has("A", a) && !demand("rel", pair_key(a, a), a)) return false;
        // transitivity of the selected pairs
        for (const auto& [a, bb] : c.relation)
            if (has("rel", pair_key(a, bb)))
                for (const auto& [b2, d] : c.relation)
                    if (b2 == bb && has("rel", pair_key(b2, d)))
                        if (!demand("rel", pair_key(a, d), pair_key(a, bb))) return false;
        return true;
    }
    case Kind::Diagram: {
        const auto& c = std::get<DiagramCarrier>(b.carrier);
        for (const auto& a : c.scheme.arrows) {
            const SchemeComponent* tgt = c.scheme.find_component(a.target);
            if (tgt->fixed) continue; // fixed targets impose nothing
            for (const auto& [x, y] : c.data.maps.at(a.name))
                if (has(a.source, x) && !demand(a.target, y, x)) return false;
        }
        return true;
    }
    }
    return true;
}

ElementMap canonical_raw(const Background& b, const ElementMap& raw) {
    ElementMap canon;
    const ElementMap full = b.all_elements();
    for (const auto& [cname, keys] : raw) {
        auto it = full.find(cname);
        if (it == full.end())
            throw Error(ErrorCode::UnknownElement, "unknown component '" + cname + "'", cname);
        KeySet sorted = keys;
        sort_unique(sorted);
        for (const auto& k : sorted)
            if (!contains(it->second, k))
                throw Error(ErrorCode::UnknownElement,
                            "element '" + k + "' not in component '" + cname + "' of '" + b.id +
                                "'",
                            k);
        canon[cname] = std::move(sorted);
    }
    for (const auto& [cname, keys] : full) canon.try_emplace(cname);
    return canon;
}

} // namespace

Subobject validate_subobject(const Background& b, const ElementMap& raw) {
    ElementMap canon = canonical_raw(b, raw);
    auto has = [&](const std::string& cname, const std::string& key) {
        return contains(canon.at(cname), key);
    };
    auto demand = [&](const std::string& cname, const std::string& key,
                      const std::string& because) {
        if (contains(canon.at(cname), key)) return true;
        throw Error(ErrorCode::ClosureViolation,
                    "'" + because + "' requires '" + key + "' in component '" + cname + "'", key);
    };
    walk_closure(b, has, demand);
    return Subobject{b.id, std::move(canon)};
}

bool is_valid_subobject(const Background& b, const ElementMap& raw) {
    ElementMap canon;
    try {
        canon = canonical_raw(b, raw);
    } catch (const Error&) {
        return false;
    }
    auto has = [&](const std::string& cname, const std::string& key) {
        return contains(canon.at(cname), key);
    };
    auto demand = [&](const std::string& cname, const std::string& key, const std::string&) {
        return contains(canon.at(cname), key);
    };
    return walk_closure(b, has, demand);
}

Subobject close_raw(const Background& b, const ElementMap& raw) {
    ElementMap canon = canonical_raw(b, raw);
    bool changed = true;
    auto has = [&](const std::string& cname, const std::string& key) {
        return contains(canon.at(cname), key);
    };
    while (changed) {
        changed = false;
        auto demand = [&](const std::string& cname, const std::string& key, const std::string&) {
            KeySet& part = canon.at(cname);
            if (!contains(part, key)) {
                insert_key(part, key);
                changed = true;
            }
            return true;
        };
        walk_closure(b, has, demand);
    }
    return Subobject{b.id, std::move(canon)};
}

Subobject union_all(const Background& b, const std::vector<Subobject>& s) {
    Subobject out = empty_subobject(b);
    for (const auto& p : s) {
        require_background(b, p);
        for (const auto& [cname, keys] : p.elements)
            out.elements.at(cname) = union_keys(out.elements.at(cname), keys);
    }
    if (b.kind == Kind::Poset) {
        // transitive-closure completion; stays inside B's relation
        KeySet& rel = out.elements.at("rel");
        std::set<std::pair<std::string, std::string>> pairs;
        for (const auto& k : rel) pairs.insert(split_pair_key(k));
        pairs = poset_closure(b, pairs);
        rel.clear();
        for (const auto& [a, bb] : pairs) rel.push_back(pair_key(a, bb));
        std::sort(rel.begin(), rel.end());
    }
    return out;
}

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("SURF_MAX_ENUM"))
        return std::strtoull(env, nullptr, 10);
    return kDefaultEnumerationCap;
}

std::vector<Subobject> enumerate_subobjects(const Background& b, std::uint64_t cap) {
    const ElementMap full = b.all_elements();
    std::vector<std::pair<std::string, std::string>> universe;
    for (const auto& [cname, keys] : full)
        for (const auto& k : keys) universe.emplace_back(cname, k);
    const std::size_t n = universe.size();
    if (n >= 63 || (std::uint64_t{1} << n) > cap)
        throw Error(ErrorCode::TooLarge,
                    "candidate space 2^" + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
    std::vector<Subobject> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ElementMap raw;
        for (const auto& [cname, keys] : full) raw.try_emplace(cname);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) raw[universe[i].first].push_back(universe[i].second);
        if (is_valid_subobject(b, raw)) out.push_back(Subobject{b.id, std::move(raw)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace surf
