#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "surf/scheme.hpp"
#include "surf/subobject.hpp"

namespace surf {

enum class Kind { Set, Graph, Hypergraph, Poset, Diagram };

const char* to_string(Kind kind);
Kind kind_from_string(const std::string& name);

struct SetCarrier {
    KeySet elements;
};

struct GraphEdge {
    std::string source;
    std::string target;
    std::string label;
};

struct GraphCarrier {
    KeySet vertices;
    std::map<std::string, GraphEdge> edges;
    std::set<std::string> alphabet;
};

struct Hyperedge {
    std::vector<std::string> attachment; // ordered, repetition allowed
    std::string label;
};

struct HypergraphCarrier {
    KeySet vertices;
    std::map<std::string, Hyperedge> edges;
    std::set<std::string> alphabet;
};

struct PosetCarrier {
    KeySet elements;
    std::set<std::pair<std::string, std::string>> relation; // partial order
};

struct DiagramCarrier {
    Scheme scheme;
    DiagramData data;
};

using Carrier =
    std::variant<SetCarrier, GraphCarrier, HypergraphCarrier, PosetCarrier, DiagramCarrier>;

/// Relation pairs are carried as elements of the "rel" component with
/// keys "a|b"; poset element keys therefore must not contain '|'.
std::string pair_key(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_pair_key(const std::string& key);

/// A finite object of one universe kind, with full structure. All
/// values are immutable after construction.
struct Background {
    std::string id;
    Kind kind;
    Carrier carrier;

    std::vector<std::string> components() const;
    /// Full element set as an ElementMap (the background as a subobject
    /// of itself).
    ElementMap all_elements() const;
    std::size_t element_count() const;
};

/// Validates carrier data and returns the background. For posets the
/// given relation must already be a partial order; no silent completion.
Background construct_background(std::string id, Kind kind, Carrier carrier);

/// Least transitive superset of `raw` inside B's relation; idempotent.
std::set<std::pair<std::string, std::string>> poset_closure(
    const Background& poset, const std::set<std::pair<std::string, std::string>>& raw);

/// Diagram universe over finite sets shaped by `scm`. Subobjects select
/// per-free-component subsets closed under the arrow maps.
Background instantiate_diagram_universe(std::string id, const Scheme& scm,
                                        const DiagramData& data);

Subobject empty_subobject(const Background& b);

/// Canonicalizes `raw` iff it satisfies the closure invariants of B's
/// kind; throws UnknownElement or ClosureViolation otherwise.
Subobject validate_subobject(const Background& b, const ElementMap& raw);

/// Non-throwing validity check used by enumeration.
bool is_valid_subobject(const Background& b, const ElementMap& raw);

/// Smallest valid subobject containing `raw` (adds forced elements:
/// endpoints, attachment vertices, reflexive pairs, transitive closure,
/// arrow images). Throws UnknownElement for keys outside B.
Subobject close_raw(const Background& b, const ElementMap& raw);

/// Least upper bound of S: componentwise union plus the kind's closure
/// completion (transitive closure for posets, nothing else).
Subobject union_all(const Background& b, const std::vector<Subobject>& s);

inline Subobject unite(const Background& b, const Subobject& s1, const Subobject& s2) {
    return union_all(b, {s1, s2});
}

constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Reads SURF_MAX_ENUM if set, else kDefaultEnumerationCap.
std::uint64_t enumeration_cap();

/// All subobjects of B exactly once, sorted by canonical form. The
/// candidate space is 2^element_count; throws TooLarge beyond `cap`.
std::vector<Subobject> enumerate_subobjects(const Background& b,
                                            std::uint64_t cap = enumeration_cap());

void require_same_background(const Subobject& s1, const Subobject& s2);
void require_background(const Background& b, const Subobject& s);

} // namespace surf
