#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace surf {

/// Sorted, duplicate-free list of element keys within one component.
using KeySet = std::vector<std::string>;

/// Per-component element sets; every component of the owning background
/// is present (possibly empty) so equality is plain structural equality.
using ElementMap = std::map<std::string, KeySet>;

/// Canonical representative of a subobject of a fixed background: the
/// image element sets of the unique inclusion representative.
struct Subobject {
    std::string background_id;
    ElementMap elements;

    bool operator==(const Subobject&) const = default;
    auto operator<=>(const Subobject&) const = default;

    bool has(const std::string& component, const std::string& key) const;
    const KeySet& part(const std::string& component) const;
    std::size_t size() const;
    bool empty() const;
};

bool contains(const KeySet& set, const std::string& key);
void insert_key(KeySet& set, const std::string& key);
KeySet intersect_keys(const KeySet& a, const KeySet& b);
KeySet union_keys(const KeySet& a, const KeySet& b);
bool subset_keys(const KeySet& a, const KeySet& b);

/// Componentwise subset test. Both subobjects must belong to the same
/// background.
bool is_included(const Subobject& s1, const Subobject& s2);

/// Componentwise intersection; closed for every shipped universe kind,
/// and the greatest lower bound in the subobject lattice.
Subobject intersect(const Subobject& s1, const Subobject& s2);

/// Compact one-line rendering, e.g. "{V: 1 2; E: e1}".
std::string to_string(const Subobject& s);

} // namespace surf
