#include "surf/subobject.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "surf/error.hpp"

namespace surf {

bool contains(const KeySet& set, const std::string& key) {
    return std::binary_search(set.begin(), set.end(), key);
}

void insert_key(KeySet& set, const std::string& key) {
    auto it = std::lower_bound(set.begin(), set.end(), key);
    if (it == set.end() || *it != key) set.insert(it, key);
}

KeySet intersect_keys(const KeySet& a, const KeySet& b) {
    KeySet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

KeySet union_keys(const KeySet& a, const KeySet& b) {
    KeySet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_keys(const KeySet& a, const KeySet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool Subobject::has(const std::string& component, const std::string& key) const {
    auto it = elements.find(component);
    return it != elements.end() && contains(it->second, key);
}

const KeySet& Subobject::part(const std::string& component) const {
    static const KeySet empty;
    auto it = elements.find(component);
    return it == elements.end() ? empty : it->second;
}

std::size_t Subobject::size() const {
    return std::accumulate(elements.begin(), elements.end(), std::size_t{0},
                           [](std::size_t n, const auto& kv) { return n + kv.second.size(); });
}

bool Subobject::empty() const { return size() == 0; }

void require_same_background(const Subobject& s1, const Subobject& s2) {
    if (s1.background_id != s2.background_id)
        throw Error(ErrorCode::BackgroundMismatch,
                    "subobjects of '" + s1.background_id + "' and '" + s2.background_id + "'");
}

bool is_included(const Subobject& s1, const Subobject& s2) {
    require_same_background(s1, s2);
    for (const auto& [component, keys] : s1.elements)
        if (!subset_keys(keys, s2.part(component))) return false;
    return true;
}

Subobject intersect(const Subobject& s1, const Subobject& s2) {
    require_same_background(s1, s2);
    Subobject out{s1.background_id, {}};
    for (const auto& [component, keys] : s1.elements)
        out.elements[component] = intersect_keys(keys, s2.part(component));
    return out;
}

std::string to_string(const Subobject& s) {
    std::ostringstream os;
    os << "{";
    bool first_component = true;
    for (const auto& [component, keys] : s.elements) {
        if (keys.empty()) continue;
        if (!first_component) os << "; ";
        first_component = false;
        os << component << ":";
        for (const auto& key : keys) os << " " << key;
    }
    os << "}";
    return os.str();
}

} // namespace surf
