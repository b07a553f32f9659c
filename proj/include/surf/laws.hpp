#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surf/background.hpp"

namespace surf {

/// One algebraic law of the subobject lattice, checked on randomized
/// backgrounds and subobjects.
struct LawResult {
    std::string law;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure; // rendering of the first failing case, if any
};

struct LawReport {
    std::vector<LawResult> results;
    bool all_passed() const;
};

/// Runs the lattice law suite (absorption, empty-neutrality,
/// union-with-empty, monotonicity, commutativity/associativity/
/// idempotence, LUB/GLB against enumeration on small backgrounds)
/// against freshly generated backgrounds of the given kind.
LawReport run_law_suite(Kind kind, std::size_t cases, std::uint64_t seed);

/// Same suite over a registry scheme's diagram universe.
LawReport run_law_suite_scheme(const std::string& scheme_name, std::size_t cases,
                               std::uint64_t seed);

/// Core laws only (no enumeration), for a fixed background.
LawReport run_law_suite_on(const Background& b, std::size_t cases, std::uint64_t seed);

} // namespace surf
