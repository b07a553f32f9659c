#include "surf/laws.hpp"

#include <functional>

#include "surf/random.hpp"

namespace surf {

bool LawReport::all_passed() const {
    for (const auto& r : results)
        if (r.failures) return false;
    return true;
}

namespace {

struct Case {
    const Background& b;
    Rng& rng;
};

using Law = std::function<bool(Case&)>;

// Properties of the subobject lattice checked on random data.
std::vector<std::pair<std::string, Law>> lattice_laws() {
    return {
        {"absorption-intersect", // p0 <= p implies p /\ p0 = p0
         [](Case& c) {
             Subobject p = random_subobject(c.b, c.rng);
             Subobject p0 = random_subobject_within(c.b, p, c.rng);
             return intersect(p, p0) == p0;
         }},
        {"absorption-union", // p0 <= p implies p \/ p0 = p
         [](Case& c) {
             Subobject p = random_subobject(c.b, c.rng);
             Subobject p0 = random_subobject_within(c.b, p, c.rng);
             return unite(c.b, p, p0) == p;
         }},
        {"empty-neutrality",
         [](Case& c) {
             Subobject p = random_subobject(c.b, c.rng);
             Subobject mpt = empty_subobject(c.b);
             return intersect(p, mpt) == mpt && unite(c.b, p, mpt) == p &&
                    is_included(mpt, p);
         }},
        {"union-with-empty", // union(S u {0}) = union(S)
         [](Case& c) {
             std::vector<Subobject> s;
             for (int i = 0; i < 3; ++i) s.push_back(random_subobject(c.b, c.rng));
             Subobject without = union_all(c.b, s);
             s.push_back(empty_subobject(c.b));
             return union_all(c.b, s) == without;
         }},
        {"union-monotonicity", // S0 <= S implies union(S0) <= union(S)
         [](Case& c) {
             std::vector<Subobject> s0, s;
             for (int i = 0; i < 4; ++i) {
                 Subobject p = random_subobject(c.b, c.rng);
                 if (i < 2) s0.push_back(p);
                 s.push_back(std::move(p));
             }
             return is_included(union_all(c.b, s0), union_all(c.b, s));
         }},
        {"union-special-cases", // union(empty set) = 0_B, union({p}) = p
         [](Case& c) {
             Subobject p = random_subobject(c.b, c.rng);
             return union_all(c.b, {}) == empty_subobject(c.b) && union_all(c.b, {p}) == p;
         }},
        {"intersect-commutative-idempotent",
         [](Case& c) {
             Subobject p = random_subobject(c.b, c.rng);
             Subobject q = random_subobject(c.b, c.rng);
             return intersect(p, q) == intersect(q, p) && intersect(p, p) == p;
         }},
        {"union-commutative-associative",
         [](Case& c) {
             Subobject p = random_subobject(c.b, c.rng);
             Subobject q = random_subobject(c.b, c.rng);
             Subobject r = random_subobject(c.b, c.rng);
             return unite(c.b, p, q) == unite(c.b, q, p) &&
                    unite(c.b, unite(c.b, p, q), r) == unite(c.b, p, unite(c.b, q, r)) &&
                    unite(c.b, p, p) == p;
         }},
        {"validate-idempotent", // canonical representatives re-validate to themselves
         [](Case& c) {
             Subobject p = random_subobject(c.b, c.rng);
             return validate_subobject(c.b, p.elements) == p;
         }},
    };
}

LawReport run_suite(const std::function<Background(Rng&)>& make_background, std::size_t cases,
                    std::uint64_t seed) {
    LawReport report;
    for (const auto& [name, law] : lattice_laws()) {
        LawResult result;
        result.law = name;
        Rng rng(seed); // each law sees the same stream of backgrounds
        for (std::size_t i = 0; i < cases; ++i) {
            Background b = make_background(rng);
            Case c{b, rng};
            ++result.cases;
            if (!law(c)) {
                ++result.failures;
                if (result.first_failure.empty())
                    result.first_failure = "background '" + b.id + "', case " + std::to_string(i);
            }
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

} // namespace

LawReport run_law_suite(Kind kind, std::size_t cases, std::uint64_t seed) {
    return run_suite([kind](Rng& rng) { return random_background(kind, rng); }, cases, seed);
}

LawReport run_law_suite_scheme(const std::string& scheme_name, std::size_t cases,
                               std::uint64_t seed) {
    return run_suite([&](Rng& rng) { return random_diagram_background(scheme_name, rng); }, cases,
                     seed);
}

LawReport run_law_suite_on(const Background& b, std::size_t cases, std::uint64_t seed) {
    return run_suite([&](Rng&) { return b; }, cases, seed);
}

} // namespace surf
