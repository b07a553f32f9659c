#include <doctest.h>

#include <random>

#include "surf/cover.hpp"
#include "surf/error.hpp"

using namespace surf;

namespace {

// the running 2-coverability example: three 3-tentacle hyperedges over [5]
CoverInstance example_instance(int k) {
    return CoverInstance{3, 5, k, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}};
}

Subobject edges_with_flags(const Background& b, const std::vector<std::string>& edge_keys,
                           const std::vector<int>& flags) {
    ElementMap raw;
    for (const auto& e : edge_keys) insert_key(raw["E"], e);
    for (int j : flags) insert_key(raw["E"], flag_key(j));
    return close_raw(b, raw);
}

} // namespace

TEST_CASE("validate_instance") {
    CHECK_THROWS_AS(validate_instance(CoverInstance{0, 3, 1, {}}), Error);
    CHECK_THROWS_AS(validate_instance(CoverInstance{2, 1, 1, {}}), Error); // n < m
    CHECK_THROWS_AS(validate_instance(CoverInstance{2, 3, 4, {}}), Error); // k > n
    CHECK_THROWS_AS(validate_instance(CoverInstance{2, 3, 1, {{1, 2, 3}}}), Error); // too long
    CHECK_THROWS_AS(validate_instance(CoverInstance{2, 3, 1, {{4}}}), Error);       // outside [n]
    validate_instance(example_instance(2));
}

TEST_CASE("key scheme is unambiguous for n > 9") {
    CHECK(vertex_key(12) == "12");
    CHECK(flag_key(3) == "3!");
    CHECK(twin_key({1, 2, 3}, '*') == "1.2.3*");
    CHECK(twin_key({12, 3}, '+') == "12.3+");
    CHECK(twin_key({1, 23}, '+') != twin_key({12, 3}, '+'));
}

TEST_CASE("system sizes") {
    // n + 2*sum + n + sum_u |occurring(u)|; for m=1,n=2: 2 + 4 + 2 + 2
    CHECK(build_cover_system(1, 2).reactions.size() == 10);
    ReactionSystem a13 = build_cover_system(1, 3);
    CHECK(a13.reactions.size() == 3 + 6 + 3 + 3);
    CHECK(build_twin_sustain_system(1, 2).reactions.size() == 2);
}

TEST_CASE("two flags certify the running example") {
    ReactionSystem sys = build_cover_system(3, 5);
    const Background& b = sys.background;
    CoverRun run = cover_process(sys, example_instance(2), {2, 4});
    REQUIRE(run.trace.delta.size() == 3);

    const std::vector<std::string> h = {"1.2.3*", "1.3.4*", "1.4.5*"};
    CHECK(run.trace.delta[0] == edges_with_flags(b, h, {}));

    std::vector<std::string> step1 = h;
    step1.push_back("1.2.3+");
    CHECK(run.trace.delta[1] == edges_with_flags(b, step1, {2}));

    std::vector<std::string> step2 = step1;
    step2.push_back("1.3.4+");
    step2.push_back("1.4.5+");
    CHECK(run.trace.delta[2] == edges_with_flags(b, step2, {2, 4}));

    CHECK(run.verdict);
}

TEST_CASE("a single flag at 5 misses two hyperedges") {
    ReactionSystem sys = build_cover_system(3, 5);
    CoverRun run = cover_process(sys, example_instance(1), {5});
    CHECK_FALSE(run.verdict);
    // only the hyperedge through 5 got its twin
    CHECK(run.trace.delta.back().has("E", "1.4.5+"));
    CHECK_FALSE(run.trace.delta.back().has("E", "1.2.3+"));
}

TEST_CASE("combination validation") {
    ReactionSystem sys = build_cover_system(1, 3);
    CoverInstance inst{1, 3, 2, {{1}}};
    CHECK_THROWS_AS(cover_process(sys, inst, {2, 1}), Error); // not increasing
    CHECK_THROWS_AS(cover_process(sys, inst, {0}), Error);
    CHECK_THROWS_AS(cover_process(sys, inst, {4}), Error);
}

TEST_CASE("sweep results") {
    ReactionSystem sys = build_cover_system(3, 5);

    CoverResult two = is_k_coverable_serial(sys, example_instance(2));
    CHECK(two.coverable);
    CHECK(two.witness == std::vector<int>{1, 2}); // vertex 1 meets every hyperedge

    CoverResult one = is_k_coverable_serial(sys, example_instance(1));
    CHECK(one.coverable);
    CHECK(one.witness == std::vector<int>{1});

    CoverInstance no_common{3, 5, 1, {{2, 3}, {4, 5}}};
    CHECK_FALSE(is_k_coverable_serial(sys, no_common).coverable);
    no_common.k = 2;
    CHECK(is_k_coverable_serial(sys, no_common).coverable);
}

TEST_CASE("k = 0 is vacuous exactly for the empty sub-hypergraph") {
    ReactionSystem sys = build_cover_system(1, 2);
    CHECK(is_k_coverable_serial(sys, CoverInstance{1, 2, 0, {}}).coverable);
    CHECK_FALSE(is_k_coverable_serial(sys, CoverInstance{1, 2, 0, {{1}}}).coverable);
}

TEST_CASE("combinations are lexicographic and complete") {
    CHECK(combinations(4, 2) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(combinations(3, 0) == std::vector<std::vector<int>>{{}});
    CHECK(combinations(2, 3).empty());
    CHECK(combinations(6, 3).size() == 20);
}

TEST_CASE("engine agrees with the combinatorial oracle") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 12; ++round) {
        const int m = 1 + static_cast<int>(rng() % 2);
        const int n = m + static_cast<int>(rng() % (4 - m));
        CoverInstance inst{m, n, 0, {}};
        const int edge_count = static_cast<int>(rng() % 4);
        for (int i = 0; i < edge_count; ++i) {
            std::vector<int> u;
            const int len = 1 + static_cast<int>(rng() % m);
            for (int l = 0; l < len; ++l) u.push_back(1 + static_cast<int>(rng() % n));
            inst.hyperedges.push_back(std::move(u));
        }
        ReactionSystem sys = build_cover_system(m, n);
        for (int k = 0; k <= n; ++k) {
            inst.k = k;
            INFO("m=", m, " n=", n, " k=", k);
            CHECK(is_k_coverable_serial(sys, inst).coverable == brute_force_cover(inst));
        }
    }
}

TEST_CASE("serial and parallel sweeps agree") {
    ReactionSystem sys = build_cover_system(2, 4);
    std::mt19937_64 rng(9);
    for (int round = 0; round < 8; ++round) {
        CoverInstance inst{2, 4, static_cast<int>(rng() % 5), {}};
        const int edge_count = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < edge_count; ++i) {
            std::vector<int> u;
            const int len = 1 + static_cast<int>(rng() % 2);
            for (int l = 0; l < len; ++l) u.push_back(1 + static_cast<int>(rng() % 4));
            inst.hyperedges.push_back(std::move(u));
        }
        CoverResult serial = is_k_coverable_serial(sys, inst);
        CoverResult parallel = is_k_coverable_parallel(sys, inst);
        CHECK(serial.coverable == parallel.coverable);
        CHECK(serial.witness == parallel.witness);
        CHECK(is_k_coverable(sys, inst, true).coverable == serial.coverable);
    }
}

TEST_CASE("coverability is monotone in k") {
    ReactionSystem sys = build_cover_system(2, 4);
    CoverInstance inst{2, 4, 1, {{1, 2}, {3, 4}, {2, 3}}};
    bool prev = is_k_coverable_serial(sys, inst).coverable;
    for (int k = 2; k <= 4; ++k) {
        inst.k = k;
        bool now = is_k_coverable_serial(sys, inst).coverable;
        if (prev) CHECK(now);
        prev = now;
    }
    CHECK(prev); // flagging every vertex always covers
}

TEST_CASE("one extra parallel context flag changes nothing but the timing") {
    // supplying both flags in the first step covers in a single step
    ReactionSystem sys = build_cover_system(3, 5);
    const Background& b = sys.background;
    Subobject both = unite(b, flag_subobject(b, 2), flag_subobject(b, 4));
    ProcessTrace trace = run_process(sys, {both, empty_subobject(b)},
                                     instance_state(b, example_instance(2)));
    const Subobject& result = trace.delta.back();
    for (const char* twin : {"1.2.3+", "1.3.4+", "1.4.5+"}) CHECK(result.has("E", twin));
}
