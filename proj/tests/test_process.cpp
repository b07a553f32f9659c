#include <doctest.h>

#include "surf/error.hpp"
#include "surf/process.hpp"
#include "surf/random.hpp"

using namespace surf;

namespace {

Background set_ab() {
    return construct_background("ab", Kind::Set, SetCarrier{{"a", "b"}});
}

Subobject elems(const Background& b, KeySet keys) {
    return validate_subobject(b, {{"elems", std::move(keys)}});
}

ReactionSystem flip_flop(const Background& b) {
    return make_system(b, {make_uninhibited_reaction(b, "ab", elems(b, {"a"}), elems(b, {"b"})),
                           make_uninhibited_reaction(b, "ba", elems(b, {"b"}), elems(b, {"a"}))});
}

} // namespace

TEST_CASE("run_process basics") {
    Background b = set_ab();
    ReactionSystem sys = flip_flop(b);
    Subobject mpt = empty_subobject(b);

    CHECK_THROWS_AS(run_process(sys, {mpt}, elems(b, {"a"})), Error);

    ProcessTrace trace = run_process(sys, {mpt, mpt, mpt, mpt}, elems(b, {"a"}));
    CHECK(trace.steps() == 3);
    CHECK(trace.delta ==
          std::vector<Subobject>{elems(b, {"a"}), elems(b, {"b"}), elems(b, {"a"}),
                                 elems(b, {"b"})});
    CHECK(trace.enabled == std::vector<std::vector<std::string>>{{"ab"}, {"ba"}, {"ab"}});
    CHECK(replay_matches(sys, trace));
    CHECK(check_context_independent(b, trace));
    // tau equals delta for context-independent processes
    CHECK(state_sequence(b, trace) == trace.delta);
}

TEST_CASE("contexts drive the process") {
    Background b = set_ab();
    ReactionSystem sys = flip_flop(b);
    Subobject mpt = empty_subobject(b);
    // inject a after the state has died out
    ReactionSystem decay =
        make_system(b, {make_uninhibited_reaction(b, "ab", elems(b, {"a"}), elems(b, {"b"}))});
    ProcessTrace trace =
        run_process(decay, {mpt, elems(b, {"a"}), mpt, mpt}, elems(b, {"a"}));
    // d1 = res({a}) = {b}; t1 = {a,b}; d2 = res({a,b}) = {b}; t2 = {b}; d3 = res({b}) = {}
    CHECK(trace.delta == std::vector<Subobject>{elems(b, {"a"}), elems(b, {"b"}),
                                                elems(b, {"b"}), mpt});
    CHECK_FALSE(check_context_independent(b, trace));
    CHECK(state_sequence(b, trace)[1] == elems(b, {"a", "b"}));
}

TEST_CASE("detect_cycle on a flip-flop trajectory") {
    Background b = set_ab();
    ReactionSystem sys = flip_flop(b);
    Subobject mpt = empty_subobject(b);
    ProcessTrace trace =
        run_process(sys, std::vector<Subobject>(8, mpt), elems(b, {"a"}));
    auto tau = state_sequence(b, trace);
    // tau = a b a b a b a b
    auto info = detect_cycle(tau);
    REQUIRE(info.has_value());
    CHECK(info->i0 == 0);
    CHECK(info->j0 == 2);
    CHECK(info->cycle_length == 2);
    CHECK(info->prefix_length == 1);
    CHECK(info->repetitions == 3);
    CHECK(info->residual == std::vector<Subobject>{elems(b, {"b"})});
    CHECK(info->residual_is_initial_section);
    CHECK(reassemble(tau, *info) == tau);
}

TEST_CASE("detect_cycle returns nothing for repetition-free sequences") {
    Background b = construct_background("abc", Kind::Set, SetCarrier{{"a", "b", "c"}});
    auto e = [&](KeySet k) { return validate_subobject(b, {{"elems", std::move(k)}}); };
    CHECK_FALSE(detect_cycle({e({"a"}), e({"b"}), e({"c"})}).has_value());
}

TEST_CASE("detect_cycle picks the first repeat with a proper prefix") {
    Background b = construct_background("abc", Kind::Set, SetCarrier{{"a", "b", "c"}});
    auto e = [&](KeySet k) { return validate_subobject(b, {{"elems", std::move(k)}}); };
    // a b c b c b — repeat of b at index 3
    std::vector<Subobject> tau = {e({"a"}), e({"b"}), e({"c"}), e({"b"}), e({"c"}), e({"b"})};
    auto info = detect_cycle(tau);
    REQUIRE(info.has_value());
    CHECK(info->i0 == 1);
    CHECK(info->j0 == 3);
    CHECK(info->prefix_length == 2);
    CHECK(info->cycle_length == 2);
    CHECK(info->repetitions == 2);
    CHECK(info->residual.empty());
    CHECK(info->residual_is_initial_section);
    CHECK(reassemble(tau, *info) == tau);
}

TEST_CASE("deterministic trajectories always cycle within 2^|B|+1 states") {
    Rng rng(23);
    for (int round = 0; round < 50; ++round) {
        Background b = random_background(Kind::Set, rng, 4);
        ReactionSystem sys = random_system(b, rng, 5);
        const std::size_t horizon = (std::size_t{1} << b.element_count()) + 1;
        std::vector<Subobject> gamma(horizon + 1, empty_subobject(b));
        ProcessTrace trace = run_process(sys, gamma, random_subobject(b, rng));
        auto tau = state_sequence(b, trace);
        auto info = detect_cycle(tau);
        REQUIRE(info.has_value());
        CHECK(info->j0 <= horizon);
        CHECK(reassemble(tau, *info) == tau);
        CHECK(info->residual_is_initial_section);
    }
}

TEST_CASE("transition graph of the flip-flop") {
    Background b = set_ab();
    ReactionSystem sys = flip_flop(b);
    auto graph = build_transition_graph(sys);
    CHECK(graph.size() == 4);
    CHECK(graph.at(elems(b, {"a"})) == elems(b, {"b"}));
    CHECK(graph.at(elems(b, {"b"})) == elems(b, {"a"}));
    CHECK(graph.at(elems(b, {"a", "b"})) == elems(b, {"a", "b"}));
    CHECK(graph.at(empty_subobject(b)) == empty_subobject(b));

    std::string dot = transition_graph_dot(sys, graph);
    CHECK(dot.find("digraph transitions") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
