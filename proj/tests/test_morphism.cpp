#include <doctest.h>

#include "surf/cover.hpp"
#include "surf/error.hpp"
#include "surf/morphism.hpp"
#include "surf/random.hpp"

using namespace surf;

namespace {

Subobject elems(const Background& b, KeySet keys) {
    return validate_subobject(b, {{"elems", std::move(keys)}});
}

} // namespace

TEST_CASE("identity and inclusion morphisms are monos") {
    Background small = build_cover_background(1, 3);
    Background large = build_cover_background(1, 4);

    check_background_mono(identity_morphism(small), small, small);
    BackgroundMorphism inc = inclusion_morphism(small, large);
    MorphismReport report = check_background_morphism(inc, small, large);
    CHECK(report.structure_ok);
    CHECK(report.mono);

    // nothing of the larger background includes backwards
    CHECK_THROWS_AS(inclusion_morphism(large, small), Error);
}

TEST_CASE("non-injective maps are morphisms but not monos") {
    Background ab = construct_background("ab", Kind::Set, SetCarrier{{"a", "b"}});
    Background c = construct_background("c", Kind::Set, SetCarrier{{"c"}});
    BackgroundMorphism collapse{"ab", "c", {{"elems", {{"a", "c"}, {"b", "c"}}}}};
    MorphismReport report = check_background_morphism(collapse, ab, c);
    CHECK(report.structure_ok);
    CHECK_FALSE(report.mono);
    CHECK(report.witness == "c");
    try {
        check_background_mono(collapse, ab, c);
        FAIL("expected NotInjective");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInjective);
    }
}

TEST_CASE("structure violations carry a witness") {
    GraphCarrier gc;
    gc.vertices = {"a", "b"};
    gc.alphabet = {"x"};
    gc.edges["e"] = GraphEdge{"a", "b", "x"};
    Background g1 = construct_background("g1", Kind::Graph, gc);

    GraphCarrier hc;
    hc.vertices = {"u", "v"};
    hc.alphabet = {"x"};
    hc.edges["f"] = GraphEdge{"u", "v", "x"};
    Background g2 = construct_background("g2", Kind::Graph, hc);

    // sends e to f but swaps the endpoints
    BackgroundMorphism bad{"g1", "g2",
                           {{"V", {{"a", "v"}, {"b", "u"}}}, {"E", {{"e", "f"}}}}};
    try {
        check_background_mono(bad, g1, g2);
        FAIL("expected NotStructurePreserving");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotStructurePreserving);
        CHECK(e.witness() == "e");
    }
}

TEST_CASE("apply_morphism maps subobjects elementwise") {
    Background small = build_cover_background(1, 3);
    Background large = build_cover_background(1, 4);
    BackgroundMorphism inc = inclusion_morphism(small, large);
    Subobject s = edge_closure(small, twin_key({2}, '*'));
    Subobject image = apply_morphism(inc, small, large, s);
    CHECK(image == edge_closure(large, twin_key({2}, '*')));
    CHECK_THROWS_AS(apply_morphism(inc, small, large, empty_subobject(large)), Error);
}

TEST_CASE("mono images commute with union and intersection") {
    Rng rng(31);
    for (int round = 0; round < 25; ++round) {
        Background small = random_background(Kind::Set, rng, 3);
        // embed into a strictly larger set background
        SetCarrier extended{small.all_elements().at("elems")};
        extended.elements.push_back("zz_extra");
        Background large = construct_background(small.id + "_big", Kind::Set, extended);
        BackgroundMorphism inc = inclusion_morphism(small, large);

        Subobject p = random_subobject(small, rng);
        Subobject q = random_subobject(small, rng);
        auto f = [&](const Subobject& s) { return apply_morphism(inc, small, large, s); };
        CHECK(f(unite(small, p, q)) == unite(large, f(p), f(q)));
        CHECK(f(intersect(p, q)) == intersect(f(p), f(q)));
    }
}

TEST_CASE("map_reaction requires a mono") {
    Background ab = construct_background("ab", Kind::Set, SetCarrier{{"a", "b"}});
    Background c = construct_background("c", Kind::Set, SetCarrier{{"c"}});
    Reaction r = make_uninhibited_reaction(ab, "r", elems(ab, {"a"}), elems(ab, {"b"}));
    BackgroundMorphism collapse{"ab", "c", {{"elems", {{"a", "c"}, {"b", "c"}}}}};
    try {
        map_reaction(collapse, ab, c, r);
        FAIL("expected MonoRequired");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MonoRequired);
    }
}

TEST_CASE("induced cover system includes into the larger one") {
    ReactionSystem small = build_cover_system(1, 3);
    ReactionSystem large = build_cover_system(1, 4);
    BackgroundMorphism inc = inclusion_morphism(small.background, large.background);

    ReactionSystem image = induced_system(inc, small, large.background);
    CHECK(image.reactions.size() == small.reactions.size());
    CHECK(is_rs_morphism(inc, small, large));

    ReactionSystem taller = build_cover_system(2, 3);
    BackgroundMorphism inc2 = inclusion_morphism(small.background, taller.background);
    CHECK(is_rs_morphism(inc2, small, taller));
}

TEST_CASE("is_rs_morphism detects missing targets") {
    Background ab = construct_background("ab", Kind::Set, SetCarrier{{"a", "b"}});
    Background abc = construct_background("abc", Kind::Set, SetCarrier{{"a", "b", "c"}});
    auto e3 = [&](KeySet k) { return validate_subobject(abc, {{"elems", std::move(k)}}); };
    ReactionSystem src = make_system(
        ab, {make_uninhibited_reaction(ab, "r", elems(ab, {"a"}), elems(ab, {"b"}))});
    ReactionSystem tgt_without = make_system(
        abc, {make_uninhibited_reaction(abc, "x", e3({"b"}), e3({"c"}))});
    ReactionSystem tgt_with = make_system(
        abc, {make_uninhibited_reaction(abc, "x", e3({"b"}), e3({"c"})),
              make_uninhibited_reaction(abc, "y", e3({"a"}), e3({"b"}))});
    BackgroundMorphism inc = inclusion_morphism(ab, abc);
    CHECK_FALSE(is_rs_morphism(inc, src, tgt_without));
    CHECK(is_rs_morphism(inc, src, tgt_with)); // ids differ, triples match
}

TEST_CASE("is_strong: exhaustive positive case") {
    Background ab = construct_background("ab", Kind::Set, SetCarrier{{"a", "b"}});
    Background abc = construct_background("abc", Kind::Set, SetCarrier{{"a", "b", "c"}});
    auto e3 = [&](KeySet k) { return validate_subobject(abc, {{"elems", std::move(k)}}); };
    ReactionSystem src = make_system(
        ab, {make_uninhibited_reaction(ab, "r", elems(ab, {"a"}), elems(ab, {"b"}))});
    ReactionSystem tgt = make_system(
        abc, {make_uninhibited_reaction(abc, "r", e3({"a"}), e3({"b"})),
              make_uninhibited_reaction(abc, "s", e3({"c"}), e3({"c"}))});
    BackgroundMorphism inc = inclusion_morphism(ab, abc);
    StrongReport report = is_strong(inc, src, tgt, ExhaustiveMode{});
    CHECK(report.strong);
    CHECK(report.states_checked == 4);
}

TEST_CASE("is_strong: constructed counterexample with witness") {
    Background a = construct_background("a", Kind::Set, SetCarrier{{"a"}});
    Background ab = construct_background("ab", Kind::Set, SetCarrier{{"a", "b"}});
    auto e1 = [&](KeySet k) { return validate_subobject(a, {{"elems", std::move(k)}}); };
    ReactionSystem src =
        make_system(a, {make_uninhibited_reaction(a, "r", e1({"a"}), e1({"a"}))});
    // the target fires an extra product on the same state
    ReactionSystem tgt = make_system(
        ab, {make_uninhibited_reaction(ab, "r", elems(ab, {"a"}), elems(ab, {"a"})),
             make_uninhibited_reaction(ab, "s", elems(ab, {"a"}), elems(ab, {"b"}))});
    BackgroundMorphism inc = inclusion_morphism(a, ab);
    StrongReport report = is_strong(inc, src, tgt, ExhaustiveMode{});
    CHECK_FALSE(report.strong);
    REQUIRE(report.witness.has_value());
    CHECK(*report.witness == e1({"a"}));
}

TEST_CASE("is_strong: cover inclusions sampled") {
    ReactionSystem a13 = build_cover_system(1, 3);
    ReactionSystem a14 = build_cover_system(1, 4);
    BackgroundMorphism inc = inclusion_morphism(a13.background, a14.background);
    StrongReport report = is_strong(inc, a13, a14, SampleMode{50, 99});
    CHECK(report.strong);
    CHECK(report.states_checked == 50);
}

TEST_CASE("is_strong refuses non-morphisms") {
    Background ab = construct_background("ab", Kind::Set, SetCarrier{{"a", "b"}});
    Background abc = construct_background("abc", Kind::Set, SetCarrier{{"a", "b", "c"}});
    auto e3 = [&](KeySet k) { return validate_subobject(abc, {{"elems", std::move(k)}}); };
    ReactionSystem src = make_system(
        ab, {make_uninhibited_reaction(ab, "r", elems(ab, {"a"}), elems(ab, {"b"}))});
    ReactionSystem tgt = make_system(
        abc, {make_uninhibited_reaction(abc, "x", e3({"b"}), e3({"c"}))});
    BackgroundMorphism inc = inclusion_morphism(ab, abc);
    CHECK_THROWS_AS(is_strong(inc, src, tgt, ExhaustiveMode{}), Error);
}
