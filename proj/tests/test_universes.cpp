#include <doctest.h>

#include "surf/background.hpp"
#include "surf/cover.hpp"
#include "surf/error.hpp"

using namespace surf;

TEST_CASE("graph carrier validation") {
    GraphCarrier c;
    c.vertices = {"a"};
    c.alphabet = {"x"};
    c.edges["e"] = GraphEdge{"a", "b", "x"};
    CHECK_THROWS_AS(construct_background("g", Kind::Graph, c), Error);

    c.edges["e"] = GraphEdge{"a", "a", "y"}; // label outside alphabet
    CHECK_THROWS_AS(construct_background("g", Kind::Graph, c), Error);

    c.edges["e"] = GraphEdge{"a", "a", "x"};
    Background g = construct_background("g", Kind::Graph, c);
    CHECK(g.components() == std::vector<std::string>{"E", "V"});
    CHECK(g.element_count() == 2);
}

TEST_CASE("hypergraph carrier validation") {
    HypergraphCarrier c;
    c.vertices = {"a", "b"};
    c.alphabet = {"x"};
    c.edges["e1"] = Hyperedge{{"a", "b", "a"}, "x"}; // repetition allowed
    Background h = construct_background("h", Kind::Hypergraph, c);
    CHECK(h.element_count() == 3);

    // attachments must hit existing vertices
    c.edges["e2"] = Hyperedge{{"z"}, "x"};
    CHECK_THROWS_AS(construct_background("h", Kind::Hypergraph, c), Error);
    c.edges.erase("e2");

    // parallel edges with the same attachment and label are distinct elements
    c.edges["e2"] = Hyperedge{{"a", "b", "a"}, "x"};
    CHECK(construct_background("h", Kind::Hypergraph, c).element_count() == 4);
}

TEST_CASE("hyperedge selection forces its attachment vertices") {
    HypergraphCarrier c;
    c.vertices = {"a", "b", "c"};
    c.alphabet = {"x"};
    c.edges["e"] = Hyperedge{{"a", "c"}, "x"};
    Background h = construct_background("h", Kind::Hypergraph, c);
    CHECK_FALSE(is_valid_subobject(h, {{"V", {"a"}}, {"E", {"e"}}}));
    CHECK(is_valid_subobject(h, {{"V", {"a", "c"}}, {"E", {"e"}}}));
    Subobject closed = close_raw(h, {{"E", {"e"}}});
    CHECK(closed.part("V") == KeySet{"a", "c"});
}

TEST_CASE("poset carrier must be a partial order") {
    PosetCarrier c;
    c.elements = {"a", "b"};

    c.relation = {{"a", "a"}, {"a", "b"}}; // not reflexive at b
    CHECK_THROWS_AS(construct_background("p", Kind::Poset, c), Error);

    c.relation = {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}}; // not anti-symmetric
    try {
        construct_background("p", Kind::Poset, c);
        FAIL("expected NotAPartialOrder");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAPartialOrder);
        CHECK(std::string(e.what()).find("a") != std::string::npos);
    }

    c.elements = {"a", "b", "c"};
    c.relation = {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}}; // not transitive
    CHECK_THROWS_AS(construct_background("p", Kind::Poset, c), Error);

    c.relation.insert({"a", "c"});
    CHECK(construct_background("p", Kind::Poset, c).element_count() == 9);
}

TEST_CASE("poset element keys must not contain the pair separator") {
    PosetCarrier c;
    c.elements = {"a|b"};
    c.relation = {{"a|b", "a|b"}};
    CHECK_THROWS_AS(construct_background("p", Kind::Poset, c), Error);
}

TEST_CASE("poset_closure is the least transitive completion") {
    PosetCarrier c;
    c.elements = {"a", "b", "c"};
    c.relation = {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}, {"a", "c"}};
    Background p = construct_background("p", Kind::Poset, c);

    std::set<std::pair<std::string, std::string>> raw = {
        {"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}};
    auto closed = poset_closure(p, raw);
    CHECK(closed.count({"a", "c"}) == 1);
    CHECK(closed.size() == 6);
    CHECK(poset_closure(p, closed) == closed); // idempotent
}

TEST_CASE("pair_key round trip") {
    CHECK(pair_key("a", "b") == "a|b");
    CHECK(split_pair_key("a|b") == std::pair<std::string, std::string>{"a", "b"});
}

TEST_CASE("cover background sizes") {
    // 2 * (5 + 25 + 125) twin hyperedges over 5 vertices
    Background ch2 = build_ch2(3, 5);
    CHECK(ch2.all_elements().at("V").size() == 5);
    CHECK(ch2.all_elements().at("E").size() == 310);

    Background b = build_cover_background(3, 5);
    CHECK(b.all_elements().at("V").size() == 5);
    CHECK(b.all_elements().at("E").size() == 315); // 310 twins + 5 flags
}

TEST_CASE("duplicate edge ids rejected") {
    // std::map cannot hold duplicates, but vertex lists can
    SetCarrier c{{"a", "a"}};
    CHECK_THROWS_AS(construct_background("s", Kind::Set, c), Error);
}
