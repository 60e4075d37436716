#include "support.hpp"

#include <twinwidth/errors.hpp>
#include <twinwidth/graph.hpp>
#include <twinwidth/trigraph.hpp>

#include <doctest.h>

#include <set>

using namespace twinwidth;
using testing::make_graph;

namespace {
    Graph house_graph()
    {
        return make_graph({"a", "b", "c", "d", "e"},
                          {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "e"}, {"c", "d"}, {"d", "e"}});
    }

    ContractionSequence house_sequence()
    {
        return {{"a", "b", "ab"}, {"d", "e", "de"}, {"c", "de", "cde"}, {"ab", "cde", "abcde"}};
    }

    std::set<std::string> id_set(const Trigraph& t, const Bitset& b)
    {
        std::set<std::string> out;
        for (std::size_t v = 0; v < t.order(); ++v)
            if (b[v])
                out.insert(t.id(v));
        return out;
    }
}

TEST_CASE("contracting a and b in the example graph")
{
    Trigraph t(house_graph());
    Trigraph c = contract(t, "a", "b");
    REQUIRE(c.order() == 4);
    std::size_t ab = c.index("ab");
    CHECK(id_set(c, c.black_neighbors(ab)) == std::set<std::string>{"c"});
    CHECK(id_set(c, c.red_neighbors(ab)) == std::set<std::string>{"d", "e"});
    CHECK(c.red_edge_count() == 2);
}

TEST_CASE("contracting twins adds no red edge")
{
    Graph g = make_graph({"u", "v", "x", "y"}, {{"u", "x"}, {"v", "x"}, {"u", "y"}, {"v", "y"}, {"x", "y"}});
    Trigraph c = contract(Trigraph(g), "u", "v");
    CHECK(c.red_edge_count() == 0);
    CHECK(c.black_edge_count() == 3);
}

TEST_CASE("contracting the ends of P3")
{
    // N(x) = N(z) = {y}: union minus {x,z} is {y}, symmetric difference empty
    Graph g = make_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    Trigraph c = contract(Trigraph(g), "x", "z");
    REQUIRE(c.order() == 2);
    CHECK(c.black(c.index("xz"), c.index("y")));
    CHECK(c.red_edge_count() == 0);

    // the centre and one end: N = {z}, symmetric difference {x,z}\{x,y} = {z}
    Trigraph d = contract(Trigraph(g), "x", "y");
    CHECK(d.red(d.index("xy"), d.index("z")));
    CHECK(d.black_edge_count() == 0);
}

TEST_CASE("contract rejects bad input and never creates red loops")
{
    Trigraph t(house_graph());
    CHECK_THROWS_AS(contract(t, "a", "a"), InvalidArgument);
    CHECK_THROWS_AS(contract(t, "a", "zz"), InvalidArgument);
    CHECK_THROWS_AS(t.contract("a", "b", "c"), InvalidArgument);

    std::mt19937 rng(11);
    for (int round = 0; round < 50; ++round) {
        Trigraph cur(testing::random_graph(7, 0.5, rng));
        while (cur.order() > 1) {
            std::uniform_int_distribution<std::size_t> pick(0, cur.order() - 1);
            std::size_t u = pick(rng), v = pick(rng);
            if (u == v)
                continue;
            std::size_t before = cur.order();
            cur = contract(cur, cur.id(u), cur.id(v));
            REQUIRE(cur.order() == before - 1);
            for (std::size_t x = 0; x < cur.order(); ++x) {
                CHECK_FALSE(cur.red(x, x));
                CHECK_FALSE(cur.black(x, x));
                CHECK((cur.black_neighbors(x) & cur.red_neighbors(x)).none());
            }
        }
    }
}

TEST_CASE("sequence width of the example")
{
    CHECK(sequence_width(house_graph(), house_sequence()) == 2);
    auto truncated = house_sequence();
    truncated.pop_back();
    CHECK_THROWS_AS(sequence_width(house_graph(), truncated), MalformedSequence);
    auto missing = house_sequence();
    missing[1].u = "nope";
    CHECK_THROWS_AS(sequence_width(house_graph(), missing), MalformedSequence);
    auto reused = house_sequence();
    reused[0].merged = "c";
    CHECK_THROWS_AS(sequence_width(house_graph(), reused), MalformedSequence);
}

TEST_CASE("sequence width on cliques and paths")
{
    Graph k5 = testing::complete_graph(5);
    ContractionSequence seq;
    std::string acc = "1";
    for (int i = 2; i <= 5; ++i) {
        seq.push_back({acc, std::to_string(i), acc + std::to_string(i)});
        acc += std::to_string(i);
    }
    CHECK(sequence_width(k5, seq) == 0);
    CHECK(testing::brute_twinwidth(testing::path_graph(4)) == 1);
}

TEST_CASE("sequence width is invariant under relabelling")
{
    std::mt19937 rng(5);
    Graph g = testing::random_graph(6, 0.5, rng);
    ContractionSequence seq;
    std::vector<std::string> ids = g.ids();
    Trigraph t(g);
    while (t.order() > 1) {
        std::string u = t.id(0), v = t.id(t.order() - 1);
        std::string m = merged_name(t.ids(), u, v);
        seq.push_back({u, v, m});
        t = t.contract(u, v, m);
    }
    std::size_t w = sequence_width(g, seq);

    Graph h;
    for (const auto& id : g.ids())
        h.add_vertex("r_" + id);
    for (auto [u, v] : g.edges())
        h.add_edge(u, v);
    ContractionSequence renamed;
    for (const auto& s : seq)
        renamed.push_back({"r_" + s.u, "r_" + s.v, "r_" + s.merged});
    // merged ids are concatenations; prefixing keeps them unique
    CHECK(sequence_width(h, renamed) == w);
}

TEST_CASE("sequence text round trip")
{
    auto seq = house_sequence();
    std::ostringstream out;
    write_sequence(out, seq);
    CHECK(parse_sequence(out.str()) == seq);
    CHECK(parse_sequence("# comment\n\nc a b ab\n").size() == 1);
    CHECK_THROWS_AS(parse_sequence("c a b\n"), ParseError);
    CHECK_THROWS_AS(parse_sequence("x a b c\n"), ParseError);
}

TEST_CASE("permutation graphs")
{
    CHECK(permutation_graph(Permutation({2, 1})).edge_count() == 1);
    CHECK(permutation_graph(Permutation::identity(5)).edge_count() == 0);
    Graph g = permutation_graph(Permutation({3, 1, 4, 2}));
    // inversions i<j with pi(i) > pi(j): (1,2), (1,4), (3,4)
    CHECK(g.sorted_edges() == std::vector<VertexPair>{{"1", "2"}, {"1", "4"}, {"3", "4"}});
    CHECK(is_isomorphic(g, testing::path_graph(4)));
    for (std::size_t p = 1; p <= 5; ++p)
        for (const auto& pi : Permutation::all(p))
            CHECK(is_isomorphic(permutation_graph(pi), permutation_graph(pi.inverse())));
}

TEST_CASE("twins and twin-free cores")
{
    Graph k3 = testing::complete_graph(3);
    CHECK(find_twins(k3).size() == 3);
    CHECK(twin_free_core(k3).order() == 1);

    Graph p4 = testing::path_graph(4);
    CHECK(find_twins(p4).empty());
    CHECK(same_labelled_graph(twin_free_core(p4), p4));

    Graph star = make_graph({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
    CHECK(find_twins(star).size() == 3);
    // removing the twin leaves leaves K2, whose ends are adjacent twins again
    Graph k2 = make_graph({"c", "x"}, {{"c", "x"}});
    CHECK(find_twins(k2).size() == 1);
    Graph core = twin_free_core(star);
    CHECK(core.order() == 1);
    CHECK(is_twin_free(core));
}

TEST_CASE("isomorphism")
{
    Graph p4 = testing::path_graph(4);
    Graph c4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    CHECK(is_isomorphic(c4, c4));
    CHECK_FALSE(is_isomorphic(c4, p4));
    CHECK(is_isomorphic(permutation_graph(Permutation({3, 1, 4, 2})), p4));

    std::mt19937 rng(3);
    for (int round = 0; round < 30; ++round) {
        Graph g = testing::random_graph(8, 0.4, rng);
        Graph h = testing::relabel(g, rng);
        auto map = find_isomorphism(g, h);
        REQUIRE(map);
        for (auto [u, v] : g.edges())
            CHECK(h.adjacent((*map)[u], (*map)[v]));
        CHECK(g.edge_count() == h.edge_count());
    }

    Graph big = testing::path_graph(13);
    CHECK_THROWS_AS(is_isomorphic(big, big), CapExceeded);
    CHECK(is_isomorphic(big, big, {.cap = 13}));
}

TEST_CASE("induced subgraph search")
{
    Graph p4 = testing::path_graph(4);
    std::vector<std::size_t> emb;
    CHECK(contains_induced(p4, testing::path_graph(3), &emb));
    CHECK(emb.size() == 3);
    CHECK_FALSE(contains_induced(p4, testing::complete_graph(3)));
}

TEST_CASE("graph text format")
{
    Graph g = house_graph();
    std::string text = format_graph(g, "house");
    CHECK(text.rfind("graph house 5 6\n", 0) == 0);
    std::string name;
    Graph back = parse_graph(text, &name);
    CHECK(name == "house");
    CHECK(same_labelled_graph(g, back));
    CHECK(format_graph(back, "house") == text);
    CHECK_THROWS_AS(parse_graph("graph g 2 1\nv a\nv b\ne a c\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph g 2 1\nv a\nv b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph g 1 0\nv a\nv a\n"), ParseError);
}
