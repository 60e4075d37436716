#include "fo_oracles.hpp"
#include "support.hpp"

#include <twinwidth/errors.hpp>
#include <twinwidth/fologic.hpp>
#include <twinwidth/obstruction.hpp>

#include <doctest.h>

using namespace twinwidth;

namespace {
    // brute-force scan: is the submatrix on these rows and columns P_pi?
    bool is_perm_submatrix(const TriMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols, const Permutation& pi)
    {
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) {
                Entry want = static_cast<int>(b + 1) == pi(static_cast<int>(a + 1)) ? Entry::One : Entry::Zero;
                if (m.at(rows[a], cols[b]) != want)
                    return false;
            }
        return true;
    }

    IntervalLikeRep condensed_grid(std::size_t p)
    {
        return condense(rep_from_intervals(planted_grid_model(planted_grid_size(p)), RepKind::Interval));
    }
}

TEST_CASE("planted grids carry the required minors")
{
    for (std::size_t p = 1; p <= 3; ++p) {
        IntervalLikeRep rep = rep_from_intervals(planted_grid_model(planted_grid_size(p)), RepKind::Interval);
        CHECK(find_mixed_minor(build_ilmatrix(rep).matrix, 2 * p + 1));
        CHECK(is_twin_free(decode(rep)));
        IntervalLikeRep c = condense(rep);
        CHECK(is_condensed(c));
        CHECK(find_mixed_minor(build_ilmatrix(c).matrix, 2 * p + 1));
        CHECK(is_twin_free(decode(c)));
    }
}

TEST_CASE("permutation submatrices")
{
    for (std::size_t p = 1; p <= 3; ++p)
        for (const auto& pi : Permutation::all(p))
            for (RepKind kind : {RepKind::Interval, RepKind::Overlap}) {
                IlMatrix il =
                    build_ilmatrix(rep_from_intervals(planted_grid_model(planted_grid_size(p)), kind));
                PermSubmatrixWitness w = extract_perm_submatrix(il, pi);
                CHECK(check_perm_submatrix(il, w));
                CHECK(is_perm_submatrix(il.matrix, w.rows, w.cols, pi));
                std::set<std::size_t> lefts;
                for (auto r : w.rows)
                    lefts.insert(il.row_ends[r].first);
                CHECK(lefts.size() == p);
                CHECK(verify_mixed_minor(il.matrix, w.minor));
            }

    // p = 1: the one lies in zone (1, 2) of a 3-mixed minor
    IlMatrix il = build_ilmatrix(rep_from_intervals(planted_grid_model(3), RepKind::Interval));
    PermSubmatrixWitness one = extract_perm_submatrix(il, Permutation::parse("1"));
    const Division& d = one.minor.division;
    CHECK(one.rows[0] >= d.row_begin(1));
    CHECK(one.rows[0] < d.row_end(1, il.matrix.rows()));
    CHECK(one.cols[0] >= d.col_begin(2));
    CHECK(one.cols[0] < d.col_end(2, il.matrix.cols()));

    IlMatrix small = build_ilmatrix(rep_from_intervals(planted_grid_model(2), RepKind::Interval));
    CHECK_THROWS_AS(extract_perm_submatrix(small, Permutation::parse("1")), InvalidArgument);
}

TEST_CASE("random planted instances")
{
    std::uint64_t seed = 1;
    for (int round = 0; round < 20; ++round) {
        IntervalLikeRep rep =
            rep_from_intervals(planted_grid_model(planted_grid_size(2), 12, seed++), RepKind::Overlap);
        IlMatrix il = build_ilmatrix(rep);
        Graph g = decode(rep);
        for (const auto& pi : Permutation::all(2)) {
            PermSubmatrixWitness w = extract_perm_submatrix(il, pi);
            CHECK(is_perm_submatrix(il.matrix, w.rows, w.cols, pi));
            CircleWitness c = circle_permutation_witness(g, rep, pi);
            CHECK(is_isomorphic(g.induced_by_ids(c.vertices), permutation_graph(pi)));
        }
    }
}

TEST_CASE("circle witnesses")
{
    for (std::size_t p = 1; p <= 3; ++p) {
        IntervalLikeRep rep = rep_from_intervals(planted_grid_model(planted_grid_size(p)), RepKind::Overlap);
        Graph g = decode(rep);
        for (const auto& pi : Permutation::all(p)) {
            CircleWitness c = circle_permutation_witness(g, rep, pi);
            REQUIRE(c.vertices.size() == p);
            CHECK(is_isomorphic(g.induced_by_ids(c.vertices), permutation_graph(pi)));
        }
    }
    IntervalLikeRep rep = rep_from_intervals(planted_grid_model(planted_grid_size(2)), RepKind::Overlap);
    Graph g = decode(rep);
    const Permutation swap = Permutation::parse("2 1");
    CHECK(g.induced_by_ids(circle_permutation_witness(g, rep, swap).vertices).edge_count() ==
          permutation_graph(swap).edge_count());
    CHECK_THROWS_AS(circle_permutation_witness(g, rep.with_kind(RepKind::Interval), Permutation::parse("1")),
                    InvalidArgument);
}

TEST_CASE("interval exposure witnesses")
{
    for (std::size_t p = 1; p <= 3; ++p) {
        IntervalLikeRep rep = condensed_grid(p);
        Graph g = decode(rep);
        for (const auto& pi : Permutation::all(p)) {
            ExposureWitness w = interval_exposure_witness(g, rep, pi);
            CHECK(check_exposes(w));
            CHECK(w.h.order() == 3 * p);
            CHECK(same_labelled_graph(w.h, g.induced_by_ids(w.h.ids())));
            CHECK(testing::definition_exposer(pi).order() == w.h.order());
            CHECK(transduce_tau(w.h, w.w, w.mates1, w.mates2) == pi);
        }
    }

    IntervalLikeRep rep = condensed_grid(1);
    Graph g = decode(rep);
    IntervalLikeRep raw = rep_from_intervals(planted_grid_model(3), RepKind::Interval);
    CHECK_THROWS_AS(interval_exposure_witness(decode(raw), raw, Permutation::parse("1")), InvalidArgument);
    CHECK_THROWS_AS(interval_exposure_witness(g, rep.with_kind(RepKind::Overlap), Permutation::parse("1")),
                    InvalidArgument);
    // a graph with a twin of x0_0 no longer matches the rep
    Graph with_twin = g;
    std::size_t t = with_twin.add_vertex("copy");
    for (std::size_t u = 0; u < g.order(); ++u)
        if (g.adjacent(u, g.index("x0_0")))
            with_twin.add_edge(t, u);
    CHECK_THROWS_AS(interval_exposure_witness(with_twin, rep, Permutation::parse("1")), InvalidArgument);
}

TEST_CASE("exposure checks")
{
    Exposer e = generate_exposer(Permutation::parse("1"));
    CHECK(e.graph.order() == 3);
    CHECK(e.graph.edge_count() == 2);
    CHECK(e.graph.adjacent(e.graph.index("w1"), e.graph.index("u1")));
    CHECK(e.graph.adjacent(e.graph.index("w1"), e.graph.index("v1")));

    for (std::size_t p = 1; p <= 4; ++p)
        for (const auto& pi : Permutation::all(p)) {
            Exposer x = generate_exposer(pi);
            CHECK(x.graph.order() == 3 * p);
            CHECK(check_exposes(x.graph, x.w, x.w1, x.w2, pi));
            CHECK(check_exposes(x.witness));
            CHECK(same_labelled_graph(decode(rep_from_intervals(x.model, RepKind::Interval)), x.graph));
            // cliques on each part and no edges between the mates
            for (const auto* part : {&x.w, &x.w1, &x.w2})
                CHECK(x.graph.induced_by_ids(*part).edge_count() == p * (p - 1) / 2);
            for (const auto& a : x.w1)
                for (const auto& b : x.w2)
                    CHECK_FALSE(x.graph.adjacent(x.graph.index(a), x.graph.index(b)));
            for (const auto& other : Permutation::all(p))
                CHECK(check_exposes(x.graph, x.w, x.w1, x.w2, other) == (other == pi));
            auto model = recognize_interval(x.graph);
            CHECK(model.has_value());
        }

    Exposer x = generate_exposer(Permutation::parse("2 1"));
    for (const auto& [u, v] : x.graph.edges()) {
        bool w_part = x.graph.id(u)[0] == 'w', mate = x.graph.id(v)[0] != 'w';
        if (! (w_part && mate))
            continue;
        Graph broken = x.graph;
        broken.set_edge(u, v, false);
        CHECK_FALSE(check_exposes(broken, x.w, x.w1, x.w2, Permutation::parse("2 1")));
    }
    Exposer id = generate_exposer(Permutation::parse("1 2"));
    CHECK_FALSE(check_exposes(id.graph, id.w, id.w1, id.w2, Permutation::parse("2 1")));
    CHECK_THROWS_AS(check_exposes(id.graph, id.w, id.w1, {"v1"}, Permutation::parse("1 2")), InvalidArgument);
    CHECK_THROWS_AS(check_exposes(id.graph, id.w, id.w1, id.w1, Permutation::parse("1 2")), InvalidArgument);
}

TEST_CASE("exposed permutations by search")
{
    for (std::size_t p = 1; p <= 3; ++p)
        for (const auto& pi : Permutation::all(p)) {
            auto found = find_exposed_permutations(generate_exposer(pi).graph, p);
            CHECK(found.contains(pi));
            CHECK(find_exposed_permutations(testing::definition_exposer(pi), p).contains(pi));
        }
    Graph edgeless(std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
    for (std::size_t p = 1; p <= 2; ++p)
        CHECK(find_exposed_permutations(edgeless, p).empty());

    // oracle: every partition of the six vertices into W, W1, W2
    Graph g = generate_exposer(Permutation::parse("2 1")).graph;
    std::set<Permutation> brute;
    std::vector<std::string> ids = g.ids();
    std::vector<int> part(6, 0);
    for (int code = 0; code < 729; ++code) {
        int c = code;
        std::vector<std::string> w, w1, w2;
        for (std::size_t v = 0; v < 6; ++v, c /= 3)
            (c % 3 == 0 ? w : c % 3 == 1 ? w1 : w2).push_back(ids[v]);
        if (w.size() != 2 || w1.size() != 2 || w2.size() != 2)
            continue;
        if (auto pi = exposed_permutation(g, w, w1, w2))
            brute.insert(*pi);
    }
    CHECK(find_exposed_permutations(g, 2) == brute);
    MESSAGE("exposer of (2,1) exposes " << brute.size() << " permutations of size 2");
    CHECK_THROWS_AS(find_exposed_permutations(testing::path_graph(17), 2), CapExceeded);
}
