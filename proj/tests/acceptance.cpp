// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fo_oracles.hpp"
#include "matrix_oracles.hpp"
#include "support.hpp"

#include <twinwidth/fologic.hpp>
#include <twinwidth/graph.hpp>
#include <twinwidth/ilrep.hpp>
#include <twinwidth/obstruction.hpp>
#include <twinwidth/perturb.hpp>
#include <twinwidth/solver.hpp>
#include <twinwidth/trigraph.hpp>
#include <twinwidth/trimatrix.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace twinwidth;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

struct Verdict {
    bool ok = true;
    std::string detail;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

EdgeSet edge_set(const Graph& g)
{
    EdgeSet out;
    for (const auto& e : g.sorted_edges())
        out.insert(e);
    return out;
}

EdgeSet ordered(EdgeSet raw)
{
    EdgeSet out;
    for (auto [a, b] : raw)
        out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    return out;
}

TriMatrix adjacency(const Graph& g)
{
    TriMatrix m(g.ids(), g.ids());
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j)
            m.set(i, j, g.adjacent(i, j) ? Entry::One : Entry::Zero);
    return m;
}

Graph house_graph()
{
    return testing::make_graph({"a", "b", "c", "d", "e"},
                               {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "e"}, {"c", "d"}, {"d", "e"}});
}

IntervalModel random_intervals(std::size_t n, int span, std::mt19937& rng)
{
    std::uniform_int_distribution<int> point(0, span);
    IntervalModel model;
    std::set<std::pair<int, int>> used;
    while (model.intervals.size() < n) {
        int a = point(rng), b = point(rng);
        if (a > b)
            std::swap(a, b);
        if (!used.insert({a, b}).second)
            continue;
        model.intervals.push_back({"i" + std::to_string(model.intervals.size()), Rational(a), Rational(b)});
    }
    return model;
}

ChordDiagram random_chords(std::size_t n, std::mt19937& rng)
{
    ChordDiagram cd;
    for (std::size_t i = 0; i < n; ++i) {
        cd.sequence.push_back("k" + std::to_string(i));
        cd.sequence.push_back("k" + std::to_string(i));
    }
    std::shuffle(cd.sequence.begin(), cd.sequence.end(), rng);
    return cd;
}

// closed intervals intersect
EdgeSet interval_oracle(const IntervalModel& m)
{
    EdgeSet out;
    for (std::size_t a = 0; a < m.intervals.size(); ++a)
        for (std::size_t b = a + 1; b < m.intervals.size(); ++b) {
            const auto &x = m.intervals[a], &y = m.intervals[b];
            if (std::max(x.left, y.left) <= std::min(x.right, y.right))
                out.insert({x.id, y.id});
        }
    return ordered(out);
}

// two chords cross iff exactly one end of one lies strictly inside the other
EdgeSet chord_oracle(const ChordDiagram& cd)
{
    std::map<std::string, std::pair<int, int>> at;
    for (int i = 0; i < static_cast<int>(cd.sequence.size()); ++i) {
        auto it = at.find(cd.sequence[i]);
        if (it == at.end())
            at[cd.sequence[i]] = {i, -1};
        else
            it->second.second = i;
    }
    EdgeSet out;
    for (const auto& [x, cx] : at)
        for (const auto& [y, cy] : at) {
            if (x >= y)
                continue;
            auto inside = [&](int p) { return cx.first < p && p < cx.second; };
            if (inside(cy.first) != inside(cy.second))
                out.insert({x, y});
        }
    return out;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b, const std::vector<std::size_t>& rank)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return rank[static_cast<std::size_t>(a[i] - 1)] < rank[static_cast<std::size_t>(b[i] - 1)];
    return false;
}

std::vector<std::size_t> random_rank(std::size_t m, std::mt19937& rng)
{
    std::vector<std::size_t> r(m);
    std::iota(r.begin(), r.end(), 0);
    std::shuffle(r.begin(), r.end(), rng);
    return r;
}

std::vector<std::vector<int>> all_tuples(std::size_t base, std::size_t s)
{
    std::vector<std::vector<int>> out{{}};
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int y = 1; y <= static_cast<int>(base); ++y) {
                auto u = t;
                u.push_back(y);
                next.push_back(u);
            }
        out = std::move(next);
    }
    return out;
}

Verdict house()
{
    Graph g = house_graph();
    ContractionSequence seq{{"a", "b", "ab"}, {"d", "e", "de"}, {"c", "de", "cde"}, {"ab", "cde", "abcde"}};
    const std::size_t width = sequence_width(g, seq);
    const bool verified = verify_sequence(g, seq, 2);
    std::vector<MatrixStep> steps{{Axis::Row, "a", "b"}, {Axis::Col, "a", "b"}, {Axis::Row, "d", "e"},
                                  {Axis::Col, "d", "e"}, {Axis::Row, "c", "d"}, {Axis::Col, "c", "d"},
                                  {Axis::Row, "a", "c"}, {Axis::Col, "a", "c"}};
    auto reds = replay_red_numbers(adjacency(g), steps, true);
    const std::size_t third = reds.size() > 2 ? reds[2] : 0;
    return {width == 2 && verified && third == 3,
            "width " + std::to_string(width) + ", red number at third matrix " + std::to_string(third)};
}

Verdict five_points()
{
    IntervalModel model = parse_intervals(slurp(TEST_DATA_DIR "/five_points.ivl"));
    IntervalLikeRep rep = rep_from_intervals(model, RepKind::Interval);
    const std::string matrix = format_matrix(build_ilmatrix(rep).matrix);
    const bool exact = matrix == slurp(GOLDEN_DIR "/five_points.mat");
    const std::size_t interval_edges = decode(rep).edge_count();
    const std::size_t overlap_edges = decode(rep.with_kind(RepKind::Overlap)).edge_count();
    return {exact && interval_edges == 11 && overlap_edges == 9,
            std::string(exact ? "matrix bit-exact" : "matrix differs") + ", " + std::to_string(interval_edges) +
                " interval edges, " + std::to_string(overlap_edges) + " overlap edges"};
}

Verdict round_trip()
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::size_t mismatches = 0;
    for (int round = 0; round < 1000; ++round) {
        if (round % 2 == 0) {
            IntervalModel model = random_intervals(size(rng), 12, rng);
            for (RepKind kind : {RepKind::Interval, RepKind::Overlap}) {
                IntervalLikeRep rep = rep_from_intervals(model, kind);
                mismatches += !same_labelled_graph(decode_from_matrix(build_ilmatrix(rep), kind), decode(rep));
            }
            mismatches += edge_set(decode(rep_from_intervals(model, RepKind::Interval))) != interval_oracle(model);
        } else {
            ChordDiagram cd = random_chords(size(rng), rng);
            IntervalLikeRep rep = rep_from_chords(cd);
            mismatches += edge_set(decode(rep)) != chord_oracle(cd);
            mismatches += !same_labelled_graph(decode_from_matrix(build_ilmatrix(rep), RepKind::Overlap), decode(rep));
        }
    }
    return {mismatches == 0, "1000 instances, " + std::to_string(mismatches) + " mismatches"};
}

Verdict fo_equivalence()
{
    std::mt19937 rng(35);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    std::size_t mismatches = 0, true_count = 0;
    for (int round = 0; round < 200; ++round) {
        RepKind kind = round % 2 ? RepKind::Interval : RepKind::Overlap;
        IntervalLikeRep rep = rep_from_intervals(random_intervals(size(rng), 10, rng), kind);
        FormulaPtr f = testing::random_formula(rng, 2, {});
        if (quantifier_depth(*f) > 2)
            throw std::logic_error("formula too deep");
        const bool direct = evaluate(structure_of_graph(decode(rep)), f);
        const bool via_matrix = evaluate(structure_of_matrix(build_ilmatrix(rep).matrix), rewrite(iota_for(kind), f));
        mismatches += direct != via_matrix;
        true_count += direct;
    }
    return {mismatches == 0,
            "200 pairs (" + std::to_string(true_count) + " true), " + std::to_string(mismatches) + " mismatches"};
}

Verdict extraction()
{
    std::size_t runs = 0, failures = 0;
    for (std::size_t p = 1; p <= 3; ++p) {
        const std::size_t n = planted_grid_size(p);
        for (std::size_t extra : {0, 8}) {
            IntervalModel model = planted_grid_model(n, extra, 100 + p);
            IlMatrix il = build_ilmatrix(rep_from_intervals(model, RepKind::Interval));
            IntervalLikeRep overlap = rep_from_intervals(model, RepKind::Overlap);
            Graph g = decode(overlap);
            for (const Permutation& pi : Permutation::all(p)) {
                ++runs;
                try {
                    if (!find_mixed_minor(il.matrix, 2 * p + 1))
                        throw std::runtime_error("no planted minor");
                    PermSubmatrixWitness w = extract_perm_submatrix(il, pi);
                    TriMatrix target = permutation_matrix(pi);
                    bool ok = check_perm_submatrix(il, w) && w.rows.size() == p && w.cols.size() == p;
                    std::set<std::size_t> lefts;
                    for (std::size_t a = 0; ok && a < p; ++a) {
                        lefts.insert(il.row_ends[w.rows[a]].first);
                        for (std::size_t b = 0; b < p; ++b)
                            ok = ok && il.matrix.at(w.rows[a], w.cols[b]) == target.at(a, b);
                    }
                    ok = ok && lefts.size() == p;
                    CircleWitness c = circle_permutation_witness(g, overlap, pi);
                    ok = ok && is_isomorphic(g.induced_by_ids(c.vertices), permutation_graph(pi));
                    failures += !ok;
                } catch (const std::exception&) {
                    ++failures;
                }
            }
        }
    }
    return {failures == 0, std::to_string(runs) + " extractions, " + std::to_string(failures) + " failures"};
}

Verdict exposure()
{
    std::size_t runs = 0, failures = 0;
    for (std::size_t p = 1; p <= 4; ++p)
        for (const Permutation& pi : Permutation::all(p)) {
            ++runs;
            Exposer e = generate_exposer(pi);
            bool ok = e.witness.pi == pi && check_exposes(e.witness);
            ok = ok && same_labelled_graph(decode(rep_from_intervals(e.model, RepKind::Interval)), e.graph);
            auto tau = transduce_tau(e.graph, e.w, e.w1, e.w2);
            ok = ok && tau && *tau == pi;
            failures += !ok;
        }
    return {failures == 0, std::to_string(runs) + " permutations, " + std::to_string(failures) + " failures"};
}

Verdict homogeneous()
{
    std::mt19937 rng(71);
    std::size_t families = 0, failures = 0;
    for (std::size_t base = 1; base <= 4; ++base)
        for (std::size_t s : {2, 4}) {
            const auto tuples = all_tuples(base, s);
            const std::size_t max_r = s == 2 ? 1 : 2;
            for (int round = 0; round < 500; ++round) {
                ++families;
                std::uniform_int_distribution<std::size_t> pick_r(0, max_r);
                std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
                std::vector<std::set<std::vector<int>>> sets(pick_r(rng));
                std::vector<std::vector<std::vector<int>>> listed(sets.size());
                for (std::size_t i = 0; i < sets.size(); ++i)
                    for (const auto& t : tuples)
                        if (coin(rng)) {
                            sets[i].insert(t);
                            listed[i].push_back(t);
                        }
                std::vector<std::size_t> rank1 = random_rank(base, rng), rank2 = random_rank(base, rng);
                try {
                    HomogeneousSet h = find_homogeneous_set(base, s, listed);
                    LexPowerOrders orders(rank1, rank2, s);
                    bool ok = h.ell >= 1 && h.ell <= s && h.prefix.size() == h.ell - 1 && h.suffix.size() == base;
                    std::vector<std::vector<int>> z;
                    for (std::size_t y = 1; ok && y <= base; ++y) {
                        std::vector<int> t = h.prefix;
                        t.push_back(static_cast<int>(y));
                        t.insert(t.end(), h.suffix[y - 1].begin(), h.suffix[y - 1].end());
                        ok = t.size() == s && h.elements[y - 1] == orders.index(t);
                        z.push_back(t);
                    }
                    for (const auto& x : sets) {
                        std::size_t inside = 0;
                        for (const auto& t : z)
                            inside += x.count(t);
                        ok = ok && (inside == 0 || inside == z.size());
                    }
                    for (std::size_t a = 0; ok && a < base; ++a)
                        for (std::size_t b = 0; b < base; ++b) {
                            if (a == b)
                                continue;
                            ok = ok && lex_less(z[a], z[b], rank1) == (rank1[a] < rank1[b]);
                            ok = ok && lex_less(z[a], z[b], rank2) == (rank2[a] < rank2[b]);
                        }
                    ok = ok && restriction_isomorphic(orders, h);
                    failures += !ok;
                } catch (const std::exception&) {
                    ++failures;
                }
            }
        }
    return {failures == 0, std::to_string(families) + " families, " + std::to_string(failures) + " failures"};
}

Verdict robustness()
{
    RobustnessOptions exhaustive;
    exhaustive.mode = RobustnessMode::Exhaustive;
    struct Case {
        const char* label;
        Permutation pi;
        std::optional<std::size_t> exponent;
        std::size_t scripts;
    };
    const std::vector<Case> cases{{"pi=1 |Z|=4", Permutation::parse("1"), std::nullopt, 16},
                                  {"pi=1 |Z|=16", Permutation::parse("1"), 4, 65536},
                                  {"pi=21 |Z|=16", Permutation::parse("2 1"), std::nullopt, 65536},
                                  {"pi=12 |Z|=16", Permutation::parse("1 2"), std::nullopt, 65536}};
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        HPlusOptions options;
        options.exponent = c.exponent;
        RobustnessReport report = verify_robustness(build_hplus_circle(c.pi, 1, options), exhaustive);
        ok = ok && report.failure_count == 0 && report.scripts_tested == c.scripts;
        detail += std::string(detail.empty() ? "" : "; ") + c.label + ": " + std::to_string(report.scripts_tested) +
                  " scripts, " + std::to_string(report.failure_count) + " failures";
    }
    return {ok, detail};
}

Verdict solver()
{
    std::mt19937 rng(9);
    std::size_t violations = 0;
    for (int round = 0; round < 50; ++round) {
        Graph g = testing::random_cograph(std::uniform_int_distribution<std::size_t>(1, 8)(rng), rng);
        violations += twinwidth_exact(g).value != 0;
    }
    violations += twinwidth_exact(testing::path_graph(4)).value != 1;

    MatrixSolveOptions sym;
    sym.symmetric = true;
    sym.cap = 14;
    std::size_t unproven = 0;
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        Graph g = testing::random_graph(n, std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
        SolveResult exact = twinwidth_exact(g);
        unproven += !exact.optimal;
        violations += exact.value > twinwidth_greedy(g).value;
        violations += twinwidth_exact(testing::relabel(g, rng)).value != exact.value;

        Graph twin = g;
        const std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        const std::size_t t = twin.add_vertex("twin");
        for (std::size_t u = 0; u < n; ++u)
            if (g.adjacent(u, v))
                twin.add_edge(t, u);
        if (round % 2)
            twin.add_edge(t, v);
        violations += twinwidth_exact(twin).value > exact.value;

        MatrixSolveResult m = matrix_twinwidth_exact(adjacency(g), sym);
        unproven += !m.optimal;
        violations += std::max(m.value, exact.value) - std::min(m.value, exact.value) > 1;
    }
    return {violations == 0 && unproven == 0, "50 cographs, P4, 100 random graphs: " + std::to_string(violations) +
                                                  " violations, " + std::to_string(unproven) + " unproven values"};
}

Verdict ordering()
{
    std::mt19937 rng(123);
    std::size_t violations = 0, nontrivial = 0;
    for (int round = 0; round < 50; ++round) {
        TriMatrix m = testing::random_01_matrix(5, 5, rng);
        MatrixSolveResult solved = matrix_twinwidth_exact(m);
        if (!solved.optimal) {
            ++violations;
            continue;
        }
        const std::size_t k = 2 * solved.value + 2;
        nontrivial += 2 * k <= 5;
        OrderingResult r = ordering_without_mixed_minor(m, k);
        bool ok = r.status == OrderingStatus::Found &&
                  !testing::has_mixed_minor_brute(m.permuted(r.row_order, r.col_order), k);
        ok = ok && check_ordering_bound(m, solved.value);
        violations += !ok;
    }
    return {violations == 0, "50 matrices (" + std::to_string(nontrivial) + " with a realizable (2t+2)-minor size), " +
                                 std::to_string(violations) + " violations"};
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        const char* name;
        const char* tolerance;
        double limit_seconds;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "contraction example: width 2, symmetric replay red 3", "exact", 1, house},
        {2, "five-point interval example: golden matrix, 11/9 edges", "exact", 1, five_points},
        {3, "matrix round trip and chord crossing oracle", "zero mismatches", 30, round_trip},
        {4, "rewritten formulas agree on il-matrix structures", "zero mismatches", 60, fo_equivalence},
        {5, "permutation submatrix and circle witness extraction", "100% success", 60, extraction},
        {6, "exposers: exposure, decoding, transduction", "100% success", 30, exposure},
        {7, "homogeneous sets re-verify", "zero failures", 30, homogeneous},
        {8, "circle construction robust to one perturbation set", "zero failures", 300, robustness},
        {9, "exact solver cross-checks", "zero violations", 300, solver},
        {10, "some ordering avoids a (2t+2)-mixed minor", "zero violations", 300, ordering},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = v.ok && seconds < c.limit_seconds;
        all = all && pass;
        std::printf("%s %2d %s: %s [%s; %.2f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.number, c.name,
                    v.detail.c_str(), c.tolerance, seconds, c.limit_seconds);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
