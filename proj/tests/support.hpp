#pragma once

#include <twinwidth/graph.hpp>
#include <twinwidth/trigraph.hpp>

#include <random>
#include <string>
#include <vector>

namespace testing {

using twinwidth::Graph;

inline Graph make_graph(const std::vector<std::string>& ids, const std::vector<std::pair<std::string, std::string>>& edges)
{
    Graph g(ids);
    for (const auto& [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline Graph path_graph(std::size_t n)
{
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex(std::to_string(i + 1));
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(std::size_t n)
{
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex(std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

/// Random cograph: leaves combined by random joins and disjoint unions.
inline Graph random_cograph(std::size_t n, std::mt19937& rng)
{
    struct Part {
        std::vector<std::size_t> vertices;
    };
    Graph g;
    std::vector<Part> parts;
    for (std::size_t i = 0; i < n; ++i) {
        g.add_vertex("c" + std::to_string(i));
        parts.push_back({{i}});
    }
    std::bernoulli_distribution join(0.5);
    while (parts.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        std::size_t a = pick(rng), b = pick(rng);
        while (b == a)
            b = pick(rng);
        if (join(rng))
            for (auto u : parts[a].vertices)
                for (auto v : parts[b].vertices)
                    g.add_edge(u, v);
        parts[a].vertices.insert(parts[a].vertices.end(), parts[b].vertices.begin(), parts[b].vertices.end());
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(b));
    }
    return g;
}

/// Relabels g by a random bijection onto fresh ids, shuffling insertion order.
inline Graph relabel(const Graph& g, std::mt19937& rng)
{
    std::vector<std::size_t> order(g.order());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Graph h;
    std::vector<std::size_t> where(g.order());
    for (std::size_t k = 0; k < order.size(); ++k) {
        where[order[k]] = k;
        h.add_vertex("x" + std::to_string(k));
    }
    for (auto [u, v] : g.edges())
        h.add_edge(where[u], where[v]);
    return h;
}

/// Minimum width over all contraction sequences, by plain enumeration of
/// every pair at every step (no memo, no pruning).  Tiny graphs only.
inline std::size_t brute_twinwidth(const twinwidth::Trigraph& t, std::size_t so_far)
{
    if (t.order() <= 1)
        return so_far;
    std::size_t best = SIZE_MAX;
    for (std::size_t u = 0; u < t.order(); ++u)
        for (std::size_t v = u + 1; v < t.order(); ++v) {
            auto next = t.contract(u, v, t.id(u) + "+" + t.id(v));
            std::size_t w = std::max(so_far, next.max_red_degree());
            if (w >= best)
                continue;
            best = std::min(best, brute_twinwidth(next, w));
        }
    return best;
}

inline std::size_t brute_twinwidth(const Graph& g)
{
    return brute_twinwidth(twinwidth::Trigraph(g), 0);
}

} // namespace testing
