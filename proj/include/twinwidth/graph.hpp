#pragma once

#include <twinwidth/permutation.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twinwidth {

using Bitset = boost::dynamic_bitset<>;
using VertexPair = std::pair<std::string, std::string>;

/// A simple graph over opaque string vertex ids.  Vertices keep their
/// insertion order; adjacency is a dense bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> ids);

    std::size_t add_vertex(std::string id);
    void add_edge(std::size_t u, std::size_t v);
    void add_edge(std::string_view u, std::string_view v);
    void set_edge(std::size_t u, std::size_t v, bool present);
    void toggle_edge(std::size_t u, std::size_t v);

    std::size_t order() const noexcept { return ids_.size(); }
    std::size_t edge_count() const;
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u][v]; }
    bool adjacent(std::string_view u, std::string_view v) const { return adjacent(index(u), index(v)); }
    std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
    const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }

    const std::string& id(std::size_t v) const { return ids_.at(v); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    std::optional<std::size_t> find(std::string_view id) const;
    /// Index of `id`; throws InvalidArgument for unknown ids.
    std::size_t index(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id).has_value(); }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// Edges as id pairs with each pair and the list sorted lexicographically.
    std::vector<VertexPair> sorted_edges() const;

    Graph induced(std::span<const std::size_t> vertices) const;
    Graph induced_by_ids(std::span<const std::string> ids) const;
    Graph complement() const;
    Graph without_vertex(std::size_t v) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Bitset> adjacency_;
};

/// Same vertex ids and same edges between them (vertex order ignored).
bool same_labelled_graph(const Graph& g, const Graph& h);

/// Disjoint union; ids of h are prefixed with `h_prefix` if they collide.
Graph disjoint_union(const Graph& g, const Graph& h, std::string_view h_prefix = "'");

/// Vertex ids 1..p; edge ij (i < j) iff pi(i) > pi(j).
Graph permutation_graph(const Permutation& pi);

/// All unordered twin pairs {u, v} with N(u) \ {v} = N(v) \ {u}, as index pairs u < v.
std::vector<std::pair<std::size_t, std::size_t>> find_twins(const Graph& g);
bool is_twin_free(const Graph& g);
/// Repeatedly deletes the larger-index vertex of the first twin pair until twin-free.
Graph twin_free_core(const Graph& g);

struct IsomorphismOptions {
    std::size_t cap = 12;
};

/// Exhaustive bijection search with degree and neighbourhood-degree pruning.
/// Throws CapExceeded when the graphs are larger than the cap.
bool is_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& options = {});
/// As is_isomorphic, returning the mapping g-index -> h-index on success.
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h,
                                                         const IsomorphismOptions& options = {});
/// True if `pattern` occurs as an induced subgraph of `g`; on success the
/// chosen g-vertices (in pattern order) are written to `embedding`.
bool contains_induced(const Graph& g, const Graph& pattern, std::vector<std::size_t>* embedding = nullptr);

/// Graph text format: `graph <name> <n> <m>`, `v <id>` lines, `e <id> <id>` lines.
Graph read_graph(std::istream& in, std::string* name = nullptr);
Graph parse_graph(std::string_view text, std::string* name = nullptr);
/// Deterministic serialisation: ids and edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g, std::string_view name = "g");
std::string format_graph(const Graph& g, std::string_view name = "g");

} // namespace twinwidth
