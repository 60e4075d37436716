#pragma once

#include <twinwidth/errors.hpp>
#include <twinwidth/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace twinwidth {

/// A graph whose edges are split into black and red ones (disjoint, no loops).
class Trigraph {
public:
    Trigraph() = default;
    /// The trigraph of a plain graph: every edge black.
    explicit Trigraph(const Graph& g);

    std::size_t order() const noexcept { return ids_.size(); }
    const std::string& id(std::size_t v) const { return ids_.at(v); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t index(std::string_view id) const;

    bool black(std::size_t u, std::size_t v) const { return black_[u][v]; }
    bool red(std::size_t u, std::size_t v) const { return red_[u][v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return black_[u][v] || red_[u][v]; }
    const Bitset& black_neighbors(std::size_t v) const { return black_[v]; }
    const Bitset& red_neighbors(std::size_t v) const { return red_[v]; }
    Bitset neighbors(std::size_t v) const { return black_[v] | red_[v]; }

    std::size_t red_degree(std::size_t v) const { return red_[v].count(); }
    std::size_t max_red_degree() const;
    std::size_t red_edge_count() const;
    std::size_t black_edge_count() const;

    /// Replaces u and v by a vertex `new_id`: N(x0) = (N(u) | N(v)) \ {u, v},
    /// red(x0) = ((red(u) | red(v)) \ {u, v}) | (N(u) ^ N(v)) \ {u, v}.
    /// The new vertex takes the slot of the smaller index; the other is erased.
    Trigraph contract(std::string_view u, std::string_view v, std::string new_id) const;
    Trigraph contract(std::size_t u, std::size_t v, std::string new_id) const;

    void add_black_edge(std::size_t u, std::size_t v);
    void add_red_edge(std::size_t u, std::size_t v);

private:
    std::vector<std::string> ids_;
    std::vector<Bitset> black_;
    std::vector<Bitset> red_;
};

/// contract(t, u, v) naming the merged vertex by concatenation of ids.
Trigraph contract(const Trigraph& t, std::string_view u, std::string_view v);

struct ContractionStep {
    std::string u;
    std::string v;
    std::string merged;

    friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

using ContractionSequence = std::vector<ContractionStep>;

/// Thrown when a sequence references a missing vertex, is not full, or
/// reuses an existing id for a merged vertex.
class MalformedSequence : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Maximum red degree over all trigraphs produced by `seq` (the initial one
/// included).  Throws MalformedSequence unless `seq` is a full sequence.
std::size_t sequence_width(const Graph& g, const ContractionSequence& seq);

/// Sequence file format: lines `c <u> <v> <new>`.
ContractionSequence read_sequence(std::istream& in);
ContractionSequence parse_sequence(std::string_view text);
void write_sequence(std::ostream& out, const ContractionSequence& seq);

/// Merged id of u and v that does not collide with an existing vertex.
std::string merged_name(const std::vector<std::string>& existing, std::string_view u, std::string_view v);

} // namespace twinwidth
