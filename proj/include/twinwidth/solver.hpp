#pragma once

#include <twinwidth/graph.hpp>
#include <twinwidth/trigraph.hpp>
#include <twinwidth/trimatrix.hpp>

#include <optional>
#include <vector>

namespace twinwidth {

struct SolveResult {
    std::size_t value = 0;
    bool optimal = false;
    ContractionSequence sequence;
    std::size_t nodes_explored = 0;
};

struct ExactOptions {
    std::size_t cap = 10;
    std::size_t node_budget = 5'000'000;
};

/// Exact twin-width by iterative deepening over vertex partitions (the
/// trigraph reached by any sequence depends only on the partition).  Pairs
/// with equal black and red neighbourhoods are merged eagerly.  Throws
/// CapExceeded when |V| > cap; an exhausted budget yields the best known
/// upper bound with optimal = false.
SolveResult twinwidth_exact(const Graph& g, const ExactOptions& options = {});

/// Contracts the pair minimizing the resulting maximum red degree, ties
/// broken by the lexicographically smallest id pair.
SolveResult twinwidth_greedy(const Graph& g);

/// True iff seq is a full sequence of width exactly `claimed`.  A malformed
/// sequence raises MalformedSequence rather than returning false.
bool verify_sequence(const Graph& g, const ContractionSequence& seq, std::size_t claimed);

enum class OrderingStatus { Found, None, Unknown };

struct OrderingResult {
    OrderingStatus status = OrderingStatus::Unknown;
    std::vector<std::size_t> row_order;
    std::vector<std::size_t> col_order;
    /// "native", "similarity" or "exhaustive".
    std::string method;
    std::size_t orderings_tried = 0;
};

struct OrderingOptions {
    /// Exhaustive search is used when rows and cols are both at most this.
    std::size_t exhaustive_cap = 6;
    bool allow_exhaustive = true;
};

/// Looks for row and column orders without a k-mixed minor: the native
/// order first, then orders sorted by vector similarity, then (within the
/// cap) all orders.  None means the exhaustive search proved absence;
/// Unknown means the heuristics failed and no exhaustive run was possible.
OrderingResult ordering_without_mixed_minor(const TriMatrix& m, std::size_t k, const OrderingOptions& options = {});

} // namespace twinwidth
