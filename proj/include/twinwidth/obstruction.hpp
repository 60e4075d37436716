#pragma once

#include <twinwidth/graph.hpp>
#include <twinwidth/ilrep.hpp>
#include <twinwidth/permutation.hpp>
#include <twinwidth/trimatrix.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace twinwidth {

/// A p x p submatrix of an il-matrix equal to the permutation matrix of pi,
/// rows listed top to bottom (pairwise distinct left ends), columns left to
/// right.
struct PermSubmatrixWitness {
    Permutation pi;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    std::vector<std::string> row_keys;
    std::vector<std::string> col_keys;
    MixedMinorWitness minor;
};

/// Picks a one in each zone (P_2k, Q_2pi(k)) of a (2p+1)-mixed minor,
/// lexicographically smallest first, re-selecting while two rows share a
/// left end.  Throws InvalidArgument without such a minor and
/// InternalError if the result breaks a witness invariant.
PermSubmatrixWitness extract_perm_submatrix(const IlMatrix& m, const Permutation& pi);

/// Both invariants: the entries equal P_pi and left ends are distinct.
bool check_perm_submatrix(const IlMatrix& m, const PermSubmatrixWitness& w);

struct CircleWitness {
    /// Vertex k of the permutation graph of pi is vertices[k - 1].
    std::vector<std::string> vertices;
    PermSubmatrixWitness submatrix;
};

/// Vertices of g (the graph of the overlap rep) inducing the permutation
/// graph of pi, read off a submatrix for the complement of pi.
CircleWitness circle_permutation_witness(const Graph& g, const IntervalLikeRep& rep, const Permutation& pi);

/// H with parts W = {w_1..w_p} (in N_1 chain order) and the mates of each
/// w_i in W_1 and W_2.
struct ExposureWitness {
    Permutation pi;
    Graph h;
    std::vector<std::string> w;
    std::vector<std::string> mates1;
    std::vector<std::string> mates2;
};

/// The permutation exposed by parts W, W_1, W_2 of h, if both neighbourhood
/// chains are strict, start nonempty and cover W.  Throws InvalidArgument
/// when the parts overlap or differ in size.
std::optional<Permutation> exposed_permutation(const Graph& h, const std::vector<std::string>& w,
                                               const std::vector<std::string>& w1, const std::vector<std::string>& w2);
bool check_exposes(const Graph& h, const std::vector<std::string>& w, const std::vector<std::string>& w1,
                   const std::vector<std::string>& w2, const Permutation& pi);
bool check_exposes(const ExposureWitness& witness);

/// Extraction for interval graphs: X = rows of a permutation
/// submatrix, plus for each x a vertex ending at its left end and one
/// starting at its right end.  Requires g = decode(rep), rep condensed of
/// interval kind and g twin-free (InvalidArgument otherwise).
ExposureWitness interval_exposure_witness(const Graph& g, const IntervalLikeRep& rep, const Permutation& pi);

struct Exposer {
    Graph graph;
    IntervalModel model;
    std::vector<std::string> w;
    std::vector<std::string> w1;
    std::vector<std::string> w2;
    ExposureWitness witness;
};

/// Interval exposer on 3p vertices with W, W_1, W_2 cliques and no W_1-W_2
/// edge: u_j = [0, p+1-j], w_i = [p+1-i, p+pi^-1(i)], v_j = [p+j, 2p+1].
Exposer generate_exposer(const Permutation& pi);

/// Every pi of size p exposed by some induced subgraph with some partition.
/// Throws CapExceeded when |V(g)| > cap.
std::set<Permutation> find_exposed_permutations(const Graph& g, std::size_t p, std::size_t cap = 16);

/// Nested grid: x_ij = [i, n+j] for i, j < n, with l_i = [i-1, i] and
/// r_j = [n+j, n+j+1] separating them; twin-free, and its il-matrix carries
/// large mixed minors.  `extra` random intervals on the same points are
/// added (seeded).
IntervalModel planted_grid_model(std::size_t n, std::size_t extra = 0, std::uint64_t seed = 0);
/// Smallest grid size used for a planted (2p+1)-mixed minor.
std::size_t planted_grid_size(std::size_t p);

} // namespace twinwidth
