#pragma once

#include <twinwidth/graph.hpp>
#include <twinwidth/obstruction.hpp>
#include <twinwidth/permutation.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twinwidth {

/// Sets X_1..X_r; applying the script complements g[X_i] for i = 1..r.
struct PerturbationScript {
    std::vector<std::vector<std::string>> sets;
};

/// Throws InvalidArgument when some X_i names a vertex outside g.
Graph apply_perturbation(const Graph& g, const PerturbationScript& script);

/// One `x <id>...` line per set (a bare `x` is the empty set); `#` comments.
PerturbationScript read_script(std::istream& in);
PerturbationScript parse_script(std::string_view text);
void write_script(std::ostream& out, const PerturbationScript& script);

/// Two linear orders on Y = {1..m} and their lexicographic powers on Y^s.
/// Elements of Y^s are indexed in mixed radix, first coordinate most
/// significant; coordinates are 1-based.
class LexPowerOrders {
public:
    LexPowerOrders() = default;
    /// rank1[y-1], rank2[y-1]: 0-based position of y under <=1 and <=2.
    LexPowerOrders(std::vector<std::size_t> rank1, std::vector<std::size_t> rank2, std::size_t exponent);
    /// <=1 is 1 < 2 < ... < p, <=2 lists pi(1), pi(2), ..., pi(p).
    static LexPowerOrders of_permutation(const Permutation& pi, std::size_t exponent = 1);

    /// The orders on Y^s taken as a new base set.
    LexPowerOrders power(std::size_t exponent) const;

    std::size_t base_size() const noexcept { return rank1_.size(); }
    /// 0-based rank of y in Y under <=1 and <=2.
    std::size_t base_rank1(int y) const { return rank1_.at(static_cast<std::size_t>(y - 1)); }
    std::size_t base_rank2(int y) const { return rank2_.at(static_cast<std::size_t>(y - 1)); }
    std::size_t exponent() const noexcept { return exponent_; }
    std::size_t size() const noexcept { return size_; }

    std::vector<int> tuple(std::size_t index) const;
    std::size_t index(const std::vector<int>& tuple) const;
    /// Dot-separated coordinates.
    std::string name(std::size_t index) const;

    std::size_t position1(std::size_t index) const;
    std::size_t position2(std::size_t index) const;
    bool less1(std::size_t a, std::size_t b) const { return position1(a) < position1(b); }
    bool less2(std::size_t a, std::size_t b) const { return position2(a) < position2(b); }
    std::vector<std::size_t> order1() const;
    std::vector<std::size_t> order2() const;
    /// The permutation determined by the two orders.
    Permutation permutation() const;

private:
    std::size_t position(const std::vector<std::size_t>& rank, std::size_t index) const;

    std::vector<std::size_t> rank1_;
    std::vector<std::size_t> rank2_;
    std::size_t exponent_ = 0;
    std::size_t size_ = 0;
};

/// Z_0 = {(a_1..a_{l-1}, y, b_{l+1}^y..b_s^y) : y in Y}.
struct HomogeneousSet {
    std::size_t ell = 1;
    std::vector<int> prefix;
    /// suffix[y-1] = (b_{l+1}^y, ..., b_s^y).
    std::vector<std::vector<int>> suffix;
    /// elements[y-1] is the index in Y^s of the element for y.
    std::vector<std::size_t> elements;
};

/// Sets are membership bitsets over the indices of Y^s, |Y| = base.
/// Colours elements by membership signature and recurses on a slice
/// missing the smallest colour.  Needs s >= 2^r, or at least no more
/// signatures than s (InvalidArgument).
HomogeneousSet find_homogeneous_set(std::size_t base, std::size_t s, const std::vector<Bitset>& sets);
/// Same with sets given as tuples.
HomogeneousSet find_homogeneous_set(std::size_t base, std::size_t s, const std::vector<std::vector<std::vector<int>>>& sets);

/// Shape of the certificate and membership, re-checked from scratch.
bool check_homogeneous(std::size_t base, std::size_t s, const std::vector<Bitset>& sets, const HomogeneousSet& h);
/// The lexicographic orders restricted to Z_0 match <=1 and <=2 on Y.
bool restriction_isomorphic(const LexPowerOrders& z, const HomogeneousSet& h);

/// pi followed by its position reversal on p+1..2p; its permutation graph
/// is the disjoint union of that of pi and its complement.
Permutation build_pi2(const Permutation& pi);
/// Doubling of pi2 to T = {1..4p}: <=2 lists 2pi2(1)-1, 2pi2(1), 2pi2(2)-1, ...
Permutation build_pi2_prime(const Permutation& pi);

struct HPlusOptions {
    /// Exponent s of Z = Y^s; 2^r when unset.
    std::optional<std::size_t> exponent;
    /// Exponent of U = T^e in the interval construction.
    std::size_t u_exponent = 4;
    /// Caps on |Z|: the circle H+ is materialized, the interval one is not.
    std::size_t circle_cap = 1 << 12;
    std::size_t interval_cap = 1 << 17;
    /// Interval H+ up to this many vertices also gets an explicit graph.
    std::size_t explicit_cap = 3 * 64;
};

/// Permutation graph of rho on Z = {1..2p}^s, vertices named by tuples.
struct HPlusCircle {
    Permutation pi;
    Permutation pi2;
    std::size_t r = 0;
    LexPowerOrders orders;
    Graph graph;
};

/// Throws CapExceeded when |Z| exceeds the cap.
HPlusCircle build_hplus_circle(const Permutation& pi, std::size_t r, const HPlusOptions& options = {});

/// Exposer of rho on Z = U^s, U = T^e, T = {1..4p}.  Vertex k of W (1-based,
/// <=1 order on Z) has mates u_k in W1 and v_{rho^-1(k)} in W2; adjacency is
/// answered from the interval model without materializing the graph.
struct HPlusInterval {
    Permutation pi;
    Permutation pi2;
    Permutation pi2_prime;
    std::size_t r = 0;
    LexPowerOrders t_orders;
    LexPowerOrders u_orders;
    LexPowerOrders z_orders;
    /// rho_inverse[k-1] = rho^-1(k).
    std::vector<std::size_t> rho_inverse;
    /// generate_exposer(rho), when small enough.
    std::optional<Exposer> exposer;

    enum class Part { W, W1, W2 };
    /// Vertices are numbered part * |Z| + (k - 1).
    std::size_t vertex_count() const { return 3 * z_orders.size(); }
    std::size_t vertex(Part part, std::size_t k) const;
    Part part(std::size_t v) const;
    std::string id(std::size_t v) const;
    /// Integer endpoints of vertex v.
    std::pair<long long, long long> interval(std::size_t v) const;
    bool adjacent(std::size_t a, std::size_t b) const;
    IntervalModel model() const;
    /// W vertex of the element of Z with the given index, and its mates.
    std::size_t w_of(std::size_t z_index) const;
    std::size_t mate1_of(std::size_t z_index) const;
    std::size_t mate2_of(std::size_t z_index) const;
};

HPlusInterval build_hplus_interval(const Permutation& pi, std::size_t r, const HPlusOptions& options = {});

enum class RobustnessMode { Exhaustive, Sampled };

struct RobustnessOptions {
    RobustnessMode mode = RobustnessMode::Sampled;
    std::size_t samples = 10'000;
    std::uint64_t seed = 1;
    /// Exhaustive mode refuses more scripts than this.
    std::size_t script_budget = std::size_t{1} << 22;
    std::size_t kept_failures = 10;
};

struct RobustnessFailure {
    std::size_t script_number = 0;
    PerturbationScript script;
    std::string reason;
};

struct RobustnessReport {
    std::string construction;
    Permutation pi;
    std::size_t r = 0;
    std::size_t exponent = 0;
    std::size_t z_size = 0;
    std::size_t vertices = 0;
    RobustnessMode mode = RobustnessMode::Sampled;
    std::uint64_t seed = 0;
    std::size_t scripts_tested = 0;
    std::size_t failure_count = 0;
    /// The first few failures.
    std::vector<RobustnessFailure> failures;
};

/// Outcome of the pipeline on one perturbation of an interval H+.
struct IntervalPipelineResult {
    bool found = false;
    std::string reason;
    /// Perturbed induced subgraph exposing pi, with its parts.
    std::optional<ExposureWitness> witness;
};

/// Perturbed H+ restricted to Z_0 must be H_2 or its complement and hold
/// the permutation graph of pi.  Returns an empty string or the reason;
/// exponents too small for the homogeneous-set step count as a reason.
std::string circle_pipeline(const HPlusCircle& h, const std::vector<Bitset>& sets);
IntervalPipelineResult interval_pipeline(const HPlusInterval& h, const std::vector<Bitset>& sets);

/// Scripts of exactly r sets; in exhaustive mode every r-tuple of subsets of
/// V(H+).  Throws CapExceeded over the script budget.
RobustnessReport verify_robustness(const HPlusCircle& h, const RobustnessOptions& options = {});
RobustnessReport verify_robustness(const HPlusInterval& h, const RobustnessOptions& options = {});

} // namespace twinwidth
