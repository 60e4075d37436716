#pragma once

#include <twinwidth/errors.hpp>
#include <twinwidth/graph.hpp>
#include <twinwidth/trimatrix.hpp>

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twinwidth {

/// Exact rational endpoint value, always normalized (den > 0, gcd 1).
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den = 1);

    /// Accepts "3", "-2", "1/2" and finite decimals such as "0.25".
    static Rational parse(std::string_view text);

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }
    /// "n" or "n/d".
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    long long num_ = 0;
    long long den_ = 1;
};

enum class RepKind { Interval, Overlap };

std::string to_string(RepKind kind);
RepKind parse_kind(std::string_view text);

/// A vertex of an interval-like representation: a pair of end indices
/// s1 <= s2 plus the label it is known by in decoded graphs.
struct EndPair {
    std::size_t s1 = 0;
    std::size_t s2 = 0;
    std::string label;
};

/// (S, <=, eta, kind): ends in order, eta sorted lexicographically by end
/// index pairs.
class IntervalLikeRep {
public:
    IntervalLikeRep() = default;
    /// Labels left empty default to "(s1,s2)".  Throws on s1 > s2, duplicate
    /// pairs, duplicate labels or bad end ids.
    IntervalLikeRep(std::vector<std::string> ends, std::vector<EndPair> pairs, RepKind kind);

    const std::vector<std::string>& ends() const noexcept { return ends_; }
    const std::vector<EndPair>& pairs() const noexcept { return pairs_; }
    RepKind kind() const noexcept { return kind_; }
    std::size_t end_index(std::string_view end) const;
    std::optional<std::size_t> find_pair(std::size_t s1, std::size_t s2) const;
    std::string pair_key(std::size_t s1, std::size_t s2) const;

    IntervalLikeRep with_kind(RepKind kind) const;

private:
    std::vector<std::string> ends_;
    std::vector<EndPair> pairs_;
    RepKind kind_ = RepKind::Interval;
};

struct Interval {
    std::string id;
    Rational left;
    Rational right;
};

/// An interval list; `point_names` optionally names endpoint values, others
/// are named by their canonical value string.
struct IntervalModel {
    std::vector<Interval> intervals;
    std::map<Rational, std::string> point_names;
};

IntervalLikeRep rep_from_intervals(const IntervalModel& model, RepKind kind);

/// A circular sequence of 2n chord labels, each appearing exactly twice.
struct ChordDiagram {
    std::vector<std::string> sequence;
};

void validate_chords(const ChordDiagram& cd);
/// Cut at position 0: the i-th and j-th positions of label x become ends
/// x1 and x2, and the chord becomes the pair of those ends (overlap kind).
IntervalLikeRep rep_from_chords(const ChordDiagram& cd);
/// Intersection graph of the chords computed on the circle: two chords cross
/// iff exactly one end of one lies strictly between the ends of the other.
Graph chord_intersection_graph(const ChordDiagram& cd);

/// Graph on eta (vertex ids are labels) with edges given by phi of the kind.
Graph decode(const IntervalLikeRep& rep);

/// An il-representation matrix together with the rep it encodes.  Row i is
/// the pair row_pair[i] of rep (or a dummy (t,t) row when empty).
struct IlMatrix {
    TriMatrix matrix;
    IntervalLikeRep rep;
    std::vector<std::optional<std::size_t>> row_pair;
    /// Original pair (s1, s2) of every row, dummy rows included.
    std::vector<std::pair<std::size_t, std::size_t>> row_ends;
};

IlMatrix build_ilmatrix(const IntervalLikeRep& rep);

/// Validates a plain matrix as an il-representation matrix (2-prefixes, one
/// 1 per vertex row, sorted rows, every end has its (t,t) row) and rebuilds
/// the rep with ends = column keys and labels = row keys.
IlMatrix ilmatrix_from_matrix(const TriMatrix& m, RepKind kind);

/// The interpretation evaluated directly on the entries:
/// domain = rows holding a 1, edges by the symmetric irreflexive closure of
/// the interval (or overlap) edge formula.  Vertex ids are the row labels.
Graph decode_from_matrix(const IlMatrix& m, RepKind kind);

struct UnifyResult {
    IntervalLikeRep rep;
    bool legal = false;
};

/// Aligns consecutive ends s1 < s2: s2 is removed and replaced by s1 in
/// every pair.  Illegal iff two distinct pairs coincide afterwards (the
/// merged rep keeps the first of them).
UnifyResult unify(const IntervalLikeRep& rep, std::string_view s1, std::string_view s2);

struct CondenseOptions {
    IsomorphismOptions isomorphism;
    /// Above the isomorphism cap, accept only unifications preserving the
    /// graph under the natural pair correspondence instead of throwing.
    bool natural_only_above_cap = false;
};

/// Greedy left-to-right condensing, restarting after every accepted
/// unification.
IntervalLikeRep condense(const IntervalLikeRep& rep, const CondenseOptions& options = {});
/// True iff no legal unification of consecutive ends keeps the decoded
/// graph up to isomorphism.
bool is_condensed(const IntervalLikeRep& rep, const CondenseOptions& options = {});

/// Interval model of g via maximal cliques and a consecutive clique
/// ordering found by backtracking; none if g is not an interval graph.
/// Twins receive identical intervals.  Desk scale only.
std::optional<IntervalModel> recognize_interval(const Graph& g, std::size_t cap = 16);

/// `i <id> <left> <right>` lines, optional `p <name> <value>` point names.
IntervalModel read_intervals(std::istream& in);
IntervalModel parse_intervals(std::string_view text);
void write_intervals(std::ostream& out, const IntervalModel& model);

/// One line of space-separated labels.
ChordDiagram read_chords(std::istream& in);
ChordDiagram parse_chords(std::string_view text);
void write_chords(std::ostream& out, const ChordDiagram& cd);

} // namespace twinwidth
