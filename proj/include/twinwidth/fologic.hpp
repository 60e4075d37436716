#pragma once

#include <twinwidth/errors.hpp>
#include <twinwidth/graph.hpp>
#include <twinwidth/ilrep.hpp>
#include <twinwidth/permutation.hpp>
#include <twinwidth/trimatrix.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace twinwidth {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormulaKind { True, False, Equal, Atom, Not, And, Or, Implies, Forall, Exists };

/// Immutable FO syntax tree.  Atoms carry a relation name and one or two
/// variables; quantifiers bind `var` in children[0].
struct Formula {
    FormulaKind kind = FormulaKind::True;
    std::string name;
    std::vector<std::string> vars;
    std::vector<FormulaPtr> children;
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_equal(std::string x, std::string y);
FormulaPtr f_atom(std::string relation, std::vector<std::string> vars);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> fs);
FormulaPtr f_or(std::vector<FormulaPtr> fs);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_forall(std::string var, FormulaPtr body);
FormulaPtr f_exists(std::string var, FormulaPtr body);

/// S-expressions: `true`, `false`, `(= x y)`, `(R x)`, `(R x y)`, `(not f)`,
/// `(and f...)`, `(or f...)`, `(implies f g)`, `(forall x f)`,
/// `(exists (x y) f)`.  `;` starts a comment.
FormulaPtr parse_formula(std::string_view text);
std::string to_string(const Formula& f);
inline std::string to_string(const FormulaPtr& f) { return to_string(*f); }
bool same_formula(const Formula& a, const Formula& b);

std::set<std::string> free_variables(const Formula& f);
std::size_t quantifier_depth(const Formula& f);

/// Finite structure with named binary relations and unary marks.
class Structure {
public:
    Structure() = default;
    explicit Structure(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    void add_relation(const std::string& rel);
    void set(const std::string& rel, std::size_t a, std::size_t b, bool value = true);
    bool holds(const std::string& rel, std::size_t a, std::size_t b) const;
    bool has_relation(const std::string& rel) const { return relations_.contains(rel); }

    void add_mark(const std::string& mark);
    void set_mark(const std::string& mark, std::size_t a, bool value = true);
    bool marked(const std::string& mark, std::size_t a) const;
    bool has_mark(const std::string& mark) const { return marks_.contains(mark); }

    std::vector<std::string> relation_names() const;
    std::vector<std::string> mark_names() const;
    /// Row-major size()×size() table, or null.
    const std::vector<bool>* relation_table(const std::string& rel) const;
    const std::vector<bool>* mark_table(const std::string& mark) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::vector<bool>> relations_;
    std::map<std::string, std::vector<bool>> marks_;
};

/// Domain V(g), symmetric relation "edge".
Structure structure_of_graph(const Graph& g);
/// Domain R ∪ S (row keys, then column keys) with A1(i,j) iff a_ij = 1 and
/// A2(i,j) iff a_ij = 2.
Structure structure_of_matrix(const TriMatrix& m);
/// Graph on the domain; u ~ v iff rel(u,v) or rel(v,u), u ≠ v.
Graph graph_of_structure(const Structure& s, const std::string& rel = "edge");

struct EvalOptions {
    /// Maximum number of quantifier instantiations.
    std::size_t budget = 10'000'000;
};

using Assignment = std::map<std::string, std::size_t>;

/// Brute-force truth value.  Free variables must be bound by `assignment`.
/// Throws CapExceeded when the budget runs out and InvalidArgument on
/// unknown relations, arity mismatch or unbound variables.
bool evaluate(const Structure& s, const Formula& f, const Assignment& assignment = {}, const EvalOptions& options = {});
inline bool evaluate(const Structure& s, const FormulaPtr& f, const Assignment& assignment = {},
                     const EvalOptions& options = {})
{
    return evaluate(s, *f, assignment, options);
}

/// Non-copying interpretation into binary relations: domain formula over
/// `domain_var`, one formula over (x, y) per output relation.
struct Interpretation {
    struct Relation {
        std::string x = "x";
        std::string y = "y";
        FormulaPtr body;
    };
    std::string domain_var = "x";
    FormulaPtr domain;
    std::map<std::string, Relation> relations;
};

Structure interpret(const Interpretation& iota, const Structure& s, const EvalOptions& options = {});

/// Formula over the target signature translated to the source signature:
/// quantifiers are relativized to the domain formula and atoms replaced by
/// their defining formulas, renaming bound variables to avoid capture.
FormulaPtr rewrite(const Interpretation& iota, const FormulaPtr& f);

/// f with free occurrences of variables renamed per `renaming`, bound
/// variables renamed apart where needed.
FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, std::string>& renaming);

/// Interpretations decoding il-matrix structures (A1, A2) into interval and
/// overlap graphs; the edge relation is the irreflexive symmetric closure.
Interpretation iota_interval();
Interpretation iota_overlap();
Interpretation iota_for(RepKind kind);
Interpretation identity_interpretation();

/// N_j(x) ⊆ N_j(y) restricted to the mark m_j.
FormulaPtr leq_formula(const std::string& mark, const std::string& x, const std::string& y);
/// ≤_j is a linear order on the m-marked elements.
FormulaPtr linear_order_formula(const std::string& domain_mark, const std::string& mark);

/// Marks m, m1, m2 (vertex ids, pairwise disjoint) supplied by the caller:
/// returns the permutation defined by ≤1, ≤2 on m if both are linear orders.
std::optional<Permutation> transduce_tau(const Graph& g, const std::vector<std::string>& m,
                                         const std::vector<std::string>& m1, const std::vector<std::string>& m2,
                                         const EvalOptions& options = {});
/// Union over all 4^n assignments of disjoint marks.  Throws CapExceeded
/// when |V| > cap.
std::set<Permutation> transduce_tau_all(const Graph& g, std::size_t cap = 6, const EvalOptions& options = {});

struct PipelineResult {
    bool value = false;
    std::size_t ends_before = 0;
    std::size_t ends_after = 0;
    std::size_t domain_size = 0;
    FormulaPtr rewritten;
};

/// rep → condense → il-matrix → rewrite(f) → evaluate on the matrix.
PipelineResult modelcheck_pipeline(const IntervalLikeRep& rep, const FormulaPtr& f, const EvalOptions& options = {});

} // namespace twinwidth
