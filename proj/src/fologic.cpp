#include <twinwidth/fologic.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace twinwidth {

// Construction

namespace {
    FormulaPtr make(FormulaKind kind, std::string name = {}, std::vector<std::string> vars = {},
                    std::vector<FormulaPtr> children = {})
    {
        auto f = std::make_shared<Formula>();
        f->kind = kind;
        f->name = std::move(name);
        f->vars = std::move(vars);
        f->children = std::move(children);
        return f;
    }
}

FormulaPtr f_true() { return make(FormulaKind::True); }
FormulaPtr f_false() { return make(FormulaKind::False); }
FormulaPtr f_equal(std::string x, std::string y) { return make(FormulaKind::Equal, "=", {std::move(x), std::move(y)}); }

FormulaPtr f_atom(std::string relation, std::vector<std::string> vars)
{
    if (vars.empty() || vars.size() > 2)
        throw InvalidArgument("relation '" + relation + "' used with arity " + std::to_string(vars.size()));
    return make(FormulaKind::Atom, std::move(relation), std::move(vars));
}

FormulaPtr f_not(FormulaPtr f) { return make(FormulaKind::Not, {}, {}, {std::move(f)}); }
FormulaPtr f_and(std::vector<FormulaPtr> fs) { return make(FormulaKind::And, {}, {}, std::move(fs)); }
FormulaPtr f_or(std::vector<FormulaPtr> fs) { return make(FormulaKind::Or, {}, {}, std::move(fs)); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return make(FormulaKind::Implies, {}, {}, {std::move(a), std::move(b)}); }
FormulaPtr f_forall(std::string var, FormulaPtr body) { return make(FormulaKind::Forall, {}, {std::move(var)}, {std::move(body)}); }
FormulaPtr f_exists(std::string var, FormulaPtr body) { return make(FormulaKind::Exists, {}, {std::move(var)}, {std::move(body)}); }

// Parsing and printing

namespace {
    class Parser {
    public:
        explicit Parser(std::string_view text) : text_(text) {}

        FormulaPtr parse()
        {
            FormulaPtr f = formula();
            skip();
            if (pos_ != text_.size())
                fail("trailing input");
            return f;
        }

    private:
        [[noreturn]] void fail(const std::string& what) const
        {
            throw ParseError("formula: " + what + " at offset " + std::to_string(pos_));
        }

        void skip()
        {
            while (pos_ < text_.size()) {
                if (std::isspace(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                else if (text_[pos_] == ';')
                    while (pos_ < text_.size() && text_[pos_] != '\n')
                        ++pos_;
                else
                    break;
            }
        }

        bool peek(char c)
        {
            skip();
            return pos_ < text_.size() && text_[pos_] == c;
        }

        void expect(char c)
        {
            if (! peek(c))
                fail(std::string("expected '") + c + "'");
            ++pos_;
        }

        std::string word()
        {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && ! std::isspace(static_cast<unsigned char>(text_[pos_])) &&
                   text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';')
                ++pos_;
            if (start == pos_)
                fail("expected a word");
            return std::string(text_.substr(start, pos_ - start));
        }

        std::string variable()
        {
            std::string v = word();
            if (! (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
                fail("bad variable '" + v + "'");
            return v;
        }

        FormulaPtr formula()
        {
            if (! peek('(')) {
                std::string w = word();
                if (w == "true")
                    return f_true();
                if (w == "false")
                    return f_false();
                fail("unexpected '" + w + "'");
            }
            expect('(');
            std::string op = word();
            FormulaPtr out;
            if (op == "not") {
                out = f_not(formula());
            } else if (op == "and" || op == "or") {
                std::vector<FormulaPtr> parts;
                while (! peek(')'))
                    parts.push_back(formula());
                out = op == "and" ? f_and(std::move(parts)) : f_or(std::move(parts));
            } else if (op == "implies") {
                FormulaPtr a = formula();
                out = f_implies(a, formula());
            } else if (op == "forall" || op == "exists") {
                std::vector<std::string> vars;
                if (peek('(')) {
                    expect('(');
                    while (! peek(')'))
                        vars.push_back(variable());
                    expect(')');
                    if (vars.empty())
                        fail("empty variable list");
                } else {
                    vars.push_back(variable());
                }
                out = formula();
                for (auto it = vars.rbegin(); it != vars.rend(); ++it)
                    out = op == "forall" ? f_forall(*it, out) : f_exists(*it, out);
            } else if (op == "=") {
                std::string x = variable();
                out = f_equal(x, variable());
            } else {
                std::vector<std::string> vars;
                while (! peek(')'))
                    vars.push_back(variable());
                if (vars.empty() || vars.size() > 2)
                    fail("relation '" + op + "' needs one or two variables");
                out = f_atom(op, std::move(vars));
            }
            expect(')');
            return out;
        }

        std::string_view text_;
        std::size_t pos_ = 0;
    };

    void print(const Formula& f, std::string& out)
    {
        auto list = [&](const char* op) {
            out += '(';
            out += op;
            for (const auto& c : f.children) {
                out += ' ';
                print(*c, out);
            }
            out += ')';
        };
        switch (f.kind) {
        case FormulaKind::True: out += "true"; break;
        case FormulaKind::False: out += "false"; break;
        case FormulaKind::Equal:
        case FormulaKind::Atom:
            out += '(' + f.name;
            for (const auto& v : f.vars)
                out += ' ' + v;
            out += ')';
            break;
        case FormulaKind::Not: list("not"); break;
        case FormulaKind::And: list("and"); break;
        case FormulaKind::Or: list("or"); break;
        case FormulaKind::Implies: list("implies"); break;
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            out += f.kind == FormulaKind::Forall ? "(forall " : "(exists ";
            out += f.vars[0] + ' ';
            print(*f.children[0], out);
            out += ')';
            break;
        }
    }

    void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out)
    {
        if (f.kind == FormulaKind::Equal || f.kind == FormulaKind::Atom) {
            for (const auto& v : f.vars)
                if (! bound.contains(v))
                    out.insert(v);
            return;
        }
        if (f.kind == FormulaKind::Forall || f.kind == FormulaKind::Exists) {
            bool fresh = bound.insert(f.vars[0]).second;
            collect_free(*f.children[0], bound, out);
            if (fresh)
                bound.erase(f.vars[0]);
            return;
        }
        for (const auto& c : f.children)
            collect_free(*c, bound, out);
    }

    void collect_all(const Formula& f, std::set<std::string>& out)
    {
        out.insert(f.vars.begin(), f.vars.end());
        for (const auto& c : f.children)
            collect_all(*c, out);
    }
}

FormulaPtr parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f)
{
    std::string out;
    print(f, out);
    return out;
}

bool same_formula(const Formula& a, const Formula& b)
{
    if (a.kind != b.kind || a.name != b.name || a.vars != b.vars || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (! same_formula(*a.children[i], *b.children[i]))
            return false;
    return true;
}

std::set<std::string> free_variables(const Formula& f)
{
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::size_t quantifier_depth(const Formula& f)
{
    std::size_t below = 0;
    for (const auto& c : f.children)
        below = std::max(below, quantifier_depth(*c));
    return below + (f.kind == FormulaKind::Forall || f.kind == FormulaKind::Exists);
}

// Structures

Structure::Structure(std::vector<std::string> names) : names_(std::move(names)) {}

void Structure::add_relation(const std::string& rel)
{
    if (marks_.contains(rel))
        throw InvalidArgument("'" + rel + "' is already a mark");
    relations_.try_emplace(rel, std::vector<bool>(size() * size(), false));
}

void Structure::set(const std::string& rel, std::size_t a, std::size_t b, bool value)
{
    auto it = relations_.find(rel);
    if (it == relations_.end())
        throw InvalidArgument("unknown relation '" + rel + "'");
    if (a >= size() || b >= size())
        throw InvalidArgument("element out of range");
    it->second[a * size() + b] = value;
}

bool Structure::holds(const std::string& rel, std::size_t a, std::size_t b) const
{
    auto it = relations_.find(rel);
    if (it == relations_.end())
        throw InvalidArgument("unknown relation '" + rel + "'");
    return it->second.at(a * size() + b);
}

void Structure::add_mark(const std::string& mark)
{
    if (relations_.contains(mark))
        throw InvalidArgument("'" + mark + "' is already a relation");
    marks_.try_emplace(mark, std::vector<bool>(size(), false));
}

void Structure::set_mark(const std::string& mark, std::size_t a, bool value)
{
    auto it = marks_.find(mark);
    if (it == marks_.end())
        throw InvalidArgument("unknown mark '" + mark + "'");
    it->second.at(a) = value;
}

bool Structure::marked(const std::string& mark, std::size_t a) const
{
    auto it = marks_.find(mark);
    if (it == marks_.end())
        throw InvalidArgument("unknown mark '" + mark + "'");
    return it->second.at(a);
}

std::vector<std::string> Structure::relation_names() const
{
    std::vector<std::string> out;
    for (const auto& [name, table] : relations_)
        out.push_back(name);
    return out;
}

std::vector<std::string> Structure::mark_names() const
{
    std::vector<std::string> out;
    for (const auto& [name, table] : marks_)
        out.push_back(name);
    return out;
}

const std::vector<bool>* Structure::relation_table(const std::string& rel) const
{
    auto it = relations_.find(rel);
    return it == relations_.end() ? nullptr : &it->second;
}

const std::vector<bool>* Structure::mark_table(const std::string& mark) const
{
    auto it = marks_.find(mark);
    return it == marks_.end() ? nullptr : &it->second;
}

Structure structure_of_graph(const Graph& g)
{
    Structure s(g.ids());
    s.add_relation("edge");
    for (auto [u, v] : g.edges()) {
        s.set("edge", u, v);
        s.set("edge", v, u);
    }
    return s;
}

Structure structure_of_matrix(const TriMatrix& m)
{
    std::vector<std::string> names = m.row_keys();
    names.insert(names.end(), m.col_keys().begin(), m.col_keys().end());
    Structure s(std::move(names));
    s.add_relation("A1");
    s.add_relation("A2");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == Entry::One)
                s.set("A1", i, m.rows() + j);
            else if (m.at(i, j) == Entry::Two)
                s.set("A2", i, m.rows() + j);
        }
    return s;
}

Graph graph_of_structure(const Structure& s, const std::string& rel)
{
    Graph g(s.names());
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s.holds(rel, a, b) || s.holds(rel, b, a))
                g.add_edge(a, b);
    return g;
}

// Evaluation

namespace {
    struct Node {
        FormulaKind kind;
        const std::vector<bool>* table = nullptr;
        std::size_t a = 0, b = 0;
        std::vector<Node> children;
    };

    class Evaluator {
    public:
        Evaluator(const Structure& s, const EvalOptions& options) : s_(s), options_(options) {}

        Node compile(const Formula& f, std::map<std::string, std::size_t>& scope)
        {
            Node node{f.kind, nullptr, 0, 0, {}};
            auto slot = [&](const std::string& v) {
                auto it = scope.find(v);
                if (it == scope.end())
                    throw InvalidArgument("unbound variable '" + v + "'");
                return it->second;
            };
            switch (f.kind) {
            case FormulaKind::Equal:
                node.a = slot(f.vars[0]);
                node.b = slot(f.vars[1]);
                break;
            case FormulaKind::Atom:
                if (f.vars.size() == 2) {
                    node.table = s_.relation_table(f.name);
                    if (! node.table)
                        throw InvalidArgument(s_.has_mark(f.name) ? "arity mismatch for '" + f.name + "'"
                                                                  : "unknown relation '" + f.name + "'");
                    node.b = slot(f.vars[1]);
                } else {
                    node.table = s_.mark_table(f.name);
                    if (! node.table)
                        throw InvalidArgument(s_.has_relation(f.name) ? "arity mismatch for '" + f.name + "'"
                                                                      : "unknown mark '" + f.name + "'");
                    node.b = SIZE_MAX;
                }
                node.a = slot(f.vars[0]);
                break;
            case FormulaKind::Forall:
            case FormulaKind::Exists: {
                const std::string& v = f.vars[0];
                auto previous = scope.find(v);
                std::optional<std::size_t> saved;
                if (previous != scope.end())
                    saved = previous->second;
                node.a = slots_++;
                scope[v] = node.a;
                node.children.push_back(compile(*f.children[0], scope));
                if (saved)
                    scope[v] = *saved;
                else
                    scope.erase(v);
                break;
            }
            default:
                for (const auto& c : f.children)
                    node.children.push_back(compile(*c, scope));
            }
            return node;
        }

        bool run(const Node& root, std::vector<std::size_t> env)
        {
            env.resize(slots_);
            env_ = std::move(env);
            return eval(root);
        }

        std::size_t slots_ = 0;

    private:
        bool eval(const Node& n)
        {
            switch (n.kind) {
            case FormulaKind::True: return true;
            case FormulaKind::False: return false;
            case FormulaKind::Equal: return env_[n.a] == env_[n.b];
            case FormulaKind::Atom:
                if (n.b == SIZE_MAX)
                    return (*n.table)[env_[n.a]];
                return (*n.table)[env_[n.a] * s_.size() + env_[n.b]];
            case FormulaKind::Not: return ! eval(n.children[0]);
            case FormulaKind::And:
                for (const auto& c : n.children)
                    if (! eval(c))
                        return false;
                return true;
            case FormulaKind::Or:
                for (const auto& c : n.children)
                    if (eval(c))
                        return true;
                return false;
            case FormulaKind::Implies: return ! eval(n.children[0]) || eval(n.children[1]);
            case FormulaKind::Forall:
            case FormulaKind::Exists: {
                const bool want = n.kind == FormulaKind::Exists;
                for (std::size_t e = 0; e < s_.size(); ++e) {
                    if (++used_ > options_.budget)
                        throw CapExceeded("FO evaluation assignments", used_, options_.budget);
                    env_[n.a] = e;
                    if (eval(n.children[0]) == want)
                        return want;
                }
                return ! want;
            }
            }
            return false;
        }

        const Structure& s_;
        EvalOptions options_;
        std::vector<std::size_t> env_;
        std::size_t used_ = 0;
    };
}

bool evaluate(const Structure& s, const Formula& f, const Assignment& assignment, const EvalOptions& options)
{
    Evaluator ev(s, options);
    std::map<std::string, std::size_t> scope;
    std::vector<std::size_t> env;
    for (const auto& [var, element] : assignment) {
        if (element >= s.size())
            throw InvalidArgument("assignment of '" + var + "' is outside the domain");
        scope[var] = ev.slots_++;
        env.push_back(element);
    }
    Node root = ev.compile(f, scope);
    return ev.run(root, std::move(env));
}

// Interpretations

Structure interpret(const Interpretation& iota, const Structure& s, const EvalOptions& options)
{
    std::vector<std::size_t> domain;
    for (std::size_t e = 0; e < s.size(); ++e)
        if (evaluate(s, *iota.domain, {{iota.domain_var, e}}, options))
            domain.push_back(e);
    std::vector<std::string> names;
    for (auto e : domain)
        names.push_back(s.name(e));
    Structure out(std::move(names));
    for (const auto& [name, rel] : iota.relations) {
        out.add_relation(name);
        for (std::size_t a = 0; a < domain.size(); ++a)
            for (std::size_t b = 0; b < domain.size(); ++b) {
                Assignment at = rel.x == rel.y ? Assignment{{rel.x, domain[a]}}
                                               : Assignment{{rel.x, domain[a]}, {rel.y, domain[b]}};
                if (rel.x == rel.y && a != b)
                    continue;
                if (evaluate(s, *rel.body, at, options))
                    out.set(name, a, b);
            }
    }
    return out;
}

namespace {
    std::string fresh_name(const std::string& base, const std::set<std::string>& taken)
    {
        for (std::size_t i = 1;; ++i) {
            std::string candidate = base + "_" + std::to_string(i);
            if (! taken.contains(candidate))
                return candidate;
        }
    }

    FormulaPtr substitute_in(const FormulaPtr& f, std::map<std::string, std::string> renaming,
                             std::set<std::string>& taken)
    {
        switch (f->kind) {
        case FormulaKind::True:
        case FormulaKind::False: return f;
        case FormulaKind::Equal:
        case FormulaKind::Atom: {
            std::vector<std::string> vars;
            for (const auto& v : f->vars) {
                auto it = renaming.find(v);
                vars.push_back(it == renaming.end() ? v : it->second);
            }
            return make(f->kind, f->name, std::move(vars));
        }
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            std::string v = f->vars[0];
            renaming.erase(v);
            const auto body_free = free_variables(*f->children[0]);
            bool captures = false;
            for (const auto& [from, to] : renaming)
                captures = captures || (to == v && body_free.contains(from));
            if (captures) {
                std::string renamed = fresh_name(v, taken);
                taken.insert(renamed);
                renaming[v] = renamed;
                v = renamed;
            }
            return make(f->kind, {}, {v}, {substitute_in(f->children[0], renaming, taken)});
        }
        default: {
            std::vector<FormulaPtr> children;
            for (const auto& c : f->children)
                children.push_back(substitute_in(c, renaming, taken));
            return make(f->kind, {}, {}, std::move(children));
        }
        }
    }
}

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, std::string>& renaming)
{
    std::set<std::string> taken;
    collect_all(*f, taken);
    for (const auto& [from, to] : renaming) {
        taken.insert(from);
        taken.insert(to);
    }
    return substitute_in(f, renaming, taken);
}

FormulaPtr rewrite(const Interpretation& iota, const FormulaPtr& f)
{
    auto domain_of = [&](const std::string& v) { return substitute(iota.domain, {{iota.domain_var, v}}); };
    switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Equal: return f;
    case FormulaKind::Atom: {
        auto it = iota.relations.find(f->name);
        if (it == iota.relations.end() || f->vars.size() != 2)
            throw InvalidArgument("the interpretation does not define '" + f->name + "/" +
                                  std::to_string(f->vars.size()) + "'");
        const auto& rel = it->second;
        return substitute(rel.body, {{rel.x, f->vars[0]}, {rel.y, f->vars[1]}});
    }
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
        std::vector<FormulaPtr> children;
        for (const auto& c : f->children)
            children.push_back(rewrite(iota, c));
        return make(f->kind, {}, {}, std::move(children));
    }
    case FormulaKind::Exists:
        return f_exists(f->vars[0], f_and({domain_of(f->vars[0]), rewrite(iota, f->children[0])}));
    case FormulaKind::Forall:
        return f_forall(f->vars[0], f_implies(domain_of(f->vars[0]), rewrite(iota, f->children[0])));
    }
    return f;
}

namespace {
    Interpretation il_interpretation(const char* base)
    {
        Interpretation iota;
        iota.domain_var = "x";
        iota.domain = parse_formula("(exists c (A1 x c))");
        FormulaPtr forward = parse_formula(base);
        FormulaPtr backward = substitute(forward, {{"x", "y"}, {"y", "x"}});
        iota.relations["edge"] = {"x", "y", f_and({f_not(f_equal("x", "y")), f_or({forward, backward})})};
        return iota;
    }

    // s1 <= t1 and t1 <= s2
    constexpr const char* interval_base = "(and (forall c (or (not (A2 x c)) (A2 y c)))"
                                          "     (forall c (implies (A1 x c) (not (A2 y c)))))";
    // additionally s2 <= t2: every row with a 2 in column t2 has one in s2
    constexpr const char* overlap_base = "(and (forall c (or (not (A2 x c)) (A2 y c)))"
                                         "     (forall c (implies (A1 x c) (not (A2 y c))))"
                                         "     (forall (c d) (implies (and (A1 x c) (A1 y d))"
                                         "                            (forall r (implies (A2 r d) (A2 r c))))))";
}

Interpretation iota_interval() { return il_interpretation(interval_base); }
Interpretation iota_overlap() { return il_interpretation(overlap_base); }
Interpretation iota_for(RepKind kind) { return kind == RepKind::Interval ? iota_interval() : iota_overlap(); }

Interpretation identity_interpretation()
{
    Interpretation iota;
    iota.domain = f_true();
    iota.relations["edge"] = {"x", "y", f_atom("edge", {"x", "y"})};
    return iota;
}

// The exposure transduction

FormulaPtr leq_formula(const std::string& mark, const std::string& x, const std::string& y)
{
    std::string z = "z";
    while (z == x || z == y)
        z += "'";
    return f_forall(z, f_implies(f_atom(mark, {z}), f_implies(f_atom("edge", {x, z}), f_atom("edge", {y, z}))));
}

FormulaPtr linear_order_formula(const std::string& domain_mark, const std::string& mark)
{
    auto in = [&](const char* v) { return f_atom(domain_mark, {v}); };
    auto leq = [&](const char* a, const char* b) { return leq_formula(mark, a, b); };
    FormulaPtr total = f_or({leq("x", "y"), leq("y", "x")});
    FormulaPtr antisymmetric = f_implies(f_and({leq("x", "y"), leq("y", "x")}), f_equal("x", "y"));
    FormulaPtr pairs = f_forall("x", f_forall("y", f_implies(f_and({in("x"), in("y")}), f_and({total, antisymmetric}))));
    FormulaPtr transitive = f_forall(
        "x", f_forall("y", f_forall("z'", f_implies(f_and({in("x"), in("y"), in("z'")}),
                                                    f_implies(f_and({leq("x", "y"), leq("y", "z'")}),
                                                              leq("x", "z'"))))));
    return f_and({pairs, transitive});
}

namespace {
    std::optional<Permutation> tau_on(const Structure& s, const EvalOptions& options)
    {
        for (const char* mark : {"m1", "m2"})
            if (! evaluate(s, linear_order_formula("m", mark), {}, options))
                return std::nullopt;
        std::vector<std::size_t> domain;
        for (std::size_t e = 0; e < s.size(); ++e)
            if (s.marked("m", e))
                domain.push_back(e);
        std::vector<std::vector<std::size_t>> orders;
        for (const char* mark : {"m1", "m2"}) {
            FormulaPtr leq = leq_formula(mark, "x", "y");
            std::vector<std::size_t> rank(domain.size(), 0);
            for (std::size_t a = 0; a < domain.size(); ++a)
                for (std::size_t b = 0; b < domain.size(); ++b)
                    rank[a] += evaluate(s, leq, {{"x", domain[b]}, {"y", domain[a]}}, options);
            std::vector<std::size_t> order(domain.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
            orders.push_back(std::move(order));
        }
        return permutation_from_orders(orders[0], orders[1]);
    }

    Structure marked_structure(const Graph& g)
    {
        Structure s = structure_of_graph(g);
        for (const char* mark : {"m", "m1", "m2"})
            s.add_mark(mark);
        return s;
    }
}

std::optional<Permutation> transduce_tau(const Graph& g, const std::vector<std::string>& m,
                                         const std::vector<std::string>& m1, const std::vector<std::string>& m2,
                                         const EvalOptions& options)
{
    Structure s = marked_structure(g);
    std::vector<bool> used(g.order(), false);
    auto mark = [&](const char* name, const std::vector<std::string>& ids) {
        for (const auto& id : ids) {
            std::size_t v = g.index(id);
            if (used[v])
                throw InvalidArgument("marks are not disjoint at '" + id + "'");
            used[v] = true;
            s.set_mark(name, v);
        }
    };
    mark("m", m);
    mark("m1", m1);
    mark("m2", m2);
    return tau_on(s, options);
}

std::set<Permutation> transduce_tau_all(const Graph& g, std::size_t cap, const EvalOptions& options)
{
    if (g.order() > cap)
        throw CapExceeded("exhaustive mark expansion vertex count", g.order(), cap);
    std::set<Permutation> out;
    const std::size_t n = g.order();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        Structure s = marked_structure(g);
        std::size_t c = code;
        for (std::size_t v = 0; v < n; ++v, c /= 4)
            if (c % 4)
                s.set_mark(c % 4 == 1 ? "m" : c % 4 == 2 ? "m1" : "m2", v);
        if (auto pi = tau_on(s, options))
            out.insert(*pi);
    }
    return out;
}

PipelineResult modelcheck_pipeline(const IntervalLikeRep& rep, const FormulaPtr& f, const EvalOptions& options)
{
    PipelineResult result;
    result.ends_before = rep.ends().size();
    IntervalLikeRep condensed = condense(rep);
    result.ends_after = condensed.ends().size();
    IlMatrix il = build_ilmatrix(condensed);
    Structure s = structure_of_matrix(il.matrix);
    result.domain_size = s.size();
    result.rewritten = rewrite(iota_for(rep.kind()), f);
    result.value = evaluate(s, result.rewritten, {}, options);
    return result;
}

} // namespace twinwidth
