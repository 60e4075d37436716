#include <twinwidth/ilrep.hpp>

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace twinwidth {

// Rational

Rational::Rational(long long num, long long den)
{
    if (den == 0)
        throw InvalidArgument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0)
        g = 1;
    num_ = num / g;
    den_ = den / g;
}

namespace {
    long long parse_integer(std::string_view text, std::string_view whole)
    {
        if (text.empty() || text.size() > 18)
            throw ParseError("bad number '" + std::string(whole) + "'");
        long long v = 0;
        for (char c : text) {
            if (c < '0' || c > '9')
                throw ParseError("bad number '" + std::string(whole) + "'");
            v = v * 10 + (c - '0');
        }
        return v;
    }
}

Rational Rational::parse(std::string_view text)
{
    std::string_view rest = text;
    bool negative = false;
    if (! rest.empty() && (rest[0] == '-' || rest[0] == '+')) {
        negative = rest[0] == '-';
        rest.remove_prefix(1);
    }
    long long num = 0, den = 1;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = parse_integer(rest.substr(0, slash), text);
        den = parse_integer(rest.substr(slash + 1), text);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        auto int_part = rest.substr(0, dot);
        auto frac_part = rest.substr(dot + 1);
        if (int_part.size() + frac_part.size() > 18 || frac_part.empty())
            throw ParseError("bad number '" + std::string(text) + "'");
        num = int_part.empty() ? 0 : parse_integer(int_part, text);
        for (char c : frac_part) {
            if (c < '0' || c > '9')
                throw ParseError("bad number '" + std::string(text) + "'");
            num = num * 10 + (c - '0');
            den *= 10;
        }
    }
    else {
        num = parse_integer(rest, text);
    }
    return Rational(negative ? -num : num, den);
}

std::string Rational::to_string() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(RepKind kind)
{
    return kind == RepKind::Interval ? "interval" : "overlap";
}

RepKind parse_kind(std::string_view text)
{
    if (text == "interval")
        return RepKind::Interval;
    if (text == "overlap")
        return RepKind::Overlap;
    throw InvalidArgument("kind must be 'interval' or 'overlap', got '" + std::string(text) + "'");
}

// IntervalLikeRep

IntervalLikeRep::IntervalLikeRep(std::vector<std::string> ends, std::vector<EndPair> pairs, RepKind kind)
    : ends_(std::move(ends)), pairs_(std::move(pairs)), kind_(kind)
{
    std::unordered_set<std::string> seen;
    for (const auto& e : ends_) {
        if (e.empty() || e.find_first_of(" \t\r\n") != std::string::npos)
            throw InvalidArgument("bad end id '" + e + "'");
        if (! seen.insert(e).second)
            throw InvalidArgument("duplicate end id '" + e + "'");
    }
    for (auto& p : pairs_) {
        if (p.s1 >= ends_.size() || p.s2 >= ends_.size())
            throw InvalidArgument("pair references a missing end");
        if (p.s1 > p.s2)
            throw InvalidArgument("pair (" + ends_[p.s1] + "," + ends_[p.s2] + ") has s1 > s2");
        if (p.label.empty())
            p.label = pair_key(p.s1, p.s2);
    }
    std::sort(pairs_.begin(), pairs_.end(),
              [](const EndPair& a, const EndPair& b) { return std::tie(a.s1, a.s2) < std::tie(b.s1, b.s2); });
    std::unordered_set<std::string> labels;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i > 0 && pairs_[i].s1 == pairs_[i - 1].s1 && pairs_[i].s2 == pairs_[i - 1].s2)
            throw InvalidArgument("duplicate pair " + pair_key(pairs_[i].s1, pairs_[i].s2));
        if (pairs_[i].label.find_first_of(" \t\r\n") != std::string::npos)
            throw InvalidArgument("label '" + pairs_[i].label + "' contains whitespace");
        if (! labels.insert(pairs_[i].label).second)
            throw InvalidArgument("duplicate label '" + pairs_[i].label + "'");
    }
}

std::size_t IntervalLikeRep::end_index(std::string_view end) const
{
    auto it = std::find(ends_.begin(), ends_.end(), end);
    if (it == ends_.end())
        throw InvalidArgument("unknown end '" + std::string(end) + "'");
    return static_cast<std::size_t>(it - ends_.begin());
}

std::optional<std::size_t> IntervalLikeRep::find_pair(std::size_t s1, std::size_t s2) const
{
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{s1, s2}, [](const EndPair& p, const auto& key) {
        return std::tie(p.s1, p.s2) < std::tie(key.first, key.second);
    });
    if (it == pairs_.end() || it->s1 != s1 || it->s2 != s2)
        return std::nullopt;
    return static_cast<std::size_t>(it - pairs_.begin());
}

std::string IntervalLikeRep::pair_key(std::size_t s1, std::size_t s2) const
{
    return "(" + ends_.at(s1) + "," + ends_.at(s2) + ")";
}

IntervalLikeRep IntervalLikeRep::with_kind(RepKind kind) const
{
    IntervalLikeRep out = *this;
    out.kind_ = kind;
    return out;
}

// Construction from geometry

IntervalLikeRep rep_from_intervals(const IntervalModel& model, RepKind kind)
{
    std::set<Rational> values;
    for (const auto& iv : model.intervals) {
        if (iv.left > iv.right)
            throw InvalidArgument("interval '" + iv.id + "' has left end > right end");
        values.insert(iv.left);
        values.insert(iv.right);
    }
    std::vector<Rational> sorted(values.begin(), values.end());
    std::vector<std::string> ends;
    for (const auto& v : sorted) {
        auto named = model.point_names.find(v);
        ends.push_back(named != model.point_names.end() ? named->second : v.to_string());
    }
    auto rank = [&](const Rational& v) {
        return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    std::vector<EndPair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& iv : model.intervals) {
        EndPair p{rank(iv.left), rank(iv.right), iv.id};
        if (! seen.insert({p.s1, p.s2}).second)
            throw InvalidArgument("duplicate interval [" + iv.left.to_string() + "," + iv.right.to_string() +
                                  "] ('" + iv.id + "')");
        pairs.push_back(std::move(p));
    }
    return IntervalLikeRep(std::move(ends), std::move(pairs), kind);
}

void validate_chords(const ChordDiagram& cd)
{
    std::map<std::string, int> count;
    for (const auto& label : cd.sequence) {
        if (label.empty() || label.find_first_of(" \t\r\n") != std::string::npos)
            throw InvalidArgument("bad chord label '" + label + "'");
        ++count[label];
    }
    for (const auto& [label, c] : count)
        if (c != 2)
            throw InvalidArgument("chord '" + label + "' appears " + std::to_string(c) + " times, expected 2");
}

namespace {
    // label -> (first position, second position)
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> chord_positions(const ChordDiagram& cd)
    {
        validate_chords(cd);
        std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> out;
        std::unordered_map<std::string, std::size_t> first;
        for (std::size_t i = 0; i < cd.sequence.size(); ++i) {
            const auto& label = cd.sequence[i];
            auto it = first.find(label);
            if (it == first.end())
                first.emplace(label, i);
            else
                out.push_back({label, {it->second, i}});
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        return out;
    }
}

IntervalLikeRep rep_from_chords(const ChordDiagram& cd)
{
    auto chords = chord_positions(cd);
    std::vector<std::string> ends(cd.sequence.size());
    std::vector<EndPair> pairs;
    for (const auto& [label, pos] : chords) {
        ends[pos.first] = label + "1";
        ends[pos.second] = label + "2";
        pairs.push_back({pos.first, pos.second, label});
    }
    return IntervalLikeRep(std::move(ends), std::move(pairs), RepKind::Overlap);
}

Graph chord_intersection_graph(const ChordDiagram& cd)
{
    auto chords = chord_positions(cd);
    Graph g;
    for (const auto& c : chords)
        g.add_vertex(c.first);
    auto strictly_between = [](std::size_t x, std::pair<std::size_t, std::size_t> c) {
        return c.first < x && x < c.second;
    };
    for (std::size_t a = 0; a < chords.size(); ++a)
        for (std::size_t b = a + 1; b < chords.size(); ++b) {
            auto ca = chords[a].second, cb = chords[b].second;
            bool first_in = strictly_between(cb.first, ca);
            bool second_in = strictly_between(cb.second, ca);
            if (first_in != second_in)
                g.add_edge(a, b);
        }
    return g;
}

// Decoding

namespace {
    bool alpha(const EndPair& s, const EndPair& t, RepKind kind)
    {
        if (kind == RepKind::Interval)
            return s.s1 <= t.s1 && t.s1 <= s.s2;
        return s.s1 <= t.s1 && t.s1 <= s.s2 && s.s2 <= t.s2;
    }
}

Graph decode(const IntervalLikeRep& rep)
{
    Graph g;
    const auto& pairs = rep.pairs();
    for (const auto& p : pairs)
        g.add_vertex(p.label);
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b)
            if (alpha(pairs[a], pairs[b], rep.kind()) || alpha(pairs[b], pairs[a], rep.kind()))
                g.add_edge(a, b);
    return g;
}

IlMatrix build_ilmatrix(const IntervalLikeRep& rep)
{
    std::vector<std::pair<std::size_t, std::size_t>> rows;
    for (const auto& p : rep.pairs())
        rows.emplace_back(p.s1, p.s2);
    for (std::size_t t = 0; t < rep.ends().size(); ++t)
        if (! rep.find_pair(t, t))
            rows.emplace_back(t, t);
    std::sort(rows.begin(), rows.end());

    std::vector<std::string> row_keys;
    for (const auto& [s1, s2] : rows)
        row_keys.push_back(rep.pair_key(s1, s2));
    IlMatrix out;
    out.matrix = TriMatrix(row_keys, rep.ends());
    out.rep = rep;
    out.row_ends = rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto [s1, s2] = rows[i];
        auto pair = rep.find_pair(s1, s2);
        out.row_pair.push_back(pair);
        for (std::size_t j = 0; j < s1; ++j)
            out.matrix.set(i, j, Entry::Two);
        if (pair)
            out.matrix.set(i, s2, Entry::One);
    }
    return out;
}

IlMatrix ilmatrix_from_matrix(const TriMatrix& m, RepKind kind)
{
    const std::size_t S = m.cols();
    std::vector<std::pair<std::size_t, std::size_t>> rows;
    std::vector<bool> has_one;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t prefix = 0;
        while (prefix < S && m.at(i, prefix) == Entry::Two)
            ++prefix;
        std::optional<std::size_t> one;
        for (std::size_t j = prefix; j < S; ++j) {
            Entry e = m.at(i, j);
            if (e == Entry::Two || e == Entry::Red)
                throw InvalidArgument("row '" + m.row_key(i) + "': entries 2 must form a prefix, no r allowed");
            if (e == Entry::One) {
                if (one)
                    throw InvalidArgument("row '" + m.row_key(i) + "' has two entries 1");
                one = j;
            }
        }
        if (prefix == S)
            throw InvalidArgument("row '" + m.row_key(i) + "' consists of 2s only");
        rows.emplace_back(prefix, one ? *one : prefix);
        has_one.push_back(one.has_value());
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (! (rows[i - 1] < rows[i]))
            throw InvalidArgument("rows are not strictly sorted lexicographically (row '" + m.row_key(i) + "')");
    std::set<std::size_t> diagonal;
    for (const auto& [s1, s2] : rows)
        if (s1 == s2)
            diagonal.insert(s1);
    if (diagonal.size() != S)
        throw InvalidArgument("some end has no (t,t) row");

    std::vector<EndPair> pairs;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (has_one[i])
            pairs.push_back({rows[i].first, rows[i].second, m.row_key(i)});
    IlMatrix out;
    out.matrix = m;
    out.rep = IntervalLikeRep(m.col_keys(), std::move(pairs), kind);
    out.row_ends = rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        out.row_pair.push_back(has_one[i] ? out.rep.find_pair(rows[i].first, rows[i].second) : std::nullopt);
    return out;
}

Graph decode_from_matrix(const IlMatrix& il, RepKind kind)
{
    const TriMatrix& m = il.matrix;
    const std::size_t R = m.rows(), S = m.cols();
    auto a1 = [&](std::size_t x, std::size_t c) { return m.at(x, c) == Entry::One; };
    auto a2 = [&](std::size_t x, std::size_t c) { return m.at(x, c) == Entry::Two; };

    std::vector<std::size_t> domain;
    for (std::size_t x = 0; x < R; ++x)
        for (std::size_t c = 0; c < S; ++c)
            if (a1(x, c)) {
                domain.push_back(x);
                break;
            }

    auto base = [&](std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < S; ++c)
            if (a2(x, c) && ! a2(y, c))
                return false;
        for (std::size_t c = 0; c < S; ++c)
            if (a1(x, c) && a2(y, c))
                return false;
        return true;
    };
    auto ends_ordered = [&](std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < S; ++c) {
            if (! a1(x, c))
                continue;
            for (std::size_t c2 = 0; c2 < S; ++c2) {
                if (! a1(y, c2))
                    continue;
                // c <= c2 iff every row with a 2 in column c2 has one in c
                for (std::size_t r = 0; r < R; ++r)
                    if (a2(r, c2) && ! a2(r, c))
                        return false;
            }
        }
        return true;
    };
    auto formula = [&](std::size_t x, std::size_t y) {
        return base(x, y) && (kind == RepKind::Interval || ends_ordered(x, y));
    };

    Graph g;
    for (auto x : domain) {
        const auto& pair = il.row_pair.at(x);
        g.add_vertex(pair ? il.rep.pairs()[*pair].label : m.row_key(x));
    }
    for (std::size_t a = 0; a < domain.size(); ++a)
        for (std::size_t b = a + 1; b < domain.size(); ++b)
            if (formula(domain[a], domain[b]) || formula(domain[b], domain[a]))
                g.add_edge(a, b);
    return g;
}

// Unification and condensing

UnifyResult unify(const IntervalLikeRep& rep, std::string_view s1, std::string_view s2)
{
    const std::size_t i = rep.end_index(s1), j = rep.end_index(s2);
    if (j != i + 1)
        throw InvalidArgument("ends '" + std::string(s1) + "' and '" + std::string(s2) + "' are not consecutive");
    auto map_end = [i, j](std::size_t e) { return e == j ? i : (e > j ? e - 1 : e); };
    std::vector<std::string> ends = rep.ends();
    ends.erase(ends.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<EndPair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    bool legal = true;
    for (const auto& p : rep.pairs()) {
        EndPair q{map_end(p.s1), map_end(p.s2), p.label};
        if (! seen.insert({q.s1, q.s2}).second) {
            legal = false;
            continue;
        }
        pairs.push_back(std::move(q));
    }
    return {IntervalLikeRep(std::move(ends), std::move(pairs), rep.kind()), legal};
}

namespace {
    bool preserves_graph(const Graph& before, const IntervalLikeRep& after, const CondenseOptions& options)
    {
        Graph g = decode(after);
        if (same_labelled_graph(before, g))
            return true;
        if (std::max(before.order(), g.order()) > options.isomorphism.cap && options.natural_only_above_cap)
            return false;
        return is_isomorphic(before, g, options.isomorphism);
    }

    std::optional<IntervalLikeRep> first_unification(const IntervalLikeRep& rep, const Graph& graph,
                                                     const CondenseOptions& options)
    {
        for (std::size_t i = 0; i + 1 < rep.ends().size(); ++i) {
            auto [next, legal] = unify(rep, rep.ends()[i], rep.ends()[i + 1]);
            if (legal && preserves_graph(graph, next, options))
                return next;
        }
        return std::nullopt;
    }
}

IntervalLikeRep condense(const IntervalLikeRep& rep, const CondenseOptions& options)
{
    const Graph graph = decode(rep);
    IntervalLikeRep current = rep;
    while (auto next = first_unification(current, graph, options))
        current = std::move(*next);
    return current;
}

bool is_condensed(const IntervalLikeRep& rep, const CondenseOptions& options)
{
    return ! first_unification(rep, decode(rep), options).has_value();
}

// Interval recognition

namespace {
    using Mask = std::uint64_t;

    void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out)
    {
        if (! p && ! x) {
            out.push_back(r);
            return;
        }
        Mask px = p | x;
        std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
        std::size_t best = 0;
        for (Mask m = px; m; m &= m - 1) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(m));
            std::size_t c = static_cast<std::size_t>(std::popcount(p & adj[u]));
            if (c >= best) {
                best = c;
                pivot = u;
            }
        }
        for (Mask m = p & ~adj[pivot]; m; m &= m - 1) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(m));
            Mask bit = Mask{1} << v;
            bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
            p &= ~bit;
            x |= bit;
        }
    }

    bool order_cliques(const std::vector<Mask>& cliques, std::vector<bool>& used, std::vector<std::size_t>& order,
                       Mask seen, Mask last)
    {
        if (order.size() == cliques.size())
            return true;
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            if (used[c])
                continue;
            // vertices already left behind may not reappear
            if (cliques[c] & seen & ~last)
                continue;
            used[c] = true;
            order.push_back(c);
            if (order_cliques(cliques, used, order, seen | cliques[c], cliques[c]))
                return true;
            order.pop_back();
            used[c] = false;
        }
        return false;
    }
}

std::optional<IntervalModel> recognize_interval(const Graph& g, std::size_t cap)
{
    const std::size_t n = g.order();
    if (n > cap || n > 64)
        throw CapExceeded("interval recognition size", n, std::min<std::size_t>(cap, 64));
    std::vector<Mask> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
            if (g.adjacent(u, v))
                adj[v] |= Mask{1} << u;
    std::vector<Mask> cliques;
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    if (n > 0)
        bron_kerbosch(adj, 0, all, 0, cliques);
    std::sort(cliques.begin(), cliques.end());
    std::vector<bool> used(cliques.size(), false);
    std::vector<std::size_t> order;
    if (! order_cliques(cliques, used, order, 0, 0))
        return std::nullopt;
    IntervalModel model;
    for (std::size_t v = 0; v < n; ++v) {
        long long first = -1, last = -1;
        for (std::size_t k = 0; k < order.size(); ++k)
            if (cliques[order[k]] >> v & 1) {
                if (first < 0)
                    first = static_cast<long long>(k);
                last = static_cast<long long>(k);
            }
        model.intervals.push_back({g.id(v), Rational(first), Rational(last)});
    }
    return model;
}

// Text formats

namespace {
    bool skip_line(const std::string& line)
    {
        auto first = line.find_first_not_of(" \t\r");
        return first == std::string::npos || line[first] == '#';
    }
}

IntervalModel read_intervals(std::istream& in)
{
    IntervalModel model;
    std::set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip_line(line))
            continue;
        std::istringstream tokens(line);
        std::string tag, a, b, c, extra;
        tokens >> tag;
        auto where = "interval line " + std::to_string(line_no) + ": ";
        if (tag == "i") {
            if (! (tokens >> a >> b >> c) || (tokens >> extra))
                throw ParseError(where + "expected 'i <id> <left> <right>'");
            if (! ids.insert(a).second)
                throw ParseError(where + "duplicate interval id '" + a + "'");
            model.intervals.push_back({a, Rational::parse(b), Rational::parse(c)});
        }
        else if (tag == "p") {
            if (! (tokens >> a >> b) || (tokens >> extra))
                throw ParseError(where + "expected 'p <name> <value>'");
            auto value = Rational::parse(b);
            if (! model.point_names.emplace(value, a).second)
                throw ParseError(where + "point " + value.to_string() + " named twice");
        }
        else
            throw ParseError(where + "unknown record '" + tag + "'");
    }
    std::set<std::string> names;
    for (const auto& [value, name] : model.point_names)
        if (! names.insert(name).second)
            throw ParseError("point name '" + name + "' used twice");
    return model;
}

IntervalModel parse_intervals(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_intervals(in);
}

void write_intervals(std::ostream& out, const IntervalModel& model)
{
    for (const auto& [value, name] : model.point_names)
        out << "p " << name << ' ' << value.to_string() << '\n';
    std::vector<const Interval*> sorted;
    for (const auto& iv : model.intervals)
        sorted.push_back(&iv);
    std::sort(sorted.begin(), sorted.end(), [](const Interval* a, const Interval* b) { return a->id < b->id; });
    for (const auto* iv : sorted)
        out << "i " << iv->id << ' ' << iv->left.to_string() << ' ' << iv->right.to_string() << '\n';
}

ChordDiagram read_chords(std::istream& in)
{
    ChordDiagram cd;
    std::string line;
    bool found = false;
    while (std::getline(in, line)) {
        if (skip_line(line))
            continue;
        if (found)
            throw ParseError("chord file must contain a single line of labels");
        found = true;
        std::istringstream tokens(line);
        std::string label;
        while (tokens >> label)
            cd.sequence.push_back(label);
    }
    try {
        validate_chords(cd);
    }
    catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    return cd;
}

ChordDiagram parse_chords(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_chords(in);
}

void write_chords(std::ostream& out, const ChordDiagram& cd)
{
    for (std::size_t i = 0; i < cd.sequence.size(); ++i)
        out << (i ? " " : "") << cd.sequence[i];
    out << '\n';
}

} // namespace twinwidth
