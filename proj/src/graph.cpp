#include <twinwidth/errors.hpp>
#include <twinwidth/graph.hpp>

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace twinwidth {

Graph::Graph(std::vector<std::string> ids)
{
    for (auto& id : ids)
        add_vertex(std::move(id));
}

std::size_t Graph::add_vertex(std::string id)
{
    if (id.empty())
        throw InvalidArgument("empty vertex id");
    if (id.find_first_of(" \t\r\n") != std::string::npos)
        throw InvalidArgument("vertex id '" + id + "' contains whitespace");
    if (index_.contains(id))
        throw InvalidArgument("duplicate vertex id '" + id + "'");
    const std::size_t v = ids_.size();
    index_.emplace(id, v);
    ids_.push_back(std::move(id));
    for (auto& row : adjacency_)
        row.push_back(false);
    adjacency_.emplace_back(ids_.size());
    return v;
}

void Graph::add_edge(std::size_t u, std::size_t v)
{
    set_edge(u, v, true);
}

void Graph::add_edge(std::string_view u, std::string_view v)
{
    add_edge(index(u), index(v));
}

void Graph::set_edge(std::size_t u, std::size_t v, bool present)
{
    if (u >= order() || v >= order())
        throw InvalidArgument("edge endpoint out of range");
    if (u == v)
        throw InvalidArgument("loop at vertex '" + ids_[u] + "'");
    adjacency_[u][v] = present;
    adjacency_[v][u] = present;
}

void Graph::toggle_edge(std::size_t u, std::size_t v)
{
    set_edge(u, v, ! adjacency_[u][v]);
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& row : adjacency_)
        total += row.count();
    return total / 2;
}

std::optional<std::size_t> Graph::find(std::string_view id) const
{
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Graph::index(std::string_view id) const
{
    auto found = find(id);
    if (! found)
        throw InvalidArgument("unknown vertex '" + std::string(id) + "'");
    return *found;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t u = 0; u < order(); ++u)
        for (auto v = adjacency_[u].find_next(u); v != Bitset::npos; v = adjacency_[u].find_next(v))
            result.emplace_back(u, v);
    return result;
}

std::vector<VertexPair> Graph::sorted_edges() const
{
    std::vector<VertexPair> result;
    for (auto [u, v] : edges()) {
        if (ids_[u] < ids_[v])
            result.emplace_back(ids_[u], ids_[v]);
        else
            result.emplace_back(ids_[v], ids_[u]);
    }
    std::sort(result.begin(), result.end());
    return result;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const
{
    Graph h;
    for (auto v : vertices)
        h.add_vertex(ids_.at(v));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacency_[vertices[a]][vertices[b]])
                h.add_edge(a, b);
    return h;
}

Graph Graph::induced_by_ids(std::span<const std::string> ids) const
{
    std::vector<std::size_t> vertices;
    vertices.reserve(ids.size());
    for (const auto& id : ids)
        vertices.push_back(index(id));
    return induced(vertices);
}

Graph Graph::complement() const
{
    Graph h(ids_);
    for (std::size_t u = 0; u < order(); ++u) {
        h.adjacency_[u] = ~adjacency_[u];
        h.adjacency_[u][u] = false;
    }
    return h;
}

Graph Graph::without_vertex(std::size_t v) const
{
    std::vector<std::size_t> keep;
    for (std::size_t u = 0; u < order(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced(keep);
}

bool same_labelled_graph(const Graph& g, const Graph& h)
{
    if (g.order() != h.order())
        return false;
    for (const auto& id : g.ids())
        if (! h.contains(id))
            return false;
    return g.sorted_edges() == h.sorted_edges();
}

Graph disjoint_union(const Graph& g, const Graph& h, std::string_view h_prefix)
{
    Graph result = g;
    std::vector<std::size_t> mapped;
    for (const auto& id : h.ids()) {
        std::string name = id;
        while (result.contains(name))
            name = std::string(h_prefix) + name;
        mapped.push_back(result.add_vertex(name));
    }
    for (auto [u, v] : h.edges())
        result.add_edge(mapped[u], mapped[v]);
    return result;
}

Graph permutation_graph(const Permutation& pi)
{
    Graph g;
    for (std::size_t i = 1; i <= pi.size(); ++i)
        g.add_vertex(std::to_string(i));
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi.image()[i] > pi.image()[j])
                g.add_edge(i, j);
    return g;
}

namespace {
    bool twins(const Graph& g, std::size_t u, std::size_t v)
    {
        Bitset a = g.neighbors(u);
        Bitset b = g.neighbors(v);
        a[v] = false;
        b[u] = false;
        return a == b;
    }
}

std::vector<std::pair<std::size_t, std::size_t>> find_twins(const Graph& g)
{
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (twins(g, u, v))
                result.emplace_back(u, v);
    return result;
}

bool is_twin_free(const Graph& g)
{
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (twins(g, u, v))
                return false;
    return true;
}

Graph twin_free_core(const Graph& g)
{
    Graph current = g;
    for (;;) {
        bool removed = false;
        for (std::size_t u = 0; u < current.order() && ! removed; ++u)
            for (std::size_t v = u + 1; v < current.order() && ! removed; ++v)
                if (twins(current, u, v)) {
                    current = current.without_vertex(v);
                    removed = true;
                }
        if (! removed)
            return current;
    }
}

namespace {
    struct Signature {
        std::size_t degree;
        std::vector<std::size_t> neighbour_degrees;

        friend bool operator==(const Signature&, const Signature&) = default;
        friend auto operator<=>(const Signature&, const Signature&) = default;
    };

    std::vector<Signature> signatures(const Graph& g)
    {
        std::vector<Signature> result(g.order());
        for (std::size_t v = 0; v < g.order(); ++v) {
            result[v].degree = g.degree(v);
            const auto& n = g.neighbors(v);
            for (auto w = n.find_first(); w != Bitset::npos; w = n.find_next(w))
                result[v].neighbour_degrees.push_back(g.degree(w));
            std::sort(result[v].neighbour_degrees.begin(), result[v].neighbour_degrees.end());
        }
        return result;
    }

    class IsomorphismSearch {
    public:
        IsomorphismSearch(const Graph& g, const Graph& h) : g_(g), h_(h), sig_g_(signatures(g)), sig_h_(signatures(h))
        {
            order_.resize(g.order());
            std::iota(order_.begin(), order_.end(), 0);
            // most constrained first: high degree, then rare signatures
            std::stable_sort(order_.begin(), order_.end(),
                             [&](std::size_t a, std::size_t b) { return sig_g_[a].degree > sig_g_[b].degree; });
            mapping_.assign(g.order(), npos);
            used_.assign(h.order(), false);
        }

        bool signatures_match() const
        {
            auto a = sig_g_;
            auto b = sig_h_;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            return a == b;
        }

        bool run() { return extend(0); }
        const std::vector<std::size_t>& mapping() const { return mapping_; }

    private:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        bool extend(std::size_t depth)
        {
            if (depth == order_.size())
                return true;
            const std::size_t v = order_[depth];
            for (std::size_t w = 0; w < h_.order(); ++w) {
                if (used_[w] || ! (sig_g_[v] == sig_h_[w]))
                    continue;
                bool consistent = true;
                for (std::size_t d = 0; d < depth && consistent; ++d) {
                    const std::size_t u = order_[d];
                    consistent = g_.adjacent(v, u) == h_.adjacent(w, mapping_[u]);
                }
                if (! consistent)
                    continue;
                mapping_[v] = w;
                used_[w] = true;
                if (extend(depth + 1))
                    return true;
                used_[w] = false;
                mapping_[v] = npos;
            }
            return false;
        }

        const Graph& g_;
        const Graph& h_;
        std::vector<Signature> sig_g_, sig_h_;
        std::vector<std::size_t> order_;
        std::vector<std::size_t> mapping_;
        std::vector<bool> used_;
    };
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h,
                                                         const IsomorphismOptions& options)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return std::nullopt;
    if (g.order() > options.cap)
        throw CapExceeded("isomorphism", g.order(), options.cap);
    IsomorphismSearch search(g, h);
    if (! search.signatures_match())
        return std::nullopt;
    if (! search.run())
        return std::nullopt;
    return search.mapping();
}

bool is_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& options)
{
    return find_isomorphism(g, h, options).has_value();
}

namespace {
    bool embed(const Graph& g, const Graph& pattern, std::vector<std::size_t>& chosen, std::vector<bool>& used)
    {
        const std::size_t k = chosen.size();
        if (k == pattern.order())
            return true;
        for (std::size_t v = 0; v < g.order(); ++v) {
            if (used[v] || g.degree(v) < pattern.degree(k))
                continue;
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a)
                ok = g.adjacent(chosen[a], v) == pattern.adjacent(a, k);
            if (! ok)
                continue;
            chosen.push_back(v);
            used[v] = true;
            if (embed(g, pattern, chosen, used))
                return true;
            used[v] = false;
            chosen.pop_back();
        }
        return false;
    }
}

bool contains_induced(const Graph& g, const Graph& pattern, std::vector<std::size_t>* embedding)
{
    if (pattern.order() > g.order())
        return false;
    std::vector<std::size_t> chosen;
    std::vector<bool> used(g.order(), false);
    if (! embed(g, pattern, chosen, used))
        return false;
    if (embedding)
        *embedding = chosen;
    return true;
}

Graph read_graph(std::istream& in, std::string* name)
{
    std::string line;
    bool have_header = false;
    std::size_t declared_n = 0, declared_m = 0;
    Graph g;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tag;
        if (! (tokens >> tag) || tag[0] == '#')
            continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("graph line " + std::to_string(line_no) + ": " + why);
        };
        if (! have_header) {
            std::string graph_name;
            if (tag != "graph" || ! (tokens >> graph_name >> declared_n >> declared_m))
                fail("expected header 'graph <name> <n> <m>'");
            if (name)
                *name = graph_name;
            have_header = true;
            continue;
        }
        std::string a, b, extra;
        try {
            if (tag == "v") {
                if (! (tokens >> a) || (tokens >> extra))
                    fail("expected 'v <id>'");
                g.add_vertex(a);
            }
            else if (tag == "e") {
                if (! (tokens >> a >> b) || (tokens >> extra))
                    fail("expected 'e <id> <id>'");
                auto u = g.index(a), v = g.index(b);
                if (g.adjacent(u, v))
                    fail("duplicate edge " + a + " " + b);
                g.add_edge(u, v);
            }
            else
                fail("unknown record '" + tag + "'");
        }
        catch (const ParseError&) {
            throw;
        }
        catch (const Error& e) {
            fail(e.what());
        }
    }
    if (! have_header)
        throw ParseError("graph: missing header");
    if (g.order() != declared_n || g.edge_count() != declared_m)
        throw ParseError("graph: header declares " + std::to_string(declared_n) + " vertices and " +
                         std::to_string(declared_m) + " edges, file has " + std::to_string(g.order()) + " and " +
                         std::to_string(g.edge_count()));
    return g;
}

Graph parse_graph(std::string_view text, std::string* name)
{
    std::istringstream in{std::string(text)};
    return read_graph(in, name);
}

void write_graph(std::ostream& out, const Graph& g, std::string_view name)
{
    auto ids = g.ids();
    std::sort(ids.begin(), ids.end());
    out << "graph " << name << ' ' << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& id : ids)
        out << "v " << id << '\n';
    for (const auto& [u, v] : g.sorted_edges())
        out << "e " << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g, std::string_view name)
{
    std::ostringstream out;
    write_graph(out, g, name);
    return out.str();
}

} // namespace twinwidth
