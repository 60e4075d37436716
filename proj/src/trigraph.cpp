#include <twinwidth/trigraph.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace twinwidth {

Trigraph::Trigraph(const Graph& g) : ids_(g.ids())
{
    black_.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        black_.push_back(g.neighbors(v));
        red_.emplace_back(g.order());
    }
}

std::optional<std::size_t> Trigraph::find(std::string_view id) const
{
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Trigraph::index(std::string_view id) const
{
    auto found = find(id);
    if (! found)
        throw InvalidArgument("unknown vertex '" + std::string(id) + "'");
    return *found;
}

std::size_t Trigraph::max_red_degree() const
{
    std::size_t best = 0;
    for (const auto& row : red_)
        best = std::max(best, row.count());
    return best;
}

std::size_t Trigraph::red_edge_count() const
{
    std::size_t total = 0;
    for (const auto& row : red_)
        total += row.count();
    return total / 2;
}

std::size_t Trigraph::black_edge_count() const
{
    std::size_t total = 0;
    for (const auto& row : black_)
        total += row.count();
    return total / 2;
}

void Trigraph::add_black_edge(std::size_t u, std::size_t v)
{
    if (u == v)
        throw InvalidArgument("loop in trigraph");
    red_[u][v] = red_[v][u] = false;
    black_[u][v] = black_[v][u] = true;
}

void Trigraph::add_red_edge(std::size_t u, std::size_t v)
{
    if (u == v)
        throw InvalidArgument("loop in trigraph");
    black_[u][v] = black_[v][u] = false;
    red_[u][v] = red_[v][u] = true;
}

Trigraph Trigraph::contract(std::string_view u, std::string_view v, std::string new_id) const
{
    return contract(index(u), index(v), std::move(new_id));
}

namespace {
    Bitset erase_bit(const Bitset& b, std::size_t pos)
    {
        Bitset out(b.size() - 1);
        for (std::size_t i = 0, j = 0; i < b.size(); ++i) {
            if (i == pos)
                continue;
            out[j++] = b[i];
        }
        return out;
    }
}

Trigraph Trigraph::contract(std::size_t u, std::size_t v, std::string new_id) const
{
    if (u >= order() || v >= order())
        throw InvalidArgument("contraction of unknown vertex");
    if (u == v)
        throw InvalidArgument("contraction of a vertex with itself ('" + ids_[u] + "')");
    if (new_id.empty())
        throw InvalidArgument("empty id for merged vertex");
    for (std::size_t w = 0; w < order(); ++w)
        if (w != u && w != v && ids_[w] == new_id)
            throw InvalidArgument("merged id '" + new_id + "' already in use");

    const std::size_t keep = std::min(u, v);
    const std::size_t drop = std::max(u, v);

    Bitset nu = neighbors(u), nv = neighbors(v);
    Bitset all = nu | nv;
    Bitset red = (red_[u] | red_[v]) | (nu ^ nv);
    all[u] = all[v] = false;
    red[u] = red[v] = false;
    Bitset black = all - red;

    Trigraph out = *this;
    out.ids_[keep] = std::move(new_id);
    for (std::size_t w = 0; w < order(); ++w) {
        if (w == u || w == v)
            continue;
        out.black_[w][keep] = black[w];
        out.red_[w][keep] = red[w];
    }
    out.black_[keep] = black;
    out.red_[keep] = red;

    out.ids_.erase(out.ids_.begin() + static_cast<std::ptrdiff_t>(drop));
    out.black_.erase(out.black_.begin() + static_cast<std::ptrdiff_t>(drop));
    out.red_.erase(out.red_.begin() + static_cast<std::ptrdiff_t>(drop));
    for (std::size_t w = 0; w < out.order(); ++w) {
        out.black_[w] = erase_bit(out.black_[w], drop);
        out.red_[w] = erase_bit(out.red_[w], drop);
    }
    return out;
}

std::string merged_name(const std::vector<std::string>& existing, std::string_view u, std::string_view v)
{
    std::string name = std::string(u) + std::string(v);
    auto taken = [&](const std::string& candidate) {
        for (const auto& id : existing)
            if (id == candidate && id != u && id != v)
                return true;
        return false;
    };
    while (taken(name))
        name += '\'';
    return name;
}

Trigraph contract(const Trigraph& t, std::string_view u, std::string_view v)
{
    return t.contract(u, v, merged_name(t.ids(), u, v));
}

std::size_t sequence_width(const Graph& g, const ContractionSequence& seq)
{
    if (g.order() == 0) {
        if (! seq.empty())
            throw MalformedSequence("non-empty sequence on the empty graph");
        return 0;
    }
    if (seq.size() != g.order() - 1)
        throw MalformedSequence("sequence has " + std::to_string(seq.size()) + " steps, a full sequence needs " +
                                std::to_string(g.order() - 1));
    Trigraph t(g);
    std::size_t width = t.max_red_degree();
    std::size_t step_no = 0;
    for (const auto& step : seq) {
        ++step_no;
        auto u = t.find(step.u), v = t.find(step.v);
        if (! u || ! v)
            throw MalformedSequence("step " + std::to_string(step_no) + " references missing vertex '" +
                                    (u ? step.v : step.u) + "'");
        if (*u == *v)
            throw MalformedSequence("step " + std::to_string(step_no) + " contracts a vertex with itself");
        auto clash = t.find(step.merged);
        if (clash && *clash != *u && *clash != *v)
            throw MalformedSequence("step " + std::to_string(step_no) + " reuses id '" + step.merged + "'");
        t = t.contract(*u, *v, step.merged);
        width = std::max(width, t.max_red_degree());
    }
    return width;
}

ContractionSequence read_sequence(std::istream& in)
{
    ContractionSequence seq;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tag;
        if (! (tokens >> tag) || tag[0] == '#')
            continue;
        ContractionStep step;
        std::string extra;
        if (tag != "c" || ! (tokens >> step.u >> step.v >> step.merged) || (tokens >> extra))
            throw ParseError("sequence line " + std::to_string(line_no) + ": expected 'c <u> <v> <new>'");
        seq.push_back(std::move(step));
    }
    return seq;
}

ContractionSequence parse_sequence(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_sequence(in);
}

void write_sequence(std::ostream& out, const ContractionSequence& seq)
{
    for (const auto& step : seq)
        out << "c " << step.u << ' ' << step.v << ' ' << step.merged << '\n';
}

} // namespace twinwidth
