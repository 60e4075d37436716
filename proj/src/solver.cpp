#include <twinwidth/solver.hpp>

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <numeric>
#include <unordered_set>

namespace twinwidth {

namespace {
    using Mask = std::uint64_t;
    using Partition = std::vector<Mask>;

    struct PartitionHash {
        std::size_t operator()(const Partition& p) const noexcept
        {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (Mask x : p)
                h = (h ^ std::hash<Mask>{}(x)) * 0x100000001b3ULL;
            return h;
        }
    };

    enum class Link : std::uint8_t { None, Black, Red };

    class GraphSolver {
    public:
        GraphSolver(const Graph& g, const ExactOptions& options) : g_(g), options_(options)
        {
            adj_.assign(g.order(), 0);
            for (std::size_t v = 0; v < g.order(); ++v)
                for (std::size_t u = 0; u < g.order(); ++u)
                    if (g.adjacent(u, v))
                        adj_[v] |= Mask{1} << u;
        }

        SolveResult solve()
        {
            Partition start;
            for (std::size_t v = 0; v < g_.order(); ++v)
                start.push_back(Mask{1} << v);

            SolveResult greedy = twinwidth_greedy(g_);
            std::size_t upper = greedy.value;
            SolveResult result;
            result.optimal = true;
            std::optional<std::vector<Partition>> best;
            for (std::size_t d = 0; d < upper; ++d) {
                failed_.clear();
                path_.assign(1, start);
                int verdict = dfs(start, d);
                if (verdict == 1) {
                    best = path_;
                    upper = d;
                    break;
                }
                if (verdict == -1) {
                    result.optimal = false;
                    break;
                }
            }
            result.value = upper;
            result.sequence = best ? sequence_of(*best) : greedy.sequence;
            result.nodes_explored = nodes_;
            return result;
        }

    private:
        Link link(Mask p, Mask q) const
        {
            bool any_full = false, any_empty = false;
            for (Mask m = p; m; m &= m - 1) {
                Mask x = adj_[static_cast<std::size_t>(std::countr_zero(m))] & q;
                if (x == q)
                    any_full = true;
                else if (x == 0)
                    any_empty = true;
                else
                    return Link::Red;
                if (any_full && any_empty)
                    return Link::Red;
            }
            return any_full ? Link::Black : Link::None;
        }

        std::vector<Link> links(const Partition& p) const
        {
            const std::size_t n = p.size();
            std::vector<Link> table(n * n, Link::None);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    table[a * n + b] = table[b * n + a] = link(p[a], p[b]);
            return table;
        }

        std::size_t max_red(const Partition& p) const
        {
            const auto table = links(p);
            const std::size_t n = p.size();
            std::size_t best = 0;
            for (std::size_t a = 0; a < n; ++a) {
                std::size_t deg = 0;
                for (std::size_t b = 0; b < n; ++b)
                    deg += table[a * n + b] == Link::Red;
                best = std::max(best, deg);
            }
            return best;
        }

        static Partition merged(const Partition& p, std::size_t a, std::size_t b)
        {
            Partition out;
            out.reserve(p.size() - 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i == b)
                    continue;
                out.push_back(i == a ? p[a] | p[b] : p[i]);
            }
            return out;
        }

        std::vector<Partition> successors(const Partition& p) const
        {
            const auto table = links(p);
            const std::size_t n = p.size();
            std::vector<std::pair<std::size_t, Partition>> cand;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    std::size_t dist = 0;
                    for (std::size_t c = 0; c < n; ++c)
                        if (c != a && c != b)
                            dist += table[a * n + c] != table[b * n + c];
                    if (dist == 0)
                        return {merged(p, a, b)};
                    cand.emplace_back(dist, merged(p, a, b));
                }
            std::stable_sort(cand.begin(), cand.end(),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
            std::vector<Partition> out;
            for (auto& c : cand)
                out.push_back(std::move(c.second));
            return out;
        }

        int dfs(const Partition& p, std::size_t d)
        {
            if (p.size() <= 1)
                return 1;
            if (++nodes_ > options_.node_budget)
                return -1;
            if (failed_.contains(p))
                return 0;
            for (auto& next : successors(p)) {
                if (max_red(next) > d)
                    continue;
                path_.push_back(next);
                int v = dfs(next, d);
                if (v != 0)
                    return v;
                path_.pop_back();
            }
            failed_.insert(p);
            return 0;
        }

        ContractionSequence sequence_of(const std::vector<Partition>& path) const
        {
            std::map<Mask, std::string> name;
            std::vector<std::string> current = g_.ids();
            for (std::size_t v = 0; v < g_.order(); ++v)
                name[Mask{1} << v] = g_.id(v);
            ContractionSequence seq;
            for (std::size_t s = 1; s < path.size(); ++s) {
                std::vector<Mask> gone;
                for (Mask m : path[s - 1])
                    if (std::find(path[s].begin(), path[s].end(), m) == path[s].end())
                        gone.push_back(m);
                if (gone.size() != 2)
                    throw InternalError("inconsistent partition path");
                const std::string u = name.at(gone[0]), v = name.at(gone[1]);
                std::string merged_id = merged_name(current, u, v);
                seq.push_back({u, v, merged_id});
                std::erase(current, u);
                std::erase(current, v);
                current.push_back(merged_id);
                name[gone[0] | gone[1]] = merged_id;
            }
            return seq;
        }

        const Graph& g_;
        ExactOptions options_;
        std::vector<Mask> adj_;
        std::unordered_set<Partition, PartitionHash> failed_;
        std::vector<Partition> path_;
        std::size_t nodes_ = 0;
    };
}

SolveResult twinwidth_exact(const Graph& g, const ExactOptions& options)
{
    if (g.order() > options.cap)
        throw CapExceeded("exact twin-width vertex count", g.order(), options.cap);
    if (g.order() > 64)
        throw CapExceeded("exact twin-width vertex count", g.order(), 64);
    SolveResult result = GraphSolver(g, options).solve();
    if (sequence_width(g, result.sequence) != result.value)
        throw InternalError("exact solver produced a sequence of a different width");
    return result;
}

SolveResult twinwidth_greedy(const Graph& g)
{
    SolveResult result;
    Trigraph t(g);
    std::size_t width = 0;
    while (t.order() > 1) {
        const std::size_t n = t.order();
        std::vector<std::size_t> by_id(n);
        std::iota(by_id.begin(), by_id.end(), 0);
        std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return t.id(a) < t.id(b); });
        std::vector<std::size_t> deg(n);
        for (std::size_t v = 0; v < n; ++v)
            deg[v] = t.red_degree(v);

        std::size_t best_value = SIZE_MAX, best_u = 0, best_v = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const std::size_t u = by_id[a], v = by_id[b];
                Bitset red = t.red_neighbors(u) | t.red_neighbors(v) | (t.neighbors(u) ^ t.neighbors(v));
                red[u] = red[v] = false;
                std::size_t value = red.count();
                for (std::size_t w = 0; w < n && value < best_value; ++w) {
                    if (w == u || w == v)
                        continue;
                    std::size_t after = deg[w] - t.red(w, u) - t.red(w, v) + red[w];
                    value = std::max(value, after);
                }
                if (value < best_value) {
                    best_value = value;
                    best_u = u;
                    best_v = v;
                }
            }
        std::string u = t.id(best_u), v = t.id(best_v);
        std::string merged_id = merged_name(t.ids(), u, v);
        t = t.contract(best_u, best_v, merged_id);
        width = std::max(width, t.max_red_degree());
        result.sequence.push_back({u, v, merged_id});
        ++result.nodes_explored;
    }
    result.value = width;
    result.optimal = false;
    return result;
}

bool verify_sequence(const Graph& g, const ContractionSequence& seq, std::size_t claimed)
{
    return sequence_width(g, seq) == claimed;
}

// Orderings

namespace {
    std::vector<std::size_t> similarity_order(const std::vector<std::vector<Entry>>& vectors)
    {
        const std::size_t n = vectors.size();
        std::vector<std::size_t> order;
        if (n == 0)
            return order;
        auto distance = [&](std::size_t a, std::size_t b) {
            std::size_t d = 0;
            for (std::size_t i = 0; i < vectors[a].size(); ++i)
                d += vectors[a][i] != vectors[b][i];
            return d;
        };
        std::vector<bool> used(n, false);
        order.push_back(0);
        used[0] = true;
        while (order.size() < n) {
            std::size_t best = SIZE_MAX, pick = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (! used[c]) {
                    std::size_t d = distance(order.back(), c);
                    if (d < best) {
                        best = d;
                        pick = c;
                    }
                }
            used[pick] = true;
            order.push_back(pick);
        }
        return order;
    }
}

OrderingResult ordering_without_mixed_minor(const TriMatrix& m, std::size_t k, const OrderingOptions& options)
{
    OrderingResult result;
    auto attempt = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, const char* method) {
        ++result.orderings_tried;
        if (find_mixed_minor(m.permuted(rows, cols), k))
            return false;
        result.status = OrderingStatus::Found;
        result.row_order = rows;
        result.col_order = cols;
        result.method = method;
        return true;
    };

    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    if (attempt(rows, cols, "native"))
        return result;

    std::vector<std::vector<Entry>> row_vectors, col_vectors;
    for (std::size_t i = 0; i < m.rows(); ++i)
        row_vectors.push_back(m.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j)
        col_vectors.push_back(m.column(j));
    if (attempt(similarity_order(row_vectors), similarity_order(col_vectors), "similarity"))
        return result;

    const bool small = m.rows() <= options.exhaustive_cap && m.cols() <= options.exhaustive_cap;
    if (! options.allow_exhaustive || ! small) {
        if (options.allow_exhaustive)
            throw CapExceeded("exhaustive ordering dimension", std::max(m.rows(), m.cols()), options.exhaustive_cap);
        result.status = OrderingStatus::Unknown;
        return result;
    }
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            if (attempt(rows, cols, "exhaustive"))
                return result;
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    result.status = OrderingStatus::None;
    result.method = "exhaustive";
    return result;
}

} // namespace twinwidth
