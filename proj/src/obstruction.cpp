#include <twinwidth/obstruction.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace twinwidth {

// Permutation submatrices

namespace {
    struct Candidate {
        std::size_t row, col, left;
    };

    bool pick(const std::vector<std::vector<Candidate>>& cands, std::size_t k, std::vector<std::size_t>& lefts,
              std::vector<Candidate>& chosen)
    {
        if (k == cands.size())
            return true;
        for (const auto& c : cands[k]) {
            if (std::find(lefts.begin(), lefts.end(), c.left) != lefts.end())
                continue;
            lefts.push_back(c.left);
            chosen.push_back(c);
            if (pick(cands, k + 1, lefts, chosen))
                return true;
            lefts.pop_back();
            chosen.pop_back();
        }
        return false;
    }
}

PermSubmatrixWitness extract_perm_submatrix(const IlMatrix& m, const Permutation& pi)
{
    const std::size_t p = pi.size();
    if (p == 0)
        throw InvalidArgument("empty permutation");
    const std::size_t k = 2 * p + 1;
    auto minor = find_mixed_minor(m.matrix, k);
    if (! minor)
        throw InvalidArgument("the il-matrix has no " + std::to_string(k) + "-mixed minor");

    const Division& d = minor->division;
    std::vector<std::vector<Candidate>> cands(p);
    for (std::size_t t = 1; t <= p; ++t) {
        const std::size_t rb = 2 * t - 1, cb = 2 * static_cast<std::size_t>(pi(static_cast<int>(t)));
        for (std::size_t i = d.row_begin(rb); i < d.row_end(rb, m.matrix.rows()); ++i)
            for (std::size_t j = d.col_begin(cb); j < d.col_end(cb, m.matrix.cols()); ++j)
                if (m.matrix.at(i, j) == Entry::One)
                    cands[t - 1].push_back({i, j, m.row_ends[i].first});
    }
    std::vector<std::size_t> lefts;
    std::vector<Candidate> chosen;
    if (! pick(cands, 0, lefts, chosen))
        throw InternalError("no choice of ones with distinct left ends");

    PermSubmatrixWitness w;
    w.pi = pi;
    w.minor = *minor;
    for (const auto& c : chosen) {
        w.rows.push_back(c.row);
        w.cols.push_back(c.col);
    }
    std::sort(w.cols.begin(), w.cols.end());
    for (auto r : w.rows)
        w.row_keys.push_back(m.matrix.row_key(r));
    for (auto c : w.cols)
        w.col_keys.push_back(m.matrix.col_key(c));
    if (! check_perm_submatrix(m, w))
        throw InternalError("extracted submatrix is not the permutation matrix");
    return w;
}

bool check_perm_submatrix(const IlMatrix& m, const PermSubmatrixWitness& w)
{
    const std::size_t p = w.pi.size();
    if (w.rows.size() != p || w.cols.size() != p)
        return false;
    if (! std::is_sorted(w.rows.begin(), w.rows.end()) || ! std::is_sorted(w.cols.begin(), w.cols.end()))
        return false;
    TriMatrix expected = permutation_matrix(w.pi);
    std::set<std::size_t> lefts;
    for (std::size_t a = 0; a < p; ++a) {
        if (w.rows[a] >= m.matrix.rows() || ! lefts.insert(m.row_ends[w.rows[a]].first).second)
            return false;
        for (std::size_t b = 0; b < p; ++b)
            if (w.cols[b] >= m.matrix.cols() || m.matrix.at(w.rows[a], w.cols[b]) != expected.at(a, b))
                return false;
    }
    return true;
}

CircleWitness circle_permutation_witness(const Graph& g, const IntervalLikeRep& rep, const Permutation& pi)
{
    if (rep.kind() != RepKind::Overlap)
        throw InvalidArgument("circle witnesses need an overlap representation");
    IlMatrix il = build_ilmatrix(rep);
    CircleWitness out;
    // rows k < k' are adjacent iff their ones are not inverted, so the
    // submatrix is taken for the value complement of pi
    out.submatrix = extract_perm_submatrix(il, pi.complement());
    out.submatrix.pi = pi.complement();
    for (auto r : out.submatrix.rows)
        out.vertices.push_back(rep.pairs()[*il.row_pair[r]].label);

    Graph target = permutation_graph(pi);
    for (std::size_t a = 0; a < out.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < out.vertices.size(); ++b)
            if (g.adjacent(g.index(out.vertices[a]), g.index(out.vertices[b])) != target.adjacent(a, b))
                throw InternalError("extracted vertices do not induce the permutation graph");
    return out;
}

// Exposure

namespace {
    std::vector<std::size_t> indices_of(const Graph& h, const std::vector<std::string>& ids, std::vector<bool>& used)
    {
        std::vector<std::size_t> out;
        for (const auto& id : ids) {
            std::size_t v = h.index(id);
            if (used[v])
                throw InvalidArgument("exposure parts overlap at '" + id + "'");
            used[v] = true;
            out.push_back(v);
        }
        return out;
    }

    /// Order of W along a strict chain of neighbourhoods in `part`.
    std::optional<std::vector<std::size_t>> chain_order(const Graph& h, const std::vector<std::size_t>& w,
                                                        const std::vector<std::size_t>& part)
    {
        const std::size_t p = w.size();
        std::vector<Bitset> nb(p, Bitset(part.size()));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < part.size(); ++j)
                nb[i][j] = h.adjacent(w[i], part[j]);
        std::vector<std::size_t> order(p);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nb[a].count() < nb[b].count(); });
        for (std::size_t t = 0; t < p; ++t) {
            if (nb[order[t]].count() != t + 1)
                return std::nullopt;
            if (t > 0 && ! nb[order[t - 1]].is_subset_of(nb[order[t]]))
                return std::nullopt;
        }
        return order;
    }

    std::vector<std::string> chain_mates(const Graph& h, const std::vector<std::size_t>& w,
                                         const std::vector<std::size_t>& order, const std::vector<std::size_t>& part)
    {
        std::vector<std::string> mates(w.size());
        std::vector<bool> taken(part.size(), false);
        for (std::size_t t = 0; t < order.size(); ++t)
            for (std::size_t j = 0; j < part.size(); ++j)
                if (! taken[j] && h.adjacent(w[order[t]], part[j])) {
                    taken[j] = true;
                    mates[order[t]] = h.id(part[j]);
                }
        return mates;
    }
}

std::optional<Permutation> exposed_permutation(const Graph& h, const std::vector<std::string>& w,
                                               const std::vector<std::string>& w1, const std::vector<std::string>& w2)
{
    if (w.size() != w1.size() || w.size() != w2.size())
        throw InvalidArgument("exposure parts differ in size");
    std::vector<bool> used(h.order(), false);
    auto iw = indices_of(h, w, used), i1 = indices_of(h, w1, used), i2 = indices_of(h, w2, used);
    auto o1 = chain_order(h, iw, i1);
    auto o2 = chain_order(h, iw, i2);
    if (! o1 || ! o2)
        return std::nullopt;
    return permutation_from_orders(*o1, *o2);
}

bool check_exposes(const Graph& h, const std::vector<std::string>& w, const std::vector<std::string>& w1,
                   const std::vector<std::string>& w2, const Permutation& pi)
{
    auto got = exposed_permutation(h, w, w1, w2);
    return got && *got == pi;
}

bool check_exposes(const ExposureWitness& witness)
{
    if (! check_exposes(witness.h, witness.w, witness.mates1, witness.mates2, witness.pi))
        return false;
    // w is listed along the first chain and each mate is the new element
    std::vector<bool> used(witness.h.order(), false);
    auto iw = indices_of(witness.h, witness.w, used);
    auto i1 = indices_of(witness.h, witness.mates1, used);
    auto i2 = indices_of(witness.h, witness.mates2, used);
    auto o1 = *chain_order(witness.h, iw, i1);
    auto o2 = *chain_order(witness.h, iw, i2);
    for (std::size_t t = 0; t < o1.size(); ++t)
        if (o1[t] != t)
            return false;
    return chain_mates(witness.h, iw, o1, i1) == witness.mates1 && chain_mates(witness.h, iw, o2, i2) == witness.mates2;
}

ExposureWitness interval_exposure_witness(const Graph& g, const IntervalLikeRep& rep, const Permutation& pi)
{
    if (rep.kind() != RepKind::Interval)
        throw InvalidArgument("exposure witnesses need an interval representation");
    if (! same_labelled_graph(g, decode(rep)))
        throw InvalidArgument("the graph is not the one represented");
    if (! is_twin_free(g))
        throw InvalidArgument("the graph has twins");
    if (! is_condensed(rep))
        throw InvalidArgument("the representation is not condensed");

    IlMatrix il = build_ilmatrix(rep);
    PermSubmatrixWitness sub = extract_perm_submatrix(il, pi.complement().inverse());
    const auto& pairs = rep.pairs();
    std::vector<std::size_t> xs;
    for (auto r : sub.rows)
        xs.push_back(*il.row_pair[r]);
    // the first chain runs along decreasing left ends
    std::sort(xs.begin(), xs.end(), [&](std::size_t a, std::size_t b) { return pairs[a].s1 > pairs[b].s1; });

    std::vector<bool> blocked(pairs.size(), false);
    for (auto x : xs)
        blocked[x] = true;
    std::vector<std::vector<std::size_t>> left_cands, right_cands;
    for (auto x : xs) {
        std::vector<std::size_t> l, r;
        for (std::size_t q = 0; q < pairs.size(); ++q) {
            if (blocked[q])
                continue;
            if (pairs[q].s2 == pairs[x].s1)
                l.push_back(q);
            if (pairs[q].s1 == pairs[x].s2)
                r.push_back(q);
        }
        left_cands.push_back(std::move(l));
        right_cands.push_back(std::move(r));
    }

    const std::size_t p = xs.size();
    std::vector<std::size_t> mate(2 * p);
    std::vector<bool> used(pairs.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t t) {
        if (t == 2 * p)
            return true;
        const auto& cands = t < p ? left_cands[t] : right_cands[t - p];
        for (auto q : cands) {
            if (used[q])
                continue;
            used[q] = true;
            mate[t] = q;
            if (assign(t + 1))
                return true;
            used[q] = false;
        }
        return false;
    };
    if (! assign(0))
        throw InvalidArgument("mate resolution failed");

    ExposureWitness out;
    out.pi = pi;
    std::vector<std::string> ids;
    for (std::size_t t = 0; t < p; ++t) {
        out.w.push_back(pairs[xs[t]].label);
        out.mates1.push_back(pairs[mate[t]].label);
        out.mates2.push_back(pairs[mate[p + t]].label);
    }
    ids = out.w;
    ids.insert(ids.end(), out.mates1.begin(), out.mates1.end());
    ids.insert(ids.end(), out.mates2.begin(), out.mates2.end());
    out.h = g.induced_by_ids(ids);
    if (! check_exposes(out))
        throw InternalError("extracted subgraph does not expose the permutation");
    return out;
}

Exposer generate_exposer(const Permutation& pi)
{
    const std::size_t p = pi.size();
    const Permutation inv = pi.inverse();
    Exposer out;
    auto add = [&](std::string id, long long l, long long r) { out.model.intervals.push_back({id, Rational(l), Rational(r)}); };
    const long long q = static_cast<long long>(p);
    for (std::size_t j = 1; j <= p; ++j) {
        out.w1.push_back("u" + std::to_string(j));
        add(out.w1.back(), 0, q + 1 - static_cast<long long>(j));
    }
    for (std::size_t i = 1; i <= p; ++i) {
        out.w.push_back("w" + std::to_string(i));
        add(out.w.back(), q + 1 - static_cast<long long>(i), q + inv(static_cast<int>(i)));
    }
    for (std::size_t j = 1; j <= p; ++j) {
        out.w2.push_back("v" + std::to_string(j));
        add(out.w2.back(), q + static_cast<long long>(j), 2 * q + 1);
    }
    out.graph = decode(rep_from_intervals(out.model, RepKind::Interval));

    out.witness.pi = pi;
    out.witness.h = out.graph;
    out.witness.w = out.w;
    out.witness.mates1 = out.w1;
    for (std::size_t i = 1; i <= p; ++i)
        out.witness.mates2.push_back("v" + std::to_string(inv(static_cast<int>(i))));
    return out;
}

std::set<Permutation> find_exposed_permutations(const Graph& g, std::size_t p, std::size_t cap)
{
    const std::size_t n = g.order();
    if (n > cap)
        throw CapExceeded("exposure search vertex count", n, cap);
    if (p == 0)
        throw InvalidArgument("permutation size must be positive");
    std::set<Permutation> out;
    if (3 * p > n)
        return out;
    using Mask = std::uint64_t;
    const Mask full = (Mask{1} << p) - 1;

    std::vector<std::size_t> w(p);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t t, std::size_t from) {
        if (t == p) {
            std::map<Mask, std::size_t> count;
            std::vector<bool> in_w(n, false);
            for (auto v : w)
                in_w[v] = true;
            for (std::size_t u = 0; u < n; ++u) {
                if (in_w[u])
                    continue;
                Mask m = 0;
                for (std::size_t i = 0; i < p; ++i)
                    if (g.adjacent(u, w[i]))
                        m |= Mask{1} << i;
                if (m)
                    ++count[m];
            }
            if (! count.contains(full))
                return;
            std::vector<std::vector<Mask>> chains;
            std::vector<Mask> chain{full};
            std::function<void()> descend = [&] {
                if (chain.size() == p) {
                    chains.push_back(chain);
                    return;
                }
                for (Mask b = chain.back(); b; b &= b - 1) {
                    Mask next = chain.back() & ~(b & -b);
                    if (count.contains(next)) {
                        chain.push_back(next);
                        descend();
                        chain.pop_back();
                    }
                }
            };
            descend();
            auto order_of = [&](const std::vector<Mask>& c) {
                std::vector<std::size_t> order;
                for (std::size_t i = 0; i < p; ++i) {
                    Mask gone = i + 1 < p ? c[i] & ~c[i + 1] : c[i];
                    order.push_back(static_cast<std::size_t>(std::countr_zero(gone)));
                }
                return order;
            };
            for (const auto& c1 : chains)
                for (const auto& c2 : chains) {
                    bool ok = true;
                    for (auto m : c1)
                        if (std::find(c2.begin(), c2.end(), m) != c2.end() && count[m] < 2)
                            ok = false;
                    if (ok)
                        out.insert(permutation_from_orders(order_of(c1), order_of(c2)));
                }
            return;
        }
        for (std::size_t v = from; v < n; ++v) {
            w[t] = v;
            choose(t + 1, v + 1);
        }
    };
    choose(0, 0);
    return out;
}

// Planted instances

IntervalModel planted_grid_model(std::size_t n, std::size_t extra, std::uint64_t seed)
{
    IntervalModel model;
    std::set<std::pair<long long, long long>> used;
    auto add = [&](std::string id, long long l, long long r) {
        if (used.insert({l, r}).second) {
            model.intervals.push_back({std::move(id), Rational(l), Rational(r)});
            return true;
        }
        return false;
    };
    const long long N = static_cast<long long>(n);
    for (long long i = 0; i < N; ++i)
        for (long long j = 0; j < N; ++j)
            add("x" + std::to_string(i) + "_" + std::to_string(j), i, N + j);
    for (long long i = 0; i < N; ++i)
        add("l" + std::to_string(i), i - 1, i);
    for (long long j = 0; j < N; ++j)
        add("r" + std::to_string(j), N + j, N + j + 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> point(-1, 2 * N);
    for (std::size_t e = 0; e < extra;) {
        long long a = point(rng), b = point(rng);
        if (a > b)
            std::swap(a, b);
        if (add("e" + std::to_string(e), a, b))
            ++e;
        else if (used.size() >= static_cast<std::size_t>((2 * N + 2) * (2 * N + 3) / 2))
            break;
    }
    return model;
}

std::size_t planted_grid_size(std::size_t p) { return p == 0 ? 1 : 4 * p - 1; }

} // namespace twinwidth
