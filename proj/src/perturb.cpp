#include <twinwidth/perturb.hpp>

#include <twinwidth/errors.hpp>

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace twinwidth {

namespace {
    Graph perturbed(const Graph& g, const std::vector<Bitset>& sets)
    {
        Graph out = g;
        for (const auto& x : sets) {
            std::vector<std::size_t> members;
            for (std::size_t v = x.find_first(); v != Bitset::npos; v = x.find_next(v))
                members.push_back(v);
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    out.toggle_edge(members[a], members[b]);
        }
        return out;
    }

    std::size_t checked_power(std::size_t base, std::size_t exponent, const std::string& what, std::size_t cap)
    {
        std::size_t value = 1;
        for (std::size_t i = 0; i < exponent; ++i) {
            if (base != 0 && value > cap / base)
                throw CapExceeded(what, cap + 1, cap);
            value *= base;
        }
        if (value > cap)
            throw CapExceeded(what, value, cap);
        return value;
    }

    constexpr std::size_t domain_cap = std::size_t{1} << 28;
}

Graph apply_perturbation(const Graph& g, const PerturbationScript& script)
{
    std::vector<Bitset> sets;
    for (const auto& x : script.sets) {
        Bitset b(g.order());
        for (const auto& id : x) {
            auto v = g.find(id);
            if (! v)
                throw InvalidArgument("perturbation set names unknown vertex '" + id + "'");
            b[*v] = true;
        }
        sets.push_back(std::move(b));
    }
    return perturbed(g, sets);
}

PerturbationScript read_script(std::istream& in)
{
    PerturbationScript script;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::string kind;
        if (! (tokens >> kind))
            continue;
        if (kind != "x")
            throw ParseError("line " + std::to_string(number) + ": expected 'x', got '" + kind + "'");
        auto& set = script.sets.emplace_back();
        for (std::string id; tokens >> id;)
            set.push_back(id);
    }
    return script;
}

PerturbationScript parse_script(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_script(in);
}

void write_script(std::ostream& out, const PerturbationScript& script)
{
    for (const auto& set : script.sets) {
        out << 'x';
        for (const auto& id : set)
            out << ' ' << id;
        out << '\n';
    }
}

// Lexicographic powers

LexPowerOrders::LexPowerOrders(std::vector<std::size_t> rank1, std::vector<std::size_t> rank2, std::size_t exponent)
    : rank1_(std::move(rank1)), rank2_(std::move(rank2)), exponent_(exponent)
{
    const std::size_t m = rank1_.size();
    if (m == 0 || rank2_.size() != m)
        throw InvalidArgument("rank vectors must be nonempty and of equal size");
    for (const auto* rank : {&rank1_, &rank2_}) {
        std::vector<bool> seen(m, false);
        for (auto x : *rank) {
            if (x >= m || seen[x])
                throw InvalidArgument("ranks must be a permutation of 0..m-1");
            seen[x] = true;
        }
    }
    if (exponent_ == 0)
        throw InvalidArgument("exponent must be positive");
    size_ = checked_power(m, exponent_, "lexicographic power size", domain_cap);
}

LexPowerOrders LexPowerOrders::of_permutation(const Permutation& pi, std::size_t exponent)
{
    const std::size_t p = pi.size();
    std::vector<std::size_t> r1(p), r2(p);
    std::iota(r1.begin(), r1.end(), 0);
    for (std::size_t k = 1; k <= p; ++k)
        r2[static_cast<std::size_t>(pi(static_cast<int>(k))) - 1] = k - 1;
    return LexPowerOrders(std::move(r1), std::move(r2), exponent);
}

LexPowerOrders LexPowerOrders::power(std::size_t exponent) const
{
    std::vector<std::size_t> r1(size_), r2(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        r1[i] = position1(i);
        r2[i] = position2(i);
    }
    return LexPowerOrders(std::move(r1), std::move(r2), exponent);
}

std::vector<int> LexPowerOrders::tuple(std::size_t index) const
{
    if (index >= size_)
        throw InvalidArgument("element index out of range");
    const std::size_t m = base_size();
    std::vector<int> t(exponent_);
    for (std::size_t c = exponent_; c-- > 0;) {
        t[c] = static_cast<int>(index % m) + 1;
        index /= m;
    }
    return t;
}

std::size_t LexPowerOrders::index(const std::vector<int>& tuple) const
{
    if (tuple.size() != exponent_)
        throw InvalidArgument("tuple has the wrong length");
    const std::size_t m = base_size();
    std::size_t index = 0;
    for (int y : tuple) {
        if (y < 1 || static_cast<std::size_t>(y) > m)
            throw InvalidArgument("tuple coordinate out of range");
        index = index * m + static_cast<std::size_t>(y - 1);
    }
    return index;
}

std::string LexPowerOrders::name(std::size_t index) const
{
    std::string out;
    for (int y : tuple(index)) {
        if (! out.empty())
            out += '.';
        out += std::to_string(y);
    }
    return out;
}

std::size_t LexPowerOrders::position(const std::vector<std::size_t>& rank, std::size_t index) const
{
    const std::size_t m = base_size();
    std::size_t pos = 0, scale = 1;
    for (std::size_t c = 0; c < exponent_; ++c) {
        pos += rank[index % m] * scale;
        index /= m;
        scale *= m;
    }
    return pos;
}

std::size_t LexPowerOrders::position1(std::size_t index) const { return position(rank1_, index); }
std::size_t LexPowerOrders::position2(std::size_t index) const { return position(rank2_, index); }

std::vector<std::size_t> LexPowerOrders::order1() const
{
    std::vector<std::size_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i)
        out[position1(i)] = i;
    return out;
}

std::vector<std::size_t> LexPowerOrders::order2() const
{
    std::vector<std::size_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i)
        out[position2(i)] = i;
    return out;
}

Permutation LexPowerOrders::permutation() const
{
    std::vector<int> image(size_);
    for (std::size_t i = 0; i < size_; ++i)
        image[position2(i)] = static_cast<int>(position1(i)) + 1;
    return Permutation(std::move(image));
}

// Homogeneous sets

namespace {
    std::uint64_t signature(const std::vector<Bitset>& sets, std::size_t z)
    {
        std::uint64_t sig = 0;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i][z])
                sig |= std::uint64_t{1} << i;
        return sig;
    }

    std::vector<int> digits(std::size_t index, std::size_t base, std::size_t s)
    {
        std::vector<int> t(s);
        for (std::size_t c = s; c-- > 0;) {
            t[c] = static_cast<int>(index % base) + 1;
            index /= base;
        }
        return t;
    }
}

HomogeneousSet find_homogeneous_set(std::size_t base, std::size_t s, const std::vector<Bitset>& sets)
{
    if (base == 0 || s == 0)
        throw InvalidArgument("homogeneous sets need a nonempty base and a positive exponent");
    const std::size_t size = checked_power(base, s, "homogeneous-set domain", domain_cap);
    if (sets.size() >= 64)
        throw InvalidArgument("at most 63 sets are supported");
    for (const auto& x : sets)
        if (x.size() != size)
            throw InvalidArgument("set bitsets must cover Y^s");

    const std::size_t r = sets.size();
    if (r >= 32 || (std::size_t{1} << r) > s) {
        std::set<std::uint64_t> colours;
        for (std::size_t z = 0; z < size && colours.size() <= s; ++z)
            colours.insert(signature(sets, z));
        if (colours.size() > s)
            throw InvalidArgument("homogeneous set needs s >= 2^r or at most s membership signatures");
    }

    HomogeneousSet h;
    std::size_t offset = 0, block = size;
    for (std::size_t depth = 0; depth < s; ++depth) {
        block /= base;
        std::uint64_t colour = UINT64_MAX;
        for (std::size_t z = offset; z < offset + block * base; ++z)
            colour = std::min(colour, signature(sets, z));

        std::vector<std::size_t> found(base);
        std::optional<std::size_t> missing;
        for (std::size_t x = 0; x < base && ! missing; ++x) {
            const std::size_t begin = offset + x * block;
            std::size_t z = begin;
            while (z < begin + block && signature(sets, z) != colour)
                ++z;
            if (z == begin + block)
                missing = x;
            else
                found[x] = z;
        }
        if (! missing) {
            h.ell = depth + 1;
            h.elements = found;
            for (std::size_t x = 0; x < base; ++x) {
                auto t = digits(found[x], base, s);
                h.suffix.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(depth + 1), t.end());
            }
            return h;
        }
        h.prefix.push_back(static_cast<int>(*missing) + 1);
        offset += *missing * block;
    }
    throw InternalError("no homogeneous set with the available colours");
}

HomogeneousSet find_homogeneous_set(std::size_t base, std::size_t s, const std::vector<std::vector<std::vector<int>>>& sets)
{
    const std::size_t size = checked_power(base, s, "homogeneous-set domain", domain_cap);
    std::vector<Bitset> bits;
    for (const auto& x : sets) {
        Bitset b(size);
        for (const auto& t : x) {
            if (t.size() != s)
                throw InvalidArgument("tuple has the wrong length");
            std::size_t index = 0;
            for (int y : t) {
                if (y < 1 || static_cast<std::size_t>(y) > base)
                    throw InvalidArgument("tuple coordinate out of range");
                index = index * base + static_cast<std::size_t>(y - 1);
            }
            b[index] = true;
        }
        bits.push_back(std::move(b));
    }
    return find_homogeneous_set(base, s, bits);
}

bool check_homogeneous(std::size_t base, std::size_t s, const std::vector<Bitset>& sets, const HomogeneousSet& h)
{
    if (h.ell < 1 || h.ell > s || h.prefix.size() != h.ell - 1)
        return false;
    if (h.suffix.size() != base || h.elements.size() != base)
        return false;
    auto in_range = [&](int y) { return y >= 1 && static_cast<std::size_t>(y) <= base; };
    for (std::size_t y = 1; y <= base; ++y) {
        const auto& suffix = h.suffix[y - 1];
        if (suffix.size() != s - h.ell)
            return false;
        std::vector<int> t = h.prefix;
        t.push_back(static_cast<int>(y));
        t.insert(t.end(), suffix.begin(), suffix.end());
        std::size_t index = 0;
        for (int c : t) {
            if (! in_range(c))
                return false;
            index = index * base + static_cast<std::size_t>(c - 1);
        }
        if (h.elements[y - 1] != index)
            return false;
    }
    for (const auto& x : sets) {
        std::size_t inside = 0;
        for (auto z : h.elements) {
            if (z >= x.size())
                return false;
            inside += x[z];
        }
        if (inside != 0 && inside != base)
            return false;
    }
    return true;
}

bool restriction_isomorphic(const LexPowerOrders& z, const HomogeneousSet& h)
{
    const std::size_t m = z.base_size();
    if (h.elements.size() != m)
        return false;
    for (std::size_t a = 1; a <= m; ++a)
        for (std::size_t b = 1; b <= m; ++b) {
            const int ya = static_cast<int>(a), yb = static_cast<int>(b);
            const std::size_t ea = h.elements[a - 1], eb = h.elements[b - 1];
            if (z.less1(ea, eb) != (z.base_rank1(ya) < z.base_rank1(yb)))
                return false;
            if (z.less2(ea, eb) != (z.base_rank2(ya) < z.base_rank2(yb)))
                return false;
        }
    return true;
}

// Constructions

Permutation build_pi2(const Permutation& pi)
{
    const std::size_t p = pi.size();
    std::vector<int> image(pi.image());
    for (std::size_t j = 1; j <= p; ++j)
        image.push_back(static_cast<int>(p) + pi(static_cast<int>(p + 1 - j)));
    return Permutation(std::move(image));
}

Permutation build_pi2_prime(const Permutation& pi)
{
    const Permutation pi2 = build_pi2(pi);
    std::vector<int> image;
    for (int v : pi2.image()) {
        image.push_back(2 * v - 1);
        image.push_back(2 * v);
    }
    return Permutation(std::move(image));
}

namespace {
    std::size_t default_exponent(std::size_t r, const HPlusOptions& options)
    {
        if (options.exponent) {
            if (*options.exponent == 0)
                throw InvalidArgument("exponent must be positive");
            return *options.exponent;
        }
        if (r >= 20)
            throw CapExceeded("perturbation count", r, 19);
        return std::size_t{1} << r;
    }
}

HPlusCircle build_hplus_circle(const Permutation& pi, std::size_t r, const HPlusOptions& options)
{
    if (pi.size() == 0)
        throw InvalidArgument("empty permutation");
    const std::size_t s = default_exponent(r, options);
    checked_power(2 * pi.size(), s, "circle H+ vertex count", options.circle_cap);

    HPlusCircle h;
    h.pi = pi;
    h.pi2 = build_pi2(pi);
    h.r = r;
    h.orders = LexPowerOrders::of_permutation(h.pi2, s);
    const std::size_t n = h.orders.size();
    std::vector<std::size_t> pos1(n), pos2(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.graph.add_vertex(h.orders.name(i));
        pos1[i] = h.orders.position1(i);
        pos2[i] = h.orders.position2(i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((pos1[i] < pos1[j]) != (pos2[i] < pos2[j]))
                h.graph.add_edge(i, j);
    return h;
}

HPlusInterval build_hplus_interval(const Permutation& pi, std::size_t r, const HPlusOptions& options)
{
    if (pi.size() == 0)
        throw InvalidArgument("empty permutation");
    if (options.u_exponent == 0)
        throw InvalidArgument("exponent must be positive");
    const std::size_t s = default_exponent(r, options);
    const std::size_t t_size = 4 * pi.size();
    const std::size_t u_size = checked_power(t_size, options.u_exponent, "interval H+ |U|", options.interval_cap);
    checked_power(u_size, s, "interval H+ |Z|", options.interval_cap);

    HPlusInterval h;
    h.pi = pi;
    h.pi2 = build_pi2(pi);
    h.pi2_prime = build_pi2_prime(pi);
    h.r = r;
    h.t_orders = LexPowerOrders::of_permutation(h.pi2_prime);
    h.u_orders = h.t_orders.power(options.u_exponent);
    h.z_orders = h.u_orders.power(s);
    const std::size_t n = h.z_orders.size();
    h.rho_inverse.assign(n, 0);
    for (std::size_t z = 0; z < n; ++z)
        h.rho_inverse[h.z_orders.position1(z)] = h.z_orders.position2(z) + 1;
    if (h.vertex_count() <= options.explicit_cap)
        h.exposer = generate_exposer(h.z_orders.permutation());
    return h;
}

std::size_t HPlusInterval::vertex(Part p, std::size_t k) const
{
    const std::size_t n = z_orders.size();
    if (k < 1 || k > n)
        throw InvalidArgument("vertex number out of range");
    return static_cast<std::size_t>(p) * n + (k - 1);
}

HPlusInterval::Part HPlusInterval::part(std::size_t v) const
{
    if (v >= vertex_count())
        throw InvalidArgument("vertex out of range");
    return static_cast<Part>(v / z_orders.size());
}

std::string HPlusInterval::id(std::size_t v) const
{
    static constexpr const char* letters[] = {"w", "u", "v"};
    return letters[static_cast<std::size_t>(part(v))] + std::to_string(v % z_orders.size() + 1);
}

std::pair<long long, long long> HPlusInterval::interval(std::size_t v) const
{
    const long long n = static_cast<long long>(z_orders.size());
    const long long k = static_cast<long long>(v % z_orders.size()) + 1;
    switch (part(v)) {
    case Part::W:
        return {n + 1 - k, n + static_cast<long long>(rho_inverse[static_cast<std::size_t>(k - 1)])};
    case Part::W1:
        return {0, n + 1 - k};
    default:
        return {n + k, 2 * n + 1};
    }
}

bool HPlusInterval::adjacent(std::size_t a, std::size_t b) const
{
    if (a == b)
        return false;
    auto [la, ra] = interval(a);
    auto [lb, rb] = interval(b);
    return std::max(la, lb) <= std::min(ra, rb);
}

IntervalModel HPlusInterval::model() const
{
    IntervalModel m;
    m.intervals.reserve(vertex_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        auto [l, r] = interval(v);
        m.intervals.push_back({id(v), Rational(l), Rational(r)});
    }
    return m;
}

std::size_t HPlusInterval::w_of(std::size_t z) const { return vertex(Part::W, z_orders.position1(z) + 1); }
std::size_t HPlusInterval::mate1_of(std::size_t z) const { return vertex(Part::W1, z_orders.position1(z) + 1); }
std::size_t HPlusInterval::mate2_of(std::size_t z) const { return vertex(Part::W2, z_orders.position2(z) + 1); }

// Pipelines

std::string circle_pipeline(const HPlusCircle& h, const std::vector<Bitset>& sets)
{
    const std::size_t n = h.graph.order();
    for (const auto& x : sets)
        if (x.size() != n)
            throw InvalidArgument("perturbation bitsets must cover V(H+)");
    const std::size_t p = h.pi.size();
    HomogeneousSet z0;
    try {
        z0 = find_homogeneous_set(2 * p, h.orders.exponent(), sets);
    } catch (const InvalidArgument& e) {
        return e.what();
    }
    if (! check_homogeneous(2 * p, h.orders.exponent(), sets, z0))
        return "homogeneous set fails its re-check";

    const Graph sub = perturbed(h.graph, sets).induced(z0.elements);
    // y ~ y' iff <=1 and <=2 disagree, i.e. the inversion graph of pi2^-1
    const Graph h2 = permutation_graph(h.pi2.inverse());
    bool same = true, flipped = true;
    for (std::size_t a = 0; a < 2 * p; ++a)
        for (std::size_t b = a + 1; b < 2 * p; ++b)
            (sub.adjacent(a, b) == h2.adjacent(a, b) ? flipped : same) = false;
    if (! same && ! flipped)
        return "perturbed H+ on Z0 is neither H2 nor its complement";

    // H2 is H on 1..p and its complement on p+1..2p
    std::vector<std::size_t> block(p);
    std::iota(block.begin(), block.end(), same ? 0 : p);
    if (! is_isomorphic(sub.induced(block), permutation_graph(h.pi)))
        return "the target is not induced on Z0";
    return {};
}

namespace {
    struct Chain {
        std::vector<std::size_t> order;
        std::vector<std::size_t> mate;
    };

    /// W (indices into h) along a strict chain of neighbourhoods in `part`,
    /// with the element new at each step.
    std::optional<Chain> chain_of(const Graph& h, const std::vector<std::size_t>& w, const std::vector<std::size_t>& part)
    {
        const std::size_t p = w.size();
        std::vector<Bitset> nb(p, Bitset(part.size()));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < part.size(); ++j)
                nb[i][j] = h.adjacent(w[i], part[j]);
        Chain c;
        c.order.resize(p);
        std::iota(c.order.begin(), c.order.end(), 0);
        std::sort(c.order.begin(), c.order.end(), [&](auto a, auto b) { return nb[a].count() < nb[b].count(); });
        c.mate.assign(p, 0);
        Bitset prev(part.size());
        for (std::size_t t = 0; t < p; ++t) {
            const Bitset& cur = nb[c.order[t]];
            if (cur.count() != t + 1 || ! prev.is_subset_of(cur))
                return std::nullopt;
            c.mate[c.order[t]] = part[(cur - prev).find_first()];
            prev = cur;
        }
        return c;
    }

    std::optional<ExposureWitness> sub_exposure(const Graph& h, const std::vector<std::size_t>& w,
                                                const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                                const Permutation& target)
    {
        auto c1 = chain_of(h, w, a), c2 = chain_of(h, w, b);
        if (! c1 || ! c2)
            return std::nullopt;
        const Permutation sigma = permutation_from_orders(c1->order, c2->order);
        std::vector<int> positions;
        if (! sigma.contains_pattern(target, &positions))
            return std::nullopt;
        std::vector<std::size_t> chosen;
        for (int k : positions)
            chosen.push_back(c2->order[static_cast<std::size_t>(k - 1)]);
        std::vector<std::size_t> rank1(w.size());
        for (std::size_t t = 0; t < w.size(); ++t)
            rank1[c1->order[t]] = t;
        std::sort(chosen.begin(), chosen.end(), [&](auto x, auto y) { return rank1[x] < rank1[y]; });

        ExposureWitness out;
        out.pi = target;
        std::vector<std::string> ids;
        for (auto i : chosen) {
            out.w.push_back(h.id(w[i]));
            out.mates1.push_back(h.id(c1->mate[i]));
            out.mates2.push_back(h.id(c2->mate[i]));
        }
        ids = out.w;
        ids.insert(ids.end(), out.mates1.begin(), out.mates1.end());
        ids.insert(ids.end(), out.mates2.begin(), out.mates2.end());
        out.h = h.induced_by_ids(ids);
        if (! check_exposes(out))
            throw InternalError("restricted exposure does not verify");
        return out;
    }
}

IntervalPipelineResult interval_pipeline(const HPlusInterval& h, const std::vector<Bitset>& sets)
{
    const std::size_t nv = h.vertex_count();
    for (const auto& x : sets)
        if (x.size() != nv)
            throw InvalidArgument("perturbation bitsets must cover V(H+)");
    auto flip = [&](std::size_t a, std::size_t b) {
        bool f = false;
        for (const auto& x : sets)
            f ^= x[a] && x[b];
        return f;
    };
    auto padj = [&](std::size_t a, std::size_t b) { return h.adjacent(a, b) != flip(a, b); };

    IntervalPipelineResult result;
    const std::size_t n = h.z_orders.size(), m = h.u_orders.size();
    std::vector<Bitset> zsets;
    for (const auto& x : sets) {
        Bitset b(n);
        for (std::size_t z = 0; z < n; ++z)
            b[z] = x[h.w_of(z)];
        zsets.push_back(std::move(b));
    }
    HomogeneousSet z0;
    try {
        z0 = find_homogeneous_set(m, h.z_orders.exponent(), zsets);
    } catch (const InvalidArgument& e) {
        result.reason = e.what();
        return result;
    }
    if (! check_homogeneous(m, h.z_orders.exponent(), zsets, z0)) {
        result.reason = "homogeneous set on Z fails its re-check";
        return result;
    }

    // whether each mate kept its neighbourhood towards Z0
    std::vector<Bitset> kept(2, Bitset(m));
    for (std::size_t u = 0; u < m; ++u)
        for (int side = 0; side < 2; ++side) {
            const std::size_t mate = side == 0 ? h.mate1_of(z0.elements[u]) : h.mate2_of(z0.elements[u]);
            bool same = true, flipped = true;
            for (std::size_t u2 = 0; u2 < m; ++u2) {
                const std::size_t w = h.w_of(z0.elements[u2]);
                (h.adjacent(mate, w) == padj(mate, w) ? flipped : same) = false;
            }
            if (! same && ! flipped)
                throw InternalError("a mate neither kept nor complemented its neighbourhood");
            kept[static_cast<std::size_t>(side)][u] = same;
        }

    const std::size_t t_size = h.t_orders.size();
    HomogeneousSet u0;
    try {
        u0 = find_homogeneous_set(t_size, h.u_orders.exponent(), kept);
    } catch (const InvalidArgument& e) {
        result.reason = e.what();
        return result;
    }
    if (! check_homogeneous(t_size, h.u_orders.exponent(), kept, u0)) {
        result.reason = "homogeneous set on U fails its re-check";
        return result;
    }

    std::vector<std::size_t> wv(t_size), m1(t_size), m2(t_size);
    for (std::size_t t = 0; t < t_size; ++t) {
        const std::size_t z = z0.elements[u0.elements[t]];
        wv[t] = h.w_of(z);
        m1[t] = h.mate1_of(z);
        m2[t] = h.mate2_of(z);
    }
    const std::size_t pairs = t_size / 2;
    for (int choice = 0; choice < 8; ++choice) {
        const bool larger = choice & 1, partner1 = choice & 2, partner2 = choice & 4;
        std::vector<std::size_t> vertices;
        for (std::size_t k = 0; k < pairs; ++k) {
            const std::size_t rep = 2 * k + (larger ? 1 : 0), other = 2 * k + (larger ? 0 : 1);
            vertices.push_back(wv[rep]);
            vertices.push_back(m1[partner1 ? other : rep]);
            vertices.push_back(m2[partner2 ? other : rep]);
        }
        Graph g;
        for (auto v : vertices)
            g.add_vertex(h.id(v));
        for (std::size_t a = 0; a < vertices.size(); ++a)
            for (std::size_t b = a + 1; b < vertices.size(); ++b)
                if (padj(vertices[a], vertices[b]))
                    g.add_edge(a, b);
        std::vector<std::size_t> w, a1, a2;
        for (std::size_t k = 0; k < pairs; ++k) {
            w.push_back(3 * k);
            a1.push_back(3 * k + 1);
            a2.push_back(3 * k + 2);
        }
        auto found = sub_exposure(g, w, a1, a2, h.pi);
        if (! found)
            found = sub_exposure(g, w, a2, a1, h.pi);
        if (found) {
            result.found = true;
            result.witness = std::move(found);
            return result;
        }
    }
    result.reason = "no choice of pair representatives exposes the target";
    return result;
}

// Robustness

namespace {
    Bitset random_bitset(std::size_t n, std::mt19937_64& rng)
    {
        std::vector<std::uint64_t> blocks((n + 63) / 64);
        for (auto& b : blocks)
            b = rng();
        Bitset out(blocks.begin(), blocks.end());
        out.resize(n);
        return out;
    }

    std::size_t exhaustive_bits(std::size_t r, std::size_t n, const RobustnessOptions& options)
    {
        const std::size_t bits = r * n;
        if (bits >= 63 || (std::size_t{1} << bits) > options.script_budget)
            throw CapExceeded("exhaustive perturbation scripts (log2)", bits,
                              static_cast<std::size_t>(std::bit_width(options.script_budget)) - 1);
        return bits;
    }

    std::vector<Bitset> script_of_code(std::size_t code, std::size_t r, std::size_t n)
    {
        std::vector<Bitset> sets(r, Bitset(n));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t v = 0; v < n; ++v)
                sets[i][v] = (code >> (i * n + v)) & 1;
        return sets;
    }

    template <class IdOf>
    void record(RobustnessReport& report, const RobustnessOptions& options, std::size_t number,
                const std::vector<Bitset>& sets, const std::string& reason, IdOf id_of)
    {
        ++report.failure_count;
        if (report.failures.size() >= options.kept_failures)
            return;
        RobustnessFailure f;
        f.script_number = number;
        f.reason = reason;
        for (const auto& x : sets) {
            auto& ids = f.script.sets.emplace_back();
            for (std::size_t v = x.find_first(); v != Bitset::npos; v = x.find_next(v))
                ids.push_back(id_of(v));
        }
        report.failures.push_back(std::move(f));
    }
}

RobustnessReport verify_robustness(const HPlusCircle& h, const RobustnessOptions& options)
{
    RobustnessReport report;
    report.construction = "circle";
    report.pi = h.pi;
    report.r = h.r;
    report.exponent = h.orders.exponent();
    report.z_size = h.orders.size();
    report.vertices = h.graph.order();
    report.mode = options.mode;
    report.seed = options.seed;
    const std::size_t n = h.graph.order();
    auto id_of = [&](std::size_t v) { return h.graph.id(v); };
    auto run = [&](std::size_t number, const std::vector<Bitset>& sets) {
        ++report.scripts_tested;
        if (std::string reason = circle_pipeline(h, sets); ! reason.empty())
            record(report, options, number, sets, reason, id_of);
    };
    if (options.mode == RobustnessMode::Exhaustive) {
        const std::size_t bits = exhaustive_bits(h.r, n, options);
        for (std::size_t code = 0; code < (std::size_t{1} << bits); ++code)
            run(code, script_of_code(code, h.r, n));
    } else {
        std::mt19937_64 rng(options.seed);
        for (std::size_t k = 0; k < options.samples; ++k) {
            std::vector<Bitset> sets;
            for (std::size_t i = 0; i < h.r; ++i)
                sets.push_back(random_bitset(n, rng));
            run(k, sets);
        }
    }
    return report;
}

namespace {
    /// Random set on the interval H+: uniform, a union of coordinate
    /// slices of Z, or all-or-nothing on W; the mate parts are taken
    /// whole, empty, split or uniform.
    Bitset random_interval_set(const HPlusInterval& h, std::size_t flavour, std::mt19937_64& rng)
    {
        const std::size_t n = h.z_orders.size(), nv = h.vertex_count();
        if (flavour == 0)
            return random_bitset(nv, rng);
        Bitset x(nv);
        if (flavour == 1) {
            const std::size_t s = h.z_orders.exponent(), m = h.u_orders.size();
            const std::size_t c = rng() % s;
            Bitset chosen = random_bitset(m, rng);
            for (std::size_t z = 0; z < n; ++z)
                if (chosen[static_cast<std::size_t>(h.z_orders.tuple(z)[c] - 1)])
                    x[h.w_of(z)] = true;
        } else if (rng() & 1) {
            for (std::size_t k = 1; k <= n; ++k)
                x[h.vertex(HPlusInterval::Part::W, k)] = true;
        }
        for (auto part : {HPlusInterval::Part::W1, HPlusInterval::Part::W2}) {
            const auto how = rng() % 4;
            for (std::size_t k = 1; k <= n; ++k) {
                bool in = how == 0 || (how == 2 && 2 * k <= n) || (how == 3 && (rng() & 1));
                x[h.vertex(part, k)] = in;
            }
        }
        return x;
    }
}

RobustnessReport verify_robustness(const HPlusInterval& h, const RobustnessOptions& options)
{
    RobustnessReport report;
    report.construction = "interval";
    report.pi = h.pi;
    report.r = h.r;
    report.exponent = h.z_orders.exponent();
    report.z_size = h.z_orders.size();
    report.vertices = h.vertex_count();
    report.mode = options.mode;
    report.seed = options.seed;
    const std::size_t nv = h.vertex_count();
    auto id_of = [&](std::size_t v) { return h.id(v); };
    auto run = [&](std::size_t number, const std::vector<Bitset>& sets) {
        ++report.scripts_tested;
        IntervalPipelineResult res = interval_pipeline(h, sets);
        if (! res.found)
            record(report, options, number, sets, res.reason, id_of);
    };
    if (options.mode == RobustnessMode::Exhaustive) {
        const std::size_t bits = exhaustive_bits(h.r, nv, options);
        for (std::size_t code = 0; code < (std::size_t{1} << bits); ++code)
            run(code, script_of_code(code, h.r, nv));
    } else {
        std::mt19937_64 rng(options.seed);
        for (std::size_t k = 0; k < options.samples; ++k) {
            std::vector<Bitset> sets;
            for (std::size_t i = 0; i < h.r; ++i)
                sets.push_back(random_interval_set(h, k % 3, rng));
            run(k, sets);
        }
    }
    return report;
}

} // namespace twinwidth
