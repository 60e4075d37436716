#include <twinwidth/trimatrix.hpp>

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace twinwidth {

char entry_symbol(Entry e)
{
    switch (e) {
    case Entry::Zero: return '0';
    case Entry::One: return '1';
    case Entry::Two: return '2';
    case Entry::Red: return 'r';
    }
    return '?';
}

Entry parse_entry(char c)
{
    switch (c) {
    case '0': return Entry::Zero;
    case '1': return Entry::One;
    case '2': return Entry::Two;
    case 'r': return Entry::Red;
    default: throw ParseError(std::string("bad matrix symbol '") + c + "'");
    }
}

namespace {
    void check_keys(const std::vector<std::string>& keys, const char* what)
    {
        std::unordered_set<std::string> seen;
        for (const auto& k : keys) {
            if (k.empty() || k.find_first_of(" \t\r\n") != std::string::npos)
                throw InvalidArgument(std::string("bad ") + what + " key '" + k + "'");
            if (! seen.insert(k).second)
                throw InvalidArgument(std::string("duplicate ") + what + " key '" + k + "'");
        }
    }

    std::optional<std::size_t> find_key(const std::vector<std::string>& keys, std::string_view key)
    {
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - keys.begin());
    }
}

TriMatrix::TriMatrix(std::vector<std::string> row_keys, std::vector<std::string> col_keys, Entry fill)
    : row_keys_(std::move(row_keys)), col_keys_(std::move(col_keys))
{
    check_keys(row_keys_, "row");
    check_keys(col_keys_, "column");
    data_.assign(row_keys_.size() * col_keys_.size(), fill);
}

std::optional<std::size_t> TriMatrix::find_row(std::string_view key) const { return find_key(row_keys_, key); }
std::optional<std::size_t> TriMatrix::find_col(std::string_view key) const { return find_key(col_keys_, key); }

std::size_t TriMatrix::row_index(std::string_view key) const
{
    auto i = find_row(key);
    if (! i)
        throw InvalidArgument("unknown row key '" + std::string(key) + "'");
    return *i;
}

std::size_t TriMatrix::col_index(std::string_view key) const
{
    auto j = find_col(key);
    if (! j)
        throw InvalidArgument("unknown column key '" + std::string(key) + "'");
    return *j;
}

TriMatrix TriMatrix::contract_rows(std::string_view k, std::string_view l) const
{
    return contract_rows(row_index(k), row_index(l));
}

TriMatrix TriMatrix::contract_cols(std::string_view k, std::string_view l) const
{
    return contract_cols(col_index(k), col_index(l));
}

TriMatrix TriMatrix::contract_rows(std::size_t k, std::size_t l) const
{
    if (k >= rows() || l >= rows())
        throw InvalidArgument("row index out of range");
    if (k == l)
        throw InvalidArgument("contraction of row '" + row_keys_[k] + "' with itself");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows(); ++i)
        if (i != l)
            keep.push_back(i);
    std::vector<std::size_t> all_cols(cols());
    std::iota(all_cols.begin(), all_cols.end(), 0);
    TriMatrix out = *this;
    for (std::size_t j = 0; j < cols(); ++j)
        if (at(k, j) != at(l, j))
            out.set(k, j, Entry::Red);
    return out.submatrix(keep, all_cols);
}

TriMatrix TriMatrix::contract_cols(std::size_t k, std::size_t l) const
{
    if (k >= cols() || l >= cols())
        throw InvalidArgument("column index out of range");
    if (k == l)
        throw InvalidArgument("contraction of column '" + col_keys_[k] + "' with itself");
    return transposed().contract_rows(k, l).transposed();
}

TriMatrix TriMatrix::transposed() const
{
    TriMatrix out(col_keys_, row_keys_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            out.set(j, i, at(i, j));
    return out;
}

TriMatrix TriMatrix::permuted(const std::vector<std::size_t>& row_order,
                              const std::vector<std::size_t>& col_order) const
{
    auto is_perm = [](const std::vector<std::size_t>& order, std::size_t n) {
        std::vector<bool> seen(n, false);
        for (auto v : order) {
            if (v >= n || seen[v])
                return false;
            seen[v] = true;
        }
        return order.size() == n;
    };
    if (! is_perm(row_order, rows()) || ! is_perm(col_order, cols()))
        throw InvalidArgument("ordering is not a permutation of the index set");
    return submatrix(row_order, col_order);
}

TriMatrix TriMatrix::submatrix(const std::vector<std::size_t>& row_subset,
                               const std::vector<std::size_t>& col_subset) const
{
    std::vector<std::string> rk, ck;
    for (auto i : row_subset)
        rk.push_back(row_keys_.at(i));
    for (auto j : col_subset)
        ck.push_back(col_keys_.at(j));
    TriMatrix out(std::move(rk), std::move(ck));
    for (std::size_t a = 0; a < row_subset.size(); ++a)
        for (std::size_t b = 0; b < col_subset.size(); ++b)
            out.set(a, b, at(row_subset[a], col_subset[b]));
    return out;
}

std::vector<Entry> TriMatrix::row(std::size_t i) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols()),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols())};
}

std::vector<Entry> TriMatrix::column(std::size_t j) const
{
    std::vector<Entry> out;
    for (std::size_t i = 0; i < rows(); ++i)
        out.push_back(at(i, j));
    return out;
}

std::size_t red_number(const TriMatrix& m)
{
    std::size_t best = 0;
    std::vector<std::size_t> col_count(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t row_count = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) == Entry::Red) {
                ++row_count;
                ++col_count[j];
            }
        best = std::max(best, row_count);
    }
    for (auto c : col_count)
        best = std::max(best, c);
    return best;
}

TriMatrix permutation_matrix(const Permutation& pi)
{
    std::vector<std::string> keys;
    for (std::size_t i = 1; i <= pi.size(); ++i)
        keys.push_back(std::to_string(i));
    TriMatrix m(keys, keys);
    for (std::size_t i = 1; i <= pi.size(); ++i)
        m.set(i - 1, static_cast<std::size_t>(pi(static_cast<int>(i)) - 1), Entry::One);
    return m;
}

// Divisions and mixed minors

std::size_t Division::row_end(std::size_t b, std::size_t rows) const
{
    return b + 1 < row_starts.size() ? row_starts[b + 1] : rows;
}

std::size_t Division::col_end(std::size_t b, std::size_t cols) const
{
    return b + 1 < col_starts.size() ? col_starts[b + 1] : cols;
}

bool zone_mixed(const TriMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1)
{
    bool rows_differ = false, cols_differ = false;
    for (std::size_t j = c0; j < c1 && ! rows_differ; ++j)
        for (std::size_t i = r0 + 1; i < r1 && ! rows_differ; ++i)
            rows_differ = m.at(i, j) != m.at(r0, j);
    for (std::size_t i = r0; i < r1 && ! cols_differ; ++i)
        for (std::size_t j = c0 + 1; j < c1 && ! cols_differ; ++j)
            cols_differ = m.at(i, j) != m.at(i, c0);
    return rows_differ && cols_differ;
}

namespace {
    // For a fixed division of the rows, the columns are cut greedily: a
    // column block is closed as soon as all its zones are mixed.  Mixedness
    // is monotone under enlarging a zone, so this maximizes the number of
    // column blocks.
    class MixedMinorSearch {
    public:
        MixedMinorSearch(const TriMatrix& m, std::size_t k) : m_(m), k_(k)
        {
            const std::size_t R = m.rows(), C = m.cols();
            col_run_.assign(R * C, 0);
            row_run_.assign(R * C, 0);
            for (std::size_t j = 0; j < C; ++j)
                for (std::size_t i = R; i-- > 0;)
                    col_run_[i * C + j] = (i + 1 < R && m.at(i, j) == m.at(i + 1, j)) ? col_run_[(i + 1) * C + j] : i;
            for (std::size_t i = 0; i < R; ++i)
                for (std::size_t j = C; j-- > 0;)
                    row_run_[i * C + j] = (j + 1 < C && m.at(i, j) == m.at(i, j + 1)) ? row_run_[i * C + j + 1] : j;
        }

        std::optional<MixedMinorWitness> run()
        {
            const std::size_t R = m_.rows(), C = m_.cols();
            if (k_ == 0 || 2 * k_ > R || 2 * k_ > C)
                return std::nullopt;
            starts_.clear();
            starts_.push_back(0);
            if (! dfs())
                return std::nullopt;
            MixedMinorWitness w;
            w.k = k_;
            w.division.row_starts = starts_;
            w.division.col_starts = greedy_cuts(starts_.size());
            w.division.col_starts.resize(k_);
            for (std::size_t a = 0; a < k_; ++a)
                for (std::size_t b = 0; b < k_; ++b)
                    w.zones.push_back(zone_witness(w.division.row_begin(a), w.division.row_end(a, R),
                                                   w.division.col_begin(b), w.division.col_end(b, C)));
            return w;
        }

    private:
        std::size_t col_run(std::size_t i, std::size_t j) const { return col_run_[i * m_.cols() + j]; }
        std::size_t row_run(std::size_t i, std::size_t j) const { return row_run_[i * m_.cols() + j]; }

        // Column block starts for the current row blocks, where the row blocks
        // are starts_ and the last block extends to the final row.
        std::vector<std::size_t> greedy_cuts(std::size_t blocks) const
        {
            const std::size_t R = m_.rows(), C = m_.cols();
            std::vector<std::size_t> r0(blocks), r1(blocks);
            for (std::size_t b = 0; b < blocks; ++b) {
                r0[b] = starts_[b];
                r1[b] = b + 1 < blocks ? starts_[b + 1] : R;
            }
            std::vector<std::size_t> cuts;
            std::vector<std::size_t> min_col_run(blocks), min_row_run(blocks);
            std::size_t c0 = 0;
            while (c0 < C && cuts.size() < k_) {
                for (std::size_t b = 0; b < blocks; ++b) {
                    min_col_run[b] = R;
                    min_row_run[b] = C;
                    for (std::size_t i = r0[b]; i < r1[b]; ++i)
                        min_row_run[b] = std::min(min_row_run[b], row_run(i, c0));
                }
                std::size_t c1 = c0;
                bool closed = false;
                while (c1 < C && ! closed) {
                    ++c1;
                    closed = true;
                    for (std::size_t b = 0; b < blocks; ++b) {
                        min_col_run[b] = std::min(min_col_run[b], col_run(r0[b], c1 - 1));
                        bool rows_differ = min_col_run[b] + 1 < r1[b];
                        bool cols_differ = min_row_run[b] + 1 < c1;
                        closed = closed && rows_differ && cols_differ;
                    }
                }
                if (! closed)
                    break;
                cuts.push_back(c0);
                c0 = c1;
            }
            return cuts;
        }

        bool dfs()
        {
            const std::size_t R = m_.rows();
            const std::size_t t = starts_.size();
            const std::size_t s = starts_.back();
            if (greedy_cuts(t).size() < k_)
                return false;
            if (t == k_)
                return true;
            const std::size_t remaining_blocks = k_ - t;
            for (std::size_t e = s + 2; e + 2 * remaining_blocks <= R; ++e) {
                starts_.push_back(e);
                if (dfs())
                    return true;
                starts_.pop_back();
            }
            return false;
        }

        ZoneWitness zone_witness(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const
        {
            ZoneWitness z;
            for (std::size_t j = c0; j < c1; ++j)
                if (col_run(r0, j) + 1 < r1) {
                    z.row_a = m_.row_key(r0);
                    z.row_b = m_.row_key(col_run(r0, j) + 1);
                    break;
                }
            for (std::size_t i = r0; i < r1; ++i)
                if (row_run(i, c0) + 1 < c1) {
                    z.col_a = m_.col_key(c0);
                    z.col_b = m_.col_key(row_run(i, c0) + 1);
                    break;
                }
            return z;
        }

        const TriMatrix& m_;
        std::size_t k_;
        std::vector<std::size_t> col_run_, row_run_;
        std::vector<std::size_t> starts_;
    };
}

std::optional<MixedMinorWitness> find_mixed_minor(const TriMatrix& m, std::size_t k)
{
    if (k == 0)
        throw InvalidArgument("mixed minor order must be at least 1");
    if (k == 1) {
        if (! zone_mixed(m, 0, m.rows(), 0, m.cols()))
            return std::nullopt;
    }
    // enumerate divisions of the shorter axis
    if (m.rows() > m.cols()) {
        auto w = MixedMinorSearch(m.transposed(), k).run();
        if (! w)
            return std::nullopt;
        std::swap(w->division.row_starts, w->division.col_starts);
        for (auto& z : w->zones) {
            std::swap(z.row_a, z.col_a);
            std::swap(z.row_b, z.col_b);
        }
        std::vector<ZoneWitness> zones(k * k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                zones[b * k + a] = w->zones[a * k + b];
        w->zones = std::move(zones);
        return w;
    }
    return MixedMinorSearch(m, k).run();
}

bool verify_mixed_minor(const TriMatrix& m, const MixedMinorWitness& w)
{
    const std::size_t k = w.k;
    auto valid_starts = [k](const std::vector<std::size_t>& starts, std::size_t n) {
        if (starts.size() != k || starts.empty() || starts[0] != 0)
            return false;
        for (std::size_t b = 1; b < k; ++b)
            if (starts[b] <= starts[b - 1])
                return false;
        return starts.back() < n;
    };
    if (k == 0 || ! valid_starts(w.division.row_starts, m.rows()) || ! valid_starts(w.division.col_starts, m.cols()))
        return false;
    if (w.zones.size() != k * k)
        return false;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const auto& z = w.zones[a * k + b];
            std::size_t r0 = w.division.row_begin(a), r1 = w.division.row_end(a, m.rows());
            std::size_t c0 = w.division.col_begin(b), c1 = w.division.col_end(b, m.cols());
            auto ra = m.find_row(z.row_a), rb = m.find_row(z.row_b);
            auto ca = m.find_col(z.col_a), cb = m.find_col(z.col_b);
            if (! ra || ! rb || ! ca || ! cb)
                return false;
            auto inside = [](std::size_t x, std::size_t lo, std::size_t hi) { return lo <= x && x < hi; };
            if (! inside(*ra, r0, r1) || ! inside(*rb, r0, r1) || ! inside(*ca, c0, c1) || ! inside(*cb, c0, c1))
                return false;
            bool rows_differ = false, cols_differ = false;
            for (std::size_t j = c0; j < c1; ++j)
                rows_differ = rows_differ || m.at(*ra, j) != m.at(*rb, j);
            for (std::size_t i = r0; i < r1; ++i)
                cols_differ = cols_differ || m.at(i, *ca) != m.at(i, *cb);
            if (! rows_differ || ! cols_differ)
                return false;
        }
    return true;
}

// Contraction replay

namespace {
    TriMatrix apply_step(const TriMatrix& m, const MatrixStep& step)
    {
        return step.axis == Axis::Row ? m.contract_rows(step.keep, step.drop) : m.contract_cols(step.keep, step.drop);
    }
}

std::vector<TriMatrix> replay_matrices(const TriMatrix& m, const std::vector<MatrixStep>& steps, bool symmetric)
{
    std::vector<TriMatrix> out{m};
    TriMatrix current = m;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        current = apply_step(current, steps[s]);
        if (symmetric) {
            if (steps[s].axis != Axis::Row || s + 1 >= steps.size() || steps[s + 1].axis != Axis::Col)
                throw InvalidArgument("symmetric replay needs (row, column) step pairs");
            current = apply_step(current, steps[++s]);
        }
        out.push_back(current);
    }
    return out;
}

std::vector<std::size_t> replay_red_numbers(const TriMatrix& m, const std::vector<MatrixStep>& steps, bool symmetric)
{
    std::vector<std::size_t> out;
    for (const auto& mat : replay_matrices(m, steps, symmetric))
        out.push_back(red_number(mat));
    return out;
}

// Exact matrix twin-width over partition states.  A state is a pair of
// partitions; the value of zone (P, Q) is the common entry of A[P, Q] when
// all entries agree and r otherwise, which is exactly the matrix reached by
// any contraction sequence producing those parts.

namespace {
    using Mask = std::uint64_t;

    struct State {
        std::vector<Mask> row_parts;
        std::vector<Mask> col_parts;

        bool operator==(const State&) const = default;
    };

    struct StateHash {
        std::size_t operator()(const State& s) const noexcept
        {
            std::size_t h = s.row_parts.size() * 0x9e3779b97f4a7c15ULL;
            for (Mask x : s.row_parts)
                h = (h ^ std::hash<Mask>{}(x)) * 0x100000001b3ULL;
            h ^= 0xabcdefULL;
            for (Mask x : s.col_parts)
                h = (h ^ std::hash<Mask>{}(x)) * 0x100000001b3ULL;
            return h;
        }
    };

    class MatrixSolver {
    public:
        MatrixSolver(const TriMatrix& m, const MatrixSolveOptions& options) : m_(m), options_(options) {}

        MatrixSolveResult solve()
        {
            State start;
            for (std::size_t i = 0; i < m_.rows(); ++i)
                start.row_parts.push_back(Mask{1} << i);
            for (std::size_t j = 0; j < m_.cols(); ++j)
                start.col_parts.push_back(Mask{1} << j);

            MatrixSolveResult result;
            std::vector<State> greedy_path = greedy(start);
            std::size_t upper = path_width(greedy_path);
            std::vector<State> best = greedy_path;
            bool optimal = true;
            std::size_t lower = red_of(start);
            for (std::size_t d = lower; d < upper; ++d) {
                failed_.clear();
                path_.assign(1, start);
                int verdict = dfs(start, d);
                if (verdict == 1) {
                    best = path_;
                    upper = d;
                    break;
                }
                if (verdict == -1) {
                    optimal = false;
                    break;
                }
            }
            result.value = upper;
            result.optimal = optimal;
            result.steps = steps_of(best);
            result.nodes_explored = nodes_;
            return result;
        }

    private:
        Entry zone_value(Mask rows, Mask cols) const
        {
            bool first = true;
            Entry value = Entry::Zero;
            for (Mask r = rows; r; r &= r - 1) {
                std::size_t i = static_cast<std::size_t>(std::countr_zero(r));
                for (Mask c = cols; c; c &= c - 1) {
                    std::size_t j = static_cast<std::size_t>(std::countr_zero(c));
                    Entry e = m_.at(i, j);
                    if (first) {
                        value = e;
                        first = false;
                    }
                    else if (e != value)
                        return Entry::Red;
                }
            }
            return value;
        }

        std::vector<Entry> zone_table(const State& s) const
        {
            std::vector<Entry> table(s.row_parts.size() * s.col_parts.size());
            for (std::size_t a = 0; a < s.row_parts.size(); ++a)
                for (std::size_t b = 0; b < s.col_parts.size(); ++b)
                    table[a * s.col_parts.size() + b] = zone_value(s.row_parts[a], s.col_parts[b]);
            return table;
        }

        std::size_t red_of(const State& s) const
        {
            const auto table = zone_table(s);
            const std::size_t R = s.row_parts.size(), C = s.col_parts.size();
            std::size_t best = 0;
            std::vector<std::size_t> col_count(C, 0);
            for (std::size_t a = 0; a < R; ++a) {
                std::size_t count = 0;
                for (std::size_t b = 0; b < C; ++b)
                    if (table[a * C + b] == Entry::Red) {
                        ++count;
                        ++col_count[b];
                    }
                best = std::max(best, count);
            }
            for (auto c : col_count)
                best = std::max(best, c);
            return best;
        }

        static std::vector<Mask> merged(const std::vector<Mask>& parts, std::size_t a, std::size_t b)
        {
            std::vector<Mask> out;
            out.reserve(parts.size() - 1);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i == b)
                    continue;
                out.push_back(i == a ? parts[a] | parts[b] : parts[i]);
            }
            return out;
        }

        bool terminal(const State& s) const
        {
            return s.row_parts.size() <= 1 && s.col_parts.size() <= 1;
        }

        // Successor states ordered by Hamming distance of the merged lines.
        // A pair of identical lines is returned alone, being safe to merge.
        std::vector<State> successors(const State& s) const
        {
            const auto table = zone_table(s);
            const std::size_t R = s.row_parts.size(), C = s.col_parts.size();
            auto row_distance = [&](std::size_t a, std::size_t b) {
                std::size_t d = 0;
                for (std::size_t c = 0; c < C; ++c)
                    d += table[a * C + c] != table[b * C + c];
                return d;
            };
            auto col_distance = [&](std::size_t a, std::size_t b) {
                std::size_t d = 0;
                for (std::size_t r = 0; r < R; ++r)
                    d += table[r * C + a] != table[r * C + b];
                return d;
            };
            std::vector<std::pair<std::size_t, State>> cand;
            if (options_.symmetric) {
                for (std::size_t a = 0; a < R; ++a)
                    for (std::size_t b = a + 1; b < R; ++b) {
                        std::size_t d = row_distance(a, b) + col_distance(a, b);
                        State next{merged(s.row_parts, a, b), merged(s.col_parts, a, b)};
                        if (d == 0)
                            return {next};
                        cand.emplace_back(d, std::move(next));
                    }
            }
            else {
                for (std::size_t a = 0; a < R; ++a)
                    for (std::size_t b = a + 1; b < R; ++b) {
                        std::size_t d = row_distance(a, b);
                        State next{merged(s.row_parts, a, b), s.col_parts};
                        if (d == 0)
                            return {next};
                        cand.emplace_back(d, std::move(next));
                    }
                for (std::size_t a = 0; a < C; ++a)
                    for (std::size_t b = a + 1; b < C; ++b) {
                        std::size_t d = col_distance(a, b);
                        State next{s.row_parts, merged(s.col_parts, a, b)};
                        if (d == 0)
                            return {next};
                        cand.emplace_back(d, std::move(next));
                    }
            }
            std::stable_sort(cand.begin(), cand.end(),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
            std::vector<State> out;
            for (auto& c : cand)
                out.push_back(std::move(c.second));
            return out;
        }

        std::vector<State> greedy(const State& start) const
        {
            std::vector<State> path{start};
            State s = start;
            while (! terminal(s)) {
                auto next = successors(s);
                std::size_t best = 0, best_red = SIZE_MAX;
                for (std::size_t i = 0; i < next.size(); ++i) {
                    std::size_t r = red_of(next[i]);
                    if (r < best_red) {
                        best_red = r;
                        best = i;
                    }
                }
                s = next[best];
                path.push_back(s);
            }
            return path;
        }

        std::size_t path_width(const std::vector<State>& path) const
        {
            std::size_t w = 0;
            for (const auto& s : path)
                w = std::max(w, red_of(s));
            return w;
        }

        // 1 = found, 0 = no sequence of width d, -1 = budget exhausted
        int dfs(const State& s, std::size_t d)
        {
            if (terminal(s))
                return 1;
            if (++nodes_ > options_.node_budget)
                return -1;
            if (failed_.contains(s))
                return 0;
            for (auto& next : successors(s)) {
                if (red_of(next) > d)
                    continue;
                path_.push_back(next);
                int v = dfs(next, d);
                if (v != 0)
                    return v;
                path_.pop_back();
            }
            failed_.insert(s);
            return 0;
        }

        std::vector<MatrixStep> steps_of(const std::vector<State>& path) const
        {
            // part keys are the key of the smallest index in the part
            auto key_of = [](Mask part, const std::vector<std::string>& keys) {
                return keys[static_cast<std::size_t>(std::countr_zero(part))];
            };
            auto diff = [](const std::vector<Mask>& before, const std::vector<Mask>& after)
                -> std::optional<std::pair<Mask, Mask>> {
                if (before.size() == after.size())
                    return std::nullopt;
                std::vector<Mask> gone;
                for (Mask p : before)
                    if (std::find(after.begin(), after.end(), p) == after.end())
                        gone.push_back(p);
                if (gone.size() != 2)
                    throw InternalError("inconsistent partition path");
                return std::pair{gone[0], gone[1]};
            };
            std::vector<MatrixStep> steps;
            for (std::size_t s = 1; s < path.size(); ++s) {
                if (auto r = diff(path[s - 1].row_parts, path[s].row_parts)) {
                    auto a = key_of(r->first, m_.row_keys()), b = key_of(r->second, m_.row_keys());
                    bool first_keeps = std::countr_zero(r->first) < std::countr_zero(r->second);
                    steps.push_back({Axis::Row, first_keeps ? a : b, first_keeps ? b : a});
                }
                if (auto c = diff(path[s - 1].col_parts, path[s].col_parts)) {
                    auto a = key_of(c->first, m_.col_keys()), b = key_of(c->second, m_.col_keys());
                    bool first_keeps = std::countr_zero(c->first) < std::countr_zero(c->second);
                    steps.push_back({Axis::Col, first_keeps ? a : b, first_keeps ? b : a});
                }
            }
            return steps;
        }

        const TriMatrix& m_;
        MatrixSolveOptions options_;
        std::unordered_set<State, StateHash> failed_;
        std::vector<State> path_;
        std::size_t nodes_ = 0;
    };
}

MatrixSolveResult matrix_twinwidth_exact(const TriMatrix& m, const MatrixSolveOptions& options)
{
    if (m.rows() + m.cols() > options.cap)
        throw CapExceeded("matrix solver size (rows + cols)", m.rows() + m.cols(), options.cap);
    if (m.rows() > 64 || m.cols() > 64)
        throw CapExceeded("matrix solver dimension", std::max(m.rows(), m.cols()), 64);
    if (options.symmetric) {
        if (m.row_keys() != m.col_keys())
            throw InvalidArgument("symmetric mode needs identical row and column keys");
    }
    if (m.rows() == 0 || m.cols() == 0)
        return {};
    return MatrixSolver(m, options).solve();
}

bool check_ordering_bound(const TriMatrix& m, std::size_t t)
{
    if (m.rows() > 6 || m.cols() > 6)
        throw CapExceeded("ordering search dimension", std::max(m.rows(), m.cols()), 6);
    const std::size_t k = 2 * t + 2;
    if (2 * k > m.rows() || 2 * k > m.cols())
        return true;
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            if (! find_mixed_minor(m.permuted(rows, cols), k))
                return true;
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return false;
}

// Text format

TriMatrix read_matrix(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        lines.push_back(line);
    }
    if (lines.empty())
        throw ParseError("empty matrix file");
    std::istringstream header(lines[0]);
    std::string tag;
    long long r = -1, c = -1;
    std::string extra;
    if (! (header >> tag >> r >> c) || tag != "matrix" || r < 0 || c < 0 || (header >> extra))
        throw ParseError("matrix header must be 'matrix <rows> <cols>'");
    auto tokens = [](const std::string& text) {
        std::istringstream s(text);
        std::vector<std::string> out;
        std::string tok;
        while (s >> tok)
            out.push_back(tok);
        return out;
    };
    const auto R = static_cast<std::size_t>(r), C = static_cast<std::size_t>(c);
    if (lines.size() != 3 + R)
        throw ParseError("matrix file needs a row-key line, a column-key line and " + std::to_string(R) +
                         " entry lines");
    auto row_keys = tokens(lines[1]);
    auto col_keys = tokens(lines[2]);
    if (row_keys.size() != R || col_keys.size() != C)
        throw ParseError("key line length does not match the header");
    TriMatrix m;
    try {
        m = TriMatrix(std::move(row_keys), std::move(col_keys));
    }
    catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
    for (std::size_t i = 0; i < R; ++i) {
        auto symbols = tokens(lines[3 + i]);
        if (symbols.size() != C)
            throw ParseError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(symbols.size()) +
                             " entries, expected " + std::to_string(C));
        for (std::size_t j = 0; j < C; ++j) {
            if (symbols[j].size() != 1)
                throw ParseError("bad matrix symbol '" + symbols[j] + "'");
            m.set(i, j, parse_entry(symbols[j][0]));
        }
    }
    return m;
}

TriMatrix parse_matrix(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const TriMatrix& m)
{
    out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i)
        out << (i ? " " : "") << m.row_key(i);
    out << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j)
        out << (j ? " " : "") << m.col_key(j);
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << entry_symbol(m.at(i, j));
        out << '\n';
    }
}

std::string format_matrix(const TriMatrix& m)
{
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

} // namespace twinwidth
