#pragma once

#include <twinwidth/trimatrix.hpp>

#include <climits>
#include <random>
#include <vector>

namespace testing {

using twinwidth::Entry;
using twinwidth::TriMatrix;

inline TriMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows)
{
    std::vector<std::string> rk, ck;
    for (std::size_t i = 0; i < rows.size(); ++i)
        rk.push_back("r" + std::to_string(i));
    for (std::size_t j = 0; j < (rows.empty() ? 0 : rows[0].size()); ++j)
        ck.push_back("c" + std::to_string(j));
    TriMatrix m(rk, ck);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(i, j, static_cast<Entry>(rows[i][j]));
    return m;
}

inline TriMatrix random_01_matrix(std::size_t r, std::size_t c, std::mt19937& rng)
{
    std::bernoulli_distribution coin(0.5);
    std::vector<std::vector<int>> rows(r, std::vector<int>(c));
    for (auto& row : rows)
        for (auto& x : row)
            x = coin(rng);
    return matrix_from_rows(rows);
}

/// Zone mixedness by comparing the restricted row and column vectors.
inline bool zone_mixed_direct(const TriMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1)
{
    auto row_vec = [&](std::size_t i) {
        std::vector<Entry> v;
        for (std::size_t j = c0; j < c1; ++j)
            v.push_back(m.at(i, j));
        return v;
    };
    auto col_vec = [&](std::size_t j) {
        std::vector<Entry> v;
        for (std::size_t i = r0; i < r1; ++i)
            v.push_back(m.at(i, j));
        return v;
    };
    bool rows = false, cols = false;
    for (std::size_t a = r0; a < r1; ++a)
        for (std::size_t b = a + 1; b < r1; ++b)
            rows = rows || row_vec(a) != row_vec(b);
    for (std::size_t a = c0; a < c1; ++a)
        for (std::size_t b = a + 1; b < c1; ++b)
            cols = cols || col_vec(a) != col_vec(b);
    return rows && cols;
}

/// All ways to cut {0..n-1} into k consecutive nonempty blocks.
inline std::vector<std::vector<std::size_t>> all_block_starts(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k == 0 || k > n)
        return out;
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k - 1)
            continue;
        std::vector<std::size_t> starts{0};
        for (std::size_t i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1)
                starts.push_back(i);
        out.push_back(starts);
    }
    return out;
}

/// Existence of a k-mixed minor by enumerating every division.
inline bool has_mixed_minor_brute(const TriMatrix& m, std::size_t k)
{
    auto rows = all_block_starts(m.rows(), k);
    auto cols = all_block_starts(m.cols(), k);
    for (const auto& rs : rows)
        for (const auto& cs : cols) {
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a)
                for (std::size_t b = 0; b < k && ok; ++b) {
                    std::size_t r1 = a + 1 < k ? rs[a + 1] : m.rows();
                    std::size_t c1 = b + 1 < k ? cs[b + 1] : m.cols();
                    ok = zone_mixed_direct(m, rs[a], r1, cs[b], c1);
                }
            if (ok)
                return true;
        }
    return false;
}

/// Matrix twin-width by enumerating all contraction sequences on actual
/// matrices.  Symmetric mode contracts row pairs followed by the same
/// column pair and measures after both.
inline std::size_t brute_matrix_twinwidth(const TriMatrix& m, bool symmetric, std::size_t so_far = 0,
                                          std::size_t best = SIZE_MAX)
{
    if (m.rows() <= 1 && m.cols() <= 1)
        return so_far;
    auto consider = [&](const TriMatrix& next) {
        std::size_t w = std::max(so_far, twinwidth::red_number(next));
        if (w < best)
            best = std::min(best, brute_matrix_twinwidth(next, symmetric, w, best));
    };
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = a + 1; b < m.rows(); ++b) {
            TriMatrix next = m.contract_rows(a, b);
            if (symmetric)
                next = next.contract_cols(a, b);
            consider(next);
        }
    if (! symmetric)
        for (std::size_t a = 0; a < m.cols(); ++a)
            for (std::size_t b = a + 1; b < m.cols(); ++b)
                consider(m.contract_cols(a, b));
    return best;
}

} // namespace testing
