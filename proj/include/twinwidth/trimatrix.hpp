#pragma once

#include <twinwidth/errors.hpp>
#include <twinwidth/permutation.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twinwidth {

enum class Entry : std::uint8_t { Zero = 0, One = 1, Two = 2, Red = 3 };

char entry_symbol(Entry e);
Entry parse_entry(char c);

/// An ordered matrix over {0, 1, 2, r} with opaque row and column keys.
class TriMatrix {
public:
    TriMatrix() = default;
    TriMatrix(std::vector<std::string> row_keys, std::vector<std::string> col_keys, Entry fill = Entry::Zero);

    std::size_t rows() const noexcept { return row_keys_.size(); }
    std::size_t cols() const noexcept { return col_keys_.size(); }
    const std::vector<std::string>& row_keys() const noexcept { return row_keys_; }
    const std::vector<std::string>& col_keys() const noexcept { return col_keys_; }
    const std::string& row_key(std::size_t i) const { return row_keys_.at(i); }
    const std::string& col_key(std::size_t j) const { return col_keys_.at(j); }
    std::optional<std::size_t> find_row(std::string_view key) const;
    std::optional<std::size_t> find_col(std::string_view key) const;
    std::size_t row_index(std::string_view key) const;
    std::size_t col_index(std::string_view key) const;

    Entry at(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }
    void set(std::size_t i, std::size_t j, Entry e) { data_[i * cols() + j] = e; }

    /// Row `l` is deleted; row `k` becomes red wherever rows k and l differ.
    TriMatrix contract_rows(std::string_view k, std::string_view l) const;
    TriMatrix contract_cols(std::string_view k, std::string_view l) const;
    TriMatrix contract_rows(std::size_t k, std::size_t l) const;
    TriMatrix contract_cols(std::size_t k, std::size_t l) const;

    TriMatrix transposed() const;
    /// Rows and columns reordered: new row i is old row row_order[i].
    TriMatrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const;
    TriMatrix submatrix(const std::vector<std::size_t>& row_subset, const std::vector<std::size_t>& col_subset) const;

    std::vector<Entry> row(std::size_t i) const;
    std::vector<Entry> column(std::size_t j) const;

    friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

private:
    std::vector<std::string> row_keys_;
    std::vector<std::string> col_keys_;
    std::vector<Entry> data_;
};

/// Maximum number of red entries in a row or a column.
std::size_t red_number(const TriMatrix& m);

/// 0/1 matrix with a one at (i, pi(i)); keys are "1".."p".
TriMatrix permutation_matrix(const Permutation& pi);

/// A division into consecutive blocks, given by block start indices
/// (first start is 0, starts strictly increasing).
struct Division {
    std::vector<std::size_t> row_starts;
    std::vector<std::size_t> col_starts;

    std::size_t row_begin(std::size_t b) const { return row_starts.at(b); }
    std::size_t col_begin(std::size_t b) const { return col_starts.at(b); }
    std::size_t row_end(std::size_t b, std::size_t rows) const;
    std::size_t col_end(std::size_t b, std::size_t cols) const;
};

struct ZoneWitness {
    std::string row_a, row_b;
    std::string col_a, col_b;
};

struct MixedMinorWitness {
    std::size_t k = 0;
    Division division;
    /// Zone (i, j) is at index i * k + j.
    std::vector<ZoneWitness> zones;
};

/// Zone [r0, r1) x [c0, c1) has two distinct rows and two distinct columns.
bool zone_mixed(const TriMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1);

/// Exhaustive search for a k x k division with every zone mixed.
std::optional<MixedMinorWitness> find_mixed_minor(const TriMatrix& m, std::size_t k);

/// Re-checks a witness: valid division, each zone's witness keys lie in the
/// zone and the recorded rows (columns) differ inside it.
bool verify_mixed_minor(const TriMatrix& m, const MixedMinorWitness& w);

enum class Axis { Row, Col };

struct MatrixStep {
    Axis axis;
    std::string keep;
    std::string drop;

    friend bool operator==(const MatrixStep&, const MatrixStep&) = default;
};

struct MatrixSolveResult {
    std::size_t value = 0;
    bool optimal = false;
    std::vector<MatrixStep> steps;
    std::size_t nodes_explored = 0;
};

struct MatrixSolveOptions {
    bool symmetric = false;
    /// Bound on rows + cols.
    std::size_t cap = 10;
    std::size_t node_budget = 20'000'000;
};

/// Red numbers of the matrices along `steps` applied to `m`.  In symmetric
/// mode the steps come in (row, column) pairs and only the matrix after each
/// pair is measured.  The initial matrix is included.
std::vector<std::size_t> replay_red_numbers(const TriMatrix& m, const std::vector<MatrixStep>& steps,
                                            bool symmetric);
/// The matrices produced along `steps` (same measuring points as above).
std::vector<TriMatrix> replay_matrices(const TriMatrix& m, const std::vector<MatrixStep>& steps, bool symmetric);

/// Exact matrix twin-width by iterative deepening over partition states.
/// The symmetric mode needs a square matrix with equal row and column keys.
/// Throws CapExceeded above the cap; an exhausted node budget yields the
/// best known upper bound with optimal = false.
MatrixSolveResult matrix_twinwidth_exact(const TriMatrix& m, const MatrixSolveOptions& options = {});

/// True iff some ordering of rows and columns has no (2t+2)-mixed minor.
/// Exhaustive over orderings; limited to 6 x 6.
bool check_ordering_bound(const TriMatrix& m, std::size_t t);

/// Matrix text format: `matrix <rows> <cols>`, a row-key line, a column-key
/// line, then one line of space-separated symbols per row.
TriMatrix read_matrix(std::istream& in);
TriMatrix parse_matrix(std::string_view text);
void write_matrix(std::ostream& out, const TriMatrix& m);
std::string format_matrix(const TriMatrix& m);

} // namespace twinwidth
