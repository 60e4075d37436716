#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace twinwidth {

/// A permutation of {1..p} in one-line notation.  Construction validates
/// that the image is a bijection.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(std::size_t p);
    /// Parses whitespace or comma separated one-line notation, e.g. "3 1 4 2".
    static Permutation parse(std::string_view text);
    /// All permutations of size p in lexicographic order.
    static std::vector<Permutation> all(std::size_t p);

    std::size_t size() const noexcept { return image_.size(); }
    /// 1-based application: operator()(i) = pi(i).
    int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& image() const noexcept { return image_; }

    Permutation inverse() const;
    /// Value complement: i -> p + 1 - pi(i).
    Permutation complement() const;
    /// Position reversal: i -> pi(p + 1 - i).
    Permutation reverse() const;

    /// True if `pattern` occurs in this permutation; on success `positions`
    /// receives the (1-based, increasing) positions of one occurrence.
    bool contains_pattern(const Permutation& pattern, std::vector<int>* positions = nullptr) const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.image_ <=> b.image_; }

private:
    std::vector<int> image_;
};

/// The permutation whose k-th value is the position in `order1` of the k-th
/// element of `order2`; both are orders on the same set {0..n-1}.
Permutation permutation_from_orders(const std::vector<std::size_t>& order1, const std::vector<std::size_t>& order2);

} // namespace twinwidth
