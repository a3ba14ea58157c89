#pragma once

#include <compare>
#include <string>
#include <vector>

namespace quandle {

/// A permutation of {0, ..., n-1} in one-line notation: position i holds
/// the image of i. Immutable after construction.
class Permutation {
public:
    /// Validates that `images` is a bijection of {0, ..., n-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    /// Builds a permutation of the given degree from disjoint cycles,
    /// e.g. from_cycles(4, {{1, 2, 3}}) is the 3-cycle (1 2 3).
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    /// Sorted multiset of cycle lengths; fixed points count as length 1.
    /// The lengths always sum to degree().
    std::vector<int> cycle_structure() const;

    /// Cycle notation with fixed points omitted, e.g. "(1 2 4 3)".
    /// The identity prints as "()".
    std::string cycle_string() const;

    /// One-line notation, e.g. "[0,2,4,1,3]".
    std::string one_line_string() const;

    // Lexicographic on one-line notation; used for dedup and canonical order.
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// f∘g: applies g first, then f. Degrees must match.
Permutation compose(const Permutation& f, const Permutation& g);

Permutation inverse(const Permutation& f);

} // namespace quandle
