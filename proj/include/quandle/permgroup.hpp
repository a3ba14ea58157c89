#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "quandle/perm.hpp"

namespace quandle {

/// Thrown when a closure computation exceeds its element cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t cap);
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A finite permutation group with its element set fully materialized.
/// Sized for groups of order up to a few thousand; there is deliberately
/// no Schreier-Sims machinery here.
class PermGroup {
public:
    /// Breadth-first multiplicative closure of the generators. The result
    /// contains the identity and is closed under composition and inverse.
    /// Throws CapExceeded if more than `cap` elements are found.
    static PermGroup closure(const std::vector<Permutation>& generators,
                             std::size_t cap = kDefaultClosureCap);

    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }

    /// Sorted (lexicographic one-line) element list.
    const std::vector<Permutation>& elements() const { return elements_; }

    bool contains(const Permutation& p) const;

    /// The orbit of a point under the group action.
    std::set<int> orbit(int x) const;

    /// The subgroup of elements fixing x, with its own element set.
    PermGroup stabilizer(int x) const;

    /// True iff the restricted action on `domain` is transitive.
    /// `domain` must be nonempty and G-invariant; both are checked.
    bool is_transitive(const std::set<int>& domain) const;

private:
    PermGroup(int degree, std::vector<Permutation> generators,
              std::vector<Permutation> elements);

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_; // sorted
};

} // namespace quandle
