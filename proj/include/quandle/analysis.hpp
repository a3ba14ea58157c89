#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandle/permgroup.hpp"
#include "quandle/quandle.hpp"

namespace quandle {

/// All computed structural facts about one quandle.
///
/// Internal consistency (asserted by analyze before returning):
///   cyclic_type            => two_point_homogeneous
///   two_point_homogeneous  => connected            (n >= 3)
///   connected              => one shared cycle structure across all points
struct AnalysisReport {
    int n = 0;
    bool axioms_ok = false;
    bool connected = false;
    bool two_point_homogeneous = false;
    bool cyclic_type = false;
    /// Cyclic type is only defined for n >= 3; false means the cyclic_type
    /// field is reported as "not defined (n < 3)" rather than a verdict.
    bool cyclic_type_defined = true;
    std::size_t inner_order = 0;
    std::vector<std::vector<int>> orbits;           // Inn-orbit partition, each sorted, by least point
    std::vector<std::vector<int>> cycle_structures; // per point x, cycle structure of s_x
    bool self_dual = false;

    std::string describe() const;
    std::string to_json() const;
};

/// Inn(q): the closure of all n symmetries.
PermGroup inner_group(const FiniteQuandle& q);

/// True iff Inn(q) acts transitively on the points.
bool is_connected(const FiniteQuandle& q);

/// Two-point homogeneity with respect to Inn(q): the action is transitive
/// on ordered pairs of distinct points. For n >= 3 this is computed as
/// connected + transitive stabilizer action on the remaining points; for
/// n = 2 from the raw pair definition; n = 1 is vacuously true.
bool is_two_point_homogeneous(const FiniteQuandle& q);

/// Debug oracle: the literal pair definition, quantifying over all ordered
/// pairs and searching all of Inn(q). Agrees with the fast path; kept dumb
/// on purpose.
bool is_two_point_homogeneous_raw(const FiniteQuandle& q);

/// The Aut-based variant: raw pair definition over the full automorphism
/// group instead of Inn(q).
bool is_two_point_homogeneous_aut(const FiniteQuandle& q);

/// True iff every s_x acts on the other n-1 points as a single
/// (n-1)-cycle. Returns false for n < 3, where the notion is undefined;
/// see AnalysisReport::cyclic_type_defined.
bool is_cyclic_type(const FiniteQuandle& q);

/// A bijection phi with phi(s_x(y)) = s_{phi(x)}(phi(y)) for all x, y, or
/// nullopt if none exists. Backtracking over point assignments, pruned by
/// per-point cycle structures and Inn-orbit sizes.
std::optional<Permutation> isomorphism(const FiniteQuandle& a, const FiniteQuandle& b);

/// Every automorphism of q (all isomorphisms q -> q).
std::vector<Permutation> automorphisms(const FiniteQuandle& q);

AnalysisReport analyze(const FiniteQuandle& q);

} // namespace quandle
