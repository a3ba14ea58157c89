#pragma once

#include <vector>

#include "quandle/quandle.hpp"

namespace quandle {

/// Hard order limit for exhaustive enumeration. At n = 7 the raw search
/// space is (6!)^7 row tuples; beyond desk scale even with pruning.
inline constexpr int kMaxCensusOrder = 6;

struct CensusResult {
    int n = 0;
    /// Count of valid labeled tables (all of them, regardless of the
    /// connected_only filter below).
    long long total_labeled = 0;
    /// Canonical representatives, sorted by table. Filtered to connected
    /// classes when enumerate_quandles was called with connected_only.
    std::vector<FiniteQuandle> iso_classes;
    // Predicate counts over the listed classes.
    int connected_count = 0;
    int tph_count = 0;
    int cyclic_count = 0;
};

struct ConjectureReport {
    int n = 0;
    int classes = 0;
    std::vector<FiniteQuandle> tph_classes;
    /// Two-point homogeneous classes that are not of cyclic type.
    std::vector<FiniteQuandle> counterexamples;
    bool holds() const { return counterexamples.empty(); }
};

/// Exhaustive enumeration of quandles of order n up to isomorphism,
/// 1 <= n <= kMaxCensusOrder. Backtracks over rows (each fixing its own
/// index); rows forced by the self-distributivity axiom are filled by
/// propagation, so the search prunes exactly the partial tables that
/// cannot extend to a quandle. Every completed table is counted; classes
/// are deduplicated by canonical form.
CensusResult enumerate_quandles(int n, bool connected_only = false);

/// Lexicographically minimal table over all relabelings. Exact (tries all
/// n! relabelings); capped at n <= 8.
FiniteQuandle canonical_form(const FiniteQuandle& q);

/// Enumerates order n (3 <= n <= kMaxCensusOrder) and tests that every
/// two-point homogeneous class is of cyclic type. A counterexample is a
/// report outcome, not an error.
ConjectureReport check_conjecture(int n);

} // namespace quandle
