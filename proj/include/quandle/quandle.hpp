#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/perm.hpp"

namespace quandle {

/// A raw operation table: table[x][y] = s_x(y), i.e. y * x.
using Table = std::vector<std::vector<int>>;

/// Malformed input: non-square table, entries out of range, bad syntax.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of checking the three quandle axioms on a table. The S-form
/// (per-point symmetries) and Q-form (binary operator y * x = s_x(y)) are
/// equivalent axiom sets; q1_ok/q2_ok/q3_ok double as s1/s2/s3 results.
struct AxiomReport {
    int n = 0;
    bool q1_ok = true; // S1: s_x(x) = x               (Q1: x*x = x)
    bool q2_ok = true; // S2: each s_x bijective       (Q2: unique z with z*y = x)
    bool q3_ok = true; // S3: s_x s_y = s_{s_x(y)} s_x (Q3: (x*y)*z = (x*z)*(y*z))

    // First violation witnesses, replayable against the table.
    std::optional<int> q1_witness;                  // x with s_x(x) != x
    std::optional<std::array<int, 3>> q2_witness;   // (x, z1, z2): s_x(z1) = s_x(z2), z1 != z2
    std::optional<std::array<int, 3>> q3_witness;   // (x, y, z): s_x(s_y(z)) != s_{s_x(y)}(s_x(z))

    bool all_ok() const { return q1_ok && q2_ok && q3_ok; }

    /// Human-readable report naming each axiom in both vocabularies.
    std::string describe() const;
};

/// A quandle axiom violation, carrying the full report.
class AxiomError : public std::runtime_error {
public:
    explicit AxiomError(AxiomReport report);
    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

/// Exhaustive S1/S2/S3 check, O(n^3). Throws FormatError if the table is
/// not square or has entries outside 0..n-1; axiom failures are reported,
/// not thrown.
AxiomReport verify(const Table& table);

/// A finite quandle stored as its n x n operation table. Checked
/// construction (from_table, the named constructors) guarantees the
/// axioms hold; from_table_unchecked only guarantees the format.
class FiniteQuandle {
public:
    /// Verifies the axioms; throws AxiomError with the report on failure.
    static FiniteQuandle from_table(const Table& table);

    /// Format check only (square, entries in range). For holding raw
    /// tables that still need verification.
    static FiniteQuandle from_table_unchecked(const Table& table);

    /// s_x = id for every x.
    static FiniteQuandle trivial(int n);

    /// s_i(j) = 2i - j (mod n).
    static FiniteQuandle dihedral(int n);

    /// The vertices of the regular tetrahedron: 4 points, each symmetry a
    /// 3-cycle of the other three.
    static FiniteQuandle tetrahedron();

    int size() const { return n_; }

    /// s_x(y), i.e. y * x.
    int sym(int x, int y) const { return cells_[static_cast<std::size_t>(x) * n_ + y]; }

    /// The permutation row x, s_x. Throws if x is out of range.
    Permutation symmetry(int x) const;

    Table table() const;
    AxiomReport verify() const;

    /// The quandle with every symmetry replaced by its inverse.
    FiniteQuandle dual() const;

    friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;
    friend auto operator<=>(const FiniteQuandle&, const FiniteQuandle&) = default;

private:
    FiniteQuandle(int n, std::vector<int> cells);

    int n_;
    std::vector<int> cells_; // row-major, cells_[x*n + y] = s_x(y)
};

} // namespace quandle
