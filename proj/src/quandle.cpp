#include "quandle/quandle.hpp"

#include <utility>

namespace quandle {

namespace {

void check_format(const Table& table) {
    const std::size_t n = table.size();
    if (n == 0) throw FormatError("empty table");
    for (std::size_t x = 0; x < n; ++x) {
        if (table[x].size() != n)
            throw FormatError("table is not square: row " + std::to_string(x) + " has " +
                              std::to_string(table[x].size()) + " entries, expected " +
                              std::to_string(n));
        for (std::size_t y = 0; y < n; ++y) {
            int v = table[x][y];
            if (v < 0 || v >= static_cast<int>(n))
                throw FormatError("entry out of range at (" + std::to_string(x) + "," +
                                  std::to_string(y) + "): " + std::to_string(v));
        }
    }
}

std::vector<int> flatten(const Table& table) {
    const std::size_t n = table.size();
    std::vector<int> cells;
    cells.reserve(n * n);
    for (const auto& row : table)
        for (int v : row) cells.push_back(v);
    return cells;
}

} // namespace

AxiomError::AxiomError(AxiomReport report)
    : std::runtime_error("quandle axiom violation:\n" + report.describe()),
      report_(std::move(report)) {}

AxiomReport verify(const Table& table) {
    check_format(table);
    const int n = static_cast<int>(table.size());
    AxiomReport rep;
    rep.n = n;

    for (int x = 0; x < n && rep.q1_ok; ++x) {
        if (table[x][x] != x) {
            rep.q1_ok = false;
            rep.q1_witness = x;
        }
    }

    for (int x = 0; x < n && rep.q2_ok; ++x) {
        std::vector<int> first_at(static_cast<std::size_t>(n), -1);
        for (int z = 0; z < n; ++z) {
            int v = table[x][z];
            if (first_at[static_cast<std::size_t>(v)] >= 0) {
                rep.q2_ok = false;
                rep.q2_witness = {x, first_at[static_cast<std::size_t>(v)], z};
                break;
            }
            first_at[static_cast<std::size_t>(v)] = z;
        }
    }

    for (int x = 0; x < n && rep.q3_ok; ++x) {
        for (int y = 0; y < n && rep.q3_ok; ++y) {
            for (int z = 0; z < n; ++z) {
                if (table[x][table[y][z]] != table[table[x][y]][table[x][z]]) {
                    rep.q3_ok = false;
                    rep.q3_witness = {x, y, z};
                    break;
                }
            }
        }
    }
    return rep;
}

std::string AxiomReport::describe() const {
    std::string out = "n: " + std::to_string(n) + "\n";

    out += "Q1/S1 idempotence (x*x = x; s_x(x) = x): ";
    if (q1_ok) {
        out += "ok\n";
    } else {
        int x = *q1_witness;
        out += "FAIL at x=" + std::to_string(x) + "\n";
    }

    out += "Q2/S2 right-invertibility (unique z with z*y = x; each s_y bijective): ";
    if (q2_ok) {
        out += "ok\n";
    } else {
        auto [y, z1, z2] = *q2_witness;
        out += "FAIL at y=" + std::to_string(y) + ": z=" + std::to_string(z1) + " and z=" +
               std::to_string(z2) + " give the same z*y\n";
    }

    out += "Q3/S3 self-distributivity ((x*y)*z = (x*z)*(y*z); s_x s_y = s_{s_x(y)} s_x): ";
    if (q3_ok) {
        out += "ok\n";
    } else {
        auto [x, y, z] = *q3_witness;
        out += "FAIL at S-form (x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
               std::to_string(z) + "), equivalently Q-form (x,y,z)=(" + std::to_string(z) + "," +
               std::to_string(y) + "," + std::to_string(x) + ")\n";
    }

    out += std::string("quandle: ") + (all_ok() ? "yes" : "no") + "\n";
    return out;
}

FiniteQuandle::FiniteQuandle(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {}

FiniteQuandle FiniteQuandle::from_table(const Table& table) {
    AxiomReport rep = quandle::verify(table);
    if (!rep.all_ok()) throw AxiomError(std::move(rep));
    return FiniteQuandle(static_cast<int>(table.size()), flatten(table));
}

FiniteQuandle FiniteQuandle::from_table_unchecked(const Table& table) {
    check_format(table);
    return FiniteQuandle(static_cast<int>(table.size()), flatten(table));
}

FiniteQuandle FiniteQuandle::trivial(int n) {
    if (n < 1) throw std::invalid_argument("trivial: n must be >= 1");
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cells[static_cast<std::size_t>(x) * n + y] = y;
    return FiniteQuandle(n, std::move(cells));
}

FiniteQuandle FiniteQuandle::dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cells[static_cast<std::size_t>(x) * n + y] = ((2 * x - y) % n + n) % n;
    return FiniteQuandle(n, std::move(cells));
}

FiniteQuandle FiniteQuandle::tetrahedron() {
    // s_0 = (1 2 3), s_1 = (0 3 2), s_2 = (0 1 3), s_3 = (0 2 1)
    return FiniteQuandle(4, {0, 2, 3, 1,
                             3, 1, 0, 2,
                             1, 3, 2, 0,
                             2, 0, 1, 3});
}

Permutation FiniteQuandle::symmetry(int x) const {
    if (x < 0 || x >= n_) throw std::invalid_argument("symmetry: point out of range");
    std::vector<int> im(cells_.begin() + static_cast<std::ptrdiff_t>(x) * n_,
                        cells_.begin() + static_cast<std::ptrdiff_t>(x + 1) * n_);
    return Permutation(std::move(im));
}

Table FiniteQuandle::table() const {
    Table t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = sym(x, y);
    return t;
}

AxiomReport FiniteQuandle::verify() const { return quandle::verify(table()); }

FiniteQuandle FiniteQuandle::dual() const {
    std::vector<int> cells(static_cast<std::size_t>(n_) * n_);
    for (int x = 0; x < n_; ++x) {
        Permutation inv = inverse(symmetry(x));
        for (int y = 0; y < n_; ++y) cells[static_cast<std::size_t>(x) * n_ + y] = inv(y);
    }
    return FiniteQuandle(n_, std::move(cells));
}

} // namespace quandle
