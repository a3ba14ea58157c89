#include "quandle/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace quandle {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Permutation> symmetries(const FiniteQuandle& q) {
    std::vector<Permutation> gens;
    gens.reserve(q.size());
    for (int x = 0; x < q.size(); ++x) gens.push_back(q.symmetry(x));
    return gens;
}

// The literal definition: for every ordered pair of distinct points and
// every other such pair, some element of `elems` maps the first to the
// second. Quartic loop, linear scan — the reference everything else is
// checked against.
bool pair_transitive(const std::vector<Permutation>& elems, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (c == d) continue;
                    bool found = false;
                    for (const auto& g : elems)
                        if (g(a) == c && g(b) == d) {
                            found = true;
                            break;
                        }
                    if (!found) return false;
                }
        }
    return true;
}

// Per-point invariants an isomorphism must preserve, plus the group order
// as a whole-quandle invariant.
struct PointData {
    std::vector<std::vector<int>> key; // cycle structure of s_x
    std::vector<std::size_t> orb;      // |Inn-orbit of x|
    std::size_t inn_order = 0;
};

PointData point_data(const FiniteQuandle& q) {
    PointData d;
    PermGroup inn = PermGroup::closure(symmetries(q));
    d.inn_order = inn.order();
    for (int x = 0; x < q.size(); ++x) {
        d.key.push_back(q.symmetry(x).cycle_structure());
        d.orb.push_back(inn.orbit(x).size());
    }
    return d;
}

// Backtracking map search between two tables. Each branch assignment is
// followed by constraint propagation: once phi(x) and phi(y) are fixed,
// phi(s_x(y)) is forced to s_{phi(x)}(phi(y)). A trail records assignments
// for undo.
struct IsoSearch {
    const FiniteQuandle& a;
    const FiniteQuandle& b;
    const PointData& da;
    const PointData& db;
    int n;
    bool all; // collect every solution instead of stopping at the first

    std::vector<int> phi;
    std::vector<char> used;
    std::vector<int> trail;
    std::vector<Permutation> out;

    IsoSearch(const FiniteQuandle& qa, const FiniteQuandle& qb, const PointData& pda,
              const PointData& pdb, bool collect_all)
        : a(qa), b(qb), da(pda), db(pdb), n(qa.size()), all(collect_all), phi(n, -1),
          used(n, 0) {}

    bool compatible(int x, int u) const {
        return da.key[x] == db.key[u] && da.orb[x] == db.orb[u];
    }

    bool force(int z, int t) {
        if (phi[z] != -1) return phi[z] == t;
        if (used[t] || !compatible(z, t)) return false;
        phi[z] = t;
        used[t] = 1;
        trail.push_back(z);
        return true;
    }

    // Assigns phi(x) = u, then propagates forced images to a fixpoint.
    bool assign(int x, int u) {
        std::size_t head = trail.size();
        if (!force(x, u)) return false;
        while (head < trail.size()) {
            int w = trail[head++];
            for (int v = 0; v < n; ++v) {
                if (phi[v] == -1) continue;
                if (!force(a.sym(w, v), b.sym(phi[w], phi[v]))) return false;
                if (v != w && !force(a.sym(v, w), b.sym(phi[v], phi[w]))) return false;
            }
        }
        return true;
    }

    void unwind(std::size_t mark) {
        while (trail.size() > mark) {
            int x = trail.back();
            trail.pop_back();
            used[phi[x]] = 0;
            phi[x] = -1;
        }
    }

    // Returns true to stop the whole search (first-solution mode).
    bool dfs() {
        int x = -1;
        for (int i = 0; i < n; ++i)
            if (phi[i] == -1) {
                x = i;
                break;
            }
        if (x == -1) {
            // Complete map. Propagation already enforced every pair, but
            // replay the homomorphism condition whole as a guard.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (phi[a.sym(i, j)] != b.sym(phi[i], phi[j])) return false;
            out.emplace_back(phi);
            return !all;
        }
        for (int u = 0; u < n; ++u) {
            if (used[u] || !compatible(x, u)) continue;
            std::size_t mark = trail.size();
            bool stop = assign(x, u) && dfs();
            unwind(mark);
            if (stop) return true;
        }
        return false;
    }
};

std::string join_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

} // namespace

PermGroup inner_group(const FiniteQuandle& q) { return PermGroup::closure(symmetries(q)); }

bool is_connected(const FiniteQuandle& q) {
    return inner_group(q).orbit(0).size() == static_cast<std::size_t>(q.size());
}

bool is_two_point_homogeneous(const FiniteQuandle& q) {
    const int n = q.size();
    if (n == 1) return true; // no ordered pairs of distinct points
    PermGroup inn = inner_group(q);
    if (n == 2) return pair_transitive(inn.elements(), n);
    if (inn.orbit(0).size() != static_cast<std::size_t>(n)) return false;
    std::set<int> rest;
    for (int x = 1; x < n; ++x) rest.insert(x);
    return inn.stabilizer(0).is_transitive(rest);
}

bool is_two_point_homogeneous_raw(const FiniteQuandle& q) {
    return pair_transitive(inner_group(q).elements(), q.size());
}

bool is_two_point_homogeneous_aut(const FiniteQuandle& q) {
    return pair_transitive(automorphisms(q), q.size());
}

bool is_cyclic_type(const FiniteQuandle& q) {
    const int n = q.size();
    if (n < 3) return false; // not defined below 3 points
    const std::vector<int> want = {1, n - 1};
    for (int x = 0; x < n; ++x)
        if (q.symmetry(x).cycle_structure() != want) return false;
    return true;
}

std::optional<Permutation> isomorphism(const FiniteQuandle& a, const FiniteQuandle& b) {
    if (a.size() != b.size()) return std::nullopt;
    PointData da = point_data(a), db = point_data(b);
    if (da.inn_order != db.inn_order) return std::nullopt;
    auto profile = [](const PointData& d) {
        std::vector<std::pair<std::vector<int>, std::size_t>> p;
        for (std::size_t i = 0; i < d.key.size(); ++i) p.emplace_back(d.key[i], d.orb[i]);
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(da) != profile(db)) return std::nullopt;
    IsoSearch s(a, b, da, db, /*collect_all=*/false);
    if (!s.dfs()) return std::nullopt;
    return s.out.front();
}

std::vector<Permutation> automorphisms(const FiniteQuandle& q) {
    PointData d = point_data(q);
    IsoSearch s(q, q, d, d, /*collect_all=*/true);
    s.dfs();
    std::sort(s.out.begin(), s.out.end());
    return s.out;
}

AnalysisReport analyze(const FiniteQuandle& q) {
    AxiomReport ax = q.verify();
    if (!ax.all_ok()) throw AxiomError(std::move(ax));

    AnalysisReport r;
    const int n = q.size();
    r.n = n;
    r.axioms_ok = true;

    PermGroup inn = inner_group(q);
    r.inner_order = inn.order();

    std::vector<char> placed(n, 0);
    for (int x = 0; x < n; ++x) {
        if (placed[x]) continue;
        std::set<int> orb = inn.orbit(x);
        r.orbits.emplace_back(orb.begin(), orb.end());
        for (int y : orb) placed[y] = 1;
    }
    r.connected = r.orbits.size() == 1;

    if (n == 1)
        r.two_point_homogeneous = true;
    else if (n == 2)
        r.two_point_homogeneous = pair_transitive(inn.elements(), n);
    else {
        std::set<int> rest;
        for (int x = 1; x < n; ++x) rest.insert(x);
        r.two_point_homogeneous = r.connected && inn.stabilizer(0).is_transitive(rest);
    }

    r.cyclic_type_defined = n >= 3;
    r.cyclic_type = is_cyclic_type(q);

    for (int x = 0; x < n; ++x) r.cycle_structures.push_back(q.symmetry(x).cycle_structure());

    r.self_dual = isomorphism(q, q.dual()).has_value();

    // Cross-checks between independently computed fields; a failure here
    // is a bug, not a data condition.
    if (r.cyclic_type && !r.two_point_homogeneous)
        throw std::logic_error("analyze: cyclic type without two-point homogeneity");
    if (n >= 3 && r.two_point_homogeneous && !r.connected)
        throw std::logic_error("analyze: two-point homogeneous but not connected");
    if (r.connected)
        for (int x = 1; x < n; ++x)
            if (r.cycle_structures[x] != r.cycle_structures[0])
                throw std::logic_error("analyze: connected quandle with unequal cycle structures");

    return r;
}

std::string AnalysisReport::describe() const {
    std::ostringstream out;
    out << "n: " << n << '\n';
    out << "axioms: " << (axioms_ok ? "ok" : "violated") << '\n';
    out << "connected: " << (connected ? "true" : "false") << '\n';
    out << "two_point_homogeneous: " << (two_point_homogeneous ? "true" : "false") << '\n';
    if (cyclic_type_defined)
        out << "cyclic_type: " << (cyclic_type ? "true" : "false") << '\n';
    else
        out << "cyclic_type: not defined (n < 3)" << '\n';
    out << "inner_order: " << inner_order << '\n';
    out << "orbits:";
    for (const auto& orb : orbits) out << ' ' << join_list(orb);
    out << '\n';
    out << "cycle_structures:";
    for (const auto& cs : cycle_structures) out << ' ' << join_list(cs);
    out << '\n';
    out << "self_dual: " << (self_dual ? "true" : "false") << '\n';
    return out.str();
}

std::string AnalysisReport::to_json() const {
    ordered_json j;
    j["n"] = n;
    j["connected"] = connected;
    j["two_point_homogeneous"] = two_point_homogeneous;
    if (cyclic_type_defined)
        j["cyclic_type"] = cyclic_type;
    else
        j["cyclic_type"] = nullptr;
    j["inner_order"] = inner_order;
    j["orbits"] = orbits;
    j["cycle_structures"] = cycle_structures;
    j["self_dual"] = self_dual;
    return j.dump();
}

} // namespace quandle
