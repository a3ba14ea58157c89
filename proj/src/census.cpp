#include "quandle/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quandle/analysis.hpp"

namespace quandle {

namespace {

// Flattened relabeling of `t` by sigma: entry (sigma(x), sigma(y)) becomes
// sigma(t[x][y]).
std::vector<int> relabel_flat(const Table& t, const std::vector<int>& sigma) {
    const int n = static_cast<int>(t.size());
    std::vector<int> flat(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) flat[sigma[x] * n + sigma[y]] = sigma[t[x][y]];
    return flat;
}

Table unflatten(const std::vector<int>& flat, int n) {
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = flat[x * n + y];
    return t;
}

// Row-by-row backtracking enumerator. A row is any bijection fixing its
// own index (necessary by the idempotence and bijectivity axioms); the
// self-distributivity axiom links rows: whenever rows i and j are both
// set, the row at s_i(j) is forced to row_i . row_j . row_i^{-1}. The
// search branches only on genuinely free rows and fills forced ones by
// propagation, so every leaf is a complete valid table and no valid table
// is ever skipped.
struct Enumerator {
    int n;
    std::vector<std::vector<int>> rows, invs; // empty = unassigned
    std::vector<int> trail;                   // assignment order, for undo
    std::vector<std::vector<std::vector<int>>> cands; // per index: rows fixing it

    long long total = 0;
    std::set<std::vector<int>> seen; // every relabeling of every found class
    std::vector<FiniteQuandle> reps; // canonical class representatives

    explicit Enumerator(int order) : n(order), rows(order), invs(order) {
        std::vector<int> others;
        for (int x = 0; x < n; ++x) {
            others.clear();
            for (int y = 0; y < n; ++y)
                if (y != x) others.push_back(y);
            std::vector<std::vector<int>>& list = cands.emplace_back();
            std::vector<int> perm = others;
            do {
                std::vector<int> row(n);
                row[x] = x;
                for (std::size_t i = 0; i < others.size(); ++i) row[others[i]] = perm[i];
                list.push_back(std::move(row));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    static std::vector<int> inverse_row(const std::vector<int>& r) {
        std::vector<int> inv(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) inv[r[i]] = static_cast<int>(i);
        return inv;
    }

    // Constraint from the assigned pair (i, j): the row at k = s_i(j)
    // must equal row_i . row_j . row_i^{-1}. Checks it if k is assigned,
    // force-assigns it otherwise.
    bool enforce(int i, int j) {
        const int k = rows[i][j];
        std::vector<int> conj(n);
        for (int y = 0; y < n; ++y) conj[y] = rows[i][rows[j][invs[i][y]]];
        if (!rows[k].empty()) return rows[k] == conj;
        invs[k] = inverse_row(conj);
        rows[k] = std::move(conj);
        trail.push_back(k);
        return true;
    }

    bool assign(int x, const std::vector<int>& r) {
        rows[x] = r;
        invs[x] = inverse_row(r);
        trail.push_back(x);
        std::size_t head = trail.size() - 1;
        while (head < trail.size()) {
            const int w = trail[head++];
            for (int v = 0; v < n; ++v) {
                if (rows[v].empty()) continue;
                if (!enforce(w, v)) return false;
                if (v != w && !enforce(v, w)) return false;
            }
        }
        return true;
    }

    void unwind(std::size_t mark) {
        while (trail.size() > mark) {
            const int x = trail.back();
            trail.pop_back();
            rows[x].clear();
            invs[x].clear();
        }
    }

    void dfs() {
        int x = -1;
        for (int i = 0; i < n; ++i)
            if (rows[i].empty()) {
                x = i;
                break;
            }
        if (x == -1) {
            record();
            return;
        }
        for (const std::vector<int>& r : cands[x]) {
            const std::size_t mark = trail.size();
            if (assign(x, r)) dfs();
            unwind(mark);
        }
    }

    void record() {
        ++total;
        Table t(n);
        for (int x = 0; x < n; ++x) t[x] = rows[x];

        std::vector<int> flat(n * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) flat[x * n + y] = t[x][y];
        if (seen.count(flat)) return;

        // New class: insert its whole relabeling orbit so later tables of
        // the class are recognized by a single lookup, and keep the
        // lexicographic minimum as the representative.
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::vector<int> best = flat;
        do {
            std::vector<int> rf = relabel_flat(t, sigma);
            if (rf < best) best = rf;
            seen.insert(std::move(rf));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        reps.push_back(FiniteQuandle::from_table_unchecked(unflatten(best, n)));
    }
};

} // namespace

FiniteQuandle canonical_form(const FiniteQuandle& q) {
    const int n = q.size();
    if (n > 8) throw std::invalid_argument("canonical_form: capped at n <= 8");
    const Table t = q.table();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> best = relabel_flat(t, sigma);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        std::vector<int> rf = relabel_flat(t, sigma);
        if (rf < best) best = std::move(rf);
    }
    return FiniteQuandle::from_table_unchecked(unflatten(best, n));
}

CensusResult enumerate_quandles(int n, bool connected_only) {
    if (n < 1 || n > kMaxCensusOrder)
        throw std::invalid_argument("enumerate_quandles: order must be in 1.." +
                                    std::to_string(kMaxCensusOrder));
    Enumerator e(n);
    e.dfs();
    std::sort(e.reps.begin(), e.reps.end());

    CensusResult res;
    res.n = n;
    res.total_labeled = e.total;
    for (const FiniteQuandle& q : e.reps) {
        AnalysisReport rep = analyze(q); // also re-verifies the axioms
        if (connected_only && !rep.connected) continue;
        res.iso_classes.push_back(q);
        res.connected_count += rep.connected ? 1 : 0;
        res.tph_count += rep.two_point_homogeneous ? 1 : 0;
        res.cyclic_count += rep.cyclic_type ? 1 : 0;
    }
    if (n >= 3 && !(res.cyclic_count <= res.tph_count && res.tph_count <= res.connected_count &&
                    res.connected_count <= static_cast<int>(res.iso_classes.size())))
        throw std::logic_error("enumerate_quandles: predicate counts out of order");
    return res;
}

ConjectureReport check_conjecture(int n) {
    if (n < 3 || n > kMaxCensusOrder)
        throw std::invalid_argument("check_conjecture: order must be in 3.." +
                                    std::to_string(kMaxCensusOrder));
    CensusResult census = enumerate_quandles(n);
    ConjectureReport rep;
    rep.n = n;
    rep.classes = static_cast<int>(census.iso_classes.size());
    for (const FiniteQuandle& q : census.iso_classes) {
        if (!is_two_point_homogeneous(q)) continue;
        rep.tph_classes.push_back(q);
        if (!is_cyclic_type(q)) rep.counterexamples.push_back(q);

        // Sanity assertion: at every point of a two-point homogeneous
        // quandle, the cycles of the symmetry away from its fixed point
        // all share one length.
        for (int x = 0; x < n; ++x) {
            std::vector<int> cs = q.symmetry(x).cycle_structure();
            cs.erase(std::find(cs.begin(), cs.end(), 1)); // drop the fixed point x
            for (int len : cs)
                if (len != cs.front())
                    throw std::logic_error(
                        "check_conjecture: unequal symmetry orbit sizes on a "
                        "two-point homogeneous quandle");
        }
    }
    return rep;
}

} // namespace quandle
