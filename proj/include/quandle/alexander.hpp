#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quandle/perm.hpp"
#include "quandle/quandle.hpp"

namespace quandle {

/// For a prime p: the parameters a for which the linear Alexander quandle
/// on p points with multiplier a is two-point homogeneous, i.e. the
/// primitive roots modulo p, grouped into dual pairs ab = 1 (mod p).
struct ClassificationRecord {
    int p = 0;
    int count = 0;                               // = roots.size()
    std::vector<int> roots;                      // sorted ascending
    std::vector<std::pair<int, int>> dual_pairs; // a <= b, sorted by a; a == b means self-dual

    /// "2↔6, 7↔8"; a self-dual entry prints as the bare root.
    std::string pairs_string() const;
};

bool is_prime(long long n);

/// a^(-1) mod n via the extended Euclidean algorithm. gcd(a, n) must be 1.
int inv_mod(int a, int n);

/// The quandle on Z_n with s_x(y) = a*y + (1-a)*x (mod n).
/// Requires 1 <= a <= n-1 and gcd(a, n) = 1.
FiniteQuandle linear_alexander(int n, int a);

/// Closed form for the k-th power of the symmetry at x:
/// y -> a^k * y + (1 - a^k) * x (mod n). k >= 0.
Permutation symmetry_power(int n, int a, int x, long long k);

/// x -> x + m (mod n).
Permutation translation(int n, int m);

/// Least k >= 1 with a^k = 1 (mod n). Requires gcd(a, n) = 1.
int multiplicative_order(int a, int n);

/// All primitive roots modulo a prime p >= 3, ascending.
std::vector<int> primitive_roots(int p);

/// The explicit element set of the inner automorphism group of the linear
/// Alexander quandle on p points (p prime, 2 <= a <= p-1): every power of
/// every symmetry together with every translation. Sorted, deduplicated;
/// its size is p * multiplicative_order(a, p).
std::vector<Permutation> inner_group_closed_form(int p, int a);

ClassificationRecord classify_prime(int p);

/// One record per prime 3 <= p <= p_max.
std::vector<ClassificationRecord> table_rows(int p_max);

/// Plain-text table, one "p  count  pairs" row per record.
std::string format_table(const std::vector<ClassificationRecord>& rows);

} // namespace quandle
