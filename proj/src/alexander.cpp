#include "quandle/alexander.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quandle {

namespace {

long long pow_mod(long long base, long long exp, long long mod) {
    base %= mod;
    if (base < 0) base += mod;
    long long r = 1 % mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

void require_unit(int a, int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": modulus must be positive");
    if (a < 1 || a > n - 1)
        throw std::invalid_argument(std::string(who) + ": need 1 <= a <= n-1 (got a=" +
                                    std::to_string(a) + ", n=" + std::to_string(n) + ")");
    if (std::gcd(a, n) != 1)
        throw std::invalid_argument(std::string(who) + ": gcd(" + std::to_string(a) + ", " +
                                    std::to_string(n) + ") != 1");
}

// Distinct prime factors by trial division; m stays small here.
std::vector<int> prime_factors(int m) {
    std::vector<int> fs;
    for (int d = 2; static_cast<long long>(d) * d <= m; ++d)
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fs.push_back(m);
    return fs;
}

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int inv_mod(int a, int n) {
    if (n < 1) throw std::invalid_argument("inv_mod: modulus must be positive");
    a %= n;
    if (a < 0) a += n;
    // Extended Euclid, tracking only the coefficient of a.
    int r0 = n, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw std::invalid_argument("inv_mod: " + std::to_string(a) + " is not invertible mod " +
                                    std::to_string(n));
    t0 %= n;
    if (t0 < 0) t0 += n;
    return t0;
}

FiniteQuandle linear_alexander(int n, int a) {
    require_unit(a, n, "linear_alexander");
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            long long v = (static_cast<long long>(a) * y +
                           static_cast<long long>(1 - a) * x) % n;
            if (v < 0) v += n;
            t[x][y] = static_cast<int>(v);
        }
    return FiniteQuandle::from_table(t);
}

Permutation symmetry_power(int n, int a, int x, long long k) {
    require_unit(a, n, "symmetry_power");
    if (x < 0 || x >= n) throw std::invalid_argument("symmetry_power: point out of range");
    if (k < 0) throw std::invalid_argument("symmetry_power: k must be >= 0");
    long long ak = pow_mod(a, k, n);
    std::vector<int> images(n);
    for (int y = 0; y < n; ++y) {
        long long v = (ak * y + (1 - ak) * x) % n;
        if (v < 0) v += n;
        images[y] = static_cast<int>(v);
    }
    return Permutation(std::move(images));
}

Permutation translation(int n, int m) {
    if (n < 1) throw std::invalid_argument("translation: n must be positive");
    m %= n;
    if (m < 0) m += n;
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = (x + m) % n;
    return Permutation(std::move(images));
}

int multiplicative_order(int a, int n) {
    if (n < 1) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    a = ((a % n) + n) % n;
    if (std::gcd(a, n) != 1)
        throw std::invalid_argument("multiplicative_order: gcd(a, n) must be 1");
    long long v = a;
    int k = 1;
    while (v != 1 % n) {
        v = v * a % n;
        ++k;
    }
    return k;
}

std::vector<int> primitive_roots(int p) {
    if (!is_prime(p) || p < 3)
        throw std::invalid_argument("primitive_roots: p must be a prime >= 3");
    const int m = p - 1;
    const std::vector<int> qs = prime_factors(m);
    std::vector<int> roots;
    for (int a = 2; a <= p - 1; ++a) {
        bool primitive = true;
        for (int q : qs)
            if (pow_mod(a, m / q, p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) roots.push_back(a);
    }
    return roots;
}

std::vector<Permutation> inner_group_closed_form(int p, int a) {
    if (!is_prime(p)) throw std::invalid_argument("inner_group_closed_form: p must be prime");
    if (a < 2 || a > p - 1)
        throw std::invalid_argument("inner_group_closed_form: need 2 <= a <= p-1");
    const int d = multiplicative_order(a, p);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(p) * (d + 1));
    for (int x = 0; x < p; ++x)
        for (int k = 0; k < d; ++k) out.push_back(symmetry_power(p, a, x, k));
    for (int m = 0; m < p; ++m) out.push_back(translation(p, m));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != static_cast<std::size_t>(p) * d)
        throw std::logic_error("inner_group_closed_form: element count != p * ord(a)");
    return out;
}

ClassificationRecord classify_prime(int p) {
    if (!is_prime(p) || p < 3)
        throw std::invalid_argument("classify_prime: p must be a prime >= 3");
    ClassificationRecord rec;
    rec.p = p;
    rec.roots = primitive_roots(p);
    rec.count = static_cast<int>(rec.roots.size());
    std::set<std::pair<int, int>> pairs;
    for (int a : rec.roots) {
        int b = inv_mod(a, p);
        pairs.emplace(std::min(a, b), std::max(a, b));
    }
    rec.dual_pairs.assign(pairs.begin(), pairs.end());
    return rec;
}

std::vector<ClassificationRecord> table_rows(int p_max) {
    std::vector<ClassificationRecord> rows;
    for (int p = 3; p <= p_max; ++p)
        if (is_prime(p)) rows.push_back(classify_prime(p));
    return rows;
}

std::string ClassificationRecord::pairs_string() const {
    std::string out;
    for (const auto& [a, b] : dual_pairs) {
        if (!out.empty()) out += ", ";
        out += std::to_string(a);
        if (a != b) {
            out += "↔";
            out += std::to_string(b);
        }
    }
    return out;
}

std::string format_table(const std::vector<ClassificationRecord>& rows) {
    std::string out;
    for (const auto& rec : rows) {
        out += std::to_string(rec.p);
        out += "  ";
        out += std::to_string(rec.count);
        out += "  ";
        out += rec.pairs_string();
        out += '\n';
    }
    return out;
}

} // namespace quandle
