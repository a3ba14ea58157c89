#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "quandle/alexander.hpp"
#include "quandle/analysis.hpp"

using namespace quandle;

TEST_CASE("primality") {
    for (long long p : {2, 3, 5, 7, 11, 13, 31, 37, 97}) CHECK(is_prime(p));
    for (long long c : {-7, 0, 1, 4, 9, 15, 33, 35, 91}) CHECK_FALSE(is_prime(c));
}

TEST_CASE("modular inverses") {
    CHECK(inv_mod(3, 7) == 5);
    CHECK(inv_mod(1, 2) == 1);
    for (int a = 1; a <= 12; ++a) CHECK(a * inv_mod(a, 13) % 13 == 1);
    CHECK(inv_mod(-2, 5) == inv_mod(3, 5));
    CHECK_THROWS_AS(inv_mod(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(inv_mod(0, 5), std::invalid_argument);
}

TEST_CASE("linear quandle tables") {
    FiniteQuandle q = linear_alexander(5, 2);
    CHECK(q.symmetry(0).images() == std::vector<int>{0, 2, 4, 1, 3});
    // Entry (x, y) is a*y + (1-a)*x.
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) CHECK(q.sym(x, y) == ((2 * y - x) % 5 + 5) % 5);

    // Multiplier 1 gives the trivial quandle; multiplier n-1 the dihedral one.
    CHECK(linear_alexander(7, 1) == FiniteQuandle::trivial(7));
    for (int n : {3, 4, 5, 6, 9, 12})
        CHECK(linear_alexander(n, n - 1) == FiniteQuandle::dihedral(n));

    // Everything the constructor accepts is a quandle.
    for (int n = 2; n <= 13; ++n)
        for (int a = 1; a < n; ++a)
            if (std::gcd(a, n) == 1) CHECK(linear_alexander(n, a).verify().all_ok());
}

TEST_CASE("linear quandle parameter validation") {
    CHECK_THROWS_AS(linear_alexander(6, 2), std::invalid_argument); // gcd 2
    CHECK_THROWS_AS(linear_alexander(6, 3), std::invalid_argument); // gcd 3
    CHECK_THROWS_AS(linear_alexander(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(linear_alexander(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(linear_alexander(5, -1), std::invalid_argument);
    CHECK_THROWS_AS(linear_alexander(1, 1), std::invalid_argument); // no valid multiplier at n=1
    CHECK_THROWS_AS(linear_alexander(0, 1), std::invalid_argument);
}

TEST_CASE("symmetry powers match repeated composition") {
    const int p = 11, a = 7, x = 4;
    FiniteQuandle q = linear_alexander(p, a);
    Permutation acc = Permutation::identity(p);
    for (long long k = 0; k <= 12; ++k) {
        CHECK(symmetry_power(p, a, x, k) == acc);
        acc = compose(q.symmetry(x), acc);
    }
    CHECK_THROWS_AS(symmetry_power(p, a, x, -1), std::invalid_argument);
    CHECK_THROWS_AS(symmetry_power(p, a, p, 1), std::invalid_argument);
}

TEST_CASE("translations") {
    CHECK(translation(5, 2).images() == std::vector<int>{2, 3, 4, 0, 1});
    CHECK(translation(5, 7) == translation(5, 2));
    CHECK(translation(5, -3) == translation(5, 2));
    CHECK(translation(5, 0).is_identity());
    CHECK_THROWS_AS(translation(0, 1), std::invalid_argument);
}

TEST_CASE("multiplicative orders") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK(multiplicative_order(5, 13) == 4);
    CHECK(multiplicative_order(1, 9) == 1);
    CHECK(multiplicative_order(12, 13) == 2);
    CHECK_THROWS_AS(multiplicative_order(6, 9), std::invalid_argument);
    // Orders divide the group order.
    for (int a = 2; a <= 16; ++a) CHECK(16 % multiplicative_order(a, 17) == 0);
}

TEST_CASE("primitive roots") {
    CHECK(primitive_roots(3) == std::vector<int>{2});
    CHECK(primitive_roots(5) == std::vector<int>{2, 3});
    CHECK(primitive_roots(7) == std::vector<int>{3, 5});
    CHECK(primitive_roots(13) == std::vector<int>{2, 6, 7, 11});
    CHECK_THROWS_AS(primitive_roots(2), std::invalid_argument);
    CHECK_THROWS_AS(primitive_roots(9), std::invalid_argument);

    // A primitive root is exactly an element of full order.
    for (int p : {11, 17, 19, 23}) {
        std::vector<int> root_list = primitive_roots(p);
        std::set<int> roots(root_list.begin(), root_list.end());
        for (int a = 2; a <= p - 1; ++a)
            CHECK(roots.count(a) == (multiplicative_order(a, p) == p - 1 ? 1 : 0));
    }
}

TEST_CASE("closed-form inner group matches the brute-force closure") {
    for (int p : {3, 5, 7, 11}) {
        for (int a = 2; a <= p - 1; ++a) {
            std::vector<Permutation> closed = inner_group_closed_form(p, a);
            PermGroup brute = inner_group(linear_alexander(p, a));
            CHECK(closed == brute.elements());
            CHECK(closed.size() ==
                  static_cast<std::size_t>(p) * multiplicative_order(a, p));
        }
    }
    CHECK_THROWS_AS(inner_group_closed_form(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(inner_group_closed_form(7, 1), std::invalid_argument);
}

TEST_CASE("the point stabilizer is generated by the symmetry there") {
    // Order 5, multiplier 2: the stabilizer of [0] is cyclic of order 4,
    // generated by s_[0].
    FiniteQuandle q = linear_alexander(5, 2);
    PermGroup stab = inner_group(q).stabilizer(0);
    CHECK(stab.order() == 4);
    std::set<Permutation> powers;
    Permutation acc = Permutation::identity(5);
    for (int k = 0; k < 4; ++k) {
        powers.insert(acc);
        acc = compose(q.symmetry(0), acc);
    }
    CHECK(std::vector<Permutation>(powers.begin(), powers.end()) == stab.elements());
}

TEST_CASE("the symmetry at 0 sweeps out the powers of the multiplier") {
    const int p = 11, a = 2; // 2 is a primitive root mod 11
    FiniteQuandle q = linear_alexander(p, a);
    std::set<int> orbit;
    int y = 1;
    do {
        orbit.insert(y);
        y = q.sym(0, y);
    } while (y != 1);
    CHECK(orbit.size() == 10); // all nonzero residues
}

TEST_CASE("classification records") {
    ClassificationRecord rec = classify_prime(11);
    CHECK(rec.p == 11);
    CHECK(rec.count == 4);
    CHECK(rec.roots == std::vector<int>{2, 6, 7, 8});
    CHECK(rec.dual_pairs == std::vector<std::pair<int, int>>{{2, 6}, {7, 8}});
    CHECK(rec.pairs_string() == "2↔6, 7↔8");

    // Self-dual root prints bare.
    CHECK(classify_prime(3).pairs_string() == "2");

    CHECK_THROWS_AS(classify_prime(9), std::invalid_argument);
    CHECK_THROWS_AS(classify_prime(2), std::invalid_argument);

    // Dual pairs multiply to 1 and cover the roots.
    for (int p : {13, 17, 19, 23, 29, 31, 37}) {
        ClassificationRecord r = classify_prime(p);
        CHECK(r.count == static_cast<int>(r.roots.size()));
        std::set<int> covered;
        for (auto [a, b] : r.dual_pairs) {
            CHECK(static_cast<long long>(a) * b % p == 1);
            covered.insert(a);
            covered.insert(b);
        }
        CHECK(covered == std::set<int>(r.roots.begin(), r.roots.end()));
    }
}

TEST_CASE("table rows and rendering") {
    auto rows = table_rows(37);
    REQUIRE(rows.size() == 11);
    std::vector<int> counts;
    for (const auto& r : rows) counts.push_back(r.count);
    CHECK(counts == std::vector<int>{1, 2, 2, 4, 4, 8, 6, 10, 12, 8, 12});

    CHECK(format_table(table_rows(7)) ==
          "3  1  2\n"
          "5  2  2↔3\n"
          "7  2  3↔5\n");
    CHECK(table_rows(2).empty());
}

TEST_CASE("duality pairs the multiplier with its inverse, exactly") {
    for (int p : {5, 7, 11, 13})
        for (int a = 2; a <= p - 1; ++a)
            CHECK(linear_alexander(p, a).dual() == linear_alexander(p, inv_mod(a, p)));
}

TEST_CASE("two-point homogeneity of prime linear quandles means primitive multiplier") {
    for (int p : {3, 5, 7, 11, 13}) {
        std::vector<int> root_list = primitive_roots(p);
        std::set<int> roots(root_list.begin(), root_list.end());
        for (int a = 2; a <= p - 1; ++a) {
            FiniteQuandle q = linear_alexander(p, a);
            const bool expect = roots.count(a) > 0;
            CHECK(is_two_point_homogeneous(q) == expect);
            CHECK(is_cyclic_type(q) == expect);
            CHECK(inner_group(q).order() ==
                  static_cast<std::size_t>(p) * multiplicative_order(a, p));
        }
    }
}
