#include <doctest.h>

#include "satlab/formulas.hpp"

#include <stdexcept>

using namespace satlab;

namespace {
long long v(const FormulaValue& f) {
    REQUIRE(f.valid());
    return *f.value;
}
}  // namespace

TEST_CASE("a_k thresholds") {
    CHECK(a_k(3) == 3);
    CHECK(a_k(4) == 4);
    CHECK(a_k(5) == 5);
    CHECK(a_k(6) == 10);
    CHECK(a_k(7) == 14);
    CHECK(a_k(8) == 22);
    CHECK(a_k(9) == 30);
    CHECK_THROWS_AS(a_k(2), std::domain_error);

    for (int k = 5; k <= 30; ++k) CHECK(a_k(k) < a_k(k + 1));
}

TEST_CASE("path saturation numbers") {
    CHECK(v(sat_path(6, 3)) == 3);
    CHECK(v(sat_path(7, 4)) == 5);
    CHECK(v(sat_path(12, 6)) == 11);
    CHECK(v(sat_path(9, 5)) == 7);
    CHECK(v(sat_path(10, 6)) == 9);

    CHECK_FALSE(sat_path(2, 3).valid());
    CHECK_FALSE(sat_path(3, 4).valid());
    CHECK_FALSE(sat_path(4, 5).valid());
    CHECK_FALSE(sat_path(9, 6).valid());
    CHECK_THROWS_AS(sat_path(5, 2), std::domain_error);
}

TEST_CASE("hub-join saturation numbers") {
    CHECK(v(sat_k1_path(4, 3)) == 4);
    CHECK(v(sat_k1_path(8, 5)) == 13);
    CHECK(v(sat_k1_path(11, 6)) == 19);
    CHECK(v(sat_k1_path(6, 4)) == 9);
    CHECK(v(sat_k1_path(7, 4)) == 9);
    CHECK_FALSE(sat_k1_path(3, 3).valid());
    CHECK_FALSE(sat_k1_path(5, 5).valid());

    CHECK(v(sat_k2_path(6, 3)) == 11);
    CHECK(v(sat_k2_path(7, 4)) == 15);
    CHECK(v(sat_k2_path(7, 5)) == 15);
    CHECK(v(sat_k2_path(5, 3)) == 8);
    CHECK(v(sat_k2_path(12, 6)) == 30);
    CHECK_FALSE(sat_k2_path(4, 3).valid());
    CHECK_FALSE(sat_k2_path(6, 5).valid());
}

TEST_CASE("recursive consistency across the whole sweep") {
    for (int k = 3; k <= 12; ++k) {
        for (long long n = 3; n <= 2000; ++n) {
            FormulaValue k1 = sat_k1_path(n, k);
            if (k1.valid()) CHECK(*k1.value == n - 1 + v(sat_path(n - 1, k)));
            FormulaValue k2 = sat_k2_path(n, k);
            if (k2.valid()) CHECK(*k2.value == 2 * n - 3 + v(sat_path(n - 2, k)));
        }
    }
}

TEST_CASE("parity branches are exhaustive and disjoint") {
    for (long long n = 5; n <= 200; ++n) {
        // every in-range n produces a value, and it matches exactly one branch
        long long p4 = v(sat_path(n, 4));
        CHECK((p4 == n / 2) + (p4 == (n + 3) / 2) == 1);
        long long j1 = v(sat_k1_path(n, 4));
        CHECK((j1 == (3 * n) / 2) + (j1 == (3 * n - 3) / 2) == 1);
        if (n >= 6) {
            long long j2 = v(sat_k2_path(n, 4));
            CHECK((j2 == (5 * n - 8) / 2) + (j2 == (5 * n - 5) / 2) == 1);
        }
    }
}

TEST_CASE("clique saturation") {
    CHECK(v(sat_clique(6, 4)) == 9);
    CHECK(v(sat_clique(4, 4)) == 5);
    CHECK(v(sat_clique(5, 2)) == 0);
    CHECK_FALSE(sat_clique(3, 4).valid());
    CHECK_THROWS_AS(sat_clique(5, 1), std::domain_error);
}

TEST_CASE("books and K_t minus P_4") {
    CHECK(v(sat_book(11, 2)) == 15);
    CHECK(v(sat_book(11, 2)) == v(sat_k1_path(11, 3)));
    CHECK(v(sat_book(12, 2)) == 16);
    CHECK_FALSE(sat_book(9, 2).valid());  // below p^3 + p

    CHECK(v(sat_kt_minus_p4(17, 5)) == 24);
    CHECK(v(sat_kt_minus_p4(17, 5)) == v(sat_k1_path(17, 4)));
    CHECK(v(sat_kt_minus_p4(18, 5)) == 27);
    CHECK_FALSE(sat_kt_minus_p4(16, 5).valid());
    CHECK_THROWS_AS(sat_kt_minus_p4(30, 4), std::domain_error);

    CHECK(v(sat_generalized_book_b3p2(2048)) == 5116);
    CHECK(v(sat_generalized_book_b3p2(2049)) == 5118);
    CHECK_FALSE(sat_generalized_book_b3p2(2047).valid());
    for (long long n = 2048; n <= 2100; ++n)
        CHECK(v(sat_generalized_book_b3p2(n)) == v(sat_k2_path(n, 3)));
}

TEST_CASE("alignment sweeps") {
    for (long long n = 10; n <= 1000; ++n) CHECK(v(sat_book(n, 2)) == v(sat_k1_path(n, 3)));
    for (long long n = 17; n <= 1000; ++n)
        CHECK(v(sat_kt_minus_p4(n, 5)) == v(sat_k1_path(n, 4)));
}

TEST_CASE("join upper bound") {
    CHECK(v(join_upper_bound(10, 3, 3)) == 27);
    CHECK(v(join_upper_bound(6, 2, 3)) == 11);
    CHECK(v(join_upper_bound(6, 2, 3)) == v(sat_k2_path(6, 3)));
    CHECK(v(join_upper_bound(8, 1, 4)) == 12);
    CHECK(v(join_upper_bound(8, 1, 4)) == v(sat_k1_path(8, 4)));
    CHECK(v(join_upper_bound(8, 3, 3)) == 20);
    CHECK_FALSE(join_upper_bound(5, 3, 3).valid());
    CHECK_THROWS_AS(join_upper_bound(10, 0, 3), std::domain_error);
    CHECK_THROWS_AS(join_upper_bound(10, 1, 2), std::domain_error);

    // tight against the exact formulas wherever both are valid
    for (long long n = 4; n <= 300; ++n) {
        for (int k = 3; k <= 6; ++k) {
            FormulaValue b1 = join_upper_bound(n, 1, k);
            FormulaValue e1 = sat_k1_path(n, k);
            if (b1.valid() && e1.valid()) CHECK(*b1.value == *e1.value);
            FormulaValue b2 = join_upper_bound(n, 2, k);
            FormulaValue e2 = sat_k2_path(n, k);
            if (b2.valid() && e2.valid()) CHECK(*b2.value == *e2.value);
        }
    }
}
