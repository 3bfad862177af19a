#include "satlab/formulas.hpp"

#include <cassert>
#include <stdexcept>

namespace satlab {

namespace {

long long floor_div(long long a, long long b) {
    assert(b > 0);
    long long q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) {
    assert(b > 0);
    long long q = a / b;
    return (a % b != 0 && a > 0) ? q + 1 : q;
}

FormulaValue invalid(std::string source) { return {std::nullopt, std::move(source)}; }

}  // namespace

long long a_k(int k) {
    if (k < 3) throw std::domain_error("a_k is defined for k >= 3");
    if (k <= 5) return k;
    if (k > 126) throw std::domain_error("a_k argument too large");
    if (k % 2 == 0) {
        long long t = k / 2;
        return 3 * (1ll << (t - 1)) - 2;
    }
    long long t = (k - 1) / 2;
    return (1ll << (t + 1)) - 2;
}

FormulaValue sat_path(long long n, int k) {
    if (k < 3) throw std::domain_error("sat(n, P_k) needs k >= 3");
    switch (k) {
        case 3:
            if (n < 3) return invalid("theorem-2.1(i)");
            return {floor_div(n, 2), "theorem-2.1(i)"};
        case 4:
            if (n % 2 == 0) {
                if (n < 4) return invalid("theorem-2.1(ii)");
                return {n / 2, "theorem-2.1(ii)"};
            }
            if (n < 5) return invalid("theorem-2.1(ii)");
            return {(n + 3) / 2, "theorem-2.1(ii)"};
        case 5:
            if (n < 5) return invalid("theorem-2.1(iii)");
            return {ceil_div(5 * n - 4, 6), "theorem-2.1(iii)"};
        default: {
            long long a = a_k(k);
            if (n < a) return invalid("theorem-2.1(iv)");
            return {n - floor_div(n, a), "theorem-2.1(iv)"};
        }
    }
}

FormulaValue sat_k1_path(long long n, int k) {
    if (k < 3) throw std::domain_error("sat(n, K_1 v P_k) needs k >= 3");
    if (n < a_k(k) + 1) return invalid("theorem-3.3");
    FormulaValue out;
    switch (k) {
        case 3: out = {floor_div(3 * n - 3, 2), "theorem-3.3(k=3)"}; break;
        case 4:
            out = {n % 2 == 1 ? (3 * n - 3) / 2 : (3 * n) / 2, "theorem-3.3(k=4)"};
            break;
        case 5: out = {ceil_div(11 * n - 15, 6), "theorem-3.3(k=5)"}; break;
        default: out = {2 * n - 2 - floor_div(n - 1, a_k(k)), "theorem-3.3(k>=6)"}; break;
    }
    // recursive consistency with the path formula
    FormulaValue rec = sat_path(n - 1, k);
    assert(!rec.valid() || *rec.value + n - 1 == *out.value);
    (void)rec;
    return out;
}

FormulaValue sat_k2_path(long long n, int k) {
    if (k < 3) throw std::domain_error("sat(n, K_2 v P_k) needs k >= 3");
    if (n < a_k(k) + 2) return invalid("theorem-1.1");
    FormulaValue out;
    switch (k) {
        case 3: out = {floor_div(5 * n - 8, 2), "theorem-1.1(k=3)"}; break;
        case 4:
            out = {n % 2 == 1 ? (5 * n - 5) / 2 : (5 * n - 8) / 2, "theorem-1.1(k=4)"};
            break;
        case 5: out = {ceil_div(17 * n - 32, 6), "theorem-1.1(k=5)"}; break;
        default: out = {3 * n - 5 - floor_div(n - 2, a_k(k)), "theorem-1.1(k>=6)"}; break;
    }
    FormulaValue rec = sat_path(n - 2, k);
    assert(!rec.valid() || *rec.value + 2 * n - 3 == *out.value);
    (void)rec;
    return out;
}

FormulaValue sat_clique(long long n, int p) {
    if (p < 2) throw std::domain_error("sat(n, K_p) needs p >= 2");
    if (n < p) return invalid("clique-ehm");
    long long q = p - 2;
    return {q * (n - p + 2) + q * (q - 1) / 2, "clique-ehm"};
}

FormulaValue sat_book(long long n, int p) {
    if (p < 1) throw std::domain_error("sat(n, B_p) needs p >= 1");
    long long pc = p;
    if (n < pc * pc * pc + pc) return invalid("prop-5.1");
    long long theta = (p % 2 == 0 && (n - p / 2) % 2 == 0) ? 1 : 0;
    long long num = (pc + 1) * (n - 1) - (pc / 2) * ((pc + 1) / 2) + theta;
    assert(num % 2 == 0);
    return {num / 2, "prop-5.1"};
}

FormulaValue sat_kt_minus_p4(long long n, int t) {
    if (t < 5) throw std::domain_error("sat(n, K_t - P_4) needs t >= 5");
    if (n < 7ll * t - 18) return invalid("prop-5.3");
    long long eta = ((n - t) % 2 != 0) ? 2 : 0;
    long long tc = t;
    return {floor_div((2 * tc - 7) * (n - tc + 4), 2) + (tc - 4) * (tc - 5) / 2 + eta,
            "prop-5.3"};
}

FormulaValue sat_generalized_book_b3p2(long long n) {
    if (n < 2048) return invalid("prop-5.2(table-1)");
    return {floor_div(5 * n - 8, 2), "prop-5.2(table-1)"};
}

FormulaValue join_upper_bound(long long n, int s, int k) {
    if (s < 1) throw std::domain_error("join upper bound needs s >= 1");
    if (k < 3) throw std::domain_error("join upper bound needs k >= 3");
    if (n < k + s) return invalid("prop-5.4");
    FormulaValue tail = sat_path(n - s, k);
    if (!tail.valid()) return invalid("prop-5.4");
    long long sc = s;
    return {sc * (sc - 1) / 2 + sc * (n - sc) + *tail.value, "prop-5.4"};
}

}  // namespace satlab
