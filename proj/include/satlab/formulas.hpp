#ifndef SATLAB_FORMULAS_HPP
#define SATLAB_FORMULAS_HPP

#include <optional>
#include <string>

namespace satlab {

/// A closed-form saturation number together with its validity range.
/// Formulas never extrapolate below their proven thresholds: outside the
/// range the value is absent and search is the only truth source.
struct FormulaValue {
    std::optional<long long> value;
    std::string source;  // citation tag, e.g. "theorem-2.1(i)"
    bool valid() const { return value.has_value(); }
};

/// Threshold parameter governing the validity ranges of the path formulas:
/// k for 3 <= k <= 5, 3*2^(t-1)-2 for even k=2t >= 6, 2^(t+1)-2 for odd
/// k=2t+1 >= 7. Throws std::domain_error for k < 3.
long long a_k(int k);

/// sat(n, P_k) for k >= 3.
FormulaValue sat_path(long long n, int k);

/// sat(n, K_1 v P_k), valid for n >= a_k + 1. Always equals
/// n-1 + sat(n-1, P_k) where both sides are valid.
FormulaValue sat_k1_path(long long n, int k);

/// sat(n, K_2 v P_k), valid for n >= a_k + 2. Always equals
/// 2n-3 + sat(n-2, P_k) where both sides are valid.
FormulaValue sat_k2_path(long long n, int k);

/// sat(n, K_p) = (p-2)(n-p+2) + C(p-2,2) for p >= 2, n >= p.
FormulaValue sat_clique(long long n, int p);

/// Book saturation: sat(n, B_p) for n >= p^3 + p.
FormulaValue sat_book(long long n, int p);

/// sat(n, K_t - P_4) for t >= 5, n >= 7t - 18.
FormulaValue sat_kt_minus_p4(long long n, int t);

/// The generalized-book value for B_{3,2} only: floor((5n-8)/2) for
/// n >= 2048. The general (b, p) family is intentionally not provided.
FormulaValue sat_generalized_book_b3p2(long long n);

/// Upper bound C(s,2) + s(n-s) + sat(n-s, P_k) for joins K_s v P_k,
/// s >= 1, k >= 3; exact for s in {1, 2} wherever those formulas hold.
FormulaValue join_upper_bound(long long n, int s, int k);

}  // namespace satlab

#endif
