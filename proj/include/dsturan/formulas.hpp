#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "dsturan/errors.hpp"

namespace dsturan {

// Which extremal structure a closed formula's value comes from.
enum class RegimeLabel {
    CliquePlusRemainder,  // p K_{a+b+1} plus K_q
    NearRegularTail,      // (p-1) K_{a+b+1} plus a near-b-regular tail
    TailH2,               // a=3, q=b-3: (p-1) cliques plus the 2b+1-vertex tail
    TailH3,               // a=3, q=b-2: (p-1) cliques plus the 2b+2-vertex tail
    GeneralQSmall,        // any a, q in {0, 1, a+b}
    OutOfTheoremRange,
};

inline const char* to_string(RegimeLabel r) {
    switch (r) {
        case RegimeLabel::CliquePlusRemainder: return "clique-plus-remainder";
        case RegimeLabel::NearRegularTail: return "near-regular-tail";
        case RegimeLabel::TailH2: return "tail-h2";
        case RegimeLabel::TailH3: return "tail-h3";
        case RegimeLabel::GeneralQSmall: return "general-q-small";
        case RegimeLabel::OutOfTheoremRange: return "out-of-theorem-range";
    }
    return "?";
}

// n = p * modulus + q with 0 <= q < modulus.
struct Decomposition {
    long long p = 0;
    long long q = 0;
    long long modulus = 0;
};

struct FormulaResult {
    long long value = 0;
    RegimeLabel regime = RegimeLabel::OutOfTheoremRange;
    Decomposition decomp;
};

namespace detail {

inline long long checked_add(long long x, long long y) {
    long long r = 0;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("64-bit overflow in formula");
    return r;
}

inline long long checked_mul(long long x, long long y) {
    long long r = 0;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("64-bit overflow in formula");
    return r;
}

}  // namespace detail

inline Decomposition decompose(long long n, long long modulus) {
    if (modulus < 1)
        throw std::invalid_argument("decompose needs modulus >= 1, got " + std::to_string(modulus));
    if (n < 0) throw std::invalid_argument("decompose needs n >= 0, got " + std::to_string(n));
    return {n / modulus, n % modulus, modulus};
}

inline long long binom2(long long x) {
    return x < 2 ? 0 : detail::checked_mul(x, x - 1) / 2;
}

// C(x, k); zero when x < k, so remainder terms vanish on their own.
inline long long binom(long long x, long long k) {
    if (k < 0) throw std::invalid_argument("binom needs k >= 0");
    if (x < k) return 0;
    k = std::min(k, x - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = detail::checked_mul(r, x - k + i) / i;
    return r;
}

// Largest edge count avoiding the star K_{1,b}. A graph is K_{1,b}-free iff
// its max degree stays below b, so K_n qualifies while n <= b.
inline long long ex_star(long long n, long long b) {
    if (b < 1) throw std::invalid_argument("ex_star needs b >= 1, got b=" + std::to_string(b));
    if (n < 0) throw std::invalid_argument("ex_star needs n >= 0, got n=" + std::to_string(n));
    if (n <= b) return binom2(n);
    return detail::checked_mul(b - 1, n) / 2;
}

// --- S_{1,b}: modulus b+2 ---
inline FormulaResult ex_s1b(long long n, long long b) {
    if (b < 2)
        throw domain_error("ex_s1b requires b >= 2 (so that n >= b+3 >= 5), got b=" + std::to_string(b));
    if (n < b + 3)
        throw domain_error("ex_s1b requires n >= b+3, got n=" + std::to_string(n) +
                           " b=" + std::to_string(b));
    const Decomposition d = decompose(n, b + 2);
    if (b >= 4 && 2 <= d.q && d.q <= b - 1) {
        const long long v = detail::checked_add(detail::checked_mul(d.p - 1, binom2(b + 2)),
                                                detail::checked_mul(b, b + 2 + d.q) / 2);
        return {v, RegimeLabel::NearRegularTail, d};
    }
    const long long v =
        detail::checked_add(detail::checked_mul(d.p, binom2(b + 2)), binom2(d.q));
    return {v, RegimeLabel::CliquePlusRemainder, d};
}

// --- S_{2,b}: modulus b+3. Stated for b >= 3 so the pattern stays a genuine
// double star with a < b. ---
inline FormulaResult ex_s2b(long long n, long long b) {
    if (b < 3) throw domain_error("ex_s2b requires b >= 3, got b=" + std::to_string(b));
    if (n < b + 3)
        throw domain_error("ex_s2b requires n >= b+3, got n=" + std::to_string(n) +
                           " b=" + std::to_string(b));
    const Decomposition d = decompose(n, b + 3);
    const bool near = (b >= 12 && 3 <= d.q && d.q <= b - 2) ||
                      (9 <= b && b <= 11 && 4 <= d.q && d.q <= b - 3);
    if (near) {
        const long long v = detail::checked_add(detail::checked_mul(d.p - 1, binom2(b + 3)),
                                                detail::checked_mul(b, b + 3 + d.q) / 2);
        return {v, RegimeLabel::NearRegularTail, d};
    }
    const long long v =
        detail::checked_add(detail::checked_mul(d.p, binom2(b + 3)), binom2(d.q));
    return {v, RegimeLabel::CliquePlusRemainder, d};
}

// --- S_{3,b}: modulus b+4, four rows evaluated in a fixed order, so a value
// attainable two ways at a regime boundary keeps the non-otherwise label. ---
inline FormulaResult ex_s3b(long long n, long long b) {
    if (b <= 3) throw domain_error("ex_s3b requires b > 3, got b=" + std::to_string(b));
    if (n < b + 5)
        throw domain_error("ex_s3b requires n >= b+5, got n=" + std::to_string(n) +
                           " b=" + std::to_string(b));
    const Decomposition d = decompose(n, b + 4);
    const long long q = d.q;
    const long long cliques = detail::checked_mul(d.p - 1, binom2(b + 4));
    const bool near = (b >= 24 && 4 <= q && q <= b - 4) ||
                      (16 <= b && b <= 23 && 5 <= q && q <= b - 4) ||
                      (14 <= b && b <= 15 && 6 <= q && q <= b - 5);
    if (near)
        return {detail::checked_add(cliques, detail::checked_mul(b, b + 4 + q) / 2),
                RegimeLabel::NearRegularTail, d};
    if (b >= 22 && q == b - 3)
        return {detail::checked_add(cliques, (detail::checked_mul(b, 2 * b + 1) + 3) / 2),
                RegimeLabel::TailH2, d};
    if (b >= 34 && q == b - 2)
        return {detail::checked_add(cliques, (detail::checked_mul(b, 2 * b + 2) + 2 + b / 2) / 2),
                RegimeLabel::TailH3, d};
    return {detail::checked_add(detail::checked_mul(d.p, binom2(b + 4)), binom2(q)),
            RegimeLabel::CliquePlusRemainder, d};
}

// Edge maximum over connected S_{3,b}-free graphs in the one-component band
// b+5 <= n < 2(b+4), together with the max degree the optimum attains.
struct ConnectedExtremal {
    long long max_degree = 0;
    long long edges = 0;
};

inline ConnectedExtremal connected_extremal_edges(long long n, long long b) {
    if (b <= 3)
        throw domain_error("connected_extremal_edges requires b > 3, got b=" + std::to_string(b));
    if (n < b + 5)
        throw domain_error("connected_extremal_edges requires n >= b+5, got n=" +
                           std::to_string(n) + " b=" + std::to_string(b));
    if (n >= 2 * (b + 4))
        throw domain_error("no connected extremal graph this large: requires n < 2(b+4), got n=" +
                           std::to_string(n) + " b=" + std::to_string(b));
    if (b >= 11 && n == 2 * b + 1) return {b + 1, (detail::checked_mul(b, n) + 3) / 2};
    if (b >= 11 && n == 2 * b + 2) return {b + 1, (detail::checked_mul(b, n) + 2 + b / 2) / 2};
    return {b, detail::checked_mul(b, n) / 2};
}

// Any a: exact value when the remainder q lands in {0, 1, a+b}, where the
// clique decomposition is extremal (and for q in {0,1,a+b} uniquely so).
inline std::optional<FormulaResult> ex_general_small_q(long long n, long long a, long long b) {
    if (a < 1 || b <= a)
        throw std::invalid_argument("ex_general_small_q requires 1 <= a < b, got a=" +
                                    std::to_string(a) + " b=" + std::to_string(b));
    if (n < a + b + 1)
        throw domain_error("ex_general_small_q requires n >= a+b+1, got n=" + std::to_string(n));
    const Decomposition d = decompose(n, a + b + 1);
    if (d.q != 0 && d.q != 1 && d.q != a + b) return std::nullopt;
    const long long v =
        detail::checked_add(detail::checked_mul(d.p, binom2(a + b + 1)), binom2(d.q));
    return FormulaResult{v, RegimeLabel::GeneralQSmall, d};
}

// Max number of K_k subgraphs over S_{a,b}-free graphs, k >= 3 (attained by
// the clique decomposition for every remainder).
inline FormulaResult ex_generalized_clique(long long n, long long a, long long b, long long k) {
    if (k < 3)
        throw domain_error("ex_generalized_clique requires clique order k >= 3, got k=" +
                           std::to_string(k));
    if (a < 1 || b < 1)
        throw std::invalid_argument("ex_generalized_clique requires a, b >= 1");
    if (n < 0) throw std::invalid_argument("ex_generalized_clique requires n >= 0");
    const Decomposition d = decompose(n, a + b + 1);
    const long long v =
        detail::checked_add(detail::checked_mul(d.p, binom(a + b + 1, k)), binom(d.q, k));
    return {v, RegimeLabel::CliquePlusRemainder, d};
}

// One entry point over every stated exact range: the a-specific formulas
// where they apply, otherwise the small-q clique formula; absent when no
// stated range covers (n, a, b).
inline std::optional<FormulaResult> ex_dispatch(long long n, long long a, long long b) {
    if (a < 1 || b <= a)
        throw std::invalid_argument("ex_dispatch requires 1 <= a < b, got a=" + std::to_string(a) +
                                    " b=" + std::to_string(b));
    if (n < 0) throw std::invalid_argument("ex_dispatch requires n >= 0");
    if (a == 1 && b >= 2 && n >= b + 3) return ex_s1b(n, b);
    if (a == 2 && b >= 3 && n >= b + 3) return ex_s2b(n, b);
    if (a == 3 && b >= 4 && n >= b + 5) return ex_s3b(n, b);
    if (n < a + b + 1) return std::nullopt;
    return ex_general_small_q(n, a, b);
}

// Splitting one part of size n1+n2 <= ... into two smaller parts n1, n2 < n-1
// always loses edges against the better of "merge them" and "grow one part to
// n-1": the workhorse inequality behind the clique decompositions.
inline bool lemma_n1n2_holds(long long n, long long n1, long long n2) {
    if (n1 < 1 || n2 < 1 || n1 >= n - 1 || n2 >= n - 1)
        throw domain_error("lemma_n1n2_holds requires 1 <= n1, n2 < n-1, got n=" +
                           std::to_string(n) + " n1=" + std::to_string(n1) +
                           " n2=" + std::to_string(n2));
    const long long lhs = detail::checked_add(binom2(n1), binom2(n2));
    const long long rhs =
        std::min(binom2(n1 + n2), detail::checked_add(binom2(n - 1), binom2(n1 + n2 - n + 1)));
    return lhs < rhs;
}

}  // namespace dsturan
