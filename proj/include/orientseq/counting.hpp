#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace orientseq {

// Exact counting for the generated sequences.  Everything is integer
// arithmetic; intermediate products run in 128 bits and anything leaving
// this module is range-checked into 64 bits, so out-of-range inputs raise
// instead of wrapping.

namespace detail {

using int128 = __int128;

inline long long narrow_checked(int128 v, const char* who) {
    if (v > static_cast<int128>(std::numeric_limits<long long>::max()) ||
        v < static_cast<int128>(std::numeric_limits<long long>::min()))
        throw std::range_error(std::string(who) + ": value exceeds 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace detail

inline int moebius(long long m) {
    if (m < 1) throw std::invalid_argument("moebius: need m >= 1");
    int prime_factors = 0;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;  // squared factor
        ++prime_factors;
    }
    if (m > 1) ++prime_factors;
    return prime_factors % 2 == 0 ? 1 : -1;
}

inline long long pow_checked(long long base, int exp) {
    if (base < 0 || exp < 0) throw std::invalid_argument("pow_checked: need base, exp >= 0");
    detail::int128 r = 1;
    for (int e = 0; e < exp; ++e)
        r = detail::narrow_checked(r * base, "pow_checked");
    return static_cast<long long>(r);
}

// 2*H_k(d) = sum over i | d of i * (k^floor((i+1)/2) + k^(floor(i/2)+1)).
// Twice the palindrome-class weight is always integral, so that is what we
// store; H itself is recovered by halving.
inline long long two_H(int k, int d) {
    if (d < 1 || k < 2) throw std::invalid_argument("two_H: need d >= 1, k >= 2");
    detail::int128 total = 0;
    for (int i = 1; i <= d; ++i) {
        if (d % i != 0) continue;
        const detail::int128 term =
            static_cast<detail::int128>(i) *
            (static_cast<detail::int128>(pow_checked(k, (i + 1) / 2)) +
             static_cast<detail::int128>(pow_checked(k, i / 2 + 1)));
        total = detail::narrow_checked(total + term, "two_H");
    }
    return static_cast<long long>(total);
}

inline long long H_exact(int k, int d) {
    const long long t = two_H(k, d);
    if (t % 2 != 0) throw std::logic_error("H_exact: 2H came out odd");
    return t / 2;
}

// Exact count of windows in the generated cycle: the Moebius-inverted count
// of strings whose rotation class is an asymmetric bracelet class.
inline long long lower_bound_L(int n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("lower_bound_L: need n >= 1, k >= 2");
    const long long kn = pow_checked(k, n);
    detail::int128 numerator = 2 * static_cast<detail::int128>(kn);
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int q = n / d;
        numerator -= static_cast<detail::int128>(moebius(q)) * q * two_H(k, d);
    }
    if (numerator % 4 != 0) throw std::logic_error("lower_bound_L: numerator not divisible by 4");
    return detail::narrow_checked(numerator / 4, "lower_bound_L");
}

// (k^n - k^floor((n+1)/2)) / 2: total non-palindromic windows halved, an
// upper bound on the length of any orientable sequence of order n.
inline long long trivial_upper_bound_M(int n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("trivial_upper_bound_M: need n >= 1, k >= 2");
    const long long kn = pow_checked(k, n);
    const long long palindromes = pow_checked(k, (n + 1) / 2);
    return (kn - palindromes) / 2;
}

struct Rational {
    long long num;
    long long den;  // > 0, gcd(num, den) == 1

    bool operator==(const Rational&) const = default;

    // this < p/q, exactly.
    bool less_than(long long p, long long q) const {
        return static_cast<detail::int128>(num) * q < static_cast<detail::int128>(p) * den;
    }
};

// Relative-gap bound (M - L)/L <= (n^3 k^(floor(n/2)+1) - k^floor((n+1)/2))
// / (k^n - n^3 k^(floor(n/2)+1)), meaningful only while the denominator is
// positive.
inline std::optional<Rational> optimality_gap_bound(int n, int k) {
    if (n < 3 || k < 3) throw std::invalid_argument("optimality_gap_bound: need n, k >= 3");
    const detail::int128 cube = static_cast<detail::int128>(n) * n * n *
                                static_cast<detail::int128>(pow_checked(k, n / 2 + 1));
    const detail::int128 den = static_cast<detail::int128>(pow_checked(k, n)) - cube;
    if (den <= 0) return std::nullopt;
    const detail::int128 num = cube - pow_checked(k, (n + 1) / 2);
    long long num64 = detail::narrow_checked(num, "optimality_gap_bound");
    long long den64 = detail::narrow_checked(den, "optimality_gap_bound");
    const long long g = std::gcd(num64, den64);
    if (g > 1) {
        num64 /= g;
        den64 /= g;
    }
    return Rational{num64, den64};
}

struct CountReport {
    int n;
    int k;
    long long lower_bound_L;
    long long trivial_upper_bound_M;
    std::optional<Rational> gap_bound;  // absent when the proof bound degenerates
};

inline CountReport count_report(int n, int k) {
    CountReport r{n, k, lower_bound_L(n, k), trivial_upper_bound_M(n, k), std::nullopt};
    if (n >= 3 && k >= 3) r.gap_bound = optimality_gap_bound(n, k);
    return r;
}

}  // namespace orientseq
