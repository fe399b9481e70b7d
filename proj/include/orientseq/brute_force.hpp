#pragma once

#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orientseq/counting.hpp"
#include "orientseq/necklace_enum.hpp"
#include "orientseq/parent_rules.hpp"
#include "orientseq/word.hpp"

namespace orientseq {

// Exhaustive-scan ceiling for brute_force_S; ORIENT_SEQ_MAX_BRUTE raises it.
inline long long brute_force_guard_limit() {
    if (const char* env = std::getenv("ORIENT_SEQ_MAX_BRUTE")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 100'000'000;
}

// All strings whose rotation class is an asymmetric bracelet class, by a
// full scan of the k^n strings.  This is the reference window set the
// generated cycles are checked against.
inline std::vector<Word> brute_force_S(int n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("brute_force_S: need n >= 1, k >= 2");
    const long long total = pow_checked(k, n);
    if (total > brute_force_guard_limit())
        throw std::range_error(
            "brute_force_S: k^n exceeds the scan guard (set ORIENT_SEQ_MAX_BRUTE to raise it)");

    std::vector<Word> out;
    std::vector<Symbol> w(static_cast<std::size_t>(n), 0);
    std::vector<Symbol> canon(static_cast<std::size_t>(n));
    for (long long count = 0; count < total; ++count) {
        least_rotation_into(w, canon);
        if (classify(std::span<const Symbol>(canon)) == BraceletClass::AsymmetricBracelet)
            out.emplace_back(w, k);
        for (std::size_t i = w.size(); i-- > 0;) {  // odometer, lexicographic
            if (++w[i] < k) break;
            w[i] = 0;
        }
    }
    return out;
}

// Length of the longest cyclic sequence of order n whose windows are
// pairwise distinct in both reading directions, by depth-first search over
// closed trails in the shift graph.  Exponential; tiny instances only.
inline long long brute_force_max_os(int n, int k, bool allow_large = false) {
    if (n < 2 || k < 2) throw std::invalid_argument("brute_force_max_os: need n >= 2, k >= 2");
    const bool tiny = (n == 2 && k <= 5) || (n == 3 && k == 3);
    if (!tiny && !allow_large)
        throw std::range_error("brute_force_max_os: instance beyond the default guard");
    const long long window_count = pow_checked(k, n);
    if (window_count > 1'000'000)
        throw std::range_error("brute_force_max_os: instance too large to scan");

    const long long states = window_count / k;  // k^(n-1) suffix states
    std::vector<long long> rev_of(static_cast<std::size_t>(window_count));
    std::vector<char> palindrome(static_cast<std::size_t>(window_count));
    long long usable = 0;
    {
        std::vector<Symbol> w(static_cast<std::size_t>(n));
        for (long long v = 0; v < window_count; ++v) {
            long long x = v;
            for (std::size_t i = w.size(); i-- > 0;) {
                w[i] = static_cast<Symbol>(x % k);
                x /= k;
            }
            long long r = 0;
            for (std::size_t i = w.size(); i-- > 0;) r = r * k + w[i];
            rev_of[static_cast<std::size_t>(v)] = r;
            palindrome[static_cast<std::size_t>(v)] = (r == v);
            if (r > v) ++usable;  // one orientation per non-palindromic pair
        }
    }

    std::vector<char> used(static_cast<std::size_t>(window_count), 0);
    long long best = 0;

    const auto dfs = [&](auto&& self, long long state, long long start, long long len) -> void {
        if (state == start && len > best) best = len;
        if (best == usable) return;  // every class already in one trail
        for (Symbol c = 0; c < k; ++c) {
            const long long wv = state * k + c;
            if (palindrome[static_cast<std::size_t>(wv)]) continue;
            const long long cv = std::min(wv, rev_of[static_cast<std::size_t>(wv)]);
            if (used[static_cast<std::size_t>(cv)]) continue;
            used[static_cast<std::size_t>(cv)] = 1;
            self(self, wv % states, start, len + 1);
            used[static_cast<std::size_t>(cv)] = 0;
            if (best == usable) return;
        }
    };
    for (long long start = 0; start < states && best < usable; ++start)
        dfs(dfs, start, start, 0);
    return best;
}

// Members of A_k(n) that every one of the four plain rules (firstSymbol,
// lastSymbol, firstNonMin, lastNonMax) maps out of A_k(n).  These are the
// strings that force the fifth rule into the parent order.
inline std::vector<Word> stubborn_strings(int n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("stubborn_strings: need n >= 1, k >= 2");
    std::vector<Word> out;
    std::vector<Symbol> buf(static_cast<std::size_t>(n));
    for_each_asymmetric_bracelet(n, k, [&](std::span<const Symbol> a) {
        last_non_max_into(a, k, buf);
        if (is_asymmetric_bracelet(buf)) return;
        last_symbol_into(a, k, buf);
        if (is_asymmetric_bracelet(buf)) return;
        first_non_min_into(a, k, buf);
        if (is_asymmetric_bracelet(buf)) return;
        first_symbol_into(a, k, buf);
        if (is_asymmetric_bracelet(buf)) return;
        out.emplace_back(std::vector<Symbol>(a.begin(), a.end()), k);
    });
    return out;
}

inline long long count_stubborn_strings(int n, int k) {
    return static_cast<long long>(stubborn_strings(n, k).size());
}

}  // namespace orientseq
