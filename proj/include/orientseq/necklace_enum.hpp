#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orientseq/word.hpp"

namespace orientseq {

// Visit every k-ary necklace of length n in lexicographic order.
// Classic recursive generation; amortized constant work per necklace.
template <class Visit>
void for_each_necklace(int n, int k, Visit&& visit) {
    if (n < 1 || k < 2) throw std::invalid_argument("for_each_necklace: need n >= 1, k >= 2");
    std::vector<Symbol> a(static_cast<std::size_t>(n) + 1, 0);  // a[1..n], a[0] = 0 sentinel
    auto rec = [&](auto&& self, int t, int p) -> void {
        if (t > n) {
            if (n % p == 0)
                visit(std::span<const Symbol>(a.data() + 1, static_cast<std::size_t>(n)));
            return;
        }
        a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
        self(self, t + 1, p);
        for (Symbol v = a[static_cast<std::size_t>(t - p)] + 1; v < k; ++v) {
            a[static_cast<std::size_t>(t)] = v;
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
}

template <class Visit>
void for_each_asymmetric_bracelet(int n, int k, Visit&& visit) {
    for_each_necklace(n, k, [&](std::span<const Symbol> s) {
        if (classify(s) == BraceletClass::AsymmetricBracelet) visit(s);
    });
}

// All k-ary asymmetric bracelets of length n, lexicographically sorted.
inline std::vector<Word> asymmetric_bracelets(int n, int k) {
    std::vector<Word> out;
    for_each_asymmetric_bracelet(n, k, [&](std::span<const Symbol> s) {
        out.emplace_back(std::vector<Symbol>(s.begin(), s.end()), k);
    });
    return out;
}

}  // namespace orientseq
