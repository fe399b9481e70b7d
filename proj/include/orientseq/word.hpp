#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orientseq {

using Symbol = int;

// Verdict for a length-n word under rotation and rotation+reversal.
// A necklace is the lexicographically least rotation of its class; a word is
// a symmetric necklace when its reversal lies in the same rotation class,
// and an asymmetric bracelet when it is strictly smaller than the necklace
// of its reversal.
enum class BraceletClass {
    NotNecklace,
    SymmetricNecklace,
    AsymmetricBracelet,
    AsymmetricNonBraceletNecklace,
};

inline std::string_view to_string(BraceletClass c) {
    switch (c) {
        case BraceletClass::NotNecklace: return "NotNecklace";
        case BraceletClass::SymmetricNecklace: return "SymmetricNecklace";
        case BraceletClass::AsymmetricBracelet: return "AsymmetricBracelet";
        case BraceletClass::AsymmetricNonBraceletNecklace:
            return "AsymmetricNonBraceletNecklace";
    }
    return "?";
}

namespace detail {

// Raw bytes of a symbol run, usable as a hash-map key.
inline std::string byte_key(std::span<const Symbol> s) {
    std::string key;
    key.reserve(s.size() * sizeof(Symbol));
    for (Symbol v : s)
        key.append(reinterpret_cast<const char*>(&v), sizeof(Symbol));
    return key;
}

// Start index of the lexicographically least rotation, by the classic
// two-candidate duel.  `at(i)` must yield the i-th symbol; O(n), no storage.
template <class At>
std::size_t least_rotation_start_for(std::size_t n, At at) {
    std::size_t i = 0, j = 1, len = 0;
    while (i < n && j < n && len < n) {
        const Symbol a = at((i + len) % n);
        const Symbol b = at((j + len) % n);
        if (a == b) {
            ++len;
            continue;
        }
        if (a > b)
            i += len + 1;
        else
            j += len + 1;
        if (i == j) ++j;
        len = 0;
    }
    return std::min(i, j);
}

}  // namespace detail

inline std::size_t least_rotation_start(std::span<const Symbol> s) {
    return detail::least_rotation_start_for(s.size(), [&](std::size_t i) { return s[i]; });
}

// Start index (in reversed coordinates) of the least rotation of reverse(s).
inline std::size_t reversed_least_rotation_start(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    return detail::least_rotation_start_for(n, [&](std::size_t i) { return s[n - 1 - i]; });
}

// Single-pass necklace test: s is the least rotation of its class.
inline bool is_necklace(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    std::size_t p = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (s[i - p] > s[i]) return false;
        if (s[i - p] < s[i]) p = i + 1;
    }
    return n % p == 0;
}

inline BraceletClass classify(std::span<const Symbol> s) {
    if (!is_necklace(s)) return BraceletClass::NotNecklace;
    const std::size_t n = s.size();
    const std::size_t t = reversed_least_rotation_start(s);
    for (std::size_t i = 0; i < n; ++i) {
        const Symbol r = s[n - 1 - (t + i) % n];  // least rotation of the reversal
        if (s[i] < r) return BraceletClass::AsymmetricBracelet;
        if (s[i] > r) return BraceletClass::AsymmetricNonBraceletNecklace;
    }
    return BraceletClass::SymmetricNecklace;
}

inline bool is_asymmetric_bracelet(std::span<const Symbol> s) {
    return classify(s) == BraceletClass::AsymmetricBracelet;
}

// out = s[start..] ++ s[..start); out.size() == s.size(), distinct storage.
inline void rotate_into(std::span<const Symbol> s, std::size_t start, std::span<Symbol> out) {
    const std::size_t n = s.size();
    std::copy(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), out.begin());
    std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(start),
              out.begin() + static_cast<std::ptrdiff_t>(n - start));
}

inline void least_rotation_into(std::span<const Symbol> s, std::span<Symbol> out) {
    rotate_into(s, least_rotation_start(s), out);
}

// Length of the shortest g with s = g^t (the aperiodic prefix), via the
// longest proper border.
inline std::size_t aperiodic_prefix_length(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i];
        while (b > 0 && s[i] != s[b]) b = border[b];
        border[i + 1] = (s[i] == s[b]) ? b + 1 : 0;
    }
    const std::size_t p = n - border[n];
    return (n % p == 0) ? p : n;
}

// Fixed-length string of symbols over {0, ..., k-1}.
class Word {
  public:
    Word(std::vector<Symbol> symbols, int alphabet) : syms_(std::move(symbols)), k_(alphabet) {
        if (k_ < 2) throw std::invalid_argument("Word: alphabet size must be at least 2");
        if (syms_.empty()) throw std::invalid_argument("Word: empty word");
        for (Symbol s : syms_)
            if (s < 0 || s >= k_) throw std::invalid_argument("Word: symbol out of range");
    }

    int alphabet() const noexcept { return k_; }
    std::size_t size() const noexcept { return syms_.size(); }
    Symbol operator[](std::size_t i) const { return syms_[i]; }
    std::span<const Symbol> symbols() const noexcept { return syms_; }
    const std::vector<Symbol>& vec() const noexcept { return syms_; }

    bool operator==(const Word&) const = default;

  private:
    std::vector<Symbol> syms_;
    int k_;
};

// Lexicographic comparison with the prefix-is-smaller rule.
inline std::strong_ordering compare(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("compare: mismatched alphabets");
    return std::lexicographical_compare_three_way(a.symbols().begin(), a.symbols().end(),
                                                  b.symbols().begin(), b.symbols().end());
}

inline bool lex_less(const Word& a, const Word& b) { return compare(a, b) < 0; }

inline Word reverse(const Word& a) {
    std::vector<Symbol> r(a.symbols().rbegin(), a.symbols().rend());
    return Word(std::move(r), a.alphabet());
}

inline bool is_palindrome(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; 2 * i < n; ++i)
        if (s[i] != s[n - 1 - i]) return false;
    return true;
}

inline bool is_palindrome(const Word& a) { return is_palindrome(a.symbols()); }

inline Word aperiodic_prefix(const Word& a) {
    const std::size_t p = aperiodic_prefix_length(a.symbols());
    std::vector<Symbol> g(a.symbols().begin(), a.symbols().begin() + static_cast<std::ptrdiff_t>(p));
    return Word(std::move(g), a.alphabet());
}

inline Word canonical_necklace(const Word& a) {
    std::vector<Symbol> out(a.size());
    least_rotation_into(a.symbols(), out);
    return Word(std::move(out), a.alphabet());
}

inline bool is_necklace(const Word& a) { return is_necklace(a.symbols()); }
inline BraceletClass classify(const Word& a) { return classify(a.symbols()); }

// Test shorthand: word_from_digits("0012", 3).
inline Word word_from_digits(std::string_view digits, int alphabet) {
    std::vector<Symbol> syms;
    syms.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("word_from_digits: not a digit");
        syms.push_back(c - '0');
    }
    return Word(std::move(syms), alphabet);
}

}  // namespace orientseq
