#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "orientseq/word.hpp"

namespace orientseq {

// Which rule links an asymmetric bracelet to its parent in the cycle-joining
// tree.  For a member other than the root, the verdict is the first rule in
// the order <lastNonMax, lastSymbol, firstNonMin, secondLastNonMax> whose
// output is again an asymmetric bracelet.
enum class ParentVerdict {
    Root,
    NotInA,
    ByLastNonMax,
    ByLastSymbol,
    ByFirstNonMin,
    BySecondLastNonMax,
};

inline std::string_view to_string(ParentVerdict v) {
    switch (v) {
        case ParentVerdict::Root: return "Root";
        case ParentVerdict::NotInA: return "NotInA";
        case ParentVerdict::ByLastNonMax: return "ByLastNonMax";
        case ParentVerdict::ByLastSymbol: return "ByLastSymbol";
        case ParentVerdict::ByFirstNonMin: return "ByFirstNonMin";
        case ParentVerdict::BySecondLastNonMax: return "BySecondLastNonMax";
    }
    return "?";
}

// Tree root 0^(n-2) (k-2) (k-1).
inline Word root_word(int n, int k) {
    if (n < 2 || k < 3) throw std::invalid_argument("root_word: need n >= 2, k >= 3");
    std::vector<Symbol> s(static_cast<std::size_t>(n), 0);
    s[static_cast<std::size_t>(n) - 2] = k - 2;
    s[static_cast<std::size_t>(n) - 1] = k - 1;
    return Word(std::move(s), k);
}

inline bool is_root(std::span<const Symbol> s, int k) {
    const std::size_t n = s.size();
    if (n < 2) return false;
    for (std::size_t i = 0; i + 2 < n; ++i)
        if (s[i] != 0) return false;
    return s[n - 2] == k - 2 && s[n - 1] == k - 1;
}

namespace detail {

inline void require_necklace(const Word& a, const char* who) {
    if (!is_necklace(a.symbols()))
        throw std::invalid_argument(std::string(who) + ": input must be a necklace");
}

inline std::size_t first_nonzero_index(std::span<const Symbol> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0) return i;
    throw std::invalid_argument("first_nonzero_index: all-zero word");
}

inline std::size_t last_non_max_index(std::span<const Symbol> s, int k) {
    for (std::size_t i = s.size(); i-- > 0;)
        if (s[i] != k - 1) return i;
    throw std::invalid_argument("last_non_max_index: word is (k-1)^n");
}

inline std::optional<std::size_t> second_last_non_max_index(std::span<const Symbol> s, int k) {
    int seen = 0;
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] != k - 1 && ++seen == 2) return i;
    }
    return std::nullopt;
}

}  // namespace detail

// The raw rule family.  The *_into forms assume the input is a necklace and
// that the rule applies; they write a full-length result into `out`.

inline void first_symbol_into(std::span<const Symbol> a, int k, std::span<Symbol> out) {
    const std::size_t n = a.size();
    std::vector<Symbol> tmp(a.begin(), a.end());
    tmp[0] = (tmp[0] + k - 1) % k;
    rotate_into(tmp, least_rotation_start(tmp), out.first(n));
}

inline void last_symbol_into(std::span<const Symbol> a, int k, std::span<Symbol> out) {
    const std::size_t n = a.size();
    std::vector<Symbol> tmp(a.begin(), a.end());
    tmp[n - 1] = (tmp[n - 1] + 1) % k;
    rotate_into(tmp, least_rotation_start(tmp), out.first(n));
}

inline void first_non_min_into(std::span<const Symbol> a, int /*k*/, std::span<Symbol> out) {
    std::copy(a.begin(), a.end(), out.begin());
    out[detail::first_nonzero_index(a)] -= 1;  // already a necklace, no re-rotation
}

inline void last_non_max_into(std::span<const Symbol> a, int k, std::span<Symbol> out) {
    std::copy(a.begin(), a.end(), out.begin());
    out[detail::last_non_max_index(a, k)] += 1;  // suffix after it is already (k-1)*
}

inline void second_last_non_max_into(std::span<const Symbol> a, int k, std::span<Symbol> out) {
    const auto idx = detail::second_last_non_max_index(a, k);
    if (!idx)
        throw std::invalid_argument("second_last_non_max: fewer than two symbols below k-1");
    std::copy(a.begin(), a.end(), out.begin());
    out[*idx] += 1;
}

inline Word first_symbol(const Word& a) {
    detail::require_necklace(a, "first_symbol");
    std::vector<Symbol> out(a.size());
    first_symbol_into(a.symbols(), a.alphabet(), out);
    return Word(std::move(out), a.alphabet());
}

inline Word last_symbol(const Word& a) {
    detail::require_necklace(a, "last_symbol");
    std::vector<Symbol> out(a.size());
    last_symbol_into(a.symbols(), a.alphabet(), out);
    return Word(std::move(out), a.alphabet());
}

inline Word first_non_min(const Word& a) {
    detail::require_necklace(a, "first_non_min");
    std::vector<Symbol> out(a.size());
    first_non_min_into(a.symbols(), a.alphabet(), out);
    return Word(std::move(out), a.alphabet());
}

inline Word last_non_max(const Word& a) {
    detail::require_necklace(a, "last_non_max");
    std::vector<Symbol> out(a.size());
    last_non_max_into(a.symbols(), a.alphabet(), out);
    return Word(std::move(out), a.alphabet());
}

inline Word second_last_non_max(const Word& a) {
    detail::require_necklace(a, "second_last_non_max");
    std::vector<Symbol> out(a.size());
    second_last_non_max_into(a.symbols(), a.alphabet(), out);
    return Word(std::move(out), a.alphabet());
}

// Total classification of a word's place in the tree.  Alphabets below 3 are
// outside the parent rule's scope, so members over k = 2 are rejected.
inline ParentVerdict parent_verdict(std::span<const Symbol> a, int k) {
    if (!is_asymmetric_bracelet(a)) return ParentVerdict::NotInA;
    if (k < 3) throw std::invalid_argument("parent_verdict: alphabet size must be at least 3");
    if (is_root(a, k)) return ParentVerdict::Root;

    static thread_local std::vector<Symbol> buf;
    buf.resize(a.size());

    last_non_max_into(a, k, buf);
    if (is_asymmetric_bracelet(buf)) return ParentVerdict::ByLastNonMax;
    last_symbol_into(a, k, buf);
    if (is_asymmetric_bracelet(buf)) return ParentVerdict::ByLastSymbol;
    first_non_min_into(a, k, buf);
    if (is_asymmetric_bracelet(buf)) return ParentVerdict::ByFirstNonMin;
    const auto idx = detail::second_last_non_max_index(a, k);
    if (idx) {
        std::copy(a.begin(), a.end(), buf.begin());
        buf[*idx] += 1;
        if (is_asymmetric_bracelet(buf)) return ParentVerdict::BySecondLastNonMax;
    }
    throw std::logic_error("parent_verdict: no rule applies to a non-root member");
}

inline ParentVerdict parent_verdict(const Word& a) {
    return parent_verdict(a.symbols(), a.alphabet());
}

// A conjugate pair: the two length-n strings child_first*suffix and
// parent_first*suffix that join a child's cycle to its parent's.
struct ConjugatePair {
    Word shared_suffix;  // length n-1
    Symbol child_first;
    Symbol parent_first;

    bool operator==(const ConjugatePair&) const = default;
};

struct ParentLink {
    Word parent;
    ConjugatePair pair;
    ParentVerdict rule;
};

namespace detail {

// Index of the symbol the verdict's rule changes.
inline std::size_t changed_index(std::span<const Symbol> a, int k, ParentVerdict v) {
    switch (v) {
        case ParentVerdict::ByLastNonMax: return last_non_max_index(a, k);
        case ParentVerdict::ByLastSymbol: return a.size() - 1;
        case ParentVerdict::ByFirstNonMin: return first_nonzero_index(a);
        case ParentVerdict::BySecondLastNonMax: {
            const auto idx = second_last_non_max_index(a, k);
            if (!idx) throw std::logic_error("changed_index: missing second last non-max");
            return *idx;
        }
        default: throw std::invalid_argument("changed_index: verdict has no edge");
    }
}

}  // namespace detail

inline ParentLink parent(const Word& a) {
    const int k = a.alphabet();
    const ParentVerdict v = parent_verdict(a);
    if (v == ParentVerdict::Root) throw std::invalid_argument("parent: word is the root");
    if (v == ParentVerdict::NotInA)
        throw std::invalid_argument("parent: word is not an asymmetric bracelet");

    const std::span<const Symbol> s = a.symbols();
    const std::size_t n = s.size();
    const std::size_t pos = detail::changed_index(s, k, v);

    std::vector<Symbol> p(s.begin(), s.end());
    const Symbol child_first = p[pos];
    const Symbol parent_first = (v == ParentVerdict::ByFirstNonMin) ? child_first - 1
                                                                    : (child_first + 1) % k;
    p[pos] = parent_first;
    std::vector<Symbol> canon(n);
    rotate_into(p, least_rotation_start(p), canon);  // identity except after a wrap

    // Shared suffix: the n-1 symbols after `pos` when reading `a` cyclically.
    std::vector<Symbol> suffix;
    suffix.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) suffix.push_back(s[(pos + i) % n]);

    return ParentLink{Word(std::move(canon), k),
                      ConjugatePair{Word(std::move(suffix), k), child_first, parent_first},
                      v};
}

}  // namespace orientseq
