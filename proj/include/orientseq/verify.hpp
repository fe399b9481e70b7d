#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "orientseq/word.hpp"

namespace orientseq {

enum class ViolationKind { PalindromeWindow, DuplicateWindow, ReversalClash };

inline std::string_view to_string(ViolationKind v) {
    switch (v) {
        case ViolationKind::PalindromeWindow: return "palindrome window";
        case ViolationKind::DuplicateWindow: return "duplicate window";
        case ViolationKind::ReversalClash: return "reversal clash";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::vector<Symbol> window;
    std::size_t position;
};

struct VerifyReport {
    std::optional<Violation> violation;
    bool ok() const noexcept { return !violation.has_value(); }
};

// Scan every window of the sequence (cyclically unless told otherwise) and
// report the first window that already appeared, appeared reversed, or is
// its own reversal.  Each window costs one canonical-form hash probe.
inline VerifyReport verify_orientable(std::span<const Symbol> seq, int n, bool cyclic = true) {
    if (n < 1) throw std::invalid_argument("verify_orientable: need n >= 1");
    const std::size_t len = seq.size();
    if (len < static_cast<std::size_t>(n))
        throw std::invalid_argument("verify_orientable: sequence shorter than one window");

    const std::size_t windows = cyclic ? len : len - static_cast<std::size_t>(n) + 1;
    std::unordered_map<std::string, std::string> seen;  // canonical -> as-scanned
    seen.reserve(windows * 2);

    std::vector<Symbol> w(static_cast<std::size_t>(n));
    std::vector<Symbol> r(static_cast<std::size_t>(n));
    for (std::size_t pos = 0; pos < windows; ++pos) {
        for (std::size_t t = 0; t < w.size(); ++t) w[t] = seq[(pos + t) % len];
        if (is_palindrome(std::span<const Symbol>(w)))
            return {Violation{ViolationKind::PalindromeWindow, w, pos}};
        std::reverse_copy(w.begin(), w.end(), r.begin());
        std::string fwd = detail::byte_key(w);
        std::string rev = detail::byte_key(r);
        std::string canon = std::min(fwd, rev);
        auto [it, inserted] = seen.emplace(std::move(canon), fwd);
        if (!inserted) {
            return {Violation{it->second == fwd ? ViolationKind::DuplicateWindow
                                                : ViolationKind::ReversalClash,
                              w, pos}};
        }
    }
    return {};
}

inline VerifyReport verify_orientable(const Word& seq, int n, bool cyclic = true) {
    return verify_orientable(seq.symbols(), n, cyclic);
}

}  // namespace orientseq
