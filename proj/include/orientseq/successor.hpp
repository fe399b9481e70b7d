#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "orientseq/parent_rules.hpp"
#include "orientseq/word.hpp"

namespace orientseq {

// The O(n)-per-symbol successor rule over the cycle-joining tree of
// asymmetric bracelets.  Given the current window it decides whether the
// window belongs to a conjugate pair of some tree edge and, if so, follows
// the chain; otherwise the cycle keeps rotating and the first symbol repeats.
//
// Each candidate below is a rotation of the window with its first symbol
// moved to the position a given rule changes; the branch fires when the
// candidate is an asymmetric bracelet whose parent verdict is that rule.
// The guards on the first symbol keep the changed position honest: a rule
// that increments cannot have produced k-1 -> 0, one that decrements cannot
// have produced 0 -> k-1 (the lastSymbol rule is the one place the alphabet
// wraps).
class SuccessorRule {
  public:
    SuccessorRule(int n, int k) : n_(n), k_(k), cand_(static_cast<std::size_t>(n)) {
        if (n < 3) throw std::invalid_argument("SuccessorRule: need n >= 3");
        if (k < 3)
            throw std::invalid_argument(
                "SuccessorRule: need k >= 3 (the binary case is out of scope)");
    }

    int order_n() const noexcept { return n_; }
    int alphabet() const noexcept { return k_; }

    Symbol operator()(std::span<const Symbol> w) {
        const auto n = static_cast<std::size_t>(n_);
        if (w.size() != n) throw std::invalid_argument("successor: window length mismatch");
        least_rotation_into(w, cand_);
        if (!is_asymmetric_bracelet(cand_))
            throw std::invalid_argument("successor: window is off-cycle");

        const Symbol a1 = w[0];
        const Symbol max = k_ - 1;

        std::size_t j = 1;  // first position past 0 holding a symbol below k-1
        while (w[j] == max) ++j;
        std::size_t i = n - 1;  // last position holding a nonzero symbol
        while (w[i] == 0) --i;
        std::optional<std::size_t> ell;  // second position past 0 below k-1
        for (std::size_t m = j + 1; m < n; ++m)
            if (w[m] < max) {
                ell = m;
                break;
            }

        // Parent-side tests: the window heads a conjugate pair whose child is
        // the candidate; descend into the child's cycle.
        if (a1 > 0 && fires(w, j, a1 - 1, ParentVerdict::ByLastNonMax)) return a1 - 1;
        if (a1 == 0 && fires(w, 1, max, ParentVerdict::ByLastSymbol)) return max;
        if (a1 < max && fires(w, i + 1, a1 + 1, ParentVerdict::ByFirstNonMin)) return a1 + 1;
        if (k_ == 3 && a1 > 0 && ell &&
            fires(w, *ell, a1 - 1, ParentVerdict::BySecondLastNonMax))
            return a1 - 1;

        // Child-side tests: the window sits at the bottom of a chain; wrap to
        // the chain's top.
        if (a1 < max && fires(w, j, a1, ParentVerdict::ByLastNonMax)) {
            // Chains of lastNonMax edges end at symbol k-2 or k-1 depending on
            // whether the k-2 node still joins upward by the same rule.
            cand_[n - j] = k_ - 2;
            return parent_verdict(cand_, k_) == ParentVerdict::ByLastNonMax ? max : k_ - 2;
        }
        if (a1 == max && fires(w, 1, a1, ParentVerdict::ByLastSymbol)) return 0;
        if (a1 > 0 && fires(w, i + 1, a1, ParentVerdict::ByFirstNonMin)) return a1 - 1;
        if (k_ == 3 && a1 < max && ell &&
            fires(w, *ell, a1, ParentVerdict::BySecondLastNonMax))
            return a1 + 1;

        return a1;  // no conjugate pair: stay on the current cycle
    }

    Symbol operator()(const Word& w) {
        if (w.alphabet() != k_) throw std::invalid_argument("successor: alphabet mismatch");
        return (*this)(w.symbols());
    }

  private:
    // Candidate = rotation of w starting at rot, with the symbol that lands
    // at the change position (where w[0] ends up) replaced by `changed`.
    bool fires(std::span<const Symbol> w, std::size_t rot, Symbol changed, ParentVerdict rule) {
        rotate_into(w, rot, cand_);
        cand_[w.size() - rot] = changed;
        return parent_verdict(cand_, k_) == rule;
    }

    int n_, k_;
    std::vector<Symbol> cand_;
};

inline Symbol successor(const Word& window) {
    SuccessorRule rule(static_cast<int>(window.size()), window.alphabet());
    return rule(window);
}

// Streams the orientable sequence one symbol at a time, starting from a seed
// window on the cycle (by default the tree root) and stopping when the
// window first returns to the seed.
class SequenceStream {
  public:
    SequenceStream(int n, int k) : SequenceStream(root_word(n, k)) {}

    explicit SequenceStream(Word seed)
        : rule_(static_cast<int>(seed.size()), seed.alphabet()),
          seed_(seed.vec()),
          window_(seed.vec()) {
        std::vector<Symbol> canon(seed_.size());
        least_rotation_into(seed_, canon);
        if (!is_asymmetric_bracelet(canon))
            throw std::invalid_argument("SequenceStream: seed is off-cycle");
    }

    std::optional<Symbol> next() {
        if (done_) return std::nullopt;
        const Symbol out = window_.front();
        const Symbol in = rule_(window_);
        std::copy(window_.begin() + 1, window_.end(), window_.begin());
        window_.back() = in;
        ++emitted_;
        if (window_ == seed_) done_ = true;
        return out;
    }

    bool done() const noexcept { return done_; }
    std::uint64_t emitted() const noexcept { return emitted_; }
    std::span<const Symbol> window() const noexcept { return window_; }

  private:
    SuccessorRule rule_;
    std::vector<Symbol> seed_;
    std::vector<Symbol> window_;
    std::uint64_t emitted_ = 0;
    bool done_ = false;
};

inline Word generate_cyclic(int n, int k) {
    SequenceStream stream(n, k);
    std::vector<Symbol> out;
    while (auto s = stream.next()) out.push_back(*s);
    return Word(std::move(out), k);
}

// Cyclic-to-acyclic conversion: append the length-(n-1) prefix so every
// window, wraparound included, appears as a plain substring.
inline Word to_acyclic(const Word& cyclic, int n) {
    if (n < 1) throw std::invalid_argument("to_acyclic: need n >= 1");
    if (cyclic.size() + 1 < static_cast<std::size_t>(n))
        throw std::invalid_argument("to_acyclic: sequence shorter than a window");
    std::vector<Symbol> out = cyclic.vec();
    out.insert(out.end(), cyclic.vec().begin(),
               cyclic.vec().begin() + static_cast<std::ptrdiff_t>(n - 1));
    return Word(std::move(out), cyclic.alphabet());
}

}  // namespace orientseq
