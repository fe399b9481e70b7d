#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "orientseq/word.hpp"

namespace orientseq {

// Maximal-length order-2 construction.  The sequence is a concatenation of
// blocks, one per alphabet size of matching parity up to k: block b lists the
// symbols 0..b-3 at the odd positions interleaved with b-2, b-1 alternating
// at the even positions; odd blocks carry one extra trailing symbol.  The
// result pairs each unordered pair of symbols at most once in one reading
// direction, which is the most an order-2 sequence can do.

inline long long os2_length(int k) {
    if (k < 3)
        throw std::invalid_argument("os2_length: no order-2 orientable sequence exists for k < 3");
    return static_cast<long long>(k) * ((k - 1) / 2);
}

inline int os2_block_length(int b) { return b % 2 == 1 ? 2 * b - 3 : 2 * b - 4; }

// Symbol at 1-based position i of block b.
inline Symbol os2_block_symbol(int b, int i) {
    if (b % 2 == 1 && i == 2 * b - 3) return b - 1;
    if (i % 2 == 1) return (i - 1) / 2;
    return (i / 2) % 2 == 1 ? b - 2 : b - 1;
}

// O(1)-per-symbol stream over the blocks.
class Os2Stream {
  public:
    explicit Os2Stream(int k) : k_(k), block_(k % 2 == 1 ? 3 : 4) {
        if (k < 3)
            throw std::invalid_argument(
                "Os2Stream: no order-2 orientable sequence exists for k < 3");
    }

    std::optional<Symbol> next() {
        if (block_ > k_) return std::nullopt;
        const Symbol s = os2_block_symbol(block_, pos_);
        if (++pos_ > os2_block_length(block_)) {
            block_ += 2;
            pos_ = 1;
        }
        return s;
    }

  private:
    int k_;
    int block_;
    int pos_ = 1;
};

inline Word generate_os2(int k) {
    Os2Stream stream(k);
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(os2_length(k)));
    while (auto s = stream.next()) out.push_back(*s);
    return Word(std::move(out), k);
}

}  // namespace orientseq
