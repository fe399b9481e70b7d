#pragma once

#include <stdexcept>
#include <vector>

#include "orientseq/cycle_join_tree.hpp"

namespace orientseq::testsupport {

// Reference generator: walk the built tree with the generic rule — follow
// the chain when the window belongs to a conjugate pair, otherwise keep
// rotating the current cycle.  Seeded at the root word; runs until the
// window returns to the seed.
inline std::vector<Symbol> tree_walk_cycle(const CycleJoinTree& t) {
    const ChainIndex chains(t);
    const std::vector<Symbol> seed = t.root().vec();
    const long long expected = t.total_window_count();

    std::vector<Symbol> w = seed;
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(expected));
    do {
        out.push_back(w.front());
        const Symbol next = chains.chain_next(w).value_or(w.front());
        std::copy(w.begin() + 1, w.end(), w.begin());
        w.back() = next;
        if (out.size() > static_cast<std::size_t>(expected))
            throw std::logic_error("tree_walk_cycle: walk failed to close on time");
    } while (w != seed);
    return out;
}

}  // namespace orientseq::testsupport
