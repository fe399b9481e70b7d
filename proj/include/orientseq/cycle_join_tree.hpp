#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orientseq/necklace_enum.hpp"
#include "orientseq/parent_rules.hpp"
#include "orientseq/word.hpp"

namespace orientseq {

struct TreeEdge {
    std::size_t child;
    std::size_t parent;
    ParentVerdict rule;
    ConjugatePair pair;
};

// Rooted tree over the asymmetric bracelets of length n: one node per
// bracelet, one conjugate-pair edge from each non-root node to its parent.
class CycleJoinTree {
  public:
    int order_n() const noexcept { return n_; }
    int alphabet() const noexcept { return k_; }
    const std::vector<Word>& nodes() const noexcept { return nodes_; }
    const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
    std::size_t root_index() const noexcept { return root_; }
    const Word& root() const { return nodes_[root_]; }

    // Edge from nodes()[child] up to its parent; nullopt for the root.
    std::optional<std::size_t> parent_edge_index(std::size_t child) const {
        return edge_of_child_[child];
    }

    // Sum of aperiodic-prefix lengths over all nodes: the number of windows
    // contributed to the joined cycle.
    long long total_window_count() const {
        long long total = 0;
        for (const Word& w : nodes_)
            total += static_cast<long long>(aperiodic_prefix_length(w.symbols()));
        return total;
    }

    friend CycleJoinTree build_tree(int n, int k);

  private:
    int n_ = 0, k_ = 0;
    std::vector<Word> nodes_;  // lexicographic
    std::vector<TreeEdge> edges_;
    std::vector<std::optional<std::size_t>> edge_of_child_;
    std::size_t root_ = 0;
};

inline CycleJoinTree build_tree(int n, int k) {
    if (n < 3 || k < 3) throw std::invalid_argument("build_tree: need n >= 3, k >= 3");

    CycleJoinTree t;
    t.n_ = n;
    t.k_ = k;
    t.nodes_ = asymmetric_bracelets(n, k);

    std::unordered_map<std::string, std::size_t> index;
    index.reserve(t.nodes_.size() * 2);
    for (std::size_t i = 0; i < t.nodes_.size(); ++i)
        index.emplace(detail::byte_key(t.nodes_[i].symbols()), i);

    const Word root = root_word(n, k);
    const auto root_it = index.find(detail::byte_key(root.symbols()));
    if (root_it == index.end()) throw std::logic_error("build_tree: root is not a node");
    t.root_ = root_it->second;

    t.edge_of_child_.assign(t.nodes_.size(), std::nullopt);
    t.edges_.reserve(t.nodes_.size() ? t.nodes_.size() - 1 : 0);
    for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
        if (i == t.root_) continue;
        ParentLink link = parent(t.nodes_[i]);
        const auto it = index.find(detail::byte_key(link.parent.symbols()));
        if (it == index.end()) throw std::logic_error("build_tree: parent is not a node");
        t.edge_of_child_[i] = t.edges_.size();
        t.edges_.push_back(TreeEdge{i, it->second, link.rule, std::move(link.pair)});
    }

    // Every parent chain must reach the root (no stray components or cycles).
    std::vector<std::vector<std::size_t>> children(t.nodes_.size());
    for (const TreeEdge& e : t.edges_) children[e.parent].push_back(e.child);
    std::vector<char> seen(t.nodes_.size(), 0);
    std::vector<std::size_t> stack{t.root_};
    seen[t.root_] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t c : children[v])
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
    }
    if (reached != t.nodes_.size())
        throw std::logic_error("build_tree: parent chains do not all reach the root");
    return t;
}

// Chain Property: no node has two child edges whose conjugate pairs share the
// same length-(n-1) suffix.  Two distinct windows of one node can never share
// an (n-1)-suffix (that would force full periodicity), so a violation shows
// up as two pairs with equal parent-side string.
inline bool check_chain_property(std::span<const ConjugatePair> pairs) {
    std::unordered_set<std::string> parent_side;
    for (const ConjugatePair& p : pairs) {
        std::string key = detail::byte_key(std::span<const Symbol>(&p.parent_first, 1));
        key += detail::byte_key(p.shared_suffix.symbols());
        if (!parent_side.insert(std::move(key)).second) return false;
    }
    return true;
}

inline bool check_chain_property(const CycleJoinTree& t) {
    std::vector<ConjugatePair> pairs;
    pairs.reserve(t.edges().size());
    for (const TreeEdge& e : t.edges()) pairs.push_back(e.pair);
    return check_chain_property(pairs);
}

// Uniqueness Property: no length-n string belongs to two conjugate pairs.
// Diagnostic only; trees over k > 2 generally fail it.
inline bool check_uniqueness_property(std::span<const ConjugatePair> pairs) {
    std::unordered_set<std::string> members;
    for (const ConjugatePair& p : pairs) {
        for (Symbol first : {p.child_first, p.parent_first}) {
            std::string key = detail::byte_key(std::span<const Symbol>(&first, 1));
            key += detail::byte_key(p.shared_suffix.symbols());
            if (!members.insert(std::move(key)).second) return false;
        }
    }
    return true;
}

inline bool check_uniqueness_property(const CycleJoinTree& t) {
    std::vector<ConjugatePair> pairs;
    pairs.reserve(t.edges().size());
    for (const TreeEdge& e : t.edges()) pairs.push_back(e.pair);
    return check_uniqueness_property(pairs);
}

// Next() lookup over the chains of a set of conjugate pairs.  Pairs whose
// suffixes agree form maximal paths x_1 -> x_2 -> ... -> x_m down the tree
// (the Chain Property guarantees the path shape); the successor of the
// deepest element wraps to the top.
class ChainIndex {
  public:
    explicit ChainIndex(std::span<const ConjugatePair> pairs) {
        struct Group {
            std::unordered_map<Symbol, Symbol> down;  // parent-side -> child-side
            std::unordered_map<Symbol, Symbol> up;    // child-side -> parent-side
        };
        std::unordered_map<std::string, Group> groups;
        for (const ConjugatePair& p : pairs) {
            Group& g = groups[detail::byte_key(p.shared_suffix.symbols())];
            if (!g.down.emplace(p.parent_first, p.child_first).second)
                throw std::logic_error("ChainIndex: node has two children on one suffix");
            if (!g.up.emplace(p.child_first, p.parent_first).second)
                throw std::logic_error("ChainIndex: child joined twice on one suffix");
        }
        for (auto& [key, g] : groups) {
            auto& next = next_[key];
            for (const auto& [parent_side, child_side] : g.down) next[parent_side] = child_side;
            for (const auto& [child_side, parent_side] : g.up) {
                if (g.down.contains(child_side)) continue;  // interior: keep descending
                Symbol top = parent_side;                   // deepest element: wrap to the top
                while (true) {
                    const auto it = g.up.find(top);
                    if (it == g.up.end()) break;
                    top = it->second;
                }
                next[child_side] = top;
            }
        }
    }

    explicit ChainIndex(const CycleJoinTree& t) : ChainIndex(collect(t)) {}

    // Next symbol along the chain for a window that belongs to a conjugate
    // pair; nullopt if the window belongs to none.
    std::optional<Symbol> chain_next(std::span<const Symbol> window) const {
        const auto it = next_.find(detail::byte_key(window.subspan(1)));
        if (it == next_.end()) return std::nullopt;
        const auto jt = it->second.find(window[0]);
        if (jt == it->second.end()) return std::nullopt;
        return jt->second;
    }

  private:
    static std::vector<ConjugatePair> collect(const CycleJoinTree& t) {
        std::vector<ConjugatePair> pairs;
        pairs.reserve(t.edges().size());
        for (const TreeEdge& e : t.edges()) pairs.push_back(e.pair);
        return pairs;
    }

    std::unordered_map<std::string, std::unordered_map<Symbol, Symbol>> next_;
};

inline Symbol next_in_chain(const CycleJoinTree& t, const Word& window) {
    if (window.size() != static_cast<std::size_t>(t.order_n()))
        throw std::invalid_argument("next_in_chain: window length mismatch");
    const auto next = ChainIndex(t).chain_next(window.symbols());
    if (!next) throw std::invalid_argument("next_in_chain: window belongs to no conjugate pair");
    return *next;
}

// Figure-style DOT rendering: one box per bracelet, each edge pointing at the
// parent, labelled with the conjugate pair's changed symbols.
inline std::string to_dot(const CycleJoinTree& t) {
    const auto label = [&](const Word& w) {
        std::ostringstream os;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i && t.alphabet() > 10) os << ' ';
            os << w[i];
        }
        return os.str();
    };
    std::ostringstream os;
    os << "digraph cycle_join_tree {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    os << "  \"" << label(t.root()) << "\" [style=bold];\n";
    for (const TreeEdge& e : t.edges()) {
        os << "  \"" << label(t.nodes()[e.child]) << "\" -> \"" << label(t.nodes()[e.parent])
           << "\" [label=\"" << e.pair.child_first << "->" << e.pair.parent_first << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace orientseq
