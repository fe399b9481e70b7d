#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "orientseq/brute_force.hpp"
#include "orientseq/successor.hpp"
#include "orientseq/verify.hpp"
#include "support/tree_walk_oracle.hpp"

using namespace orientseq;

namespace {

std::vector<Word> cyclic_windows(const Word& seq, int n) {
    std::vector<Word> out;
    const auto& s = seq.vec();
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<Symbol> w(static_cast<std::size_t>(n));
        for (std::size_t t = 0; t < w.size(); ++t) w[t] = s[(pos + t) % s.size()];
        out.emplace_back(std::move(w), seq.alphabet());
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

TEST_CASE("the singleton cycle keeps rotating") {
    SuccessorRule rule(3, 3);
    CHECK(rule(word_from_digits("012", 3)) == 0);
    CHECK(rule(word_from_digits("120", 3)) == 1);
    CHECK(rule(word_from_digits("201", 3)) == 2);
    CHECK(generate_cyclic(3, 3) == word_from_digits("012", 3));
}

TEST_CASE("root window of the (6,3) cycle descends into its child") {
    // The seed window itself heads a conjugate pair: the rule emits 2, not a
    // repeat of its first symbol.
    SuccessorRule rule(6, 3);
    CHECK(rule(word_from_digits("000012", 3)) == 2);
}

TEST_CASE("generated cycle for (6,3) closes after 225 symbols") {
    SequenceStream stream(6, 3);
    std::size_t len = 0;
    while (stream.next()) ++len;
    CHECK(len == 225);
    CHECK(stream.done());
    CHECK(std::vector<Symbol>(stream.window().begin(), stream.window().end()) ==
          word_from_digits("000012", 3).vec());
}

TEST_CASE("window multiset of the (4,4) cycle is exactly the bracelet classes") {
    const Word seq = generate_cyclic(4, 4);
    CHECK(seq.size() == 60);
    const std::vector<Word> windows = cyclic_windows(seq, 4);
    CHECK(std::adjacent_find(windows.begin(), windows.end()) == windows.end());  // all distinct
    CHECK(windows == brute_force_S(4, 4));
}

TEST_CASE("successor stream matches the tree walk") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {6, 3}, {3, 4}, {4, 4}}) {
        CAPTURE(n, k);
        const std::vector<Symbol> oracle = testsupport::tree_walk_cycle(build_tree(n, k));
        CHECK(generate_cyclic(n, k).vec() == oracle);
    }
}

TEST_CASE("generated lengths match the exact counts") {
    CHECK(generate_cyclic(3, 5).size() == 30);
    CHECK(generate_cyclic(5, 3).size() == 60);
    CHECK(generate_cyclic(4, 5).size() == 180);
}

TEST_CASE("generated cycles are orientable") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {6, 3}, {4, 4}, {3, 5}}) {
        CAPTURE(n, k);
        const Word seq = generate_cyclic(n, k);
        CHECK(verify_orientable(seq, n).ok());
    }
}

TEST_CASE("off-cycle windows are rejected") {
    SuccessorRule rule(4, 4);
    CHECK_THROWS_AS(rule(word_from_digits("0102", 4)), std::invalid_argument);  // symmetric class
    CHECK_THROWS_AS(rule(word_from_digits("0000", 4)), std::invalid_argument);
    CHECK_THROWS_AS(rule(word_from_digits("012", 4)), std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(SequenceStream(word_from_digits("0102", 4)), std::invalid_argument);
}

TEST_CASE("unsupported orders and alphabets are named") {
    CHECK_THROWS_AS(SuccessorRule(2, 4), std::invalid_argument);
    CHECK_THROWS_WITH(SuccessorRule(4, 2), Catch::Matchers::ContainsSubstring("k >= 3"));
    CHECK_THROWS_AS(generate_cyclic(3, 2), std::invalid_argument);
}

TEST_CASE("acyclic conversion appends the window prefix") {
    CHECK(to_acyclic(word_from_digits("012", 3), 2) == word_from_digits("0120", 3));
    CHECK(to_acyclic(word_from_digits("012013023123", 4), 3) ==
          word_from_digits("01201302312301", 4));
    CHECK(to_acyclic(generate_cyclic(4, 3), 4).size() == 15);
}

TEST_CASE("acyclic output covers the cyclic windows without wraparound") {
    const int n = 5, k = 3;
    const Word cyc = generate_cyclic(n, k);
    const Word acyc = to_acyclic(cyc, n);
    CHECK(acyc.size() == cyc.size() + static_cast<std::size_t>(n) - 1);

    std::multiset<std::vector<Symbol>> linear;
    for (std::size_t pos = 0; pos + n <= acyc.size(); ++pos)
        linear.insert(std::vector<Symbol>(acyc.vec().begin() + static_cast<std::ptrdiff_t>(pos),
                                          acyc.vec().begin() + static_cast<std::ptrdiff_t>(pos + n)));
    std::multiset<std::vector<Symbol>> cyclic;
    for (const Word& w : cyclic_windows(cyc, n)) cyclic.insert(w.vec());
    CHECK(linear == cyclic);
}
