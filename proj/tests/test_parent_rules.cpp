#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "orientseq/necklace_enum.hpp"
#include "orientseq/parent_rules.hpp"

using namespace orientseq;

namespace {

Word w3(const char* digits) { return word_from_digits(digits, 3); }

// The length-14 member of the family 0010 2^(n-10) 010012.
Word family_member(int n) {
    std::vector<Symbol> s{0, 0, 1, 0};
    for (int i = 0; i < n - 10; ++i) s.push_back(2);
    for (Symbol v : {0, 1, 0, 0, 1, 2}) s.push_back(v);
    return Word(std::move(s), 3);
}

}  // namespace

TEST_CASE("root word") {
    CHECK(root_word(6, 3) == w3("000012"));
    CHECK(root_word(3, 3) == w3("012"));
    CHECK(root_word(4, 4) == word_from_digits("0023", 4));
    CHECK(is_root(root_word(8, 5).symbols(), 5));
    CHECK_FALSE(is_root(w3("000112").symbols(), 3));
}

TEST_CASE("first symbol rule") {
    CHECK(first_symbol(w3("001")) == w3("012"));
    CHECK(first_symbol(w3("222")) == w3("122"));
    // On the stubborn example the result leaves the asymmetric bracelets.
    const Word out = first_symbol(w3("001022010012"));
    CHECK(out == w3("001220102201"));
    CHECK(classify(out) != BraceletClass::AsymmetricBracelet);
}

TEST_CASE("last symbol rule") {
    CHECK(last_symbol(w3("012202")) == w3("000122"));
    CHECK(last_symbol(w3("000")) == w3("001"));
    CHECK(last_symbol(word_from_digits("0012", 4)) == word_from_digits("0013", 4));
    const Word out = last_symbol(w3("001022010012"));
    CHECK(out == w3("000102201001"));
    CHECK(classify(out) != BraceletClass::AsymmetricBracelet);
}

TEST_CASE("first non-min rule") {
    CHECK(first_non_min(w3("010122")) == w3("000122"));
    const Word out = first_non_min(w3("001022010012"));
    CHECK(out == w3("000022010012"));
    CHECK(classify(out) != BraceletClass::AsymmetricBracelet);
    CHECK(first_non_min(w3("0012")) == w3("0002"));
    CHECK_THROWS_AS(first_non_min(w3("000")), std::invalid_argument);
}

TEST_CASE("last non-max rule") {
    const Word out = last_non_max(w3("001022010012"));
    CHECK(out == w3("001022010022"));
    CHECK(classify(out) == BraceletClass::SymmetricNecklace);

    CHECK(last_non_max(word_from_digits("00013", 4)) == root_word(5, 4));

    const Word derived = last_non_max(w3("012202"));
    CHECK(derived == w3("012212"));
    CHECK(classify(derived) == BraceletClass::AsymmetricBracelet);

    CHECK_THROWS_AS(last_non_max(w3("222")), std::invalid_argument);
}

TEST_CASE("second last non-max rule") {
    CHECK(second_last_non_max(w3("001022010012")) == w3("001022010112"));
    CHECK(second_last_non_max(w3("000")) == w3("010"));
    CHECK(second_last_non_max(family_member(14)) == w3("00102222010112"));
    CHECK_THROWS_AS(second_last_non_max(w3("122")), std::invalid_argument);
}

TEST_CASE("parent verdict") {
    CHECK(parent_verdict(w3("000012")) == ParentVerdict::Root);
    CHECK(parent_verdict(w3("012")) == ParentVerdict::Root);
    CHECK(parent_verdict(w3("001022010012")) == ParentVerdict::BySecondLastNonMax);
    CHECK(parent_verdict(w3("2010")) == ParentVerdict::NotInA);
    CHECK(parent_verdict(w3("0102")) == ParentVerdict::NotInA);
}

TEST_CASE("parent edge for the stubborn example") {
    const ParentLink link = parent(w3("001022010012"));
    CHECK(link.parent == w3("001022010112"));
    CHECK(link.rule == ParentVerdict::BySecondLastNonMax);
    CHECK(link.pair.child_first == 0);
    CHECK(link.pair.parent_first == 1);
    CHECK(link.pair.shared_suffix == w3("12001022010"));
}

TEST_CASE("parent follows the first applicable rule") {
    // Re-derive the expected parent of 012202 by applying the rules in order
    // and classifying each output.
    const Word a = w3("012202");
    Word expected = last_non_max(a);
    REQUIRE(classify(expected) == BraceletClass::AsymmetricBracelet);
    const ParentLink link = parent(a);
    CHECK(link.rule == ParentVerdict::ByLastNonMax);
    CHECK(link.parent == expected);
    // The conjugate pair reads off the rotation at the changed position.
    CHECK(link.pair.child_first == 0);
    CHECK(link.pair.parent_first == 1);
    CHECK(link.pair.shared_suffix == w3("20122"));
}

TEST_CASE("one last-non-max step from just below the root") {
    const Word a = word_from_digits("00013", 4);  // 0^(n-2) (k-3) (k-1)
    const ParentLink link = parent(a);
    CHECK(link.rule == ParentVerdict::ByLastNonMax);
    CHECK(link.parent == root_word(5, 4));
}

TEST_CASE("parent rejects the root and non-members") {
    CHECK_THROWS_AS(parent(w3("000012")), std::invalid_argument);
    CHECK_THROWS_AS(parent(w3("2010")), std::invalid_argument);
}

TEST_CASE("every non-root member has a parent in the set") {
    for (int k = 3; k <= 4; ++k) {
        for (int n = 3; n <= 7; ++n) {
            const Word root = root_word(n, k);
            for_each_asymmetric_bracelet(n, k, [&](std::span<const Symbol> s) {
                const Word a(std::vector<Symbol>(s.begin(), s.end()), k);
                if (a == root) {
                    CHECK(parent_verdict(a) == ParentVerdict::Root);
                    return;
                }
                const ParentLink link = parent(a);
                CHECK(classify(link.parent) == BraceletClass::AsymmetricBracelet);
                // The pair's two strings rotate back onto child and parent.
                std::vector<Symbol> child_side{link.pair.child_first};
                child_side.insert(child_side.end(), link.pair.shared_suffix.vec().begin(),
                                  link.pair.shared_suffix.vec().end());
                std::vector<Symbol> parent_side{link.pair.parent_first};
                parent_side.insert(parent_side.end(), link.pair.shared_suffix.vec().begin(),
                                   link.pair.shared_suffix.vec().end());
                CHECK(canonical_necklace(Word(child_side, k)) == a);
                CHECK(canonical_necklace(Word(parent_side, k)) == link.parent);
            });
        }
    }
}

TEST_CASE("decrementing a first non-min above one preserves membership") {
    for (int k = 3; k <= 4; ++k) {
        for (int n = 2; n <= 7; ++n) {
            for_each_necklace(n, k, [&](std::span<const Symbol> s) {
                const BraceletClass c = classify(s);
                if (c != BraceletClass::AsymmetricBracelet && c != BraceletClass::SymmetricNecklace)
                    return;  // not a bracelet
                std::size_t i = 0;
                while (i < s.size() && s[i] == 0) ++i;
                if (i == s.size() || s[i] <= 1) return;
                const Word a(std::vector<Symbol>(s.begin(), s.end()), k);
                const Word out = first_non_min(a);
                const BraceletClass oc = classify(out);
                CHECK((oc == BraceletClass::AsymmetricBracelet ||
                       oc == BraceletClass::SymmetricNecklace));
                if (c == BraceletClass::AsymmetricBracelet)
                    CHECK(oc == BraceletClass::AsymmetricBracelet);
            });
        }
    }
}

TEST_CASE("last non-max keeps membership exactly under the three conditions") {
    for (int k = 3; k <= 4; ++k) {
        for (int n = 3; n <= 7; ++n) {
            for_each_asymmetric_bracelet(n, k, [&](std::span<const Symbol> s) {
                std::size_t j = s.size();
                while (j > 0 && s[j - 1] == k - 1) --j;
                REQUIRE(j > 0);
                std::size_t ell = j - 1;
                while (ell > 0 && s[ell - 1] == k - 1) --ell;
                REQUIRE(ell > 0);
                const bool last_below_max = s[s.size() - 1] < k - 1;          // (i)
                const bool changed_below_penult = s[j - 1] < k - 2;           // (ii)
                const bool prefix_not_palindrome =                            // (iii)
                    !is_palindrome(s.subspan(0, ell));
                const Word a(std::vector<Symbol>(s.begin(), s.end()), k);
                const BraceletClass out = classify(last_non_max(a));
                if (last_below_max || changed_below_penult || prefix_not_palindrome)
                    CHECK(out == BraceletClass::AsymmetricBracelet);
                else
                    CHECK(out == BraceletClass::SymmetricNecklace);
            });
        }
    }
}
