#include "helpers.hpp"
#include "oracles/oracles.hpp"

#include "prism/errors.hpp"
#include "prism/word.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace prism;

namespace {

std::set<std::vector<int>> as_letter_sets(const std::vector<Word>& words)
{
    std::set<std::vector<int>> out;
    for (const auto& s : words)
        out.insert(s.letters());
    return out;
}

} // namespace

TEST_CASE("word validation and text")
{
    CHECK_THROWS_AS(Word({4}, 4), invalid_input);
    CHECK_THROWS_AS(Word({0}, 4), invalid_input);
    CHECK(W("s:1232", 4) == W("1232", 4));
    CHECK(to_string(W("1232", 4)) == "1232");
    CHECK(to_string(Word({}, 4)).empty());
    CHECK(to_string(Word({10, 1}, 12)) == "10,1");
    CHECK(parse_word("10,1", 12) == Word({10, 1}, 12));
}

TEST_CASE("word_to_perm follows the composition convention")
{
    CHECK(word_to_perm(W("1232", 4)) == P("2431"));
    CHECK(word_to_perm(W("232", 4)) == P("1432"));
    CHECK(word_to_perm(W("", 4)).is_identity());
    for (int n = 2; n <= 5; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b)
                for (int c = 1; c < n; ++c) {
                    const std::vector<int> s{a, b, c};
                    REQUIRE(word_to_perm(Word(s, n)) == oracle::product(s, n));
                }
}

TEST_CASE("one reduced word for each element of S_4")
{
    const std::map<std::string, std::string> table{
        {"1234", ""},     {"1243", "3"},    {"1324", "2"},     {"1342", "23"},     {"1423", "32"},
        {"2134", "1"},    {"2143", "13"},   {"2314", "12"},    {"2341", "123"},    {"2413", "312"},
        {"3124", "21"},   {"3142", "213"},  {"4123", "321"},   {"2431", "1232"},   {"3241", "1213"},
        {"4132", "2321"}, {"4213", "3121"}, {"1432", "232"},   {"3214", "121"},    {"3412", "2132"},
        {"3421", "21232"}, {"4231", "12321"}, {"4312", "23212"}, {"4321", "123121"}};
    CHECK(table.size() == 24);
    for (const auto& [perm, word] : table) {
        const Word s = W(word, 4);
        CHECK(is_reduced(s));
        CHECK(word_to_perm(s) == P(perm));
    }
}

TEST_CASE("reducedness")
{
    CHECK(is_reduced(W("1232", 4)));
    CHECK_FALSE(is_reduced(W("11", 3)));
    CHECK_FALSE(is_reduced(W("121121", 4)));
    for (int n = 2; n <= 4; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b)
                for (int c = 1; c < n; ++c)
                    for (int d = 1; d < n; ++d) {
                        const std::vector<int> s{a, b, c, d};
                        REQUIRE(is_reduced(Word(s, n)) == oracle::reduced(s, n));
                    }
}

TEST_CASE("some_reduced_word picks smallest descents")
{
    CHECK(to_string(some_reduced_word(P("2431"))) == "1232");
    CHECK(to_string(some_reduced_word(P("1432"))) == "232");
    CHECK(to_string(some_reduced_word(P("4213"))) == "3121");
    CHECK(to_string(some_reduced_word(P("2143"))) == "31");
    CHECK(some_reduced_word(Permutation::identity(5)).empty());
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : oracle::all_permutations(n)) {
            const Word s = some_reduced_word(w);
            REQUIRE(word_to_perm(s) == w);
            REQUIRE(static_cast<int>(s.length()) == oracle::length(w));
        }
}

TEST_CASE("R(w) worked examples")
{
    CHECK(as_letter_sets(all_reduced_words(P("2431"))) ==
          std::set<std::vector<int>>{letters("1232"), letters("1323"), letters("3123")});
    CHECK(as_letter_sets(all_reduced_words(P("1432"))) ==
          std::set<std::vector<int>>{letters("232"), letters("323")});
    CHECK(all_reduced_words(P("4321")).size() == 16);
    CHECK(count_reduced_words(P("4321")) == 16);
    CHECK(count_reduced_words(P("54321")) == 768);
    CHECK(all_reduced_words(Permutation::identity(3)).size() == 1);
    CHECK_THROWS_AS(all_reduced_words(P("54321"), 100), cap_exceeded);
}

TEST_CASE("R(w) equals the move closure, n <= 5")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : oracle::all_permutations(n)) {
            const auto words = all_reduced_words(w);
            REQUIRE(std::is_sorted(words.begin(), words.end()));
            REQUIRE(as_letter_sets(words) == oracle::reduced_words(w));
            REQUIRE(count_reduced_words(w) == words.size());
        }
}

TEST_CASE("word moves stay inside R(w)")
{
    const Word s = W("123121", 4);
    const auto moves = word_moves(s);
    CHECK_FALSE(moves.empty());
    for (const auto& t : moves) {
        CHECK(word_to_perm(t) == P("4321"));
        CHECK(t.length() == s.length());
    }
    CHECK(word_moves(W("1", 2)).empty());
}

TEST_CASE("unconfined on a single word")
{
    CHECK(multiplicity(W("1232", 4), 2) == 2);
    CHECK(is_unconfined(W("1232", 4), 1));
    CHECK_FALSE(is_unconfined(W("1232", 4), 2));
    CHECK_FALSE(is_unconfined(W("1232", 4), 3));
    CHECK_FALSE(is_unconfined(W("2132", 4), 1));
    CHECK(is_unconfined(W("13", 4), 1));
    CHECK(is_unconfined(W("13", 4), 3));
    CHECK_FALSE(is_unconfined(W("13", 4), 2));
    CHECK(unconfined_letters(P("2431")) == IndexSet{1});
    CHECK(unconfined_letters(P("4213")) == IndexSet{3});
    CHECK(unconfined_letters(P("4321")).empty());
    CHECK(unconfined_letters(P("2143")) == IndexSet{1, 3});
}

TEST_CASE("one word decides unconfinedness for all of R(w), n <= 5")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : oracle::all_permutations(n)) {
            const auto some = oracle::unconfined_somewhere(w);
            const auto every = oracle::unconfined_everywhere(w);
            REQUIRE(some == every);
            const IndexSet got = unconfined_letters(w);
            REQUIRE(std::set<int>(got.begin(), got.end()) == some);
        }
}

TEST_CASE("appears once in all reduced words")
{
    CHECK(appears_once_in_all(P("2431"), 1));
    CHECK_FALSE(appears_once_in_all(P("2431"), 2));
    CHECK_FALSE(appears_once_in_all(P("2431"), 3));
    CHECK_THROWS_AS(appears_once_in_all(P("1432"), 1), invalid_input);
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : oracle::all_permutations(n))
            for (int i : support(w)) {
                const bool got = appears_once_in_all(w, i);
                REQUIRE(got == oracle::once_by_patterns(w, i));
                if (n <= 5) {
                    const auto words = oracle::reduced_words(w);
                    const bool literal = std::all_of(words.begin(), words.end(), [&](const std::vector<int>& s) {
                        return std::count(s.begin(), s.end(), i) == 1;
                    });
                    REQUIRE(got == literal);
                }
            }
}

TEST_CASE("deleting a once-appearing letter")
{
    CHECK(delete_letter_perm(P("2431"), 1) == P("1432"));
    CHECK(delete_letter_perm(P("4213"), 3) == P("3214"));
    CHECK(delete_letter_perm(P("2143"), 1) == P("1243"));
    CHECK_THROWS_AS(delete_letter_perm(P("2431"), 2), invalid_input);
    for (int n = 2; n <= 5; ++n)
        for (const auto& w : oracle::all_permutations(n))
            for (int i : support(w)) {
                if (!appears_once_in_all(w, i))
                    continue;
                const auto expected = oracle::delete_from_words(w, i);
                REQUIRE(expected.has_value());
                REQUIRE(delete_letter_perm(w, i) == *expected);
            }
}

TEST_CASE("canonical prism words")
{
    const PrismWord a = canonical_prism_word(P("2431"), 1);
    CHECK(to_string(a.word) == "1232");
    CHECK(a.form == WordForm::c);
    const PrismWord b = canonical_prism_word(P("4213"), 3);
    CHECK(to_string(b.word) == "3121");
    CHECK(b.form == WordForm::c);
    const PrismWord c = canonical_prism_word(P("2143"), 3);
    CHECK(to_string(c.word) == "13");
    CHECK(c.form == WordForm::d);
    CHECK(matches_form(W("3212", 4), 1, WordForm::d) == false);
    CHECK(matches_form(W("2321", 4), 1, WordForm::d));
    CHECK(matches_form(W("2321", 4), 1, WordForm::a));
    CHECK_THROWS_AS(canonical_prism_word(P("4321"), 1), invalid_input);

    for (int n = 2; n <= 6; ++n)
        for (const auto& w : oracle::all_permutations(n))
            for (int i : unconfined_letters(w)) {
                const PrismWord p = canonical_prism_word(w, i);
                REQUIRE(word_to_perm(p.word) == w);
                REQUIRE(is_reduced(p.word));
                REQUIRE(matches_form(p.word, i, p.form));
            }
}
