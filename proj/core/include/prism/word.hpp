#ifndef PRISM_WORD_HPP
#define PRISM_WORD_HPP

#include "prism/permutation.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace prism {

// A word in the simple reflections s_1..s_{n-1} of S_n. The size context is
// part of the value: "321" over S_4 and over S_5 are different words.
class Word {
public:
    // Throws invalid_input unless every letter lies in [1, n-1].
    Word(std::vector<int> letters, int n);

    int declared_n() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t k) const { return letters_[k]; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    int n_;
};

// s_{i1} s_{i2} ... s_{ik} under right-to-left composition.
Permutation word_to_perm(const Word& s);

bool is_reduced(const Word& s);

// Deterministic reduced word: peel off the smallest descent until the
// identity is reached, then read the peeled letters backwards.
Word some_reduced_word(const Permutation& w);

// Number of reduced words |R(w)|, without materializing them.
unsigned long long count_reduced_words(const Permutation& w);

inline constexpr std::size_t default_reduced_word_cap = 1'000'000;

// Every reduced word of w, sorted lexicographically. Throws cap_exceeded when
// |R(w)| is larger than max_words.
std::vector<Word> all_reduced_words(const Permutation& w, std::size_t max_words = default_reduced_word_cap);

// Words reachable from s by one commutation (ij = ji, |i-j| > 1) or braid
// (i(i+1)i = (i+1)i(i+1)) move, in order of the move's position.
std::vector<Word> word_moves(const Word& s);

int multiplicity(const Word& s, int i);

// Whether i appears exactly once in every reduced word of w, decided from
// 321 and 3412 occurrences that straddle i. Requires i in supp(w).
bool appears_once_in_all(const Permutation& w, int i);

// i occurs exactly once in s and that copy is neither between two copies of
// i+1 nor between two copies of i-1.
bool is_unconfined(const Word& s, int i);

// Letters unconfined in the reduced words of w. A letter unconfined in one
// reduced word is unconfined in all of them, so one word suffices.
IndexSet unconfined_letters(const Permutation& w);

// The permutation obtained by deleting the unique copy of i from any reduced
// word of w. Requires i in supp(w) with appears_once_in_all(w, i).
Permutation delete_letter_perm(const Permutation& w, int i);

// Shapes of a reduced word around a distinguished letter i:
//   a: (letters > i) i (letters < i)
//   b: (letters < i) i (letters > i)
//   c: i (letters > i) (letters < i)
//   d: (letters < i) (letters > i) i
enum class WordForm { a, b, c, d };

char form_tag(WordForm f);

struct PrismWord {
    Word word;
    WordForm form;
};

// Literal format check of s against a form with respect to letter i.
bool matches_form(const Word& s, int i, WordForm form);

// Rearranges some_reduced_word(w) by commutations into one of the four forms.
// Forms are tried in the order d, c, a, b; the first one the confinement of i
// allows is returned. Requires i to be unconfined in w.
PrismWord canonical_prism_word(const Permutation& w, int i);

// Optional "s:" prefix, then digits ("1232") or a comma list ("s:1,2,3,2").
Word parse_word(std::string_view text, int n);
// Digit form when n <= 10, comma form otherwise; no prefix.
std::string to_string(const Word& s);

} // namespace prism

#endif
