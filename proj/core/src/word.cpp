#include "prism/word.hpp"

#include "prism/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace prism {

Word::Word(std::vector<int> letters, int n)
    : letters_(std::move(letters)), n_(n)
{
    if (n < 1 || n > Permutation::max_size)
        throw invalid_input("word: size context must be in [1,64]");
    for (int i : letters_)
        if (i < 1 || i > n - 1)
            throw invalid_input("word: letter " + std::to_string(i) + " outside [1," + std::to_string(n - 1) + "]");
}

Permutation word_to_perm(const Word& s)
{
    std::vector<int> one_line(static_cast<std::size_t>(s.declared_n()));
    for (int x = 1; x <= s.declared_n(); ++x)
        one_line[static_cast<std::size_t>(x - 1)] = x;
    // Right multiplication by s_i exchanges positions i and i+1.
    for (int i : s.letters())
        std::swap(one_line[static_cast<std::size_t>(i - 1)], one_line[static_cast<std::size_t>(i)]);
    return Permutation(std::move(one_line));
}

bool is_reduced(const Word& s)
{
    return static_cast<std::size_t>(inversions(word_to_perm(s))) == s.length();
}

Word some_reduced_word(const Permutation& w)
{
    std::vector<int> current = w.one_line();
    std::vector<int> peeled;
    const int n = w.size();
    for (;;) {
        int i = 1;
        while (i < n && current[static_cast<std::size_t>(i - 1)] < current[static_cast<std::size_t>(i)])
            ++i;
        if (i >= n)
            break;
        peeled.push_back(i);
        std::swap(current[static_cast<std::size_t>(i - 1)], current[static_cast<std::size_t>(i)]);
    }
    std::reverse(peeled.begin(), peeled.end());
    return Word(std::move(peeled), n);
}

namespace {

using WordList = std::vector<std::vector<int>>;

unsigned long long count_words(const Permutation& w,
                               std::unordered_map<Permutation, unsigned long long, PermutationHash>& memo)
{
    if (auto it = memo.find(w); it != memo.end())
        return it->second;
    unsigned long long total = 0;
    const IndexSet desc = descents(w);
    if (desc.empty()) {
        total = 1;
    } else {
        for (int i : desc)
            total += count_words(w.swap_positions(i, i + 1), memo);
    }
    memo.emplace(w, total);
    return total;
}

// R(w) is the disjoint union over descents i of R(w s_i) followed by i.
const WordList& collect_words(const Permutation& w, std::unordered_map<Permutation, WordList, PermutationHash>& memo)
{
    if (auto it = memo.find(w); it != memo.end())
        return it->second;
    WordList out;
    const IndexSet desc = descents(w);
    if (desc.empty()) {
        out.emplace_back();
    } else {
        for (int i : desc) {
            const WordList& shorter = collect_words(w.swap_positions(i, i + 1), memo);
            for (const auto& s : shorter) {
                out.push_back(s);
                out.back().push_back(i);
            }
        }
    }
    return memo.emplace(w, std::move(out)).first->second;
}

} // namespace

unsigned long long count_reduced_words(const Permutation& w)
{
    std::unordered_map<Permutation, unsigned long long, PermutationHash> memo;
    return count_words(w, memo);
}

std::vector<Word> all_reduced_words(const Permutation& w, std::size_t max_words)
{
    const unsigned long long total = count_reduced_words(w);
    if (total > max_words)
        throw cap_exceeded("all_reduced_words: |R(" + to_string(w) + ")| = " + std::to_string(total) +
                           " exceeds cap " + std::to_string(max_words));
    std::unordered_map<Permutation, WordList, PermutationHash> memo;
    WordList words = collect_words(w, memo);
    std::sort(words.begin(), words.end());
    std::vector<Word> out;
    out.reserve(words.size());
    for (auto& s : words)
        out.emplace_back(std::move(s), w.size());
    return out;
}

std::vector<Word> word_moves(const Word& s)
{
    std::vector<Word> out;
    const auto& l = s.letters();
    for (std::size_t k = 0; k + 1 < l.size(); ++k) {
        if (std::abs(l[k] - l[k + 1]) > 1) {
            auto moved = l;
            std::swap(moved[k], moved[k + 1]);
            out.emplace_back(std::move(moved), s.declared_n());
        } else if (k + 2 < l.size() && l[k] == l[k + 2] && std::abs(l[k] - l[k + 1]) == 1) {
            auto moved = l;
            moved[k] = moved[k + 2] = l[k + 1];
            moved[k + 1] = l[k];
            out.emplace_back(std::move(moved), s.declared_n());
        }
    }
    return out;
}

int multiplicity(const Word& s, int i)
{
    return static_cast<int>(std::count(s.letters().begin(), s.letters().end(), i));
}

bool appears_once_in_all(const Permutation& w, int i)
{
    const IndexSet supp = support(w);
    if (!std::binary_search(supp.begin(), supp.end(), i))
        throw invalid_input("appears_once_in_all: " + std::to_string(i) + " is not in supp(" + to_string(w) + ")");
    const int n = w.size();
    // 321 at positions x1 < x2 < x3, x1 <= i < x3, smallest value <= i < largest.
    for (int x1 = 1; x1 <= i; ++x1)
        for (int x3 = i + 1; x3 <= n; ++x3) {
            if (!(w(x3) <= i && i < w(x1)))
                continue;
            for (int x2 = x1 + 1; x2 < x3; ++x2)
                if (w(x1) > w(x2) && w(x2) > w(x3))
                    return false;
        }
    // 3412 at x1 < x2 <= i < x3 < x4 with second-smallest value <= i < second-largest.
    for (int x1 = 1; x1 <= i; ++x1)
        for (int x2 = x1 + 1; x2 <= i; ++x2)
            for (int x3 = i + 1; x3 <= n; ++x3)
                for (int x4 = x3 + 1; x4 <= n; ++x4) {
                    const bool is_3412 = w(x3) < w(x4) && w(x4) < w(x1) && w(x1) < w(x2);
                    if (is_3412 && w(x4) <= i && i < w(x1))
                        return false;
                }
    return true;
}

bool is_unconfined(const Word& s, int i)
{
    const auto& l = s.letters();
    const auto at = std::find(l.begin(), l.end(), i);
    if (at == l.end() || std::find(at + 1, l.end(), i) != l.end())
        return false;
    auto between = [&](int neighbor) {
        return std::find(l.begin(), at, neighbor) != at && std::find(at + 1, l.end(), neighbor) != l.end();
    };
    return !between(i + 1) && !between(i - 1);
}

IndexSet unconfined_letters(const Permutation& w)
{
    const Word s = some_reduced_word(w);
    IndexSet out;
    for (int i : support(w))
        if (is_unconfined(s, i))
            out.push_back(i);
    return out;
}

Permutation delete_letter_perm(const Permutation& w, int i)
{
    if (!appears_once_in_all(w, i))
        throw invalid_input("delete_letter_perm: " + std::to_string(i) + " repeats in some reduced word of " +
                            to_string(w));
    int b = 0;
    for (int x = 1; x <= i; ++x)
        b = std::max(b, w(x));
    int a = w.size() + 1;
    for (int x = i + 1; x <= w.size(); ++x)
        a = std::min(a, w(x));
    return w.swap_values(a, b);
}

char form_tag(WordForm f)
{
    switch (f) {
    case WordForm::a: return 'a';
    case WordForm::b: return 'b';
    case WordForm::c: return 'c';
    case WordForm::d: return 'd';
    }
    return '?';
}

bool matches_form(const Word& s, int i, WordForm form)
{
    const auto& l = s.letters();
    const auto at = std::find(l.begin(), l.end(), i);
    if (at == l.end() || std::find(at + 1, l.end(), i) != l.end())
        return false;
    using std::all_of;
    auto less = [i](int x) { return x < i; };
    auto greater = [i](int x) { return x > i; };
    // First index where letters stop satisfying pred.
    auto run_end = [&](auto first, auto last, auto pred) { return std::find_if_not(first, last, pred); };
    switch (form) {
    case WordForm::a:
        return all_of(l.begin(), at, greater) && all_of(at + 1, l.end(), less);
    case WordForm::b:
        return all_of(l.begin(), at, less) && all_of(at + 1, l.end(), greater);
    case WordForm::c:
        return at == l.begin() && all_of(run_end(at + 1, l.end(), greater), l.end(), less);
    case WordForm::d:
        return at + 1 == l.end() && all_of(run_end(l.begin(), at, less), at, greater);
    }
    return false;
}

PrismWord canonical_prism_word(const Permutation& w, int i)
{
    const Word s = some_reduced_word(w);
    if (!is_unconfined(s, i))
        throw invalid_input("canonical_prism_word: " + std::to_string(i) + " is not unconfined in " + to_string(w));
    const auto& l = s.letters();
    const auto at = std::find(l.begin(), l.end(), i);
    std::vector<int> lower, upper;
    for (int x : l) {
        if (x < i)
            lower.push_back(x);
        else if (x > i)
            upper.push_back(x);
    }
    // i may sit before a block when no copy of its neighbor precedes it, and
    // after the block when none follows it; the other letters of each block
    // commute with i.
    auto occurs = [&](auto first, auto last, int x) { return std::find(first, last, x) != last; };
    const bool before_lower = !occurs(l.begin(), at, i - 1);
    const bool after_lower = !occurs(at + 1, l.end(), i - 1);
    const bool before_upper = !occurs(l.begin(), at, i + 1);
    const bool after_upper = !occurs(at + 1, l.end(), i + 1);

    auto join = [&](std::initializer_list<const std::vector<int>*> parts) {
        std::vector<int> out;
        for (const auto* p : parts)
            out.insert(out.end(), p->begin(), p->end());
        return out;
    };
    const std::vector<int> letter{i};
    if (after_lower && after_upper)
        return {Word(join({&lower, &upper, &letter}), w.size()), WordForm::d};
    if (before_lower && before_upper)
        return {Word(join({&letter, &upper, &lower}), w.size()), WordForm::c};
    if (after_upper && before_lower)
        return {Word(join({&upper, &letter, &lower}), w.size()), WordForm::a};
    if (after_lower && before_upper)
        return {Word(join({&lower, &letter, &upper}), w.size()), WordForm::b};
    throw verification_failure("canonical_prism_word: no form available for unconfined letter");
}

Word parse_word(std::string_view text, int n)
{
    if (text.starts_with("s:"))
        text.remove_prefix(2);
    return Word(detail::parse_int_list(text, "word"), n);
}

std::string to_string(const Word& s)
{
    return detail::format_int_list(s.letters(), s.declared_n() <= 10);
}

} // namespace prism
