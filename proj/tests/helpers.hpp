#ifndef PRISM_TESTS_HELPERS_HPP
#define PRISM_TESTS_HELPERS_HPP

#include "prism/permutation.hpp"
#include "prism/word.hpp"

#include <string>
#include <vector>

inline prism::Permutation P(const std::string& text)
{
    return prism::parse_permutation(text);
}

inline prism::Word W(const std::string& text, int n)
{
    return prism::parse_word(text, n);
}

inline std::vector<int> letters(const std::string& digits)
{
    std::vector<int> out;
    for (char c : digits)
        out.push_back(c - '0');
    return out;
}

#endif
