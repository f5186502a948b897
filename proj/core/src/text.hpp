#ifndef PRISM_SRC_TEXT_HPP
#define PRISM_SRC_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace prism::detail {

// Integers from either "2,4,3,1" (comma form) or "2431" (one digit each).
std::vector<int> parse_int_list(std::string_view text, std::string_view what);

// Inverse of parse_int_list; digits are used when every entry is in [0,9].
std::string format_int_list(const std::vector<int>& values, bool digits);

} // namespace prism::detail

#endif
