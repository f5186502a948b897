#ifndef PRISM_ENUMERATE_HPP
#define PRISM_ENUMERATE_HPP

#include "prism/permutation.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace prism {

enum class Method { reduced_word, pattern, poset };

// "rw", "pattern" or "poset".
Method parse_method(std::string_view text);
const char* method_name(Method m);

// Largest n accepted by enumerate() for each method.
int enumeration_cap(Method m);

struct CountRow {
    int n = 0;
    std::uint64_t boolean_count = 0;
    std::uint64_t prism_count = 0;
    std::uint64_t prism_not_boolean_count = 0;
    std::uint64_t neither_count = 0;

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

// Both bookkeeping identities: the three classes partition n!, and the only
// boolean non-prism is the identity.
bool consistent(const CountRow& row);

std::uint64_t factorial(int n);

// Permutation of rank r (0-based) in lexicographic order of S_n.
Permutation unrank_lexicographic(std::uint64_t r, int n);

// Calls visit on S_n in lexicographic order, split into contiguous rank
// ranges over `threads` workers (0 = hardware concurrency). visit receives the
// worker index and must be safe to call concurrently for different workers.
void for_each_permutation(int n, unsigned threads, const std::function<void(unsigned, const Permutation&)>& visit);
unsigned worker_count(int n, unsigned threads);

// Classifies every permutation of S_n with the chosen method. Throws
// cap_exceeded above enumeration_cap(method); throws verification_failure if
// a row breaks its identities.
CountRow enumerate(int n, Method method, unsigned threads = 0);

// n,boolean,prism,prism_not_boolean,neither
std::string to_csv(const CountRow& row);

struct FibonacciRow {
    int n;
    std::uint64_t boolean_count;
    std::uint64_t expected;
    bool matches() const { return boolean_count == expected; }
};

// a(1) = 1, a(2) = 2, a(n) = 3 a(n-1) - a(n-2): the odd-indexed Fibonacci numbers.
std::uint64_t odd_fibonacci(int n);

// Boolean counts for n = 1..max_n (max_n <= 10) against odd_fibonacci.
std::vector<FibonacciRow> fibonacci_check(int max_n, unsigned threads = 0);

} // namespace prism

#endif
