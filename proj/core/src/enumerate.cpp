#include "prism/enumerate.hpp"

#include "prism/bruhat.hpp"
#include "prism/classify.hpp"
#include "prism/errors.hpp"
#include "prism/pattern.hpp"
#include "prism/word.hpp"

#include <algorithm>
#include <numeric>
#include <exception>
#include <mutex>
#include <thread>

namespace prism {

Method parse_method(std::string_view text)
{
    if (text == "rw")
        return Method::reduced_word;
    if (text == "pattern")
        return Method::pattern;
    if (text == "poset")
        return Method::poset;
    throw invalid_input("unknown method '" + std::string(text) + "' (expected rw, pattern, poset)");
}

const char* method_name(Method m)
{
    switch (m) {
    case Method::reduced_word: return "rw";
    case Method::pattern: return "pattern";
    case Method::poset: return "poset";
    }
    return "?";
}

int enumeration_cap(Method m)
{
    return m == Method::poset ? 6 : 10;
}

bool consistent(const CountRow& row)
{
    const std::uint64_t total = row.boolean_count + row.prism_not_boolean_count + row.neither_count;
    return total == factorial(row.n) && row.prism_count + 1 == row.boolean_count + row.prism_not_boolean_count;
}

std::uint64_t factorial(int n)
{
    std::uint64_t out = 1;
    for (int k = 2; k <= n; ++k)
        out *= static_cast<std::uint64_t>(k);
    return out;
}

Permutation unrank_lexicographic(std::uint64_t r, int n)
{
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    for (int k = n; k >= 1; --k) {
        const std::uint64_t block = factorial(k - 1);
        const auto pick = static_cast<std::size_t>(r / block);
        r %= block;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation(std::move(out));
}

unsigned worker_count(int n, unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t total = factorial(n);
    return static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
}

void for_each_permutation(int n, unsigned threads, const std::function<void(unsigned, const Permutation&)>& visit)
{
    if (n < 1 || n > 20)
        throw invalid_input("for_each_permutation: n must be in [1,20]");
    const unsigned workers = worker_count(n, threads);
    const std::uint64_t total = factorial(n);
    auto run = [&](unsigned k) {
        const std::uint64_t begin = total * k / workers;
        const std::uint64_t end = total * (k + 1) / workers;
        std::vector<int> current = unrank_lexicographic(begin, n).one_line();
        for (std::uint64_t r = begin; r < end; ++r) {
            visit(k, Permutation(current));
            std::next_permutation(current.begin(), current.end());
        }
    };
    if (workers == 1) {
        run(0);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned k = 0; k < workers; ++k)
        pool.emplace_back([&, k] {
            try {
                run(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

namespace {

struct Verdict {
    bool boolean;
    bool prism;
};

Verdict classify_one(const Permutation& w, Method method)
{
    switch (method) {
    case Method::reduced_word: {
        const Word s = some_reduced_word(w);
        std::vector<int> letters = s.letters();
        std::sort(letters.begin(), letters.end());
        const bool boolean = std::adjacent_find(letters.begin(), letters.end()) == letters.end();
        bool prism = false;
        for (int i : support(w))
            if (is_unconfined(s, i)) {
                prism = true;
                break;
            }
        return {boolean, prism};
    }
    case Method::pattern:
        return {is_boolean_by_pattern(w), classify_by_pattern(w, PatternScan::first).is_prism};
    case Method::poset:
        return {is_boolean_ideal(w), prism_oracle(w).has_value()};
    }
    return {false, false};
}

} // namespace

CountRow enumerate(int n, Method method, unsigned threads)
{
    if (n < 1)
        throw invalid_input("enumerate: n must be positive");
    if (n > enumeration_cap(method))
        throw cap_exceeded("enumerate: n = " + std::to_string(n) + " exceeds the " + method_name(method) +
                           " cap of " + std::to_string(enumeration_cap(method)));
    std::vector<CountRow> partial(worker_count(n, threads));
    for_each_permutation(n, threads, [&](unsigned k, const Permutation& w) {
        const Verdict v = classify_one(w, method);
        CountRow& row = partial[k];
        row.boolean_count += v.boolean ? 1 : 0;
        row.prism_count += v.prism ? 1 : 0;
        row.prism_not_boolean_count += v.prism && !v.boolean ? 1 : 0;
        row.neither_count += !v.prism && !v.boolean ? 1 : 0;
    });
    CountRow total;
    total.n = n;
    for (const auto& row : partial) {
        total.boolean_count += row.boolean_count;
        total.prism_count += row.prism_count;
        total.prism_not_boolean_count += row.prism_not_boolean_count;
        total.neither_count += row.neither_count;
    }
    if (!consistent(total))
        throw verification_failure("enumerate: counts for n = " + std::to_string(n) + " break the row identities");
    return total;
}

std::string to_csv(const CountRow& row)
{
    return std::to_string(row.n) + "," + std::to_string(row.boolean_count) + "," + std::to_string(row.prism_count) +
           "," + std::to_string(row.prism_not_boolean_count) + "," + std::to_string(row.neither_count);
}

std::uint64_t odd_fibonacci(int n)
{
    if (n < 1)
        throw invalid_input("odd_fibonacci: n must be positive");
    std::uint64_t previous = 1, current = 2;
    if (n == 1)
        return previous;
    for (int k = 3; k <= n; ++k) {
        const std::uint64_t next = 3 * current - previous;
        previous = current;
        current = next;
    }
    return current;
}

std::vector<FibonacciRow> fibonacci_check(int max_n, unsigned threads)
{
    if (max_n < 1 || max_n > 10)
        throw invalid_input("fibonacci_check: max_n must be in [1,10]");
    std::vector<FibonacciRow> out;
    for (int n = 1; n <= max_n; ++n)
        out.push_back({n, enumerate(n, Method::reduced_word, threads).boolean_count, odd_fibonacci(n)});
    return out;
}

} // namespace prism
