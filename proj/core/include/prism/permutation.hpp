#ifndef PRISM_PERMUTATION_HPP
#define PRISM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prism {

// Sorted, duplicate-free list of generator indices (e.g. a support or a set
// of unconfined letters).
using IndexSet = std::vector<int>;

// A permutation of [1,n] in one-line notation. Positions and values are
// 1-based at every interface.
class Permutation {
public:
    static constexpr int max_size = 64;

    // Throws invalid_input unless one_line is a bijection on [1,n], 1 <= n <= 64.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(one_line_.size()); }
    int operator()(int x) const { return one_line_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& one_line() const { return one_line_; }

    bool is_identity() const;
    Permutation inverse() const;

    // w * (a b): exchanges the entries in positions a and b.
    Permutation swap_positions(int a, int b) const;
    // (a b) * w: exchanges the values a and b wherever they occur.
    Permutation swap_values(int a, int b) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> one_line_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& w) const noexcept;
};

// w(x) = u(v(x)); the right factor acts first.
Permutation compose(const Permutation& u, const Permutation& v);

// Number of pairs x < y with w(x) > w(y); equals the Coxeter length.
int inversions(const Permutation& w);

// Positions i in [1,n-1] with w(i) > w(i+1).
IndexSet descents(const Permutation& w);

// i is in the support iff {w(1..i)} != {1..i}.
IndexSet support(const Permutation& w);

struct SupportWitness {
    std::pair<int, int> positions; // x1 <= i < x2
    std::pair<int, int> values;    // (w(x1), w(x2)), w(x2) <= i < w(x1)
};

// Lexicographically first 21-occurrence straddling i in both positions and
// values, or nullopt when i is outside the support.
std::optional<SupportWitness> support_witness(const Permutation& w, int i);

// "2431" (n <= 9, one digit per entry) or "2,4,3,1". Emission uses the digit
// form exactly when n <= 9.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& w);

} // namespace prism

#endif
