#ifndef PRISM_POSET_HPP
#define PRISM_POSET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prism {

// A finite graded poset with a unique minimum, stored as its Hasse diagram.
// Elements are indices [0, size()).
class Poset {
public:
    using Cover = std::pair<int, int>; // (lower, upper)

    // Throws invalid_input unless the covers form a DAG over the labels with a
    // unique minimum and every cover raises the rank by exactly one.
    Poset(std::vector<std::string> labels, const std::vector<Cover>& covers);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int e) const { return labels_[static_cast<std::size_t>(e)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int rank(int e) const { return ranks_[static_cast<std::size_t>(e)]; }
    int height() const;
    int minimum() const { return minimum_; }
    const std::vector<int>& lower_covers(int e) const { return lower_[static_cast<std::size_t>(e)]; }
    const std::vector<int>& upper_covers(int e) const { return upper_[static_cast<std::size_t>(e)]; }
    // Sorted by (lower, upper).
    std::vector<Cover> covers() const;
    std::size_t cover_count() const;

    std::optional<int> find(std::string_view label) const;
    bool covered_by(int lower, int upper) const;
    bool leq(int a, int b) const;

private:
    std::vector<std::string> labels_;
    std::vector<int> ranks_;
    std::vector<std::vector<int>> lower_;
    std::vector<std::vector<int>> upper_;
    int minimum_ = 0;
};

// The one-element poset.
Poset point();
// The two-element chain 0 < 1.
Poset chain2();
// Componentwise order on P x Q; element (p,q) has index p * |Q| + q and label "(p,q)".
Poset product(const Poset& p, const Poset& q);
// P^k, with power(P, 0) the point.
Poset power(const Poset& p, int k);

inline constexpr int default_isomorphism_cap = 10'000;

// An order isomorphism P -> Q as a map from P's indices to Q's, found by
// color refinement on (rank, cover degrees, neighbor colors) followed by
// individualization and backtracking. Throws cap_exceeded when either poset
// has more than max_elements elements.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q,
                                                 int max_elements = default_isomorphism_cap);
bool isomorphic(const Poset& p, const Poset& q, int max_elements = default_isomorphism_cap);

} // namespace prism

#endif
