#ifndef PRISM_BRUHAT_HPP
#define PRISM_BRUHAT_HPP

#include "prism/permutation.hpp"
#include "prism/poset.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace prism {

// v <= w in Bruhat order, by comparing #{a <= i : v(a) >= j} with the same
// count for w over all i, j.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// Elements covered by u: u * (a b) for a < b, u(a) > u(b), and no position
// strictly between a and b holding a value strictly between u(b) and u(a).
std::vector<Permutation> bruhat_lower_covers(const Permutation& u);

inline constexpr int default_ideal_cap = 50'000;

// The principal order ideal B(w) with its elements. Elements are sorted by
// (length, one-line notation); poset index k labels elements[k].
struct BruhatIdeal {
    BruhatIdeal(Permutation top, std::vector<Permutation> elements, Poset poset);

    Permutation top;
    std::vector<Permutation> elements;
    Poset poset;

    std::optional<int> index_of(const Permutation& u) const;

private:
    std::unordered_map<Permutation, int, PermutationHash> index_;
};

// Built by downward closure under lower covers. Throws cap_exceeded when the
// ideal has more than max_elements elements.
BruhatIdeal bruhat_ideal(const Permutation& w, int max_elements = default_ideal_cap);
Poset ideal(const Permutation& w, int max_elements = default_ideal_cap);

// B(w) is boolean iff |B(w)| = 2^l(w).
bool is_boolean_ideal(const Permutation& w, int max_elements = default_ideal_cap);

struct PrismWitness {
    int letter;    // {letter} = supp(w) \ supp(core)
    Permutation v; // B(w) ~ chain2 x B(v)
};

// Searches coatoms v of B(w) with supp(v) a proper subset of supp(w) for one
// with B(w) isomorphic to chain2 x B(v). Coatoms are tried in element order.
std::optional<PrismWitness> prism_oracle(const Permutation& w, int max_elements = default_ideal_cap);

} // namespace prism

#endif
