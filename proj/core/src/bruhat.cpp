#include "prism/bruhat.hpp"

#include "prism/errors.hpp"
#include "prism/poset.hpp"

#include <algorithm>
#include <deque>

namespace prism {

bool bruhat_leq(const Permutation& v, const Permutation& w)
{
    if (v.size() != w.size())
        throw invalid_input("bruhat_leq: size mismatch");
    const int n = w.size();
    // at_least[j] = #{a <= i : value(a) >= j}, advanced one prefix at a time.
    std::vector<int> v_count(static_cast<std::size_t>(n) + 2, 0);
    std::vector<int> w_count(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j <= v(i); ++j)
            ++v_count[static_cast<std::size_t>(j)];
        for (int j = 1; j <= w(i); ++j)
            ++w_count[static_cast<std::size_t>(j)];
        for (int j = 1; j <= n; ++j)
            if (v_count[static_cast<std::size_t>(j)] > w_count[static_cast<std::size_t>(j)])
                return false;
    }
    return true;
}

std::vector<Permutation> bruhat_lower_covers(const Permutation& u)
{
    std::vector<Permutation> out;
    const int n = u.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (u(a) < u(b))
                continue;
            bool blocked = false;
            for (int c = a + 1; c < b && !blocked; ++c)
                blocked = u(b) < u(c) && u(c) < u(a);
            if (!blocked)
                out.push_back(u.swap_positions(a, b));
        }
    return out;
}

BruhatIdeal::BruhatIdeal(Permutation top_, std::vector<Permutation> elements_, Poset poset_)
    : top(std::move(top_)), elements(std::move(elements_)), poset(std::move(poset_))
{
    for (std::size_t k = 0; k < elements.size(); ++k)
        index_.emplace(elements[k], static_cast<int>(k));
}

std::optional<int> BruhatIdeal::index_of(const Permutation& u) const
{
    if (auto it = index_.find(u); it != index_.end())
        return it->second;
    return std::nullopt;
}

BruhatIdeal bruhat_ideal(const Permutation& w, int max_elements)
{
    std::unordered_map<Permutation, std::vector<Permutation>, PermutationHash> below;
    std::deque<Permutation> queue{w};
    below.emplace(w, std::vector<Permutation>{});
    while (!queue.empty()) {
        Permutation u = std::move(queue.front());
        queue.pop_front();
        auto covers = bruhat_lower_covers(u);
        for (const auto& lower : covers)
            if (below.emplace(lower, std::vector<Permutation>{}).second) {
                if (static_cast<int>(below.size()) > max_elements)
                    throw cap_exceeded("ideal of " + to_string(w) + " exceeds " + std::to_string(max_elements) +
                                       " elements");
                queue.push_back(lower);
            }
        below[u] = std::move(covers);
    }

    std::vector<std::pair<int, Permutation>> keyed;
    keyed.reserve(below.size());
    for (const auto& [u, _] : below)
        keyed.emplace_back(inversions(u), u);
    std::sort(keyed.begin(), keyed.end());

    std::vector<Permutation> elements;
    std::vector<std::string> labels;
    std::unordered_map<Permutation, int, PermutationHash> index;
    for (auto& [len, u] : keyed) {
        index.emplace(u, static_cast<int>(elements.size()));
        labels.push_back(to_string(u));
        elements.push_back(std::move(u));
    }
    std::vector<Poset::Cover> covers;
    for (std::size_t k = 0; k < elements.size(); ++k)
        for (const auto& lower : below.at(elements[k]))
            covers.emplace_back(index.at(lower), static_cast<int>(k));
    Poset poset(std::move(labels), covers);
    return BruhatIdeal(w, std::move(elements), std::move(poset));
}

Poset ideal(const Permutation& w, int max_elements)
{
    return bruhat_ideal(w, max_elements).poset;
}

bool is_boolean_ideal(const Permutation& w, int max_elements)
{
    // Distinct subwords of one reduced word cover B(w), so |B(w)| <= 2^l(w).
    const int length = inversions(w);
    const auto size = static_cast<unsigned long long>(bruhat_ideal(w, max_elements).poset.size());
    return length < 63 && size == (1ull << length);
}

std::optional<PrismWitness> prism_oracle(const Permutation& w, int max_elements)
{
    if (w.is_identity())
        return std::nullopt;
    const BruhatIdeal top = bruhat_ideal(w, max_elements);
    const IndexSet supp_w = support(w);
    const Poset two = chain2();
    const int w_index = top.poset.size() - 1;
    for (int c : top.poset.lower_covers(w_index)) {
        const Permutation& v = top.elements[static_cast<std::size_t>(c)];
        const IndexSet supp_v = support(v);
        IndexSet missing;
        std::set_difference(supp_w.begin(), supp_w.end(), supp_v.begin(), supp_v.end(), std::back_inserter(missing));
        if (missing.empty())
            continue;
        if (missing.size() != 1)
            throw verification_failure("prism_oracle: coatom " + to_string(v) + " drops more than one letter");
        const Poset below = ideal(v, max_elements);
        if (2 * below.size() != top.poset.size())
            continue;
        if (isomorphic(top.poset, product(two, below), std::max(max_elements, top.poset.size())))
            return PrismWitness{missing.front(), v};
    }
    return std::nullopt;
}

} // namespace prism
