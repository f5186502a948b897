#include "prism/poset.hpp"

#include "prism/errors.hpp"

#include <algorithm>
#include <deque>

namespace prism {

Poset::Poset(std::vector<std::string> labels, const std::vector<Cover>& covers)
    : labels_(std::move(labels))
{
    const int n = size();
    if (n == 0)
        throw invalid_input("poset: at least one element required");
    lower_.resize(static_cast<std::size_t>(n));
    upper_.resize(static_cast<std::size_t>(n));
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
            throw invalid_input("poset: cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") out of range");
        upper_[static_cast<std::size_t>(lo)].push_back(hi);
        lower_[static_cast<std::size_t>(hi)].push_back(lo);
    }
    for (auto& list : lower_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw invalid_input("poset: duplicate cover");
    }
    for (auto& list : upper_)
        std::sort(list.begin(), list.end());

    int minima = 0;
    for (int e = 0; e < n; ++e)
        if (lower_[static_cast<std::size_t>(e)].empty()) {
            minimum_ = e;
            ++minima;
        }
    if (minima != 1)
        throw invalid_input("poset: expected a unique minimum, found " + std::to_string(minima));

    // Kahn's order from the minimum; a leftover element means a cycle.
    ranks_.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> pending(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e)
        pending[static_cast<std::size_t>(e)] = lower_[static_cast<std::size_t>(e)].size();
    std::deque<int> ready{minimum_};
    ranks_[static_cast<std::size_t>(minimum_)] = 0;
    int visited = 0;
    while (!ready.empty()) {
        const int e = ready.front();
        ready.pop_front();
        ++visited;
        for (int up : upper_[static_cast<std::size_t>(e)]) {
            const int want = ranks_[static_cast<std::size_t>(e)] + 1;
            int& r = ranks_[static_cast<std::size_t>(up)];
            if (r == -1)
                r = want;
            else if (r != want)
                throw invalid_input("poset: not graded at '" + labels_[static_cast<std::size_t>(up)] + "'");
            if (--pending[static_cast<std::size_t>(up)] == 0)
                ready.push_back(up);
        }
    }
    if (visited != n)
        throw invalid_input("poset: cover relation has a cycle");
}

int Poset::height() const
{
    return *std::max_element(ranks_.begin(), ranks_.end());
}

std::vector<Poset::Cover> Poset::covers() const
{
    std::vector<Cover> out;
    for (int e = 0; e < size(); ++e)
        for (int up : upper_[static_cast<std::size_t>(e)])
            out.emplace_back(e, up);
    return out;
}

std::size_t Poset::cover_count() const
{
    std::size_t total = 0;
    for (const auto& list : upper_)
        total += list.size();
    return total;
}

std::optional<int> Poset::find(std::string_view label) const
{
    for (int e = 0; e < size(); ++e)
        if (labels_[static_cast<std::size_t>(e)] == label)
            return e;
    return std::nullopt;
}

bool Poset::covered_by(int lower, int upper) const
{
    const auto& list = upper_[static_cast<std::size_t>(lower)];
    return std::binary_search(list.begin(), list.end(), upper);
}

bool Poset::leq(int a, int b) const
{
    if (a == b)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(size()), false);
    std::vector<int> stack{b};
    while (!stack.empty()) {
        const int e = stack.back();
        stack.pop_back();
        for (int lo : lower_[static_cast<std::size_t>(e)]) {
            if (lo == a)
                return true;
            if (ranks_[static_cast<std::size_t>(lo)] > ranks_[static_cast<std::size_t>(a)] &&
                !seen[static_cast<std::size_t>(lo)]) {
                seen[static_cast<std::size_t>(lo)] = true;
                stack.push_back(lo);
            }
        }
    }
    return false;
}

Poset point()
{
    return Poset({"*"}, {});
}

Poset chain2()
{
    return Poset({"0", "1"}, {{0, 1}});
}

Poset product(const Poset& p, const Poset& q)
{
    const int nq = q.size();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(p.size()) * static_cast<std::size_t>(nq));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < nq; ++b)
            labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
    std::vector<Poset::Cover> covers;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < nq; ++b) {
            const int here = a * nq + b;
            for (int up : p.upper_covers(a))
                covers.emplace_back(here, up * nq + b);
            for (int up : q.upper_covers(b))
                covers.emplace_back(here, a * nq + up);
        }
    return Poset(std::move(labels), covers);
}

Poset power(const Poset& p, int k)
{
    if (k < 0)
        throw invalid_input("power: negative exponent");
    Poset out = point();
    for (int j = 0; j < k; ++j)
        out = j == 0 ? p : product(out, p);
    return out;
}

} // namespace prism
