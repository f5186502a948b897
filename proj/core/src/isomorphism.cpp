#include "prism/errors.hpp"
#include "prism/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace prism {

namespace {

// Disjoint union of P and Q: vertices [0, np) are P's, [np, np + nq) are Q's.
// A single coloring over both keeps color ids comparable across the sides.
struct Joint {
    const Poset& p;
    const Poset& q;
    int np;
    int nq;

    int total() const { return np + nq; }
    const std::vector<int>& lower(int v, std::vector<int>& scratch) const
    {
        return neighbors(v, scratch, true);
    }
    const std::vector<int>& upper(int v, std::vector<int>& scratch) const
    {
        return neighbors(v, scratch, false);
    }

private:
    const std::vector<int>& neighbors(int v, std::vector<int>& scratch, bool down) const
    {
        if (v < np)
            return down ? p.lower_covers(v) : p.upper_covers(v);
        const auto& list = down ? q.lower_covers(v - np) : q.upper_covers(v - np);
        scratch.resize(list.size());
        std::transform(list.begin(), list.end(), scratch.begin(), [this](int e) { return e + np; });
        return scratch;
    }
};

int count_classes(const std::vector<int>& color)
{
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Repeatedly recolors each vertex by (color, multiset of lower-cover colors,
// multiset of upper-cover colors) until the partition stops splitting.
void refine(const Joint& g, std::vector<int>& color)
{
    int classes = count_classes(color);
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(g.total()));
    std::vector<int> scratch, bucket;
    for (;;) {
        for (int v = 0; v < g.total(); ++v) {
            auto& sig = signature[static_cast<std::size_t>(v)];
            sig.clear();
            sig.push_back(color[static_cast<std::size_t>(v)]);
            for (bool down : {true, false}) {
                const auto& nb = down ? g.lower(v, scratch) : g.upper(v, scratch);
                bucket.clear();
                for (int u : nb)
                    bucket.push_back(color[static_cast<std::size_t>(u)]);
                std::sort(bucket.begin(), bucket.end());
                sig.push_back(static_cast<int>(bucket.size()));
                sig.insert(sig.end(), bucket.begin(), bucket.end());
            }
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& sig : signature)
            ids.emplace(sig, 0);
        int next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        for (int v = 0; v < g.total(); ++v)
            color[static_cast<std::size_t>(v)] = ids.at(signature[static_cast<std::size_t>(v)]);
        if (next == classes)
            return;
        classes = next;
    }
}

// Every color must occur equally often on both sides.
bool balanced(const Joint& g, const std::vector<int>& color)
{
    std::map<int, int> excess;
    for (int v = 0; v < g.total(); ++v)
        excess[color[static_cast<std::size_t>(v)]] += v < g.np ? 1 : -1;
    return std::all_of(excess.begin(), excess.end(), [](const auto& kv) { return kv.second == 0; });
}

std::optional<std::vector<int>> search(const Joint& g, std::vector<int> color)
{
    refine(g, color);
    if (!balanced(g, color))
        return std::nullopt;

    std::map<int, std::vector<int>> classes_in_p;
    for (int v = 0; v < g.np; ++v)
        classes_in_p[color[static_cast<std::size_t>(v)]].push_back(v);
    const std::vector<int>* target = nullptr;
    int target_color = -1;
    for (const auto& [c, members] : classes_in_p)
        if (members.size() > 1 && (!target || members.size() < target->size())) {
            target = &members;
            target_color = c;
        }

    if (!target) {
        // Discrete coloring: the candidate map is forced; check it on covers.
        std::vector<int> q_of_color(static_cast<std::size_t>(g.total()), -1);
        for (int v = g.np; v < g.total(); ++v)
            q_of_color[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v - g.np;
        std::vector<int> map(static_cast<std::size_t>(g.np));
        for (int v = 0; v < g.np; ++v)
            map[static_cast<std::size_t>(v)] = q_of_color[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
        for (const auto& [lo, hi] : g.p.covers())
            if (!g.q.covered_by(map[static_cast<std::size_t>(lo)], map[static_cast<std::size_t>(hi)]))
                return std::nullopt;
        return map;
    }

    const int x = target->front();
    const int fresh = *std::max_element(color.begin(), color.end()) + 1;
    for (int y = g.np; y < g.total(); ++y) {
        if (color[static_cast<std::size_t>(y)] != target_color)
            continue;
        std::vector<int> next = color;
        next[static_cast<std::size_t>(x)] = fresh;
        next[static_cast<std::size_t>(y)] = fresh;
        if (auto found = search(g, std::move(next)))
            return found;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q, int max_elements)
{
    if (p.size() > max_elements || q.size() > max_elements)
        throw cap_exceeded("isomorphism: poset with " + std::to_string(std::max(p.size(), q.size())) +
                           " elements exceeds cap " + std::to_string(max_elements));
    if (p.size() != q.size() || p.cover_count() != q.cover_count() || p.height() != q.height())
        return std::nullopt;

    const Joint g{p, q, p.size(), q.size()};
    // Initial colors: (rank, lower-cover count, upper-cover count).
    std::map<std::tuple<int, std::size_t, std::size_t>, int> ids;
    std::vector<std::tuple<int, std::size_t, std::size_t>> key(static_cast<std::size_t>(g.total()));
    for (int v = 0; v < g.total(); ++v) {
        const Poset& side = v < g.np ? p : q;
        const int e = v < g.np ? v : v - g.np;
        key[static_cast<std::size_t>(v)] = {side.rank(e), side.lower_covers(e).size(), side.upper_covers(e).size()};
        ids.emplace(key[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids)
        id = next++;
    std::vector<int> color(static_cast<std::size_t>(g.total()));
    for (int v = 0; v < g.total(); ++v)
        color[static_cast<std::size_t>(v)] = ids.at(key[static_cast<std::size_t>(v)]);
    return search(g, std::move(color));
}

bool isomorphic(const Poset& p, const Poset& q, int max_elements)
{
    return find_isomorphism(p, q, max_elements).has_value();
}

} // namespace prism
