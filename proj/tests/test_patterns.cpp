#include "helpers.hpp"
#include "oracles/oracles.hpp"

#include "prism/errors.hpp"
#include "prism/json_io.hpp"
#include "prism/pattern.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>

using namespace prism;

namespace {

const std::set<Cell> band1{{0, 1}, {1, 1}, {2, 1}};

CalibratedMeshPattern mu()
{
    return CalibratedMeshPattern(MeshPattern(P("21"), band1), {}, {}, "mu");
}

CalibratedMeshPattern mu_prime()
{
    return CalibratedMeshPattern(
        MeshPattern(P("213"), {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}));
}

std::vector<std::vector<int>> positions_of(const std::vector<Occurrence>& occ)
{
    std::vector<std::vector<int>> out;
    for (const auto& o : occ)
        out.push_back(o.positions);
    return out;
}

Permutation random_perm(int n, std::mt19937_64& rng)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

CalibratedMeshPattern random_pattern(int n, std::mt19937_64& rng)
{
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const Permutation p = random_perm(k, rng);
    std::set<Cell> mesh;
    std::bernoulli_distribution shade(0.2);
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            if (shade(rng))
                mesh.insert({a, b});
    std::map<int, int> pos, val;
    std::bernoulli_distribution pin(0.25);
    // Increasing targets: sorted draws from [1, n].
    std::vector<int> targets;
    for (int j = 0; j < k; ++j)
        targets.push_back(std::uniform_int_distribution<int>(1, n)(rng));
    std::sort(targets.begin(), targets.end());
    for (int j = 1; j <= k; ++j)
        if (pin(rng) && (pos.empty() || pos.rbegin()->second < targets[static_cast<std::size_t>(j - 1)]))
            pos[j] = targets[static_cast<std::size_t>(j - 1)];
    for (int j = 1; j <= k; ++j)
        if (pin(rng) && (val.empty() || val.rbegin()->second < targets[static_cast<std::size_t>(j - 1)]))
            val[j] = targets[static_cast<std::size_t>(j - 1)];
    return CalibratedMeshPattern(MeshPattern(p, mesh), pos, val);
}

} // namespace

TEST_CASE("pattern validation")
{
    CHECK_THROWS_AS(MeshPattern(P("21"), {{3, 0}}), invalid_input);
    CHECK_THROWS_AS(MeshPattern(P("21"), {{0, -1}}), invalid_input);
    CHECK_THROWS_AS(CalibratedMeshPattern(MeshPattern(P("21")), {{3, 1}}), invalid_input);
    CHECK_THROWS_AS(CalibratedMeshPattern(MeshPattern(P("21")), {{1, 4}, {2, 2}}), invalid_input);
    CHECK_THROWS_AS(CalibratedMeshPattern(MeshPattern(P("21")), {}, {{1, 3}, {2, 3}}), invalid_input);
    CHECK_NOTHROW(CalibratedMeshPattern(MeshPattern(P("21")), {{1, 2}, {2, 5}}));
}

TEST_CASE("mesh and calibrated examples on 24153")
{
    const Permutation w = P("24153");
    const auto c21 = occurrences(w, classical(P("21")));
    CHECK(c21.size() == 4);
    CHECK(positions_of(c21) == std::vector<std::vector<int>>{{1, 3}, {2, 3}, {2, 5}, {4, 5}});

    const auto m = occurrences(w, mu());
    CHECK(positions_of(m) == std::vector<std::vector<int>>{{1, 3}, {2, 5}});

    CHECK(occurrences(w, classical(P("213"))).size() == 3);
    CHECK(occurrences(w, mu_prime()).empty());
    CHECK(contains(w, mu()));
    CHECK_FALSE(contains(w, mu_prime()));

    const CalibratedMeshPattern C(MeshPattern(P("21"), band1), {}, {{2, 4}}, "C");
    const auto c = occurrences(w, C);
    REQUIRE(c.size() == 1);
    CHECK(c[0].positions == std::vector<int>{2, 5});
    CHECK(c[0].values == std::vector<int>{4, 3});

    const CalibratedMeshPattern Cp(MeshPattern(P("21"), band1), {{2, 3}}, {{2, 4}}, "C'");
    CHECK(occurrences(w, Cp).empty());
    CHECK_FALSE(first_occurrence(w, Cp).has_value());
}

TEST_CASE("degenerate queries")
{
    CHECK(occurrences(P("21"), classical(P("321"))).empty());
    const CalibratedMeshPattern off(MeshPattern(P("21")), {{1, 9}});
    CHECK(occurrences(P("4321"), off).empty());
    CHECK(occurrences(P("1"), classical(P("1"))).size() == 1);
}

TEST_CASE("classical matching agrees with subset enumeration, n <= 8")
{
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 400; ++rep) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const Permutation w = random_perm(n, rng);
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);
        const auto pattern = classical(random_perm(k, rng));
        REQUIRE(occurrences(w, pattern) == oracle::occurrences(w, pattern));
    }
}

TEST_CASE("calibrated mesh matching agrees with subset enumeration")
{
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 2000; ++rep) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const Permutation w = random_perm(n, rng);
        const auto c = random_pattern(n, rng);
        const auto got = occurrences(w, c);
        REQUIRE(got == oracle::occurrences(w, c));
        REQUIRE(contains(w, c) == !got.empty());
        if (!got.empty())
            REQUIRE(*first_occurrence(w, c) == got.front());
    }
}

TEST_CASE("shading or pinning more never adds occurrences")
{
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 500; ++rep) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const Permutation w = random_perm(n, rng);
        const auto c = random_pattern(n, rng);
        const auto base = occurrences(w, c);
        const int k = c.size();

        std::set<Cell> more = c.base().mesh();
        more.insert({std::uniform_int_distribution<int>(0, k)(rng), std::uniform_int_distribution<int>(0, k)(rng)});
        const auto shaded = occurrences(w, CalibratedMeshPattern(MeshPattern(c.base().pattern(), more), c.pos_cal(),
                                                                 c.val_cal()));
        REQUIRE(std::includes(base.begin(), base.end(), shaded.begin(), shaded.end()));

        if (!base.empty() && c.pos_cal().empty()) {
            // Pin column 1 to where the first occurrence put it.
            const CalibratedMeshPattern pinned(c.base(), {{1, base.front().positions[0]}}, c.val_cal());
            const auto narrowed = occurrences(w, pinned);
            REQUIRE(std::includes(base.begin(), base.end(), narrowed.begin(), narrowed.end()));
            REQUIRE(!narrowed.empty());
        }
    }
}

TEST_CASE("catalogs")
{
    const auto cat = prism_catalog(2);
    REQUIRE(cat.size() == 8);
    for (int k = 0; k < 8; ++k)
        CHECK(cat[static_cast<std::size_t>(k)].name() == "P" + std::to_string(k + 1));
    CHECK(proposition_catalog(2).size() == 4);
    CHECK(catalog_pattern("P5", 2).base().pattern() == P("4123"));
    CHECK(catalog_pattern("A1", 1).name() == "A1");
    CHECK_THROWS_AS(catalog_pattern("P9", 1), invalid_input);
    CHECK_THROWS_AS(catalog_pattern("Q1", 1), invalid_input);
}

TEST_CASE("catalog witnesses")
{
    const auto p3 = occurrences(P("2431"), catalog_pattern("P3", 1));
    REQUIRE_FALSE(p3.empty());
    CHECK(p3.front() == Occurrence{{1, 4}, {2, 1}});
    const auto p1 = occurrences(P("4213"), catalog_pattern("P1", 3));
    REQUIRE_FALSE(p1.empty());
    CHECK(p1.front() == Occurrence{{1, 4}, {4, 3}});
    const auto p5 = occurrences(P("41235"), catalog_pattern("P5", 2));
    CHECK(std::find(p5.begin(), p5.end(), Occurrence{{1, 2, 3, 4}, {4, 1, 2, 3}}) != p5.end());
}

TEST_CASE("catalog letters are exactly the unconfined letters, n <= 7")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : oracle::all_permutations(n)) {
            IndexSet hit;
            for (int i = 1; i < n; ++i) {
                const auto cat = prism_catalog(i);
                if (std::any_of(cat.begin(), cat.end(), [&](const auto& c) { return contains(w, c); }))
                    hit.push_back(i);
            }
            REQUIRE(hit == unconfined_letters(w));
        }
}

TEST_CASE("incomplete-support letters show a catalog 21 with a full band")
{
    // When at most one neighbour of i is in the support, an A pattern at i is present.
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : oracle::all_permutations(n)) {
            const IndexSet s = support(w);
            auto in = [&](int j) { return std::binary_search(s.begin(), s.end(), j); };
            for (int i : unconfined_letters(w)) {
                if (in(i - 1) && in(i + 1))
                    continue;
                const auto cat = proposition_catalog(i);
                REQUIRE(std::any_of(cat.begin(), cat.end(), [&](const auto& c) { return contains(w, c); }));
            }
        }
}

TEST_CASE("boolean by pattern avoidance")
{
    CHECK(is_boolean_by_pattern(P("2143")));
    CHECK_FALSE(is_boolean_by_pattern(P("3412")));
    CHECK_FALSE(is_boolean_by_pattern(P("4321")));
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : oracle::all_permutations(n))
            REQUIRE(is_boolean_by_pattern(w) == oracle::avoids_321_3412(w));
}

TEST_CASE("pattern JSON")
{
    const nlohmann::json j = nlohmann::json::parse(R"({"pattern":"21","mesh":[[0,1],[1,1],[2,1]],"val_cal":{"2":4}})");
    const auto c = pattern_from_json(j);
    CHECK(c.val_cal() == std::map<int, int>{{2, 4}});
    CHECK(occurrences(P("24153"), c).size() == 1);
    const nlohmann::json back = c;
    CHECK(pattern_from_json(back).base().mesh() == c.base().mesh());
    CHECK_THROWS_AS(pattern_from_json(nlohmann::json::parse(R"({"mesh":[]})")), invalid_input);
    CHECK_THROWS_AS(pattern_from_json(nlohmann::json::parse(R"({"pattern":"21","mesh":[[0]]})")), invalid_input);
    CHECK_THROWS_AS(pattern_from_json(nlohmann::json::parse(R"({"pattern":"21","pos_cal":{"x":1}})")),
                    invalid_input);
}
