#include "prism/errors.hpp"
#include "prism/json_io.hpp"
#include "prism/oeis.hpp"

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

using namespace prism;
namespace fs = std::filesystem;

namespace {

const fs::path fixture_dir = PRISM_FIXTURE_DIR "/oeis-cache";

// A throwaway OEIS look-alike on localhost.
struct FakeOeis {
    httplib::Server server;
    std::thread thread;
    std::atomic<int> hits = 0;
    std::string last_query;
    int port = 0;
    std::string body = R"json({"results":[{"number":1519,"name":"a(n) = 3*a(n-1) - a(n-2)"},{"number":122367}]})json";
    int status = 200;

    FakeOeis()
    {
        server.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
            ++hits;
            last_query = req.get_param_value("q") + "|" + req.get_param_value("fmt");
            res.status = status;
            res.set_content(body, "application/json");
        });
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }
    ~FakeOeis()
    {
        server.stop();
        thread.join();
    }
    std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port); }
};

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("prism-oeis-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("committed fixture answers offline")
{
    OeisClient client({fixture_dir, "http://127.0.0.1:9", true});
    const auto r = client.lookup({1, 2, 5, 13, 34, 89});
    CHECK(r.cached);
    CHECK(std::find(r.ids.begin(), r.ids.end(), "A001519") != r.ids.end());
}

TEST_CASE("reply parsing")
{
    CHECK(parse_oeis_search(R"([{"number":1519}])") == std::vector<std::string>{"A001519"});
    CHECK(parse_oeis_search(R"({"results":[{"number":45}]})") == std::vector<std::string>{"A000045"});
    CHECK(parse_oeis_search("null").empty());
    CHECK(parse_oeis_search(R"({"results":null})").empty());
    CHECK_THROWS_AS(parse_oeis_search("<html>"), oeis_error);
    CHECK_THROWS_AS(parse_oeis_search(R"([{"name":"x"}])"), oeis_error);
}

TEST_CASE("network lookup fills the cache and the repeat is served from it")
{
    FakeOeis fake;
    const fs::path dir = scratch("fill");
    OeisClient client({dir, fake.endpoint(), false});
    const auto first = client.lookup({1, 2, 5, 13, 34, 89});
    CHECK_FALSE(first.cached);
    CHECK(first.ids == std::vector<std::string>{"A001519", "A122367"});
    CHECK(fake.hits == 1);
    CHECK(fake.last_query == "1,2,5,13,34,89|json");
    CHECK(fs::exists(client.cache_path({1, 2, 5, 13, 34, 89})));

    const auto second = client.lookup({1, 2, 5, 13, 34, 89});
    CHECK(second.cached);
    CHECK(second.ids == first.ids);
    CHECK(fake.hits == 1);

    OeisClient offline({dir, fake.endpoint(), true});
    CHECK(offline.lookup({1, 2, 5, 13, 34, 89}).cached);
    fs::remove_all(dir);
}

TEST_CASE("concurrent identical lookups send one request")
{
    FakeOeis fake;
    const fs::path dir = scratch("flight");
    OeisClient client({dir, fake.endpoint(), false});
    std::vector<std::thread> callers;
    std::atomic<int> done = 0;
    for (int t = 0; t < 6; ++t)
        callers.emplace_back([&] {
            client.lookup({1, 4, 16, 75, 412});
            ++done;
        });
    for (auto& t : callers)
        t.join();
    CHECK(done == 6);
    CHECK(fake.hits == 1);
    fs::remove_all(dir);
}

TEST_CASE("no-match replies are results, not errors")
{
    FakeOeis fake;
    fake.body = R"({"results":null})";
    const fs::path dir = scratch("nomatch");
    OeisClient client({dir, fake.endpoint(), false});
    const auto r = client.lookup({1, 4, 16, 75, 412});
    CHECK(r.ids.empty());
    CHECK_FALSE(r.cached);
    fs::remove_all(dir);
}

TEST_CASE("failures are typed")
{
    const fs::path dir = scratch("fail");
    SUBCASE("offline miss")
    {
        OeisClient client({dir, "http://127.0.0.1:9", true});
        try {
            client.lookup({1, 1, 2, 3, 5});
            FAIL("expected oeis_error");
        } catch (const oeis_error& e) {
            CHECK(e.kind() == oeis_error::Kind::offline_miss);
        }
    }
    SUBCASE("unreachable endpoint")
    {
        FakeOeis fake;
        const std::string endpoint = fake.endpoint();
        fake.server.stop();
        OeisClient client({dir, endpoint, false});
        try {
            client.lookup({1, 1, 2, 3, 5});
            FAIL("expected oeis_error");
        } catch (const oeis_error& e) {
            CHECK(e.kind() == oeis_error::Kind::network);
        }
    }
    SUBCASE("server error status")
    {
        FakeOeis fake;
        fake.status = 503;
        OeisClient client({dir, fake.endpoint(), false});
        try {
            client.lookup({1, 1, 2, 3, 5});
            FAIL("expected oeis_error");
        } catch (const oeis_error& e) {
            CHECK(e.kind() == oeis_error::Kind::network);
        }
        CHECK_FALSE(fs::exists(client.cache_path({1, 1, 2, 3, 5})));
    }
    SUBCASE("corrupt cache entry")
    {
        fs::create_directories(dir);
        OeisClient client({dir, "http://127.0.0.1:9", false});
        std::ofstream(client.cache_path({1, 1, 2, 3, 5})) << "{not json";
        try {
            client.lookup({1, 1, 2, 3, 5});
            FAIL("expected oeis_error");
        } catch (const oeis_error& e) {
            CHECK(e.kind() == oeis_error::Kind::cache_corrupt);
        }
    }
    SUBCASE("too few terms")
    {
        OeisClient client({dir, "http://127.0.0.1:9", true});
        CHECK_THROWS_AS(client.lookup({1, 2, 5}), invalid_input);
    }
    fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment")
{
    ::setenv(oeis_cache_env, "/tmp/prism-env-cache", 1);
    CHECK(default_oeis_cache_dir() == fs::path("/tmp/prism-env-cache"));
    ::unsetenv(oeis_cache_env);
    CHECK(default_oeis_cache_dir() == fs::path(".prism-oeis-cache"));
}
