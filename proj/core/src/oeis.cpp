#include "prism/oeis.hpp"

#include "prism/errors.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace prism {

using json = nlohmann::json;

std::filesystem::path default_oeis_cache_dir()
{
    if (const char* env = std::getenv(oeis_cache_env); env && *env)
        return env;
    return ".prism-oeis-cache";
}

namespace {

std::string join_terms(const std::vector<long long>& terms, char sep)
{
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k)
            out.push_back(sep);
        out += std::to_string(terms[k]);
    }
    return out;
}

std::string format_id(long long number)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "A%06lld", number);
    return buf;
}

std::vector<std::string> ids_from_results(const json& results)
{
    std::vector<std::string> out;
    if (results.is_null())
        return out;
    if (!results.is_array())
        throw oeis_error(oeis_error::Kind::network, "OEIS reply: 'results' is not an array");
    for (const auto& entry : results) {
        if (!entry.is_object() || !entry.contains("number") || !entry["number"].is_number_integer())
            throw oeis_error(oeis_error::Kind::network, "OEIS reply: result without an integer 'number'");
        out.push_back(format_id(entry["number"].get<long long>()));
    }
    return out;
}

} // namespace

std::vector<std::string> parse_oeis_search(std::string_view body)
{
    json reply = json::parse(body.begin(), body.end(), nullptr, false);
    if (reply.is_discarded())
        throw oeis_error(oeis_error::Kind::network, "OEIS reply is not JSON");
    if (reply.is_object()) {
        if (!reply.contains("results"))
            throw oeis_error(oeis_error::Kind::network, "OEIS reply object has no 'results'");
        return ids_from_results(reply["results"]);
    }
    return ids_from_results(reply);
}

OeisClient::OeisClient(OeisOptions options)
    : options_(std::move(options))
{
}

std::filesystem::path OeisClient::cache_path(const std::vector<long long>& terms) const
{
    return options_.cache_dir / (join_terms(terms, '_') + ".json");
}

OeisQueryResult OeisClient::lookup(const std::vector<long long>& terms)
{
    if (terms.size() < 4)
        throw invalid_input("oeis: at least 4 terms are required");
    std::lock_guard lock(mutex_);

    const auto path = cache_path(terms);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        json entry = json::parse(in, nullptr, false);
        const bool ok = !entry.is_discarded() && entry.is_object() && entry.contains("terms") &&
                        entry.contains("ids") && entry["ids"].is_array() && entry["terms"].is_array();
        if (!ok)
            throw oeis_error(oeis_error::Kind::cache_corrupt, "corrupt OEIS cache entry " + path.string());
        OeisQueryResult out;
        try {
            out.terms = entry["terms"].get<std::vector<long long>>();
            out.ids = entry["ids"].get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            throw oeis_error(oeis_error::Kind::cache_corrupt, "corrupt OEIS cache entry " + path.string());
        }
        if (out.terms != terms)
            throw oeis_error(oeis_error::Kind::cache_corrupt, "OEIS cache entry " + path.string() +
                                                                  " holds a different query");
        out.cached = true;
        return out;
    }
    if (options_.offline)
        throw oeis_error(oeis_error::Kind::offline_miss, "offline and no cache entry for " + join_terms(terms, ','));

    httplib::Client client(options_.endpoint);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    const std::string target = "/search?q=" + join_terms(terms, ',') + "&fmt=json";
    auto response = client.Get(target);
    if (!response)
        throw oeis_error(oeis_error::Kind::network,
                         "OEIS request to " + options_.endpoint + " failed: " + httplib::to_string(response.error()));
    if (response->status != 200)
        throw oeis_error(oeis_error::Kind::network, "OEIS request returned HTTP " + std::to_string(response->status));

    OeisQueryResult out{terms, parse_oeis_search(response->body), false};

    std::error_code ec;
    std::filesystem::create_directories(options_.cache_dir, ec);
    const auto staging = path.string() + ".tmp";
    {
        std::ofstream file(staging, std::ios::trunc);
        file << json{{"terms", out.terms}, {"ids", out.ids}}.dump(2) << '\n';
    }
    std::filesystem::rename(staging, path, ec);
    return out;
}

} // namespace prism
