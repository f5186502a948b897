#ifndef PRISM_OEIS_HPP
#define PRISM_OEIS_HPP

#include <filesystem>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prism {

class oeis_error : public std::runtime_error {
public:
    enum class Kind {
        network,       // transport failure, non-200 status, or unreadable response
        cache_corrupt, // a cache entry exists but cannot be trusted
        offline_miss,  // offline mode and the query is not cached
    };

    oeis_error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct OeisQueryResult {
    std::vector<long long> terms;
    std::vector<std::string> ids; // "A001519", in response order
    bool cached = false;
};

inline constexpr const char* oeis_cache_env = "PRISM_OEIS_CACHE";
inline constexpr const char* default_oeis_endpoint = "https://oeis.org";

// $PRISM_OEIS_CACHE when set, otherwise ".prism-oeis-cache" in the working directory.
std::filesystem::path default_oeis_cache_dir();

// Sequence ids from an OEIS search reply with fmt=json. Accepts both the
// bare-array reply and the older {"results": [...]} object; null means no match.
std::vector<std::string> parse_oeis_search(std::string_view body);

struct OeisOptions {
    std::filesystem::path cache_dir = default_oeis_cache_dir();
    std::string endpoint = default_oeis_endpoint; // scheme://host[:port]
    bool offline = false;
};

// Looks up integer sequences via GET <endpoint>/search?q=<terms>&fmt=json.
// Results are cached per term list under cache_dir; a cache hit never touches
// the network. Lookups on one client are serialized, so concurrent callers
// asking the same question cause a single request.
class OeisClient {
public:
    explicit OeisClient(OeisOptions options = {});

    // Throws invalid_input for fewer than four terms, oeis_error otherwise.
    OeisQueryResult lookup(const std::vector<long long>& terms);

    std::filesystem::path cache_path(const std::vector<long long>& terms) const;
    const OeisOptions& options() const { return options_; }

private:
    OeisOptions options_;
    std::mutex mutex_;
};

} // namespace prism

#endif
