#include "cli.hpp"

#include "prism/bruhat.hpp"
#include "prism/classify.hpp"
#include "prism/emit.hpp"
#include "prism/enumerate.hpp"
#include "prism/errors.hpp"
#include "prism/json_io.hpp"
#include "prism/oeis.hpp"
#include "prism/pattern.hpp"
#include "prism/word.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>

namespace prism::cli {

using json = nlohmann::json;

namespace {

CalibratedMeshPattern load_pattern(const std::string& source, std::optional<int> i)
{
    const bool catalog = source.size() == 2 && (source[0] == 'P' || source[0] == 'A') && source[1] >= '1' && source[1] <= '8';
    if (catalog) {
        if (!i)
            throw invalid_input("catalog pattern " + source + " needs --i");
        return catalog_pattern(source, *i);
    }
    std::ifstream in(source);
    if (!in)
        throw invalid_input("cannot open pattern file '" + source + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw invalid_input("pattern file '" + source + "' is not valid JSON");
    return pattern_from_json(j);
}

json decompose(const Permutation& w)
{
    const BooleanDegree degree = boolean_degree(w);
    json letters = json::array();
    for (int i : unconfined_letters(w)) {
        const PrismWord canonical = canonical_prism_word(w, i);
        if (!verify_prism_iso(w, i))
            throw verification_failure("decompose: B(" + to_string(w) + ") does not split along letter " +
                                       std::to_string(i));
        letters.push_back({{"i", i},
                           {"v", to_string(delete_letter_perm(w, i))},
                           {"word", to_string(canonical.word)},
                           {"form", std::string(1, form_tag(canonical.form))},
                           {"iso_verified", true}});
    }
    return json{{"perm", to_string(w)},
                {"d", degree.d},
                {"core", to_string(degree.core)},
                {"unconfined", unconfined_letters(w)},
                {"letters", letters}};
}

std::string ideal_summary(const BruhatIdeal& b)
{
    std::vector<int> rank_sizes(static_cast<std::size_t>(b.poset.height()) + 1, 0);
    for (int e = 0; e < b.poset.size(); ++e)
        ++rank_sizes[static_cast<std::size_t>(b.poset.rank(e))];
    std::string out = "top " + to_string(b.top) + "\nsize " + std::to_string(b.poset.size()) + "\ncovers " +
                      std::to_string(b.poset.cover_count()) + "\nranks";
    for (int s : rank_sizes)
        out += " " + std::to_string(s);
    out += "\n";
    for (int r = 0; r <= b.poset.height(); ++r) {
        out += std::to_string(r) + ":";
        for (int e = 0; e < b.poset.size(); ++e)
            if (b.poset.rank(e) == r)
                out += " " + b.poset.label(e);
        out += "\n";
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"prism: reduced words, Bruhat ideals and calibrated mesh patterns for prism permutations"};
    app.require_subcommand(1);

    std::string perm_text;
    std::string methods_text = "rw,pattern,poset";
    auto* classify_cmd = app.add_subcommand("classify", "Classify a permutation with every requested method");
    classify_cmd->add_option("perm", perm_text, "Permutation, e.g. 2431 or 2,4,3,1")->required();
    classify_cmd->add_option("--methods", methods_text, "Comma list of rw, pattern, poset");

    bool all_words = false;
    std::size_t max_words = default_reduced_word_cap;
    auto* rwords_cmd = app.add_subcommand("rwords", "Print a reduced word, or all of them");
    rwords_cmd->add_option("perm", perm_text)->required();
    rwords_cmd->add_flag("--all", all_words, "Print every reduced word");
    rwords_cmd->add_option("--max", max_words, "Refuse when there are more reduced words than this");

    bool as_dot = false, as_json = false;
    int ideal_cap = default_ideal_cap;
    auto* ideal_cmd = app.add_subcommand("ideal", "Principal order ideal in Bruhat order");
    ideal_cmd->add_option("perm", perm_text)->required();
    auto* dot_flag = ideal_cmd->add_flag("--dot", as_dot, "Graphviz Hasse diagram");
    ideal_cmd->add_flag("--json", as_json, "Elements and covers as JSON")->excludes(dot_flag);
    ideal_cmd->add_option("--cap", ideal_cap, "Maximum ideal size");

    std::string pattern_source;
    std::optional<int> catalog_i;
    auto* match_cmd = app.add_subcommand("match", "List occurrences of a (calibrated) mesh pattern");
    match_cmd->add_option("perm", perm_text)->required();
    match_cmd->add_option("--pattern", pattern_source, "JSON pattern file, P1..P8 or A1..A4")->required();
    match_cmd->add_option("--i", catalog_i, "Letter parameter for catalog patterns");

    auto* decompose_cmd = app.add_subcommand("decompose", "Boolean degree, core and per-letter splittings");
    decompose_cmd->add_option("perm", perm_text)->required();

    int n = 0;
    std::string method_text = "rw";
    bool csv = false;
    unsigned threads = 0;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Count boolean / prism classes over S_n");
    enumerate_cmd->add_option("--n", n, "Size")->required();
    enumerate_cmd->add_option("--method", method_text, "rw, pattern or poset");
    enumerate_cmd->add_flag("--csv", csv, "n,boolean,prism,prism_not_boolean,neither");
    enumerate_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

    int max_n = 0;
    auto* fib_cmd = app.add_subcommand("fib-check", "Boolean counts against the odd-indexed Fibonacci numbers");
    fib_cmd->add_option("--max", max_n, "Largest n")->required();
    fib_cmd->add_option("--threads", threads);

    std::vector<long long> terms;
    bool offline = false;
    std::string cache_dir = default_oeis_cache_dir().string();
    std::string endpoint = default_oeis_endpoint;
    auto* oeis_cmd = app.add_subcommand("oeis", "Look a sequence up in the OEIS (cached)");
    oeis_cmd->add_option("--terms", terms, "Sequence terms, e.g. 1,2,5,13,34")->required()->delimiter(',');
    oeis_cmd->add_flag("--offline", offline, "Answer from the cache only");
    oeis_cmd->add_option("--cache-dir", cache_dir, "Cache directory (default $PRISM_OEIS_CACHE)");
    oeis_cmd->add_option("--endpoint", endpoint, "OEIS base URL");

    std::string core_text;
    auto* over_cmd = app.add_subcommand("prisms-over", "List prisms in S_n whose core is the given permutation");
    over_cmd->add_option("core", core_text)->required();
    over_cmd->add_option("--n", n, "Size")->required();

    std::vector<std::string> argv_store{"prism"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*classify_cmd) {
            const auto record = classify(parse_permutation(perm_text), MethodSet::parse(methods_text));
            out << json(record).dump(2) << '\n';
        } else if (*rwords_cmd) {
            const Permutation w = parse_permutation(perm_text);
            if (all_words)
                for (const Word& s : all_reduced_words(w, max_words))
                    out << to_string(s) << '\n';
            else
                out << to_string(some_reduced_word(w)) << '\n';
        } else if (*ideal_cmd) {
            const BruhatIdeal b = bruhat_ideal(parse_permutation(perm_text), ideal_cap);
            if (as_dot)
                out << ideal_to_dot(b);
            else if (as_json)
                out << json(b.poset).dump(2) << '\n';
            else
                out << ideal_summary(b);
        } else if (*match_cmd) {
            const Permutation w = parse_permutation(perm_text);
            const CalibratedMeshPattern c = load_pattern(pattern_source, catalog_i);
            const auto found = occurrences(w, c);
            out << json{{"perm", to_string(w)}, {"pattern", c}, {"count", found.size()}, {"occurrences", found}}.dump(2)
                << '\n';
        } else if (*decompose_cmd) {
            out << decompose(parse_permutation(perm_text)).dump(2) << '\n';
        } else if (*enumerate_cmd) {
            const CountRow row = enumerate(n, parse_method(method_text), threads);
            if (csv)
                out << to_csv(row) << '\n';
            else
                out << json(row).dump() << '\n';
        } else if (*fib_cmd) {
            bool all_match = true;
            out << "n,boolean,expected,match\n";
            for (const auto& row : fibonacci_check(max_n, threads)) {
                out << row.n << ',' << row.boolean_count << ',' << row.expected << ','
                    << (row.matches() ? "yes" : "no") << '\n';
                all_match = all_match && row.matches();
            }
            if (!all_match)
                throw verification_failure("boolean counts differ from the odd-indexed Fibonacci numbers");
        } else if (*oeis_cmd) {
            OeisClient client({cache_dir, endpoint, offline});
            out << json(client.lookup(terms)).dump() << '\n';
        } else if (*over_cmd) {
            const Permutation core = parse_permutation(core_text);
            if (core.size() != n)
                throw invalid_input("prisms-over: core has size " + std::to_string(core.size()) + ", not " +
                                    std::to_string(n));
            if (n > enumeration_cap(Method::reduced_word))
                throw cap_exceeded("prisms-over: n is capped at " +
                                   std::to_string(enumeration_cap(Method::reduced_word)));
            std::vector<Permutation> found;
            std::mutex found_mutex;
            for_each_permutation(n, 1, [&](unsigned, const Permutation& w) {
                if (unconfined_letters(w).empty())
                    return;
                const BooleanDegree degree = boolean_degree(w);
                if (degree.core == core) {
                    std::lock_guard lock(found_mutex);
                    found.push_back(w);
                }
            });
            for (const auto& w : found)
                out << to_string(w) << '\n';
        }
    } catch (const verification_failure& e) {
        err << "verification failure: " << e.what() << '\n';
        return exit_verification;
    } catch (const oeis_error& e) {
        err << "oeis: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_ok;
}

} // namespace prism::cli
