#include "prism/json_io.hpp"

#include "prism/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prism {

using json = nlohmann::json;

void to_json(json& j, const Occurrence& occ)
{
    j = json{{"positions", occ.positions}, {"values", occ.values}};
}

void to_json(json& j, const CalibratedMeshPattern& c)
{
    json mesh = json::array();
    for (const Cell& cell : c.base().mesh())
        mesh.push_back({cell.a, cell.b});
    json pos = json::object(), val = json::object();
    for (const auto& [k, v] : c.pos_cal())
        pos[std::to_string(k)] = v;
    for (const auto& [k, v] : c.val_cal())
        val[std::to_string(k)] = v;
    j = json{{"pattern", c.base().pattern().one_line()}, {"mesh", mesh}, {"pos_cal", pos}, {"val_cal", val}};
    if (!c.name().empty())
        j["name"] = c.name();
}

void to_json(json& j, const Poset& poset)
{
    json elements = json::array();
    for (int e = 0; e < poset.size(); ++e)
        elements.push_back({{"label", poset.label(e)}, {"rank", poset.rank(e)}});
    json covers = json::array();
    for (const auto& [lo, hi] : poset.covers())
        covers.push_back({lo, hi});
    j = json{{"elements", elements}, {"covers", covers}};
}

void to_json(json& j, const CountRow& row)
{
    j = json{{"n", row.n},
             {"boolean", row.boolean_count},
             {"prism", row.prism_count},
             {"prism_not_boolean", row.prism_not_boolean_count},
             {"neither", row.neither_count}};
}

void to_json(json& j, const OeisQueryResult& result)
{
    j = json{{"terms", result.terms}, {"ids", result.ids}, {"cached", result.cached}};
}

void to_json(json& j, const ClassificationRecord& record)
{
    json methods = json::array();
    if (record.methods.reduced_word)
        methods.push_back("rw");
    if (record.methods.pattern)
        methods.push_back("pattern");
    if (record.methods.poset)
        methods.push_back("poset");

    json witnesses = json::object();
    if (record.by_reduced_word)
        witnesses["rw"] = {{"word", to_string(record.by_reduced_word->word)},
                           {"unconfined", record.by_reduced_word->unconfined}};
    if (record.by_pattern) {
        json list = json::array();
        for (const auto& w : record.by_pattern->witnesses)
            list.push_back({{"i", w.letter},
                            {"pattern", w.pattern_id},
                            {"positions", w.occurrence.positions},
                            {"values", w.occurrence.values}});
        witnesses["pattern"] = list;
    }
    if (record.by_poset) {
        if (record.by_poset->witness)
            witnesses["poset"] = {{"i", record.by_poset->witness->letter},
                                  {"v", to_string(record.by_poset->witness->v)}};
        else
            witnesses["poset"] = nullptr;
    }

    j = json{{"perm", to_string(record.perm)},
             {"is_boolean", record.is_boolean},
             {"is_prism", record.is_prism},
             {"unconfined", record.unconfined},
             {"degree_d", record.degree_d},
             {"core", to_string(record.core)},
             {"methods", methods},
             {"witnesses", witnesses}};
}

namespace {

std::map<int, int> pins_from_json(const json& j, const char* field)
{
    std::map<int, int> out;
    if (!j.contains(field))
        return out;
    const json& pins = j[field];
    if (!pins.is_object())
        throw invalid_input(std::string("pattern file: '") + field + "' must be an object");
    for (const auto& [key, value] : pins.items()) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw invalid_input(std::string("pattern file: bad key '") + key + "' in '" + field + "'");
        }
        if (!value.is_number_integer())
            throw invalid_input(std::string("pattern file: '") + field + "' values must be integers");
        out[k] = value.get<int>();
    }
    return out;
}

} // namespace

CalibratedMeshPattern pattern_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("pattern"))
        throw invalid_input("pattern file: expected an object with a 'pattern' field");
    const json& p = j["pattern"];
    Permutation pattern = [&] {
        if (p.is_string())
            return parse_permutation(p.get<std::string>());
        if (p.is_array() && std::all_of(p.begin(), p.end(), [](const json& x) { return x.is_number_integer(); }))
            return Permutation(p.get<std::vector<int>>());
        throw invalid_input("pattern file: 'pattern' must be a string or an integer array");
    }();
    std::set<Cell> mesh;
    if (j.contains("mesh")) {
        if (!j["mesh"].is_array())
            throw invalid_input("pattern file: 'mesh' must be an array of [a,b] pairs");
        for (const auto& cell : j["mesh"]) {
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() || !cell[1].is_number_integer())
                throw invalid_input("pattern file: mesh cells must be [a,b] integer pairs");
            mesh.insert({cell[0].get<int>(), cell[1].get<int>()});
        }
    }
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string{};
    return CalibratedMeshPattern(MeshPattern(std::move(pattern), std::move(mesh)), pins_from_json(j, "pos_cal"),
                                 pins_from_json(j, "val_cal"), std::move(name));
}

} // namespace prism
