#include "verlinde/cli/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace verlinde::cli {

using nlohmann::json;

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v)
{
    j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get(const json& j, const char* key, T& out)
{
    if (j.contains(key)) out = j.at(key).get<T>();
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& out)
{
    if (!j.contains(key)) return;
    if (j.at(key).is_null()) out.reset();
    else out = j.at(key).get<T>();
}

} // namespace

json config_to_json(const RunConfig& c)
{
    json j;
    j["group"] = c.group;
    put_optional(j, "group_data", c.group_data);
    j["level"] = c.level;
    put_optional(j, "c_matrix", c.c_matrix);
    j["genus"] = c.genus;
    j["L"] = c.L;
    put_optional(j, "degL", c.degL);
    put_optional(j, "h1L", c.h1L);
    put_optional(j, "gamma", c.gamma);
    put_optional(j, "mu", c.mu);
    j["rep"] = c.rep;
    j["order"] = c.order;
    j["backend"] = c.backend;
    j["bits"] = c.bits;
    j["convention"] = c.convention;
    j["variant"] = c.variant;
    put_optional(j, "mu_B", c.mu_B);
    j["format"] = c.format;
    j["compare"] = c.compare;
    j["dump_solutions"] = c.dump_solutions;
    j["timing"] = c.timing;
    j["parallel"] = c.parallel;
    return j;
}

RunConfig config_from_json(const json& j)
{
    static const std::set<std::string> known = {"group", "group_data", "level", "c_matrix", "genus", "L", "degL", "h1L",
                                                 "gamma", "mu", "rep", "order", "backend", "bits", "convention", "variant",
                                                 "mu_B", "format", "compare", "dump_solutions", "timing", "parallel"};
    if (!j.is_object()) throw ConfigParseError("config must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw ConfigParseError("unknown config key '" + key + "'");
    RunConfig c;
    try {
        get(j, "group", c.group);
        get_optional(j, "group_data", c.group_data);
        get(j, "level", c.level);
        get_optional(j, "c_matrix", c.c_matrix);
        get(j, "genus", c.genus);
        get(j, "L", c.L);
        get_optional(j, "degL", c.degL);
        get_optional(j, "h1L", c.h1L);
        get_optional(j, "gamma", c.gamma);
        get_optional(j, "mu", c.mu);
        get(j, "rep", c.rep);
        get(j, "order", c.order);
        get(j, "backend", c.backend);
        get(j, "bits", c.bits);
        get(j, "convention", c.convention);
        get(j, "variant", c.variant);
        get_optional(j, "mu_B", c.mu_B);
        get(j, "format", c.format);
        get(j, "compare", c.compare);
        get(j, "dump_solutions", c.dump_solutions);
        get(j, "timing", c.timing);
        get(j, "parallel", c.parallel);
    } catch (const json::exception& e) {
        throw ConfigParseError(std::string("config field has the wrong type: ") + e.what());
    }
    return c;
}

RunConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigParseError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return config_from_json(json::parse(ss.str()));
    } catch (const json::parse_error& e) {
        throw ConfigParseError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace verlinde::cli
