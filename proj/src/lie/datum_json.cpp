#include "verlinde/lie/root_datum.hpp"

#include <json.hpp>

namespace verlinde::lie {

using nlohmann::json;

namespace {

std::vector<IntVector> int_rows(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_array()) throw RootDatumError(std::string("missing array '") + key + "'");
    std::vector<IntVector> out;
    for (const auto& row : j.at(key)) out.push_back(row.get<IntVector>());
    return out;
}

} // namespace

ExplicitRootData parse_explicit_root_data(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw RootDatumError(std::string("root datum JSON: ") + e.what());
    }
    try {
        ExplicitRootData data;
        data.rank = j.at("rank").get<int>();
        data.roots = int_rows(j, "roots");
        data.coroots = int_rows(j, "coroots");
        if (j.contains("reflections")) {
            std::vector<ReflectionMatrix> refl;
            for (const auto& m : j.at("reflections")) {
                auto rows = m.get<std::vector<IntVector>>();
                ReflectionMatrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (rows[i].size() != out.cols()) throw RootDatumError("ragged reflection matrix");
                    for (std::size_t k = 0; k < rows[i].size(); ++k) out(i, k) = rows[i][k];
                }
                refl.push_back(std::move(out));
            }
            data.reflections = std::move(refl);
        }
        if (j.contains("center_dim")) data.center_dim = j.at("center_dim").get<int>();
        if (j.contains("name")) data.name = j.at("name").get<std::string>();
        return data;
    } catch (const json::exception& e) {
        throw RootDatumError(std::string("root datum JSON: ") + e.what());
    }
}

std::string explicit_root_data_to_json(const ExplicitRootData& data)
{
    json j;
    j["name"] = data.name;
    j["rank"] = data.rank;
    j["roots"] = data.roots;
    j["coroots"] = data.coroots;
    if (data.center_dim) j["center_dim"] = *data.center_dim;
    if (data.reflections) {
        json refl = json::array();
        for (const auto& m : *data.reflections) {
            json rows = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                IntVector row;
                for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
                rows.push_back(row);
            }
            refl.push_back(rows);
        }
        j["reflections"] = refl;
    }
    return j.dump(2);
}

} // namespace verlinde::lie
