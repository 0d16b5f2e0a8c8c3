#include "lieframe/catalog.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

namespace lieframe {

namespace {

std::string normalize_key(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      out.push_back(static_cast<char>(std::tolower(ch)));
  return out;
}

}  // namespace

const CatalogEntry& catalog_entry(const std::string& name) {
  const std::string norm = normalize_key(name);
  for (const auto& e : catalog_entries())
    if (normalize_key(e.key) == norm) return e;
  throw CatalogError("unknown catalog key: '" + name + "'");
}

AlgebraDescriptor catalog_lookup(const std::string& name,
                                 const ParamMap& params) {
  const std::string norm = normalize_key(name);
  ParamMap effective = params;
  std::string target = name;
  for (const auto& a : catalog_aliases())
    if (normalize_key(a.alias) == norm) {
      target = a.target;
      for (const auto& [k, v] : a.forced_params) effective[k] = v;
      break;
    }
  const CatalogEntry& entry = catalog_entry(target);
  for (const auto& [k, v] : effective) {
    if (std::find(entry.param_names.begin(), entry.param_names.end(), k) ==
        entry.param_names.end())
      throw CatalogError("algebra '" + entry.key + "' has no parameter '" + k +
                         "'");
  }
  for (const auto& p : entry.param_names)
    if (!effective.count(p))
      throw CatalogError("algebra '" + entry.key + "' needs parameter '" + p +
                         "'");
  if (entry.validate) {
    const std::string err = entry.validate(effective);
    if (!err.empty())
      throw CatalogError("parameter out of range for '" + entry.key +
                         "': " + err);
  }
  return AlgebraDescriptor{entry.key, effective, entry.build(effective)};
}

std::vector<AlgebraDescriptor> catalog_sample_descriptors() {
  std::vector<AlgebraDescriptor> out;
  for (const auto& e : catalog_entries())
    for (const auto& p : e.sample_params) out.push_back(catalog_lookup(e.key, p));
  return out;
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.push_back(e.key);
  return out;
}

nlohmann::json descriptor_to_json(const AlgebraDescriptor& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["dim"] = d.constants.dim();
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : d.params) params[k] = rational_str(v);
  j["params"] = params;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : d.constants.nonzero_entries()) {
    rows.push_back({{"mu", e.mu + 1},
                    {"kappa", e.kappa + 1},
                    {"lambda", e.lambda + 1},
                    {"value", rational_str(e.value)}});
  }
  j["constants"] = rows;
  return j;
}

StructureConstants constants_from_json(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<StructureConstants::Entry> entries;
  for (const auto& row : j.at("constants")) {
    entries.push_back({row.at("mu").get<int>() - 1,
                       row.at("kappa").get<int>() - 1,
                       row.at("lambda").get<int>() - 1,
                       parse_rational(row.at("value").get<std::string>())});
  }
  return StructureConstants::from_entries(dim, entries);
}

AlgebraDescriptor descriptor_from_json(const nlohmann::json& j) {
  AlgebraDescriptor d{j.value("name", std::string{}), {},
                      constants_from_json(j)};
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items())
      d.params[k] = parse_rational(v.get<std::string>());
  return d;
}

}  // namespace lieframe
