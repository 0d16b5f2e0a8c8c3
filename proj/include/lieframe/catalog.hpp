#ifndef LIEFRAME_CATALOG_HPP
#define LIEFRAME_CATALOG_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lieframe/structure_constants.hpp"

#include <nlohmann/json_fwd.hpp>

namespace lieframe {

using ParamMap = std::map<std::string, Rat>;

/// A named algebra with its parameter values substituted.
struct AlgebraDescriptor {
  std::string name;  // canonical catalog key
  ParamMap params;
  StructureConstants constants;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One named family of the catalog: constants builder, parameter contract,
/// and the canonical sample values used by the verification sweeps.
struct CatalogEntry {
  std::string key;       // canonical name, e.g. "Bianchi_VI_h", "A4,10"
  std::string family;    // display label, e.g. "Bianchi type VI(h)"
  int dim = 0;
  std::vector<std::string> param_names;
  /// Returns an error message for out-of-range parameters, empty if valid.
  std::function<std::string(const ParamMap&)> validate;
  std::function<StructureConstants(const ParamMap&)> build;
  std::vector<ParamMap> sample_params;  // one empty map if parameter-free
  bool nilpotent = false;               // group composition closes under BCH
};

/// Alias key with optional forced parameter values (e.g. "A3,4" is
/// "Bianchi_VI_h" at h = -1).
struct CatalogAlias {
  std::string alias;
  std::string target;
  ParamMap forced_params;
};

const std::vector<CatalogEntry>& catalog_entries();
const std::vector<CatalogAlias>& catalog_aliases();
const CatalogEntry& catalog_entry(const std::string& name);

/// Resolves aliases, validates parameters and substitutes them.
AlgebraDescriptor catalog_lookup(const std::string& name,
                                 const ParamMap& params = {});

/// Every descriptor the verification sweeps run over: parameter-free entries
/// once, parameterized families at each of their sample points.
std::vector<AlgebraDescriptor> catalog_sample_descriptors();

std::vector<std::string> catalog_keys();

nlohmann::json descriptor_to_json(const AlgebraDescriptor& d);
AlgebraDescriptor descriptor_from_json(const nlohmann::json& j);

/// Raw constants from the JSON schema, without antisymmetric completion
/// checks beyond the schema itself (kappa < lambda rows).
StructureConstants constants_from_json(const nlohmann::json& j);

}  // namespace lieframe

#endif
