#ifndef LIEFRAME_REPORT_HPP
#define LIEFRAME_REPORT_HPP

#include <optional>

#include "lieframe/geometry.hpp"
#include "lieframe/golden.hpp"

#include <nlohmann/json_fwd.hpp>

namespace lieframe {

inline constexpr const char* kToolVersion = "lieframe 1.0.0";

/// One algebra's full verification record: the pipeline identity battery,
/// the symbolic table suites, and the extra cross checks.
struct RunReport {
  std::string algebra;
  ParamMap params;
  int rep_dim = 0;
  std::string matrix_digest;
  IdentityReport identities;
  CatalogVerifyReport symbolic;
  double metric_residual = 0;
  double bch_deviation = -1;  // -1 when the entry is not nilpotent
  std::optional<A410Report> closed_form;
  bool pass = false;
  double seconds = 0;
  std::string version = kToolVersion;
  std::uint64_t seed = 0;
};

/// FNV-1a digest of the exact matrices, a stable fingerprint for reports.
std::string representation_digest(const Representation& rep);

/// Runs the full battery for one catalog descriptor.
RunReport run_verification(const AlgebraDescriptor& d, std::uint64_t seed);

nlohmann::json run_report_to_json(const RunReport& r);
nlohmann::json identity_report_to_json(const IdentityReport& r);
nlohmann::json catalog_verify_report_to_json(const CatalogVerifyReport& r);

}  // namespace lieframe

#endif
