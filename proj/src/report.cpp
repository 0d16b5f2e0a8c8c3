#include "lieframe/report.hpp"

#include <chrono>
#include <random>

#include "lieframe/ado.hpp"

#include <nlohmann/json.hpp>

namespace lieframe {

std::string representation_digest(const Representation& rep) {
  std::uint64_t hash = 1469598103934665603ull;
  auto feed = [&hash](const std::string& s) {
    for (unsigned char c : s) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  for (const auto& m : rep.matrices)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) feed(rational_str(m(i, j)));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

RunReport run_verification(const AlgebraDescriptor& d, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.algebra = d.name;
  report.params = d.params;
  report.seed = seed;

  const Representation rep = build_representation(d);
  report.rep_dim = rep.rep_dim;
  report.matrix_digest = representation_digest(rep);

  GeometryConfig cfg;
  cfg.seed = seed;
  GroupGeometry geo(rep, cfg);
  report.identities = geo.verify_identities();

  report.symbolic = verify_catalog_entry(d.name, d.params, 20, 1e-9, seed);

  // Invariant metric spot check with one seeded constant gamma.
  {
    const int n = d.constants.dim();
    std::mt19937_64 rng(seed + 7);
    std::uniform_int_distribution<int> num(-8, 8);
    Eigen::MatrixXd gamma(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        gamma(i, j) = gamma(j, i) = num(rng) / 8.0 + (i == j ? 2.0 : 0.0);
    report.metric_residual = geo.invariant_metric_residual(gamma);
  }

  // BCH cross check on the nilpotent entries.
  if (catalog_entry(d.name).nilpotent) {
    std::mt19937_64 rng(seed + 11);
    std::uniform_real_distribution<double> dist(-0.3, 0.3);
    double dev = 0;
    const int n = d.constants.dim();
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::VectorXd a(n), b(n);
      for (int i = 0; i < n; ++i) {
        a(i) = dist(rng);
        b(i) = dist(rng);
      }
      dev = std::max(dev, (geo.compose(a, b).phi -
                           bch_compose(d.constants, a, b))
                              .norm());
    }
    report.bch_deviation = dev;
  }

  if (d.name == "A4,10")
    report.closed_form = verify_a410_closed_form(rep, 10, seed);

  const GeometryConfig& c = geo.config();
  bool pass = report.identities.all_pass() && report.symbolic.all_pass();
  pass = pass && report.metric_residual < c.tol_metric;
  if (report.bch_deviation >= 0) pass = pass && report.bch_deviation < c.tol_bch;
  if (report.closed_form) pass = pass && report.closed_form->pass(1e-9);
  report.pass = pass;

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

nlohmann::json identity_report_to_json(const IdentityReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"threshold", c.threshold},
                      {"pass", c.pass}});
  return {{"checks", checks},
          {"maurer_cartan_ratio", r.maurer_cartan_ratio},
          {"maurer_cartan_second_order", r.maurer_cartan_second_order},
          {"sample_count", r.sample_count},
          {"fd_step", r.fd_step}};
}

nlohmann::json catalog_verify_report_to_json(const CatalogVerifyReport& r) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : r.suites)
    suites.push_back({{"name", s.name},
                      {"pass", s.pass},
                      {"max_deviation", s.max_deviation},
                      {"witness", s.witness}});
  return {{"key", r.key}, {"suites", suites}};
}

nlohmann::json run_report_to_json(const RunReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = rational_str(v);
  nlohmann::json j{{"algebra", r.algebra},
                   {"params", params},
                   {"rep_dim", r.rep_dim},
                   {"matrix_digest", r.matrix_digest},
                   {"identities", identity_report_to_json(r.identities)},
                   {"symbolic", catalog_verify_report_to_json(r.symbolic)},
                   {"metric_residual", r.metric_residual},
                   {"pass", r.pass},
                   {"seconds", r.seconds},
                   {"version", r.version},
                   {"seed", r.seed}};
  if (r.bch_deviation >= 0) j["bch_deviation"] = r.bch_deviation;
  if (r.closed_form) {
    j["closed_form"] = {
        {"max_exp_deviation", r.closed_form->max_exp_deviation},
        {"max_product_deviation", r.closed_form->max_product_deviation},
        {"samples", r.closed_form->samples},
        {"basis_map_applied", r.closed_form->basis_map_applied},
        {"convention_note", r.closed_form->convention_note}};
  }
  return j;
}

}  // namespace lieframe
