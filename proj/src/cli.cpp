#include "lieframe/cli.hpp"

#include <cstdlib>
#include <atomic>
#include <thread>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lieframe/ado.hpp"
#include "lieframe/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

namespace lieframe {

namespace {

// "p/q", "-3", "0.25" all become exact rationals.
Rat parse_coordinate(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const size_t frac_len = text.size() - dot - 1;
  Int den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rat(Int(digits)) / Rat(den);
}

std::vector<Rat> parse_coordinate_list(const std::string& text, int expected) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_coordinate(item));
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " coordinates, got " +
                                std::to_string(out.size()));
  return out;
}

ParamMap parse_params(const std::vector<std::string>& kvs) {
  ParamMap out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("parameter must be name=value: " + kv);
    out[kv.substr(0, eq)] = parse_coordinate(kv.substr(eq + 1));
  }
  return out;
}

Eigen::VectorXd to_numeric(const std::vector<Rat>& coords) {
  Eigen::VectorXd v(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) v(i) = to_double(coords[i]);
  return v;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* env = std::getenv("LIEFRAME_SEED"))
    return std::strtoull(env, nullptr, 10);
  return fallback;
}

void print_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  out << std::setprecision(12) << m << "\n";
}

void print_constants(std::ostream& out, const AlgebraDescriptor& d) {
  const auto entries = d.constants.nonzero_entries();
  if (entries.empty()) {
    out << "  (abelian: all structure constants vanish)\n";
    return;
  }
  for (const auto& e : entries)
    out << "  C^" << e.mu + 1 << "_{" << e.kappa + 1 << e.lambda + 1
        << "} = " << rational_str(e.value) << "\n";
}

void print_frame_rows(std::ostream& out, const char* label,
                      const std::vector<VectorField>& rows) {
  for (size_t i = 0; i < rows.size(); ++i) {
    out << "  " << label << "_" << i + 1 << ":";
    for (const auto& comp : rows[i]) out << " " << comp.prefix();
    out << "\n";
  }
}

void print_identity_report(std::ostream& out, const IdentityReport& r) {
  for (const auto& c : r.checks)
    out << "  " << (c.pass ? "pass" : "FAIL") << "  " << std::left
        << std::setw(26) << c.name << " residual " << std::scientific
        << std::setprecision(3) << c.residual << "  (threshold " << c.threshold
        << ")\n"
        << std::defaultfloat;
  out << "  " << (r.maurer_cartan_second_order ? "pass" : "FAIL")
      << "  maurer_cartan step-halving ratio "
      << std::setprecision(3) << r.maurer_cartan_ratio << "\n";
}

void print_symbolic_report(std::ostream& out, const CatalogVerifyReport& r) {
  for (const auto& s : r.suites) {
    out << "  " << (s.pass ? "pass" : "FAIL") << "  table:" << std::left
        << std::setw(20) << s.name << " max deviation " << std::scientific
        << std::setprecision(3) << s.max_deviation << std::defaultfloat;
    if (!s.pass && !s.witness.empty()) {
      out << "  witness (";
      for (size_t i = 0; i < s.witness.size(); ++i)
        out << s.witness[i] << (i + 1 < s.witness.size() ? ", " : ")");
    }
    out << "\n";
  }
}

int verify_one(const std::string& name, const ParamMap& params,
               std::uint64_t seed, std::ostream& out) {
  const auto d = catalog_lookup(name, params);
  const RunReport report = run_verification(d, seed);
  out << d.name;
  if (!d.params.empty()) {
    out << " [";
    bool first = true;
    for (const auto& [k, v] : d.params) {
      out << (first ? "" : ", ") << k << "=" << rational_str(v);
      first = false;
    }
    out << "]";
  }
  out << "  rep_dim=" << report.rep_dim << "  digest=" << report.matrix_digest
      << "\n";
  print_identity_report(out, report.identities);
  print_symbolic_report(out, report.symbolic);
  out << "  " << (report.metric_residual < 1e-4 ? "pass" : "FAIL")
      << "  invariant_metric residual " << std::scientific
      << std::setprecision(3) << report.metric_residual << std::defaultfloat
      << "\n";
  if (report.bch_deviation >= 0)
    out << "  " << (report.bch_deviation < 1e-10 ? "pass" : "FAIL")
        << "  bch_oracle deviation " << std::scientific
        << std::setprecision(3) << report.bch_deviation << std::defaultfloat
        << "\n";
  if (report.closed_form) {
    out << "  " << (report.closed_form->pass(1e-9) ? "pass" : "FAIL")
        << "  closed_form exp deviation " << std::scientific
        << std::setprecision(3) << report.closed_form->max_exp_deviation
        << ", product deviation "
        << report.closed_form->max_product_deviation << std::defaultfloat
        << "\n    note: " << report.closed_form->convention_note << "\n";
  }
  out << "  => " << (report.pass ? "PASS" : "FAIL") << " ("
      << std::setprecision(3) << report.seconds << " s)\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Faithful Lie-algebra representations, group composition "
               "functions and homogeneous-space frames for the catalog of "
               "low-dimensional real Lie algebras"};
  app.require_subcommand(1);

  std::string name, file, coords_a, coords_b, point, out_path;
  std::vector<std::string> param_kvs;
  bool as_json = false, all = false;
  std::uint64_t seed = seed_from_env(20240817);

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--param,-p", param_kvs,
                    "parameter assignment name=value (repeatable)");
  };

  auto* list = app.add_subcommand("list", "catalog keys and parameters");

  auto* show = app.add_subcommand("show", "structure constants and frame tables");
  show->add_option("name", name)->required();
  add_params(show);

  auto* check = app.add_subcommand("check", "Jacobi/antisymmetry validation");
  check->add_option("name", name);
  check->add_option("--file", file, "JSON algebra file instead of a catalog key");
  add_params(check);

  auto* represent = app.add_subcommand("represent", "build the faithful representation");
  represent->add_option("name", name)->required();
  represent->add_flag("--json", as_json);
  add_params(represent);

  auto* expc = app.add_subcommand("exp", "group element from coordinates");
  expc->add_option("name", name)->required();
  expc->add_option("--coords", coords_a)->required();
  add_params(expc);

  auto* compose = app.add_subcommand("compose", "composition function phi(a,b)");
  compose->add_option("name", name)->required();
  compose->add_option("--a", coords_a)->required();
  compose->add_option("--b", coords_b)->required();
  add_params(compose);

  auto* frames = app.add_subcommand("frames", "frames and coframe at a point");
  frames->add_option("name", name)->required();
  frames->add_option("--point", point)->required();
  add_params(frames);

  auto* verify = app.add_subcommand("verify", "full identity battery");
  verify->add_option("name", name);
  verify->add_flag("--all", all, "verify every catalog entry");
  verify->add_option("--seed", seed);
  add_params(verify);

  auto* reportc = app.add_subcommand("report", "machine-readable run reports");
  reportc->add_option("name", name);
  reportc->add_flag("--all", all);
  reportc->add_option("--out", out_path, "output JSON path (default stdout)");
  reportc->add_option("--seed", seed);
  add_params(reportc);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const ParamMap params = parse_params(param_kvs);

    if (list->parsed()) {
      for (const auto& e : catalog_entries()) {
        out << std::left << std::setw(14) << e.key << " dim " << e.dim << "  "
            << e.family;
        if (!e.param_names.empty()) {
          out << "  params:";
          for (const auto& p : e.param_names) out << " " << p;
          out << "  samples:";
          for (const auto& s : e.sample_params) {
            out << " (";
            bool first = true;
            for (const auto& [k, v] : s) {
              out << (first ? "" : ",") << k << "=" << rational_str(v);
              first = false;
            }
            out << ")";
          }
        }
        out << "\n";
      }
      out << "aliases:";
      for (const auto& a : catalog_aliases()) out << " " << a.alias;
      out << "\n";
      return 0;
    }

    if (show->parsed()) {
      const auto d = catalog_lookup(name, params);
      out << d.name << " (dim " << d.constants.dim() << ")\n";
      print_constants(out, d);
      const auto frame = golden_frame(name, params);
      out << "Killing fields (components per coordinate):\n";
      print_frame_rows(out, "xi", frame.xi);
      out << "invariant fields:\n";
      print_frame_rows(out, "eta", frame.eta);
      out << "coframe:\n";
      print_frame_rows(out, "sigma", frame.sigma);
      return 0;
    }

    if (check->parsed()) {
      StructureConstants constants;
      std::string label = name;
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        nlohmann::json j;
        in >> j;
        constants = constants_from_json(j);
        label = j.value("name", file);
      } else if (!name.empty()) {
        constants = catalog_lookup(name, params).constants;
      } else {
        throw std::invalid_argument("check needs a catalog key or --file");
      }
      const auto result = jacobi_check(constants);
      if (result.pass()) {
        out << label << ": antisymmetry and Jacobi hold exactly\n";
        return 0;
      }
      err << label << ": "
          << (result.antisymmetry_ok ? "Jacobi identity" : "antisymmetry")
          << " fails at (mu,kappa,lambda"
          << (result.antisymmetry_ok ? ",rho" : "") << ") = (";
      const auto& v = *result.violation;
      for (int i = 0; i < (result.antisymmetry_ok ? 4 : 3); ++i)
        err << v[i] << (i < (result.antisymmetry_ok ? 3 : 2) ? "," : ")");
      err << " with residual " << rational_str(result.residual) << "\n";
      return 1;
    }

    if (represent->parsed()) {
      const auto rep = build_representation(catalog_lookup(name, params));
      if (as_json) {
        out << representation_to_json(rep).dump(2) << "\n";
      } else {
        out << rep.algebra.name << ": faithful representation on dimension "
            << rep.rep_dim << "\n";
        if (!rep.basis_labels.empty()) {
          out << "functional basis:";
          for (const auto& l : rep.basis_labels) out << " " << l;
          out << "\n";
        }
        for (int k = 0; k < rep.dim(); ++k) {
          out << "Omega_" << k + 1 << " =\n";
          for (Eigen::Index i = 0; i < rep.matrices[k].rows(); ++i) {
            out << "  ";
            for (Eigen::Index j = 0; j < rep.matrices[k].cols(); ++j)
              out << std::setw(8) << rational_str(rep.matrices[k](i, j));
            out << "\n";
          }
        }
      }
      return 0;
    }

    // Direct element/composition commands accept a wide chart; the genuine
    // failure modes (log domain, projection residual) stay guarded.
    GeometryConfig wide_chart;
    wide_chart.neighborhood_radius = 25.0;

    if (expc->parsed()) {
      const auto rep = build_representation(catalog_lookup(name, params));
      const auto coords = parse_coordinate_list(coords_a, rep.dim());
      GroupGeometry geo(rep, wide_chart);
      const auto g = geo.element(to_numeric(coords));
      print_matrix(out, g.matrix);
      return 0;
    }

    if (compose->parsed()) {
      const auto rep = build_representation(catalog_lookup(name, params));
      GroupGeometry geo(rep, wide_chart);
      const auto a = parse_coordinate_list(coords_a, rep.dim());
      const auto b = parse_coordinate_list(coords_b, rep.dim());
      const auto result = geo.compose(to_numeric(a), to_numeric(b));
      out << "phi = " << std::setprecision(12) << result.phi.transpose()
          << "\nprojection residual = " << std::scientific
          << std::setprecision(3) << result.residual << "\n";
      return 0;
    }

    if (frames->parsed()) {
      const auto rep = build_representation(catalog_lookup(name, params));
      GroupGeometry geo(rep, wide_chart);
      const auto x = parse_coordinate_list(point, rep.dim());
      const auto sample = geo.frame_sample(to_numeric(x));
      out << "xi (columns are the Killing fields):\n";
      print_matrix(out, sample.xi);
      out << "eta (columns are the invariant fields):\n";
      print_matrix(out, sample.eta);
      out << "sigma (rows are the coframe forms):\n";
      print_matrix(out, sample.sigma);
      out << "c with eta = c.xi:\n";
      print_matrix(out, sample.cmat);
      return 0;
    }

    if (verify->parsed()) {
      int rc = 0;
      if (all) {
        for (const auto& d : catalog_sample_descriptors())
          rc |= verify_one(d.name, d.params, seed, out);
      } else {
        if (name.empty())
          throw std::invalid_argument("verify needs a catalog key or --all");
        rc = verify_one(name, params, seed, out);
      }
      if (rc != 0) err << "verification failed\n";
      return rc;
    }

    if (reportc->parsed()) {
      nlohmann::json reports = nlohmann::json::array();
      int rc = 0;
      if (all) {
        // Fan out per algebra over a bounded worker pool; everything
        // downstream is pure. Results are gathered and emitted in catalog
        // order.
        const auto descriptors = catalog_sample_descriptors();
        std::vector<RunReport> results(descriptors.size());
        const unsigned workers =
            std::max(1u, std::min({std::thread::hardware_concurrency(), 8u,
                                   static_cast<unsigned>(descriptors.size())}));
        std::atomic<size_t> next{0};
        auto drain = [&] {
          for (size_t i = next.fetch_add(1); i < descriptors.size();
               i = next.fetch_add(1))
            results[i] = run_verification(descriptors[i], seed);
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(drain);
        drain();
        for (auto& t : pool) t.join();
        for (const auto& r : results) {
          rc |= r.pass ? 0 : 1;
          reports.push_back(run_report_to_json(r));
        }
      } else {
        if (name.empty())
          throw std::invalid_argument("report needs a catalog key or --all");
        const auto r = run_verification(catalog_lookup(name, params), seed);
        rc |= r.pass ? 0 : 1;
        reports.push_back(run_report_to_json(r));
      }
      if (out_path.empty()) {
        out << reports.dump(2) << "\n";
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write " + out_path);
        f << reports.dump(2) << "\n";
        out << "wrote " << reports.size() << " report(s) to " << out_path
            << "\n";
      }
      if (rc != 0) err << "verification failed\n";
      return rc;
    }
  } catch (const CatalogError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace lieframe
