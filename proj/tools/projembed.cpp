// Command-line front end: emit coefficient data, run the claim audit, report
// invariants for one level, and export image point clouds.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "projembed/audit.hpp"
#include "projembed/construct.hpp"
#include "projembed/errors.hpp"
#include "projembed/geometry.hpp"
#include "projembed/measure.hpp"
#include "projembed/sampling.hpp"
#include "projembed/serialize.hpp"

namespace {

using namespace projembed;
using nlohmann::json;

struct RunConfig {
  std::string command;
  int n = 1;
  int n_max = 4;
  std::string field = "real";
  int samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::string metric = "image";
  std::string format = "table";
  std::string out;
};

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) throw UsageError("cannot open output file '" + cfg.out + "'");
  os << text;
}

std::string short_double(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run_emit(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError("emit only supports --format json");
  json j = parse_field(cfg.field) == Field::real ? to_json(build_real(cfg.n)) : to_json(build_complex(cfg.n));
  write_output(cfg, j.dump(2) + "\n");
  return 0;
}

int run_verify(const RunConfig& cfg) {
  AuditConfig audit;
  if (cfg.n_max < 1 || cfg.n_max > 6) throw UsageError("--n-max must be in [1, 6]");
  const bool real = cfg.field == "real" || cfg.field == "both";
  const bool complex = cfg.field == "complex" || cfg.field == "both";
  if (!real && !complex) throw UsageError("--field must be real, complex or both");
  audit.n_max_real = real ? cfg.n_max : 0;
  audit.n_max_complex = complex ? std::min(cfg.n_max, 4) : 0;
  audit.seed = cfg.seed;
  audit.samples = cfg.samples;
  audit.tol = cfg.tol;

  const auto entries = run_claim_audit(audit);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << to_json(entries).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "claim_id,verdict,expected,expected_value,measured,abs_deviation,tolerance,convention,reference,paper_ref\n";
    for (const auto& e : entries) {
      os << e.claim_id << ',' << to_string(e.verdict) << ',' << csv_escape(e.expected) << ','
         << format_double(e.expected_value) << ',' << format_double(e.measured) << ','
         << format_double(e.abs_deviation) << ',' << format_double(e.tolerance) << ','
         << e.convention.value_or("") << ',' << (e.reference ? format_double(*e.reference) : "") << ','
         << csv_escape(e.paper_ref) << '\n';
    }
  } else if (cfg.format == "table") {
    os << format_audit_table(entries);
    int matched = 0, scale = 0, failed = 0;
    for (const auto& e : entries) {
      if (e.verdict == Verdict::match) ++matched;
      if (e.verdict == Verdict::scale_dependent) ++scale;
      if (e.verdict == Verdict::mismatch) ++failed;
    }
    os << "\n" << entries.size() << " claims: " << matched << " MATCH, " << scale << " SCALE_DEPENDENT, " << failed
       << " MISMATCH\n";
  } else {
    throw UsageError("unknown format '" + cfg.format + "'");
  }
  write_output(cfg, os.str());
  return has_hard_failure(entries) ? 1 : 0;
}

struct ReportRow {
  std::string quantity;
  double estimate = 0.0;
  std::optional<double> std_error;
  std::optional<double> paper_claim;
  std::string verdict = "-";
};

std::string judge(double value, double claim, double tol, bool scale_dependent) {
  if (std::abs(value - claim) <= tol) return to_string(Verdict::match);
  return to_string(scale_dependent ? Verdict::scale_dependent : Verdict::mismatch);
}

int run_report(const RunConfig& cfg) {
  const Field field = parse_field(cfg.field);
  const MetricConvention metric = parse_metric(cfg.metric);
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  const int n = cfg.n;
  const double r = domain_radius(n);
  const int dim = field == Field::real ? n + 1 : 2 * (n + 1);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
  x[0] = r;
  const auto f = frame(x, field, r);
  const GeometryReport geo =
      field == Field::real ? geometry_report(build_real(n), f) : geometry_report(build_complex(n), f);
  const auto inv = global_invariants(n, field, cfg.samples, cfg.seed, metric);
  const bool veronese = field == Field::real && n == 2;
  const double mc_tol = 1e-3;

  std::vector<ReportRow> rows;
  rows.push_back({"homothety_factor", geo.homothety_factor, std::nullopt, 1.0,
                  judge(geo.homothety_factor, 1.0, cfg.tol, true)});
  rows.push_back({"anisotropy", geo.anisotropy, std::nullopt, std::nullopt, "-"});
  rows.push_back({"alpha_norm_sq", geo.alpha_norm_sq, std::nullopt, std::nullopt, "-"});
  rows.push_back({"mean_curvature_norm", geo.mean_curvature_norm, std::nullopt, 0.0,
                  judge(geo.mean_curvature_norm, 0.0, 1e-6, false)});
  rows.push_back({"scalar_curvature_gauss", geo.scalar_curvature_gauss, std::nullopt, std::nullopt, "-"});
  rows.push_back({"effective_radius_sq", geo.effective_radius_sq, std::nullopt, std::nullopt, "-"});

  ReportRow s_row{"mean_scalar_curvature", inv.mean_scalar_curvature};
  ReportRow a_row{"mean_alpha_norm_sq", inv.mean_alpha_norm_sq};
  ReportRow pi_row{"pi_functional", inv.pi_functional.value, inv.pi_functional.std_error};
  if (veronese) {
    s_row.paper_claim = 4.0 / 3.0;
    s_row.verdict = judge(s_row.estimate, 4.0 / 3.0, cfg.tol, true);
    a_row.paper_claim = 2.0 / 3.0;
    a_row.verdict = judge(a_row.estimate, 2.0 / 3.0, cfg.tol, true);
    pi_row.paper_claim = 2.0 * std::numbers::pi;
    pi_row.verdict = judge(pi_row.estimate, 2.0 * std::numbers::pi, mc_tol * 2.0 * std::numbers::pi, true);
  }
  rows.push_back({"volume", inv.volume.value, inv.volume.std_error, std::nullopt, "-"});
  rows.push_back({"total_scalar", inv.total_scalar.value, inv.total_scalar.std_error, std::nullopt, "-"});
  rows.push_back(s_row);
  rows.push_back(a_row);
  rows.push_back(pi_row);
  if (inv.gauss_bonnet_ratio) {
    rows.push_back({"gauss_bonnet_ratio", inv.gauss_bonnet_ratio->value, inv.gauss_bonnet_ratio->std_error, 1.0,
                    judge(inv.gauss_bonnet_ratio->value, 1.0, mc_tol, false)});
  }
  if (inv.sigma_quotient) {
    const double sigma = 6.0 * std::pow(std::numbers::pi, 4.0 / 3.0);
    rows.push_back({"sigma_quotient", inv.sigma_quotient->value, inv.sigma_quotient->std_error, sigma,
                    judge(inv.sigma_quotient->value, sigma, 5e-3 * sigma, false)});
  }

  bool failed = false;
  for (const auto& row : rows) failed = failed || row.verdict == to_string(Verdict::mismatch);

  std::ostringstream os;
  if (cfg.format == "json") {
    json j{{"field", to_string(field)}, {"n", n}, {"metric", to_string(metric)}, {"samples", cfg.samples},
           {"seed", cfg.seed}, {"geometry", to_json(geo)}};
    j["rows"] = json::array();
    for (const auto& row : rows) {
      j["rows"].push_back({{"quantity", row.quantity},
                           {"estimate", row.estimate},
                           {"std_error", row.std_error ? json(*row.std_error) : json(nullptr)},
                           {"paper_claim", row.paper_claim ? json(*row.paper_claim) : json(nullptr)},
                           {"verdict", row.verdict}});
    }
    os << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "quantity,estimate,std_error,paper_claim,verdict\n";
    for (const auto& row : rows) {
      os << row.quantity << ',' << format_double(row.estimate) << ','
         << (row.std_error ? format_double(*row.std_error) : "") << ','
         << (row.paper_claim ? format_double(*row.paper_claim) : "") << ',' << row.verdict << '\n';
    }
  } else if (cfg.format == "table") {
    os << to_string(field) << " n=" << n << "  metric=" << to_string(metric) << "  samples=" << cfg.samples
       << "  seed=" << cfg.seed << "\n\n";
    os << std::left << std::setw(26) << "quantity" << std::setw(22) << "estimate" << std::setw(14) << "std_error"
       << std::setw(22) << "paper_claim" << "verdict\n";
    for (const auto& row : rows) {
      os << std::left << std::setw(26) << row.quantity << std::setw(22) << format_double(row.estimate)
         << std::setw(14) << (row.std_error ? short_double(*row.std_error) : "")
         << std::setw(22) << (row.paper_claim ? format_double(*row.paper_claim) : "") << row.verdict << '\n';
    }
  } else {
    throw UsageError("unknown format '" + cfg.format + "'");
  }
  write_output(cfg, os.str());
  return failed ? 1 : 0;
}

int run_cloud(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "table") throw UsageError("cloud only writes CSV");
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  const Field field = parse_field(cfg.field);
  const int n = cfg.n;
  const double r = domain_radius(n);
  const int dim = field == Field::real ? n + 1 : 2 * (n + 1);

  std::vector<Eigen::MatrixXd> forms =
      field == Field::real ? build_real(n).real_forms() : build_complex(n).real_forms();
  std::ostringstream os;
  for (int i = 0; i < cfg.samples; ++i) {
    Eigen::VectorXd p = evaluate_forms(forms, sample_sphere(dim, r, cfg.seed, static_cast<std::uint64_t>(i)));
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      if (k) os << ',';
      os << format_double(p[k]);
    }
    os << '\n';
  }
  write_output(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic embeddings of real and complex projective spaces into unit spheres"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* emit = app.add_subcommand("emit", "write the coefficient matrices of one level as JSON");
  auto* verify = app.add_subcommand("verify", "run the claim audit up to --n-max");
  auto* report = app.add_subcommand("report", "geometry and global invariants for one level");
  auto* cloud = app.add_subcommand("cloud", "write sampled image points as CSV");

  for (auto* sub : {emit, report, cloud}) {
    sub->add_option("--n", cfg.n, "level")->check(CLI::Range(1, kMaxRealLevel));
    sub->add_option("--field", cfg.field, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  }
  verify->add_option("--n-max", cfg.n_max, "highest level audited")->check(CLI::Range(1, 6));
  verify->add_option("--field", cfg.field, "real, complex or both")->check(CLI::IsMember({"real", "complex", "both"}));
  for (auto* sub : {verify, report, cloud}) {
    sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
  }
  for (auto* sub : {verify, report}) {
    sub->add_option("--tol", cfg.tol, "tolerance for pointwise geometric identities")->check(CLI::PositiveNumber);
  }
  report->add_option("--metric", cfg.metric, "image or domain")->check(CLI::IsMember({"image", "domain"}));
  for (auto* sub : {emit, verify, report, cloud}) {
    sub->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", cfg.out, "output path (default standard output)");
  }
  emit->callback([&] { cfg.command = "emit"; });
  verify->callback([&] { cfg.command = "verify"; });
  report->callback([&] { cfg.command = "report"; });
  cloud->callback([&] { cfg.command = "cloud"; });

  try {
    app.parse(argc, argv);
    if (cfg.command == "verify" && verify->count("--field") == 0) cfg.field = "both";
    if (cfg.command == "emit" && emit->count("--format") == 0) cfg.format = "json";
    if (cfg.command == "cloud" && cloud->count("--format") == 0) cfg.format = "csv";
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.command == "emit") return run_emit(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "report") return run_report(cfg);
    if (cfg.command == "cloud") return run_cloud(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
