// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Optional argv[1]: path to the CLI, used for the byte-identical verify check.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "projembed/audit.hpp"
#include "projembed/constants.hpp"
#include "projembed/construct.hpp"
#include "projembed/geometry.hpp"
#include "projembed/measure.hpp"
#include "projembed/sampling.hpp"
#include "projembed/serialize.hpp"

using namespace projembed;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = out.ok;
  if (time_limit > 0 && secs > time_limit) {
    ok = false;
    out.detail += " [over time limit " + format_double(time_limit) + " s]";
  }
  if (!ok) ++failures;
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << secs;
  std::cout << (ok ? "PASS" : "FAIL") << "  C" << id << "  " << name << "  (" << time.str() << " s)  " << out.detail
            << std::endl;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

std::string run_command(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  return out;
}

oracle::Fn as_fn(const RealQuadMap& m) {
  return [&m](const Eigen::VectorXd& v) { return evaluate(m, v); };
}

oracle::Fn as_fn(const HermitianQuadMap& m) {
  return [&m](const Eigen::VectorXd& v) { return evaluate(m, complexify(v)); };
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "exact radius and dimension sequences", 1.0, [] {
    for (int n = 1; n <= kMaxLevel; ++n) {
      if (radius_pow4(n, RadiusMode::closed) != radius_pow4(n, RadiusMode::recursive)) {
        return Outcome{false, "radius mismatch at n=" + std::to_string(n)};
      }
      auto [nr, mc] = ambient_dims(n);
      if (nr != n * (n + 3) / 2 - 1 || mc != (n + 1) * (n + 1) - 2 || ambient_dims_recursive(n) != ambient_dims(n)) {
        return Outcome{false, "dimension mismatch at n=" + std::to_string(n)};
      }
    }
    if (radius_pow4(3) != Rational(8)) return Outcome{false, "r_3^4 = " + to_string(radius_pow4(3))};
    return Outcome{true, "n <= 12 exact, r_3^4 = 8"};
  });

  criterion(2, "norm identity", 5.0, [] {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) worst = std::max(worst, norm_identity_residual(build_real(n), radius_pow4(n), 1000, 0));
    for (int n = 1; n <= 4; ++n) {
      worst = std::max(worst, norm_identity_residual(build_complex(n), radius_pow4(n), 1000, 0));
    }
    return Outcome{worst < 1e-12, "max residual " + fmt(worst)};
  });

  criterion(3, "harmonic components", 1.0, [] {
    double worst = 0.0;
    for (int n = 1; n <= kMaxRealLevel; ++n) {
      for (double t : harmonicity_traces(build_real(n))) worst = std::max(worst, std::abs(t));
    }
    for (int n = 1; n <= kMaxComplexLevel; ++n) {
      for (double t : harmonicity_traces(build_complex(n))) worst = std::max(worst, std::abs(t));
    }
    return Outcome{worst < 1e-12, "max |trace| " + fmt(worst)};
  });

  criterion(4, "fiber invariance, separation and rank", 10.0, [] {
    double inv = 0.0, min_sv = 1e300;
    int collisions = 0, deficient = 0;
    for (int n = 1; n <= 4; ++n) {
      for (Field field : {Field::real, Field::complex}) {
        auto rep = fiber_checks(n, field, 10000, 0);
        inv = std::max(inv, rep.invariance_residual);
        collisions += rep.collisions;
        deficient += rep.rank_deficient_points;
        min_sv = std::min(min_sv, rep.min_singular_value);
      }
    }
    const bool ok = inv < 1e-12 && collisions == 0 && deficient == 0 && min_sv > 1e-8;
    return Outcome{ok, "invariance " + fmt(inv) + ", collisions " + std::to_string(collisions) +
                           ", min singular value " + fmt(min_sv)};
  });

  criterion(5, "real restriction and Hopf factorization", 2.0, [] {
    double restriction = 0.0;
    for (int n = 1; n <= 4; ++n) {
      auto d = diagram_check(n, 1000, 0);
      restriction = std::max({restriction, d.restriction_residual, d.zero_set_max});
    }
    const double hopf = *diagram_check(1, 1000, 0).hopf_residual;
    return Outcome{restriction < 1e-13 && hopf < 1e-14, "restriction " + fmt(restriction) + ", hopf " + fmt(hopf)};
  });

  criterion(6, "homothety against finite-difference oracle", 0.0, [] {
    double anis = 0.0, spread = 0.0, oracle_dev = 0.0;
    auto visit = [&](const auto& map, Field field, int n) {
      const double r = domain_radius(n);
      const int dim = field == Field::real ? n + 1 : 2 * n + 2;
      double lo = 1e300, hi = 0.0;
      for (std::uint64_t i = 0; i < 20; ++i) {
        auto fr = frame(sample_sphere(dim, r, 6, i), field, r);
        auto pf = pullback_factor(map, fr);
        Eigen::MatrixXd g = oracle::fd_pullback(as_fn(map), fr.base_point, fr.basis);
        const double fd_mean = g.trace() / static_cast<double>(fr.dim());
        anis = std::max(anis, pf.anisotropy / pf.mean);
        oracle_dev = std::max(oracle_dev, std::abs(pf.mean - fd_mean));
        lo = std::min(lo, pf.mean);
        hi = std::max(hi, pf.mean);
      }
      spread = std::max(spread, (hi - lo) / hi);
    };
    for (int n = 1; n <= 6; ++n) visit(build_real(n), Field::real, n);
    for (int n = 1; n <= 4; ++n) visit(build_complex(n), Field::complex, n);
    const double lambda2 = pullback_factor(build_real(2), frame(Eigen::Vector3d(domain_radius(2), 0, 0), Field::real,
                                                                 domain_radius(2)))
                               .mean;
    const bool ok = anis < 1e-8 && spread < 1e-8 && oracle_dev < 1e-8 && std::abs(lambda2 - 2.0) < 1e-8;
    return Outcome{ok, "anisotropy " + fmt(anis) + ", spread " + fmt(spread) + ", |lambda - fd| " + fmt(oracle_dev) +
                           ", lambda(n=2) " + fmt(lambda2)};
  });

  criterion(7, "minimality", 30.0, [] {
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) worst = std::max(worst, survey_geometry(n, Field::real, 20, 7).max_mean_curvature);
    for (int n = 1; n <= 3; ++n) worst = std::max(worst, survey_geometry(n, Field::complex, 20, 7).max_mean_curvature);
    return Outcome{worst < 1e-6, "max |H| " + fmt(worst)};
  });

  criterion(8, "Gauss equation consistency", 0.0, [] {
    double gauss = 0.0, alpha_spread = 0.0;
    for (int n = 2; n <= 5; ++n) {
      auto s = survey_geometry(n, Field::real, 20, 8);
      gauss = std::max(gauss, s.max_gauss_residual);
      alpha_spread = std::max(alpha_spread, s.alpha_sq_max - s.alpha_sq_min);
    }
    for (int n = 1; n <= 3; ++n) {
      auto s = survey_geometry(n, Field::complex, 20, 8);
      alpha_spread = std::max(alpha_spread, s.alpha_sq_max - s.alpha_sq_min);
    }
    return Outcome{gauss < 1e-6 && alpha_spread < 1e-7,
                   "max |s - d(d-1)/rho^2| " + fmt(gauss) + ", |alpha|^2 spread " + fmt(alpha_spread)};
  });

  criterion(9, "Gauss-Bonnet on RP2 and sigma of RP3", 60.0, [] {
    const auto gb = global_invariants(2, Field::real, 100000, 0).gauss_bonnet_ratio->value;
    const auto sigma = global_invariants(3, Field::real, 100000, 0).sigma_quotient->value;
    const double target = 6.0 * std::pow(std::numbers::pi, 4.0 / 3.0);
    const bool ok = std::abs(gb - 1.0) < 1e-3 && std::abs(sigma - target) < 5e-3 * target;
    return Outcome{ok, "chi ratio " + fmt(gb) + ", sigma " + fmt(sigma) + " vs " + fmt(target)};
  });

  criterion(10, "normalization-dependent Veronese numbers under both metrics", 0.0, [] {
    // Oracle: finite-difference |alpha|^2 at a point, the Gauss equation, the
    // image area of the Veronese surface (half of S^2(sqrt 3)) and the homothety
    // factor to move between metrics.
    auto m = build_real(2);
    const double r = domain_radius(2);
    auto fr = frame(Eigen::Vector3d(r, 0, 0), Field::real, r);
    const auto fd = oracle::fd_curvature(as_fn(m), fr.base_point, fr.basis);
    const double lambda = oracle::fd_pullback(as_fn(m), fr.base_point, fr.basis).trace() / 2.0;
    const double alpha_img = fd.alpha_norm_sq;
    const double s_img = 2.0 - alpha_img;
    const double area_img = 2.0 * std::numbers::pi * 3.0;
    const double s_dom = s_img * lambda;
    const double alpha_dom = 2.0 - s_dom;
    const double area_dom = area_img / lambda;
    const std::map<std::string, double> oracle_values{
        {"veronese_scalar_curvature_image", s_img},     {"veronese_alpha_norm_sq_image", alpha_img},
        {"pi_functional_rp2_image", alpha_img * area_img}, {"veronese_scalar_curvature_domain", s_dom},
        {"veronese_alpha_norm_sq_domain", alpha_dom},   {"pi_functional_rp2_domain", alpha_dom * area_dom}};
    AuditConfig cfg;
    cfg.n_max_real = 3;
    cfg.n_max_complex = 1;
    auto entries = run_claim_audit(cfg);
    std::ostringstream detail;
    bool ok = true;
    int found = 0;
    for (const auto& e : entries) {
      auto it = oracle_values.find(e.claim_id);
      if (it == oracle_values.end()) continue;
      ++found;
      const bool hit = std::abs(e.measured - it->second) < 1e-4 * std::max(1.0, std::abs(it->second));
      ok = ok && hit && e.convention.has_value() && e.verdict != Verdict::mismatch;
      detail << e.claim_id << "=" << fmt(e.measured) << "(" << to_string(e.verdict) << ") ";
    }
    ok = ok && found == 6;
    ok = ok && std::abs(s_img - 2.0 / 3.0) < 1e-4 && std::abs(alpha_img - 4.0 / 3.0) < 1e-4 &&
         std::abs(alpha_img * area_img - 8 * std::numbers::pi) < 1e-3;
    return Outcome{ok, detail.str()};
  });

  criterion(11, "Laplace eigenfunctions", 0.0, [] {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const double r = domain_radius(n);
      auto rm = build_real(n);
      auto cm = build_complex(n);
      for (std::uint64_t i = 0; i < 20; ++i) {
        worst = std::max(worst, laplace_residual(rm, sample_sphere(n + 1, r, 11, i), r));
        worst = std::max(worst, laplace_residual(cm, sample_sphere(2 * n + 2, r, 11, i), r));
      }
    }
    return Outcome{worst < 1e-4, "max residual " + fmt(worst)};
  });

  criterion(12, "deterministic verify report", 0.0, [&cli] {
    AuditConfig cfg;
    const std::string a = to_json(run_claim_audit(cfg)).dump(2);
    const std::string b = to_json(run_claim_audit(cfg)).dump(2);
    bool ok = a == b;
    std::string detail = std::string("library json ") + (ok ? "identical" : "differs");
    if (!cli.empty()) {
      const std::string cmd = "\"" + cli + "\" verify --n-max 4 --seed 0 --format json";
      const std::string first = run_command(cmd);
      const std::string second = run_command(cmd);
      const bool same = !first.empty() && first == second;
      ok = ok && same;
      detail += std::string(", cli output ") + (same ? "identical" : "differs") + " (" +
                std::to_string(first.size()) + " bytes)";
    }
    return Outcome{ok, detail};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
