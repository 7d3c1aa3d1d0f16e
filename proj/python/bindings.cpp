#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "projembed/audit.hpp"
#include "projembed/constants.hpp"
#include "projembed/construct.hpp"
#include "projembed/errors.hpp"
#include "projembed/geometry.hpp"
#include "projembed/measure.hpp"
#include "projembed/serialize.hpp"

namespace py = pybind11;
using namespace projembed;

namespace {

py::dict estimate_dict(const IntegralEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["std_error"] = e.std_error;
  d["sample_count"] = e.sample_count;
  d["seed"] = e.seed;
  return d;
}

py::dict report_dict(const GeometryReport& r) {
  py::dict d;
  d["homothety_factor"] = r.homothety_factor;
  d["anisotropy"] = r.anisotropy;
  d["alpha_norm_sq"] = r.alpha_norm_sq;
  d["mean_curvature_norm"] = r.mean_curvature_norm;
  d["scalar_curvature_gauss"] = r.scalar_curvature_gauss;
  d["effective_radius_sq"] = r.effective_radius_sq;
  return d;
}

template <typename Map>
py::dict geometry_at(const Map& map, const Eigen::VectorXd& point) {
  return report_dict(geometry_report(map, frame(point, map.field(), domain_radius(map.level()))));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quadratic embeddings of RP^n and CP^n into unit spheres";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def(
      "radius_pow4",
      [](int n, const std::string& mode) {
        if (mode != "closed" && mode != "recursive") throw UsageError("mode must be 'closed' or 'recursive'");
        return to_string(radius_pow4(n, mode == "closed" ? RadiusMode::closed : RadiusMode::recursive));
      },
      py::arg("n"), py::arg("mode") = "closed", "r_n^4 as the string 'p/q'");
  m.def(
      "step_constants",
      [](int n) {
        auto [a_sq, b_sq] = step_constants(n);
        return py::make_tuple(to_string(a_sq), to_string(b_sq));
      },
      py::arg("n"), "(a^2, b^2) as 'p/q' strings");
  m.def("ambient_dims", &ambient_dims, py::arg("n"));

  py::class_<RealQuadMap>(m, "RealQuadMap")
      .def_property_readonly("level", &RealQuadMap::level)
      .def_property_readonly("ambient_dim", &RealQuadMap::ambient_dim)
      .def_property_readonly("components", &RealQuadMap::components)
      .def("evaluate", [](const RealQuadMap& map, const Eigen::VectorXd& x) { return evaluate(map, x); })
      .def("jacobian", [](const RealQuadMap& map, const Eigen::VectorXd& x) { return jacobian(map, x); })
      .def("harmonicity_traces", [](const RealQuadMap& map) { return harmonicity_traces(map); })
      .def("norm_identity_residual",
           [](const RealQuadMap& map, int samples, std::uint64_t seed) {
             return norm_identity_residual(map, radius_pow4(map.level()), samples, seed);
           },
           py::arg("samples") = 1000, py::arg("seed") = 0)
      .def("geometry_report", &geometry_at<RealQuadMap>, py::arg("point"))
      .def("laplace_residual",
           [](const RealQuadMap& map, const Eigen::VectorXd& x) {
             return laplace_residual(map, x, domain_radius(map.level()));
           })
      .def("to_json", [](const RealQuadMap& map) { return to_json(map).dump(); });

  py::class_<HermitianQuadMap>(m, "HermitianQuadMap")
      .def_property_readonly("level", &HermitianQuadMap::level)
      .def_property_readonly("ambient_dim", &HermitianQuadMap::ambient_dim)
      .def_property_readonly("components", &HermitianQuadMap::components)
      .def("evaluate", [](const HermitianQuadMap& map, const Eigen::VectorXcd& z) { return evaluate(map, z); })
      .def("jacobian", [](const HermitianQuadMap& map, const Eigen::VectorXcd& z) { return jacobian(map, z); })
      .def("harmonicity_traces", [](const HermitianQuadMap& map) { return harmonicity_traces(map); })
      .def("norm_identity_residual",
           [](const HermitianQuadMap& map, int samples, std::uint64_t seed) {
             return norm_identity_residual(map, radius_pow4(map.level()), samples, seed);
           },
           py::arg("samples") = 1000, py::arg("seed") = 0)
      .def("geometry_report", &geometry_at<HermitianQuadMap>, py::arg("point"),
           "point in interleaved real coordinates (Re z0, Im z0, ...)")
      .def("laplace_residual",
           [](const HermitianQuadMap& map, const Eigen::VectorXd& x) {
             return laplace_residual(map, x, domain_radius(map.level()));
           })
      .def("to_json", [](const HermitianQuadMap& map) { return to_json(map).dump(); });

  m.def("build_real", &build_real, py::arg("n"));
  m.def("build_complex", &build_complex, py::arg("n"));
  m.def("hopf", &hopf, py::arg("z"));
  m.def("domain_radius", &domain_radius, py::arg("n"));
  m.def(
      "real_restriction",
      [](const HermitianQuadMap& cmap) {
        auto r = real_restriction(cmap);
        return py::make_tuple(r.sigma, r.zero_set);
      },
      py::arg("cmap"), "(sigma, zero_set)");

  m.def("sphere_volume", &sphere_volume, py::arg("dim"), py::arg("r"));
  m.def(
      "global_invariants",
      [](int n, const std::string& field, int samples, std::uint64_t seed, const std::string& metric) {
        auto inv = global_invariants(n, parse_field(field), samples, seed, parse_metric(metric));
        py::dict d;
        d["scale"] = inv.scale;
        d["volume"] = estimate_dict(inv.volume);
        d["total_scalar"] = estimate_dict(inv.total_scalar);
        d["pi_functional"] = estimate_dict(inv.pi_functional);
        d["mean_scalar_curvature"] = inv.mean_scalar_curvature;
        d["mean_alpha_norm_sq"] = inv.mean_alpha_norm_sq;
        d["gauss_bonnet_ratio"] = inv.gauss_bonnet_ratio ? py::object(estimate_dict(*inv.gauss_bonnet_ratio)) : py::none();
        d["sigma_quotient"] = inv.sigma_quotient ? py::object(estimate_dict(*inv.sigma_quotient)) : py::none();
        return d;
      },
      py::arg("n"), py::arg("field") = "real", py::arg("samples") = 1000, py::arg("seed") = 0,
      py::arg("metric") = "image");

  m.def(
      "run_claim_audit_json",
      [](int n_max_real, int n_max_complex, std::uint64_t seed, int samples, int pair_count, double tol) {
        AuditConfig cfg;
        cfg.n_max_real = n_max_real;
        cfg.n_max_complex = n_max_complex;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.pair_count = pair_count;
        cfg.tol = tol;
        return to_json(run_claim_audit(cfg)).dump();
      },
      py::arg("n_max_real") = 4, py::arg("n_max_complex") = 4, py::arg("seed") = 0, py::arg("samples") = 1000,
      py::arg("pair_count") = 10000, py::arg("tol") = 1e-8);
}
