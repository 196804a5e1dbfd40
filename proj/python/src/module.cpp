#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frontal/discriminants.hpp"
#include "frontal/folded.hpp"
#include "frontal/heights.hpp"
#include "frontal/io.hpp"
#include "frontal/sampling.hpp"
#include "frontal/verify.hpp"

namespace py = pybind11;
using namespace frontal;

namespace {

py::list jet_values(const Jet1& j, int upto = 2) {
  py::list out;
  for (int k = 0; k <= std::min(upto, j.order()); ++k) out.append(j.derivative_at_zero(k));
  return out;
}

py::dict class_dict(const ContactClass& c) {
  py::dict d;
  d["label"] = c.label();
  d["k"] = c.k;
  d["sign"] = c.sign;
  return d;
}

EdgeCoefficients coeffs_from(const std::string& text) { return parse_coefficient_text(text, "<python>").coeffs; }

}  // namespace

PYBIND11_MODULE(_frontal, m) {
  m.doc() = "Jet-level invariants of cross-caps and folded cuspidal edges";

  py::register_exception<Error>(m, "FrontalError", PyExc_ValueError);

  m.def(
      "sample",
      [](std::uint64_t seed, const std::string& mode, int order) {
        Rng rng(seed);
        CoefficientFile f;
        f.order = order;
        f.seed = seed;
        f.mode = mode == "prefold" ? EdgeMode::Prefold : EdgeMode::Folded;
        if (mode != "prefold" && mode != "folded") throw Error(ErrorCode::ParseError, "mode must be folded or prefold");
        f.coeffs = f.mode == EdgeMode::Folded ? random_folded(rng, order) : random_prefold(rng, order);
        return format_coefficient_text(f);
      },
      py::arg("seed"), py::arg("mode") = "folded", py::arg("order") = kDefaultOrder,
      "Random coefficient file text.");

  m.def(
      "invariants",
      [](const std::string& text, bool closed_form) {
        const CoefficientFile f = parse_coefficient_text(text, "<python>");
        const MapGerm3 g = f.mode == EdgeMode::Folded ? folded_germ(f.coeffs) : normal_form(f.coeffs, EdgeMode::Prefold);
        const InvariantReport r = closed_form && f.mode == EdgeMode::Folded ? closed_form_invariants(f.coeffs)
                                                                           : direct_report(frontal_structure(g));
        py::dict d;
        d["kappa_s"] = jet_values(r.kappa_s);
        d["kappa_nu"] = jet_values(r.kappa_nu);
        d["kappa_t"] = jet_values(r.kappa_t);
        d["kappa_c"] = jet_values(r.kappa_c);
        d["B"] = r.B;
        d["kappa_c_r"] = r.kappa_c_r;
        d["curve_kappa"] = r.curve_kappa;
        d["curve_tau"] = r.curve_tau;
        d["provenance"] = std::string(to_string(r.provenance));
        return d;
      },
      py::arg("text"), py::arg("closed_form") = false);

  m.def(
      "classify",
      [](const std::string& text, std::optional<std::vector<double>> direction, std::optional<std::string> stratum,
         double t) {
        const EdgeCoefficients c = coeffs_from(text);
        Direction3 v;
        if (direction) {
          if (direction->size() != 3) throw Error(ErrorCode::InvalidDirection, "direction needs three components");
          v = Direction3::from((*direction)[0], (*direction)[1], (*direction)[2]);
        } else {
          const auto s = parse_stratum(stratum.value_or("generic"));
          if (!s) throw Error(ErrorCode::ParseError, "unknown stratum");
          v = stratum_direction(c, *s, t);
        }
        py::dict d;
        d["direction"] = std::vector<double>{v.v1, v.v2, v.v3};
        d["dpc"] = class_dict(classify_along_dpc(c, v).result);
        d["edge"] = class_dict(classify_along_edge(c, v).result);
        d["germ"] = class_dict(classify_height_germ(height_function(folded_germ(c), v)));
        return d;
      },
      py::arg("text"), py::arg("direction") = py::none(), py::arg("stratum") = py::none(), py::arg("t") = 0.37);

  m.def(
      "dpc",
      [](const std::string& text) {
        const EdgeCoefficients c = coeffs_from(text);
        const DoublePointCurve d = double_point_curve(c);
        const DpcLimits l = dpc_limits(d);
        py::dict out;
        out["d2"] = d.d2;
        out["d4"] = d.d4;
        out["kappa_sq_limit"] = l.exact_kappa_sq;
        out["tau_limit"] = l.exact_tau;
        out["kappa_sq_numeric"] = l.numeric_kappa_sq;
        return out;
      },
      py::arg("text"));

  m.def(
      "discriminant",
      [](const std::string& form, const std::string& label, int grid, double b, double c) {
        NormalFormId id = parse_normal_form_id(form);
        if (id.row == NormalFormId::Row::W) {
          id.b = b;
          id.c = c;
        }
        const auto l = parse_label(label);
        if (!l) throw Error(ErrorCode::ParseError, "label must be PD, DPC or CE");
        const DiscriminantSheet s = sheet(id, *l, grid);
        std::vector<std::vector<double>> pts;
        for (const Vec3d& p : s.points()) pts.push_back({p[0], p[1], p[2]});
        return pts;
      },
      py::arg("form"), py::arg("label"), py::arg("grid") = 64, py::arg("b") = 0.3, py::arg("c") = 0.5);

  m.def(
      "verify",
      [](int samples, std::uint64_t seed, std::optional<int> only) {
        VerifyOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        std::vector<CriterionResult> rs;
        if (only) rs.push_back(run_criterion(*only, opt));
        else rs = run_all(opt);
        py::list out;
        for (const auto& r : rs) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["passed"] = r.passed;
          d["details"] = r.details;
          out.append(d);
        }
        return out;
      },
      py::arg("samples") = 100, py::arg("seed") = 20240601, py::arg("only") = py::none());
}
