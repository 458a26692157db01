#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpc/curves.hpp"
#include "gpc/diagram.hpp"
#include "gpc/errors.hpp"
#include "gpc/gaussian.hpp"
#include "gpc/injectivity.hpp"
#include "gpc/stability.hpp"
#include "gpc/wasserstein.hpp"

namespace py = pybind11;

namespace {

using Pairs = std::vector<std::pair<double, double>>;

gpc::PersistenceDiagram to_diagram(const Pairs& pairs) {
    try {
        return gpc::PersistenceDiagram::from_pairs(pairs);
    } catch (const gpc::InvalidArgument& e) {
        throw py::value_error(e.what());
    }
}

Pairs to_pairs(const gpc::PersistenceDiagram& d) {
    Pairs out;
    out.reserve(d.size());
    for (const auto& p : d) out.emplace_back(p.birth(), p.death());
    return out;
}

gpc::GpcModel model(const Pairs& diagram, double sigma, const std::string& weight) {
    return gpc::GpcModel(to_diagram(diagram), gpc::WeightSpec(gpc::parse_weight_kind(weight)), sigma);
}

py::dict report_dict(const gpc::StabilityReport& r) {
    py::dict out;
    out["theorem"] = std::string(gpc::theorem_token(r.theorem));
    out["constant"] = r.constant;
    out["additive_term"] = r.additive_term;
    out["w1"] = r.w1;
    out["l1_dist"] = r.l1_dist;
    out["bound_value"] = r.bound_value;
    out["slack"] = r.slack;
    out["holds"] = r.holds;
    out["inputs"] = r.inputs_digest;
    return out;
}

}  // namespace

PYBIND11_MODULE(_gpc, m) {
    m.doc() = "Gaussian persistence curves: evaluation, norms, W1 matching, stability checks, moment probes";

    static py::exception<gpc::Error> base(m, "GpcError", PyExc_RuntimeError);
    static py::exception<gpc::HypothesisViolated> hypothesis(m, "HypothesisViolatedError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const gpc::HypothesisViolated& e) {
            py::set_error(hypothesis, e.what());
        } catch (const gpc::Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def("canonical", [](const Pairs& d) { return to_pairs(to_diagram(d)); }, py::arg("diagram"),
          "Validate a list of (birth, death) pairs and return it in canonical order.");
    m.def("load_diagram", [](const std::string& path) { return to_pairs(gpc::load_diagram_file(path)); },
          py::arg("path"));
    m.def("parse_diagram", [](const std::string& text) { return to_pairs(gpc::parse_diagram(text)); },
          py::arg("text"));
    m.def("total_lifespan", [](const Pairs& d) { return gpc::total_lifespan(to_diagram(d)); }, py::arg("diagram"));
    m.def("min_lifespan", [](const Pairs& d) { return gpc::min_lifespan(to_diagram(d)); }, py::arg("diagram"));

    m.def("std_normal_cdf", &gpc::std_normal_cdf, py::arg("x"));
    m.def("std_normal_pdf", &gpc::std_normal_pdf, py::arg("x"));

    m.def("resolve_weights",
          [](const Pairs& d, const std::string& weight) {
              return gpc::resolve(to_diagram(d), gpc::WeightSpec(gpc::parse_weight_kind(weight))).values;
          },
          py::arg("diagram"), py::arg("weight") = "none");

    m.def("gpc_eval",
          [](const Pairs& d, py::array_t<double, py::array::c_style | py::array::forcecast> t, double sigma,
             const std::string& weight) {
              const auto mdl = model(d, sigma, weight);
              auto in = t.unchecked();
              py::array_t<double> out(t.request().shape);
              auto* dst = out.mutable_data();
              const auto* src = t.data();
              for (py::ssize_t i = 0; i < in.size(); ++i) dst[i] = gpc::gpc_eval(mdl, src[i]);
              return out;
          },
          py::arg("diagram"), py::arg("t"), py::arg("sigma") = 1.0, py::arg("weight") = "none",
          "Evaluate the curve at each entry of t.");
    m.def("surface_eval",
          [](const Pairs& d, double x, double y, double sigma, const std::string& weight) {
              return gpc::surface_eval(model(d, sigma, weight), x, y);
          },
          py::arg("diagram"), py::arg("x"), py::arg("y"), py::arg("sigma") = 1.0, py::arg("weight") = "none");
    m.def("gpc_sample",
          [](const Pairs& d, double t_min, double t_max, int n, double sigma, const std::string& weight) {
              const auto s = gpc::gpc_sample(model(d, sigma, weight), t_min, t_max, n);
              return py::make_tuple(py::array_t<double>(s.t_values.size(), s.t_values.data()),
                                    py::array_t<double>(s.values.size(), s.values.data()));
          },
          py::arg("diagram"), py::arg("t_min"), py::arg("t_max"), py::arg("n"), py::arg("sigma") = 1.0,
          py::arg("weight") = "none", "Return (t, values) arrays on an endpoint-inclusive grid.");
    m.def("l1_norm_closed",
          [](const Pairs& d, double sigma, const std::string& weight) {
              return gpc::l1_norm_closed(model(d, sigma, weight)).value;
          },
          py::arg("diagram"), py::arg("sigma") = 1.0, py::arg("weight") = "none");
    m.def("l1_norm_quadrature",
          [](const Pairs& d, double sigma, const std::string& weight) {
              return gpc::l1_norm_quadrature(model(d, sigma, weight));
          },
          py::arg("diagram"), py::arg("sigma") = 1.0, py::arg("weight") = "none");
    m.def("l1_distance",
          [](const Pairs& c, const Pairs& d, double sigma, const std::string& weight) {
              return gpc::l1_distance(model(c, sigma, weight), model(d, sigma, weight));
          },
          py::arg("c"), py::arg("d"), py::arg("sigma") = 1.0, py::arg("weight") = "none");

    m.def("wasserstein1",
          [](const Pairs& c, const Pairs& d) {
              const auto r = gpc::wasserstein1(to_diagram(c), to_diagram(d));
              return py::make_tuple(r.cost, r.matching.pairs, r.matching.c_to_diagonal, r.matching.d_to_diagonal);
          },
          py::arg("c"), py::arg("d"),
          "Return (cost, pairs, c_to_diagonal, d_to_diagonal); indices refer to canonical order.");

    m.def("verify",
          [](const Pairs& c, const Pairs& d, double sigma, const std::string& theorem,
             std::optional<std::string> weight, std::optional<double> lipschitz) {
              const auto t = gpc::parse_theorem(theorem);
              const auto spec = gpc::WeightSpec(weight ? gpc::parse_weight_kind(*weight) : gpc::default_weight_for(t));
              gpc::VerifyOptions opts;
              opts.lipschitz = lipschitz;
              return report_dict(gpc::verify(to_diagram(c), to_diagram(d), sigma, t, spec, spec, opts));
          },
          py::arg("c"), py::arg("d"), py::arg("sigma") = 1.0, py::arg("theorem") = "A",
          py::arg("weight") = py::none(), py::arg("lipschitz") = py::none());

    m.def("moment_sum", [](const Pairs& d, int m1, int m2) { return gpc::moment_sum(to_diagram(d), m1, m2); },
          py::arg("diagram"), py::arg("m1"), py::arg("m2"));
    m.def("injectivity_probe",
          [](const Pairs& c, const Pairs& d, double sigma, int max_order) -> py::tuple {
              const auto r = gpc::injectivity_probe(to_diagram(c), to_diagram(d), sigma, max_order);
              switch (r.verdict) {
                  case gpc::ProbeResult::Verdict::Identical: return py::make_tuple("identical");
                  case gpc::ProbeResult::Verdict::Distinguished: return py::make_tuple("distinguished", r.m1, r.m2);
                  case gpc::ProbeResult::Verdict::Inconclusive: return py::make_tuple("inconclusive", r.max_order);
              }
              return py::make_tuple();
          },
          py::arg("c"), py::arg("d"), py::arg("sigma") = 1.0, py::arg("max_order") = 16);
    m.def("tail_dominance_witness",
          [](const Pairs& c, const Pairs& d, double sigma) -> py::object {
              const auto w = gpc::tail_dominance_witness(to_diagram(c), to_diagram(d), sigma);
              if (w.status != gpc::TailScan::Status::Found) return py::none();
              return py::make_tuple(w.t, w.side == gpc::TailSide::PlusInfinity ? "+inf" : "-inf",
                                    w.first_dominates);
          },
          py::arg("c"), py::arg("d"), py::arg("sigma") = 1.0,
          "Return (t, side, first_dominates) or None when no witness exists or the scan saturates.");
}
