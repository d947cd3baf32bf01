#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "coaw/coa_engine.hpp"
#include "coaw/config.hpp"
#include "coaw/oracle.hpp"
#include "coaw/pareto.hpp"
#include "coaw/problems.hpp"
#include "coaw/rng.hpp"
#include "coaw/runner.hpp"
#include "coaw/scalarization.hpp"

namespace py = pybind11;
using namespace coaw;

namespace {

py::list points_to_list(const std::vector<FrontPoint>& pts) {
  py::list out;
  for (const auto& p : pts) out.append(py::make_tuple(p.x, p.f));
  return out;
}

py::dict habitat_to_dict(const Habitat& h) {
  py::dict d;
  d["x"] = h.x;
  d["f"] = h.eval.objectives;
  d["cost"] = h.cost;
  d["feasible"] = h.eval.feasible();
  return d;
}

py::dict eval_to_dict(const EvalResult& r) {
  py::dict d;
  d["objectives"] = r.objectives;
  d["violations"] = r.violations;
  d["total_violation"] = r.total_violation;
  d["feasible"] = r.feasible();
  return d;
}

}  // namespace

PYBIND11_MODULE(_coaw, m) {
  m.doc() = "Bindings for the coaw C++ library";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<ProblemSpec>(m, "Problem")
      .def_readonly("id", &ProblemSpec::id)
      .def_readonly("dim", &ProblemSpec::dim)
      .def_readonly("n_obj", &ProblemSpec::n_obj)
      .def_readonly("lower", &ProblemSpec::lower)
      .def_readonly("upper", &ProblemSpec::upper)
      .def("evaluate", [](const ProblemSpec& p, const Vector& x) { return eval_to_dict(evaluate(p, x)); },
           py::arg("x"))
      .def("__repr__", [](const ProblemSpec& p) { return "<Problem " + p.id + ">"; });

  py::class_<CoaParams>(m, "CoaParams")
      .def(py::init<>())
      .def_readwrite("initial_population", &CoaParams::initial_population)
      .def_readwrite("min_eggs", &CoaParams::min_eggs)
      .def_readwrite("max_eggs", &CoaParams::max_eggs)
      .def_readwrite("max_iterations", &CoaParams::max_iterations)
      .def_readwrite("n_clusters", &CoaParams::n_clusters)
      .def_readwrite("lambda_max", &CoaParams::lambda_max)
      .def_readwrite("egg_laying_alpha", &CoaParams::egg_laying_alpha)
      .def_readwrite("max_cuckoos", &CoaParams::max_cuckoos)
      .def_readwrite("pop_variance_stop", &CoaParams::pop_variance_stop)
      .def_readwrite("accuracy_stop", &CoaParams::accuracy_stop)
      .def_readwrite("detection_epsilon_frac", &CoaParams::detection_epsilon_frac)
      .def("validate", &CoaParams::validate);

  py::class_<ScalarizerConfig>(m, "ScalarizerConfig")
      .def(py::init<>())
      .def_readwrite("penalty_coefficient", &ScalarizerConfig::penalty_coefficient)
      .def_readwrite("normalize", &ScalarizerConfig::normalize);

  py::class_<FrontMetrics>(m, "FrontMetrics")
      .def_readonly("generational_distance", &FrontMetrics::generational_distance)
      .def_readonly("extreme_error", &FrontMetrics::extreme_error)
      .def_readonly("spread", &FrontMetrics::spread);

  m.def("builtin_ids", [] {
    std::vector<std::string> ids;
    for (auto id : builtin_ids()) ids.emplace_back(id);
    return ids;
  });
  m.def("get_builtin", [](const std::string& id, double box_extent) { return get_builtin(id, box_extent); },
        py::arg("id"), py::arg("box_extent") = kDefaultBoxExtent);

  m.def(
      "sample_weights",
      [](std::size_t n_obj, std::uint64_t seed) {
        Rng rng(seed);
        const auto w = sample_weights(n_obj, rng);
        return Vector(w.values().begin(), w.values().end());
      },
      py::arg("n_obj"), py::arg("seed"));
  m.def(
      "saw_scalarize",
      [](const Vector& f, const Vector& w) { return saw_scalarize(f, WeightVector(w)); }, py::arg("objectives"),
      py::arg("weights"));
  m.def(
      "penalized_cost",
      [](const ProblemSpec& p, const Vector& x, const Vector& w, const ScalarizerConfig& cfg) {
        return penalized_cost(evaluate(p, x), WeightVector(w), cfg);
      },
      py::arg("problem"), py::arg("x"), py::arg("weights"), py::arg("scalarizer") = ScalarizerConfig{});

  m.def(
      "dominates", [](const Vector& a, const Vector& b) { return dominates(a, b); }, py::arg("a"), py::arg("b"));
  m.def(
      "pareto_filter", [](const std::vector<Vector>& pts) { return pareto_filter(pts); }, py::arg("points"));
  m.def(
      "front_metrics",
      [](const std::vector<Vector>& approx, const std::vector<Vector>& reference) {
        return front_metrics(approx, reference);
      },
      py::arg("approx"), py::arg("reference"));

  m.def(
      "grid_reference_front",
      [](const ProblemSpec& p, int resolution) {
        return points_to_list(grid_reference_front(p, OracleConfig{resolution}));
      },
      py::arg("problem"), py::arg("resolution") = OracleConfig{}.resolution);
  m.def("analytic_front_p3", &analytic_front_p3, py::arg("n_points"));

  m.def(
      "run_single_coa",
      [](const ProblemSpec& p, const Vector& w, const CoaParams& params, std::uint64_t seed,
         const ScalarizerConfig& scal) {
        Rng rng(seed);
        const auto r = run_single_coa(p, WeightVector(w), params, scal, rng);
        py::dict d;
        d["best"] = habitat_to_dict(r.best);
        py::list pop;
        for (const auto& h : r.population) pop.append(habitat_to_dict(h));
        d["population"] = pop;
        d["trace"] = r.trace;
        d["iterations"] = r.iterations;
        d["stop_reason"] = std::string(to_string(r.stop_reason));
        return d;
      },
      py::arg("problem"), py::arg("weights"), py::arg("params") = CoaParams{}, py::arg("seed") = 0,
      py::arg("scalarizer") = ScalarizerConfig{});

  m.def("default_config", [] { return format_config(RunConfig{}); });

  m.def(
      "run",
      [](const std::string& config_text, unsigned threads, bool write) {
        const RunConfig cfg = parse_config(config_text);
        RunReport report;
        {
          py::gil_scoped_release release;
          report = run_coaw(cfg, RunOptions{.threads = threads, .write = write});
        }
        py::dict d;
        d["front"] = points_to_list(report.archive);
        d["oracle_front"] = points_to_list(report.oracle_front);
        d["metrics"] = report.metrics;
        d["runtime_seconds"] = report.runtime_seconds;
        d["metrics_json"] = metrics_json(report, cfg);
        return d;
      },
      py::arg("config_text") = "", py::arg("threads") = 1u, py::arg("write") = false);
}
