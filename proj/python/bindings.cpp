#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include <json.hpp>

#include "meanest/baselines.hpp"
#include "meanest/core_ops.hpp"
#include "meanest/errors.hpp"
#include "meanest/fastgd.hpp"
#include "meanest/harness.hpp"
#include "meanest/instances.hpp"
#include "meanest/io.hpp"
#include "meanest/minsum.hpp"
#include "meanest/sampling.hpp"

namespace py = pybind11;
using namespace meanest;

namespace {

std::vector<Point> rows_of(const PointSet& A) {
    std::vector<Point> rows(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) rows[i] = A.row_point(i);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sublinear-sample Euclidean mean estimation: batched uniform "
              "sampling with gradient-descent and order-statistics aggregators.";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<IoError>(m, "IoError");

    py::class_<PointSet>(m, "PointSet")
        .def(py::init(&PointSet::from_rows), py::arg("rows"))
        .def_property_readonly("n", &PointSet::size)
        .def_property_readonly("dim", &PointSet::dim)
        .def("row", &PointSet::row_point, py::arg("i"))
        .def("rows", &rows_of)
        .def("__len__", &PointSet::size);

    py::class_<CostOracle>(m, "CostOracle")
        .def_readonly("mean", &CostOracle::mean)
        .def_readonly("opt", &CostOracle::opt)
        .def_readonly("n", &CostOracle::n);

    py::class_<EstimatorConfig>(m, "EstimatorConfig")
        .def(py::init<>())
        .def_readwrite("eps", &EstimatorConfig::eps)
        .def_readwrite("delta", &EstimatorConfig::delta)
        .def_readwrite("a", &EstimatorConfig::a)
        .def_readwrite("b", &EstimatorConfig::b)
        .def_readwrite("seed", &EstimatorConfig::seed)
        .def_readwrite("t_slack", &EstimatorConfig::t_slack)
        .def_readwrite("depth", &EstimatorConfig::depth)
        .def_readwrite("cluster_exponent", &EstimatorConfig::cluster_exponent)
        .def_property_readonly("batch_count", &EstimatorConfig::batch_count)
        .def_property_readonly("batch_size", &EstimatorConfig::batch_size);

    m.def("practical_preset", &practical_preset, py::arg("eps"), py::arg("delta"));
    m.def("paper_preset_gd", &paper_preset_gd, py::arg("eps"), py::arg("delta"));
    m.def("paper_preset_minsum", &paper_preset_minsum, py::arg("eps"),
          py::arg("delta"), py::arg("depth"));

    m.def("mean", &mean, py::arg("points"));
    m.def("cost",
          [](const PointSet& A, const Point& c) { return cost(A, c); },
          py::arg("points"), py::arg("center"));
    m.def("exact_oracle", &exact_oracle, py::arg("points"));
    m.def("decomposition_check",
          [](const PointSet& A, const Point& c) {
              return decomposition_check(A, c);
          },
          py::arg("points"), py::arg("center"));
    m.def("is_eps_approx",
          [](const CostOracle& o, const Point& c, double eps) {
              return is_eps_approx(o, c, eps);
          },
          py::arg("oracle"), py::arg("center"), py::arg("eps"));
    m.def("approx_ratio",
          [](const CostOracle& o, const Point& c) { return approx_ratio(o, c); },
          py::arg("oracle"), py::arg("center"));
    m.def("select_kth", &select_kth, py::arg("values"), py::arg("k"));
    m.def("median_1d", &median_1d, py::arg("values"));
    m.def("coordinate_median", &coordinate_median, py::arg("points"));

    py::class_<CandidateMeans>(m, "CandidateMeans")
        .def_readonly("means", &CandidateMeans::means)
        .def_readonly("batch_size", &CandidateMeans::batch_size)
        .def_property_readonly("count", &CandidateMeans::count);

    m.def("draw_candidate_means",
          [](const PointSet& A, const EstimatorConfig& cfg, std::uint64_t seed) {
              return draw_candidate_means(A, cfg, Rng(seed));
          },
          py::arg("points"), py::arg("config"), py::arg("seed"));
    m.def("empirical_mean_estimate",
          [](const PointSet& A, std::size_t sample_size, std::uint64_t seed) {
              return empirical_mean_estimate(A, sample_size, Rng(seed));
          },
          py::arg("points"), py::arg("sample_size"), py::arg("seed"));

    py::class_<GDTrace>(m, "GDTrace")
        .def_readonly("iterates", &GDTrace::iterates)
        .def_readonly("gradient_norms", &GDTrace::gradient_norms)
        .def_readonly("terminated_early", &GDTrace::terminated_early);

    m.def("geo_median_gradient",
          [](const Point& q, const PointSet& P) {
              return geo_median_gradient(q, P);
          },
          py::arg("q"), py::arg("candidates"));
    m.def("fastgd",
          [](const PointSet& candidates, int t_slack) {
              return fastgd(candidates, t_slack);
          },
          py::arg("candidates"), py::arg("t_slack") = 2);

    m.def("compute_winner", &compute_winner, py::arg("candidates"));
    m.def("truncated_distance_sums", &truncated_distance_sums, py::arg("candidates"));
    m.def("minsum_select", &minsum_select, py::arg("candidates"), py::arg("depth"),
          py::arg("cluster_exponent") = 0.5);

    py::class_<WeiszfeldResult>(m, "WeiszfeldResult")
        .def_readonly("point", &WeiszfeldResult::point)
        .def_readonly("iterations", &WeiszfeldResult::iterations)
        .def_readonly("hit_max_iter", &WeiszfeldResult::hit_max_iter)
        .def_readonly("anchor_certified", &WeiszfeldResult::anchor_certified)
        .def_readonly("gradient_norm", &WeiszfeldResult::gradient_norm)
        .def_readonly("objective", &WeiszfeldResult::objective);

    m.def("weiszfeld", &weiszfeld, py::arg("points"), py::arg("tol") = 1e-10,
          py::arg("max_iter") = 10000);

    py::class_<Instance>(m, "Instance")
        .def_readonly("id", &Instance::id)
        .def_readonly("points", &Instance::points)
        .def_readonly("oracle", &Instance::oracle);

    m.def("gen_two_point_lb", &gen_two_point_lb, py::arg("n"), py::arg("eps"));
    m.def("gen_empirical_mean_lb", &gen_empirical_mean_lb, py::arg("total"),
          py::arg("sample_size"), py::arg("eps"));
    m.def("gen_gaussian", &gen_gaussian, py::arg("n"), py::arg("dim"),
          py::arg("sigma"), py::arg("seed"));
    m.def("gen_two_cluster", &gen_two_cluster, py::arg("n"), py::arg("dim"),
          py::arg("separation"), py::arg("sigma"), py::arg("seed"));
    m.def("gen_pareto_tail", &gen_pareto_tail, py::arg("n"), py::arg("dim"),
          py::arg("alpha"), py::arg("seed"));

    py::class_<EstimateResult>(m, "EstimateResult")
        .def_readonly("point", &EstimateResult::point)
        .def_readonly("samples", &EstimateResult::samples)
        .def_readonly("t_sample_ns", &EstimateResult::t_sample_ns)
        .def_readonly("t_agg_ns", &EstimateResult::t_agg_ns);

    m.def("estimate",
          [](const std::string& method, const PointSet& A,
             const EstimatorConfig& cfg, std::optional<std::size_t> samples) {
              return run_estimator(method_from_name(method), A, cfg,
                                   Rng(cfg.seed), samples);
          },
          py::arg("method"), py::arg("points"), py::arg("config"),
          py::arg("empirical_samples") = std::nullopt,
          "Run one estimator (fastgd|minsum|gmom|empirical|coordmed).");

    m.def("run_experiment_json",
          [](const std::string& config_json) {
              nlohmann::json parsed;
              try {
                  parsed = nlohmann::json::parse(config_json);
              } catch (const nlohmann::json::exception& e) {
                  throw ConfigError(std::string("experiment config: ") + e.what());
              }
              const ExperimentReport report =
                  run_experiment(parsed.get<ExperimentSpec>());
              return report_to_json(report).dump();
          },
          py::arg("config_json"),
          "Run a Monte Carlo experiment from a JSON config; returns the "
          "report as a JSON string.");

    m.def("read_point_set", &read_point_set, py::arg("path"));
    m.def("write_point_set", &write_point_set, py::arg("path"), py::arg("points"),
          py::arg("binary") = false);
}
