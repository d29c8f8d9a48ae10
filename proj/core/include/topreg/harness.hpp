#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "topreg/graph.hpp"
#include "topreg/point_cloud.hpp"
#include "topreg/regress.hpp"
#include "topreg/simplicial_complex.hpp"
#include "topreg/spectral.hpp"

namespace topreg {

/// Invalid or unknown configuration. The CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DatasetKind { torus, swiss, gaussian_grid, gaussian_samples, pyramid, csv };
enum class Method { lasso, lasso_tv, omega1, omega2, pipeline, krr, knn, tv };

std::string to_string(DatasetKind kind);
std::string to_string(Method method);

struct ExperimentConfig {
  struct Dataset {
    DatasetKind kind = DatasetKind::torus;
    Eigen::Index n = 1000;
    double sigma = 0.5;
    std::uint64_t seed = 0;
    int grid_rows = 30;  // gaussian_grid
    int grid_cols = 30;
    int subdivisions = 8;  // pyramid
    bool alternating = false;
    std::string csv_path;
  } dataset;

  struct Graph {
    GraphKind kind = GraphKind::knn;
    int k = 0;  // 0 = round(log n), at least 3
    double t = 1.0;
    double cutoff = 0.0;      // gaussian graphs; 0 = keep all pairs
    int intrinsic_dim = 0;    // 0 = latent dimension if present, else 2
  } graph;

  struct Basis {
    Eigen::Index p = 0;  // 0 = n (full spectrum)
  } basis;

  struct Complex {
    int max_dim = 2;
    std::vector<int> hom_dims = {0, 1};
    std::size_t budget = 5'000'000;
  } complex;

  Method method = Method::pipeline;

  struct Penalty {
    double mu = -1.0;   // < 0 = choose by cross-validation
    double mu2 = -1.0;  // stage-2 trade-off; < 0 = residual-scale default
    int cv_folds = 5;
    int grid_size = 20;
  } penalty;

  struct Sgd {
    int steps = 500;
    double step_size = 0.0;  // 0 = auto
    int batch = 0;           // 0 = full batch
  } sgd;

  struct Krr {
    double bandwidth = 0.0;  // 0 = choose by cross-validation
    double lambda = -1.0;    // < 0 = choose by cross-validation
  } krr;

  struct Knn {
    int k = 0;  // 0 = choose by cross-validation
  } knn;

  struct Split {
    double train_fraction = 1.0;  // 1 = denoising (all points labeled)
  } split;

  int repeats = 20;
  std::string out_path;
};

/// Parses the flat key/value JSON config ("dataset.kind": "torus", ...).
/// Unknown keys, bad enum values and type mismatches are hard errors.
ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);

struct StageSeconds {
  double graph = 0.0;
  double eigen = 0.0;
  double persistence = 0.0;
  double fit = 0.0;
};

/// Everything one repeat needs, built once: data, graph, complex,
/// eigenbasis with weights, and the train/test split of the labeled
/// indices (test empty in denoising mode). The graph and basis are
/// always built on all points; fitting uses train labels only.
struct Prepared {
  PointCloud cloud;
  WeightedGraph graph;
  SimplicialComplex complex;
  EigenBasis basis;
  Eigen::VectorXd y;
  std::vector<int> train;
  std::vector<int> test;
  StageSeconds seconds;
};

Prepared prepare(const ExperimentConfig& config, std::uint64_t seed);

/// sqrt(sum (a_i - b_i)^2 / n); lengths must match.
double rmse(const Eigen::VectorXd& fitted, const Eigen::VectorXd& clean);

struct CvResult {
  double best_mu = 0.0;
  std::vector<double> grid;
  std::vector<double> mean_error;  // mean validation squared error per grid entry
};

/// Default logarithmic trade-off grid, [1e-4, 1e2] times the
/// full-shrinkage scale max_j |<col_j, y>| / w_j (floored weights are
/// skipped so the unpenalized near-constant coordinate cannot blow up
/// the scale). grid_size values, deduplicated.
std::vector<double> default_mu_grid(const ExperimentConfig& config, const Prepared& prep);

/// K-fold cross-validation over the labeled indices; returns the
/// trade-off with the smallest mean validation squared error, ties
/// resolved towards more regularization.
CvResult cross_validate(const ExperimentConfig& config, const Prepared& prep,
                        std::vector<double> grid, std::uint64_t seed);

/// Fits the configured method at the given trade-offs; fitted values
/// cover all n points regardless of the training split.
FitResult fit_method(const ExperimentConfig& config, const Prepared& prep, double mu,
                     double mu2, std::uint64_t seed);

struct SingleRun {
  Prepared prep;
  FitResult fit;
  double rmse_value = 0.0;
  double mu = 0.0;
  double mu2 = 0.0;
};

/// One full experiment at the given seed: prepare, pick trade-offs
/// (cross-validating when unset), fit, score.
SingleRun run_single(const ExperimentConfig& config, std::uint64_t seed);

struct RunReport {
  std::vector<double> rmse;          // per repeat, NaN on failure
  std::vector<std::string> status;   // "ok" or the error message
  double mean = 0.0;
  double stddev = 0.0;
  int ok = 0;
  StageSeconds seconds;  // summed over repeats
};

/// repeats independent seeded runs (dataset.seed + repeat index), run in
/// parallel. A failed repeat is recorded and the others continue.
RunReport run_benchmark(const ExperimentConfig& config);

/// Deterministic report: a config echo header, one "repeat,rmse,status"
/// row per repeat and a recomputable summary line. Stage timings are
/// intentionally not part of the file; they go to the log.
void write_report_csv(std::ostream& out, const ExperimentConfig& config,
                      const RunReport& report);

void write_cv_csv(std::ostream& out, const CvResult& cv);

/// Cloud CSV: header "x0,..,x{D-1}[,t0,..,t{d-1}][,f_clean][,y]" and one
/// row per point with 17 significant digits.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud);

/// Reads the cloud CSV schema back; malformed rows report their line
/// number, non-finite values are rejected.
PointCloud ingest_csv(const std::string& path);
PointCloud read_cloud_csv(std::istream& in);

}  // namespace topreg
