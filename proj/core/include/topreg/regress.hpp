#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "topreg/graph.hpp"
#include "topreg/persistence.hpp"
#include "topreg/simplicial_complex.hpp"
#include "topreg/spectral.hpp"

namespace topreg {

struct FitResult {
  Eigen::VectorXd theta;   // coefficients in the design used by the fit
  Eigen::VectorXd fitted;  // design * theta at all n points
  std::vector<int> support;
  double mu = 0.0;         // trade-off of the (final) penalty
  double mu_select = 0.0;  // stage-1 trade-off for pipeline fits

  struct Diagnostics {
    int iterations = 0;
    double objective = 0.0;
    std::vector<double> trace;  // objective per accepted step
    bool empty_support = false;
  } diag;
};

struct LassoOptions {
  int max_sweeps = 100000;
  double kkt_tol = 1e-8;
};

/// Cyclic coordinate descent for  |y - X theta|^2 + mu sum_j w_j |theta_j|.
/// Rows of the design may be a label subset; weights must be strictly
/// positive (floor them upstream). The returned solution satisfies the
/// KKT conditions to kkt_tol; exceeding the sweep budget throws with the
/// largest violation.
FitResult weighted_lasso_cd(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                            double mu, const Eigen::VectorXd& weights,
                            const LassoOptions& options = {});

/// Soft-threshold solution of the persistence-weighted Lasso for an
/// orthonormal design. Coefficients live in the rescaled design
/// X_j = Phi_j / chi_j, so theta_j = chi_j <Phi_j, y> (1 - mu chi_j / (2 |<Phi_j, y>|))_+
/// and fitted = sum_j theta_j Phi_j / chi_j. A coordinate is dropped
/// exactly when |<Phi_j, y>| <= (mu/2) chi_j.
FitResult closed_form_omega1(const EigenBasis& basis, const Eigen::VectorXd& y, double mu);

struct Omega2Config {
  int steps = 500;
  double step_size = 0.0;  // 0 = auto from the design spectral norm
  int batch = 0;           // 0 = full batch
  std::uint64_t seed = 0;
  std::vector<int> dims = {0, 1};
  bool backtracking = true;
  std::vector<int> labeled;  // least-squares rows; empty = all
};

/// Gradient descent on |y - X theta|^2 + mu * chi(X theta), the diagram
/// being recomputed at every step. The least-squares term may be
/// restricted to labeled rows (y is then indexed by `labeled`), while
/// the persistence term always sees the full fitted vector on the
/// complex. Returns the iterate with the lowest recorded objective.
FitResult omega2_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& y, double mu,
                     const SimplicialComplex& complex, const Omega2Config& config);

/// Variable selection with the weighted-Lasso stage at mu1 (closed form
/// when all rows are labeled, coordinate descent otherwise), then
/// omega2_fit at mu2 on the selected eigenvectors. An empty selection
/// returns the zero fit flagged in diagnostics. theta is expressed in
/// the original (unscaled) eigenvector basis, embedded at the selected
/// indices.
FitResult pipeline_fit(const EigenBasis& basis, const Eigen::VectorXd& y, double mu1,
                       double mu2, const SimplicialComplex& complex,
                       const Omega2Config& config);

struct KrrModel {
  Eigen::MatrixXd train_points;
  Eigen::VectorXd alpha;
  double bandwidth = 1.0;
  bool ill_conditioned = false;  // condition estimate above 1e12

  double predict(const Eigen::RowVectorXd& x) const;
  Eigen::VectorXd predict(const Eigen::MatrixXd& queries) const;
};

/// Gaussian-kernel ridge regression, (K + lambda I) alpha = y with
/// K_ij = exp(-|x_i - x_j|^2 / (2 h^2)).
KrrModel krr_fit(const Eigen::MatrixXd& points, const Eigen::VectorXd& y,
                 double bandwidth, double lambda);

/// Mean response of the k nearest training points; ties by index.
double knn_predict(const Eigen::MatrixXd& points, const Eigen::VectorXd& y, int k,
                   const Eigen::RowVectorXd& query);

struct GraphTvOptions {
  int max_iterations = 4000;
  double tol = 1e-11;
  std::vector<int> labeled;  // data-term rows; empty = all
};

/// Graph total-variation denoising
///   min_f sum_S (y_i - f_i)^2 + mu sum_{(i,j,w)} w |f_i - f_j|
/// solved by ADMM on the edge-difference splitting with a cached sparse
/// factorization.
Eigen::VectorXd graph_tv_fit(const WeightedGraph& graph, const Eigen::VectorXd& y,
                             double mu, const GraphTvOptions& options = {});

/// Weighted Lasso with graph-TV weights on the eigenbasis columns
/// (tv_weights must be present; they are floored like persistence
/// weights). theta is in the original basis coordinates.
FitResult lasso_tv_fit(const EigenBasis& basis, const Eigen::VectorXd& y, double mu,
                       const LassoOptions& options = {});

/// CSV rows "j,theta_j,weight_j" followed by a one-line JSON summary.
void write_fit_csv(std::ostream& out, const FitResult& fit, const Eigen::VectorXd& weights);

}  // namespace topreg
