#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "topreg/graph.hpp"

namespace topreg {

struct LaplacianMatrix {
  Eigen::SparseMatrix<double> matrix;  // n x n, symmetric PSD
  bool normalized = false;
  Eigen::VectorXd degree;  // weighted vertex degrees of the source graph

  Eigen::Index size() const { return matrix.rows(); }
};

/// L = D - W, or the normalized form D^{-1/2} L D^{-1/2}. Normalizing a
/// graph with an isolated vertex is an error naming that vertex.
LaplacianMatrix laplacian(const WeightedGraph& graph, bool normalized);

}  // namespace topreg
