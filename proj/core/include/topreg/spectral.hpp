#pragma once

#include <Eigen/Core>
#include <iosfwd>

#include "topreg/graph.hpp"
#include "topreg/laplacian.hpp"

namespace topreg {

/// First p eigenpairs of a graph Laplacian, eigenvalues nondecreasing,
/// columns orthonormal. The sign of each column is fixed so that its
/// entry of largest absolute value (earliest index on ties) is
/// positive. Weight vectors are empty until filled by
/// eigenvector_persistence / eigenvector_tv.
struct EigenBasis {
  Eigen::VectorXd eigenvalues;          // p
  Eigen::MatrixXd vectors;              // n x p
  Eigen::VectorXd persistence_weights;  // p or empty
  Eigen::VectorXd tv_weights;           // p or empty

  Eigen::Index n() const { return vectors.rows(); }
  Eigen::Index p() const { return vectors.cols(); }
};

enum class EigenMethod {
  automatic,  // dense for n <= 3000, Lanczos beyond
  dense,
  lanczos,
};

/// Smallest-p eigenpairs. Dense path: full symmetric eigendecomposition.
/// Sparse path: Lanczos with full reorthogonalization on shift - L.
/// Throws std::runtime_error with a residual report when the iteration
/// budget is exhausted before all requested pairs satisfy
/// |L v - lambda v| <= 1e-7.
EigenBasis eigenbasis(const LaplacianMatrix& lap, Eigen::Index p,
                      EigenMethod method = EigenMethod::automatic);

/// Graph total variation of every column.
Eigen::VectorXd eigenvector_tv(const EigenBasis& basis, const WeightedGraph& graph);

/// CSV rows "lambda,phi_0,...,phi_{n-1}", one row per eigenvector.
void write_basis_csv(std::ostream& out, const EigenBasis& basis);

/// Binary dump: 8-byte magic "TPRBASIS", uint32 n, uint32 p, then the
/// eigenvalues (p doubles) and the vectors column-major (n*p doubles).
void write_basis_binary(std::ostream& out, const EigenBasis& basis);
EigenBasis read_basis_binary(std::istream& in);

}  // namespace topreg
