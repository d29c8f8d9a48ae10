#include "topreg/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "topreg/random.hpp"

namespace topreg {

namespace {

constexpr Eigen::Index kDenseLimit = 3000;
constexpr double kResidualTol = 1e-7;

/// Flips each column so that its entry of largest absolute value
/// (earliest index on ties) is positive.
void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index arg = 0;
    double best = std::abs(vectors(0, j));
    for (Eigen::Index i = 1; i < vectors.rows(); ++i) {
      double a = std::abs(vectors(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (vectors(arg, j) < 0) vectors.col(j) = -vectors.col(j);
  }
}

double max_residual(const Eigen::SparseMatrix<double>& mat, const Eigen::MatrixXd& vectors,
                    const Eigen::VectorXd& values) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    double r = (mat * vectors.col(j) - values(j) * vectors.col(j)).norm();
    worst = std::max(worst, r);
  }
  return worst;
}

EigenBasis dense_eigenbasis(const LaplacianMatrix& lap, Eigen::Index p) {
  Eigen::MatrixXd dense = Eigen::MatrixXd(lap.matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenbasis: dense eigendecomposition failed");
  EigenBasis basis;
  basis.eigenvalues = solver.eigenvalues().head(p);
  basis.vectors = solver.eigenvectors().leftCols(p);
  return basis;
}

/// Lanczos with full reorthogonalization on shift*I - L, so that the
/// smallest eigenvalues of L become the dominant ones.
EigenBasis lanczos_eigenbasis(const LaplacianMatrix& lap, Eigen::Index p) {
  const Eigen::Index n = lap.size();
  // Spectra of both Laplacian forms are bounded by 2 * max degree; the
  // normalized one by 2.
  double bound = lap.normalized ? 2.0 : 2.0 * lap.degree.maxCoeff();
  const double shift = bound + 0.5;

  auto rng = make_rng(0x5eedba5e);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::Index m = std::min<Eigen::Index>(n, std::max<Eigen::Index>(2 * p + 40, 60));
  double last_residual = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 5; ++attempt) {
    Eigen::MatrixXd V(n, m);
    Eigen::VectorXd alpha(m), beta(m);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
    v.normalize();
    V.col(0) = v;
    Eigen::VectorXd w(n);
    Eigen::Index built = 0;
    for (Eigen::Index k = 0; k < m; ++k) {
      w = shift * V.col(k) - lap.matrix * V.col(k);
      alpha(k) = V.col(k).dot(w);
      w -= alpha(k) * V.col(k);
      if (k > 0) w -= beta(k - 1) * V.col(k - 1);
      // full reorthogonalization, two passes
      for (int pass = 0; pass < 2; ++pass)
        w -= V.leftCols(k + 1) * (V.leftCols(k + 1).transpose() * w);
      built = k + 1;
      if (k + 1 == m) break;
      double norm = w.norm();
      if (norm < 1e-12) {
        // invariant subspace; continue with a fresh orthogonal direction
        for (Eigen::Index i = 0; i < n; ++i) w(i) = normal(rng);
        for (int pass = 0; pass < 2; ++pass)
          w -= V.leftCols(k + 1) * (V.leftCols(k + 1).transpose() * w);
        norm = w.norm();
        if (norm < 1e-12) break;
        beta(k) = 0.0;
      } else {
        beta(k) = norm;
      }
      V.col(k + 1) = w / norm;
    }

    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(built, built);
    for (Eigen::Index k = 0; k < built; ++k) {
      tri(k, k) = alpha(k);
      if (k + 1 < built) tri(k, k + 1) = tri(k + 1, k) = beta(k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("eigenbasis: tridiagonal eigendecomposition failed");

    if (built >= p) {
      // Ritz pairs for the largest eigenvalues of shift*I - L
      EigenBasis basis;
      basis.eigenvalues.resize(p);
      basis.vectors.resize(n, p);
      for (Eigen::Index j = 0; j < p; ++j) {
        Eigen::Index src = built - 1 - j;
        basis.eigenvalues(j) = shift - solver.eigenvalues()(src);
        basis.vectors.col(j) = V.leftCols(built) * solver.eigenvectors().col(src);
        basis.vectors.col(j).normalize();
      }
      last_residual = max_residual(lap.matrix, basis.vectors, basis.eigenvalues);
      if (last_residual <= kResidualTol) return basis;
    }
    if (m == n) break;
    m = std::min(n, 2 * m);
  }
  char msg[160];
  std::snprintf(msg, sizeof(msg),
                "eigenbasis: Lanczos did not converge, max residual %.3e (tol %.1e)",
                last_residual, kResidualTol);
  throw std::runtime_error(msg);
}

}  // namespace

EigenBasis eigenbasis(const LaplacianMatrix& lap, Eigen::Index p, EigenMethod method) {
  const Eigen::Index n = lap.size();
  if (p < 1 || p > n)
    throw std::invalid_argument("eigenbasis: need 1 <= p <= n");
  bool dense = method == EigenMethod::dense ||
               (method == EigenMethod::automatic && n <= kDenseLimit);
  EigenBasis basis = dense ? dense_eigenbasis(lap, p) : lanczos_eigenbasis(lap, p);
  fix_signs(basis.vectors);
  double residual = max_residual(lap.matrix, basis.vectors, basis.eigenvalues);
  if (residual > kResidualTol) {
    char msg[128];
    std::snprintf(msg, sizeof(msg), "eigenbasis: residual %.3e exceeds tolerance %.1e",
                  residual, kResidualTol);
    throw std::runtime_error(msg);
  }
  return basis;
}

Eigen::VectorXd eigenvector_tv(const EigenBasis& basis, const WeightedGraph& graph) {
  if (basis.n() != graph.n)
    throw std::invalid_argument("eigenvector_tv: basis and graph vertex counts differ");
  Eigen::VectorXd tv(basis.p());
  for (Eigen::Index j = 0; j < basis.p(); ++j)
    tv(j) = graph_total_variation(graph, basis.vectors.col(j));
  return tv;
}

void write_basis_csv(std::ostream& out, const EigenBasis& basis) {
  out << "lambda";
  for (Eigen::Index i = 0; i < basis.n(); ++i) out << ",phi_" << i;
  out << "\n";
  char buf[64];
  for (Eigen::Index j = 0; j < basis.p(); ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g", basis.eigenvalues(j));
    out << buf;
    for (Eigen::Index i = 0; i < basis.n(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", basis.vectors(i, j));
      out << ',' << buf;
    }
    out << "\n";
  }
}

namespace {
constexpr char kBasisMagic[8] = {'T', 'P', 'R', 'B', 'A', 'S', 'I', 'S'};
}

void write_basis_binary(std::ostream& out, const EigenBasis& basis) {
  std::uint32_t n = static_cast<std::uint32_t>(basis.n());
  std::uint32_t p = static_cast<std::uint32_t>(basis.p());
  out.write(kBasisMagic, 8);
  out.write(reinterpret_cast<const char*>(&n), 4);
  out.write(reinterpret_cast<const char*>(&p), 4);
  out.write(reinterpret_cast<const char*>(basis.eigenvalues.data()),
            static_cast<std::streamsize>(p * sizeof(double)));
  out.write(reinterpret_cast<const char*>(basis.vectors.data()),
            static_cast<std::streamsize>(static_cast<std::size_t>(n) * p * sizeof(double)));
}

EigenBasis read_basis_binary(std::istream& in) {
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kBasisMagic, 8) != 0)
    throw std::runtime_error("read_basis_binary: bad magic");
  std::uint32_t n = 0, p = 0;
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&p), 4);
  EigenBasis basis;
  basis.eigenvalues.resize(p);
  basis.vectors.resize(n, p);
  in.read(reinterpret_cast<char*>(basis.eigenvalues.data()),
          static_cast<std::streamsize>(p * sizeof(double)));
  in.read(reinterpret_cast<char*>(basis.vectors.data()),
          static_cast<std::streamsize>(static_cast<std::size_t>(n) * p * sizeof(double)));
  if (!in) throw std::runtime_error("read_basis_binary: truncated stream");
  return basis;
}

}  // namespace topreg
