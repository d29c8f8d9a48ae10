#include "topreg/laplacian.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace topreg {

LaplacianMatrix laplacian(const WeightedGraph& graph, bool normalized) {
  const int n = graph.n;
  Eigen::VectorXd deg = degrees(graph);
  if (normalized) {
    for (int v = 0; v < n; ++v)
      if (deg(v) <= 0)
        throw std::invalid_argument(
            "laplacian: cannot normalize, vertex " + std::to_string(v) + " is isolated");
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * graph.edges.size() + n);
  if (normalized) {
    Eigen::VectorXd inv_sqrt = deg.array().sqrt().inverse();
    for (const auto& e : graph.edges) {
      double w = e.w * inv_sqrt(e.i) * inv_sqrt(e.j);
      triplets.emplace_back(e.i, e.j, -w);
      triplets.emplace_back(e.j, e.i, -w);
    }
    for (int v = 0; v < n; ++v) triplets.emplace_back(v, v, 1.0);
  } else {
    for (const auto& e : graph.edges) {
      triplets.emplace_back(e.i, e.j, -e.w);
      triplets.emplace_back(e.j, e.i, -e.w);
    }
    for (int v = 0; v < n; ++v) triplets.emplace_back(v, v, deg(v));
  }

  LaplacianMatrix lap;
  lap.matrix.resize(n, n);
  lap.matrix.setFromTriplets(triplets.begin(), triplets.end());
  lap.normalized = normalized;
  lap.degree = std::move(deg);
  return lap;
}

}  // namespace topreg
