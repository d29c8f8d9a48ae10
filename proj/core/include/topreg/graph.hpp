#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "topreg/point_cloud.hpp"

namespace topreg {

enum class GraphKind { knn, gaussian, grid };

std::string to_string(GraphKind kind);

struct WeightedEdge {
  int i;
  int j;  // i < j
  double w;
};

/// Undirected weighted proximity graph. Edges are stored once with
/// i < j, strictly positive finite weights, no duplicates.
struct WeightedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;
  GraphKind kind = GraphKind::knn;
};

/// Throws std::invalid_argument on a violated structural invariant.
void validate(const WeightedGraph& graph);

/// Symmetrized k-nearest-neighbour graph in the ambient metric: edge
/// (i, j) present iff j is among the k nearest of i or vice versa.
/// Unit weights; distance ties are broken by smaller index.
WeightedGraph knn_graph(const PointCloud& cloud, int k);

/// Default neighbour count round(log n), clamped to [3, n-1].
int default_knn_k(Eigen::Index n);

/// Gaussian-similarity graph with heat-kernel normalization
///   W_ij = (1/n) (1 / (t (4 pi t)^{d/2})) exp(-|x_i - x_j|^2 / (4t)).
/// Pairs farther apart than cutoff are dropped (cutoff <= 0 keeps all).
WeightedGraph gaussian_graph(const PointCloud& cloud, double t, int intrinsic_dim,
                             double cutoff = 0.0);

/// Regular grid graph on rows x cols vertices (row-major ids i*cols+j).
/// Edges go right, down and, if diagonals is set, to (i+1, j+1); with
/// periodic set the indices wrap (requires rows, cols >= 3). All edges
/// carry the given weight. The diagonal variant is the 1-skeleton of
/// grid_complex.
WeightedGraph grid_graph(int rows, int cols, bool periodic, bool diagonals,
                         double weight = 1.0);

/// Cycle graph v_0 - v_1 - ... - v_{n-1} - v_0, constant weight.
WeightedGraph cycle_graph(int n, double weight = 1.0);

Eigen::VectorXd degrees(const WeightedGraph& graph);

int connected_components(const WeightedGraph& graph);

/// Sum over edges of w |f_i - f_j|.
double graph_total_variation(const WeightedGraph& graph, const Eigen::VectorXd& f);

/// Edge-list text format: header "# n=<n> kind=<kind>", then one
/// "i j w" line per edge.
void write_graph(std::ostream& out, const WeightedGraph& graph);

}  // namespace topreg
