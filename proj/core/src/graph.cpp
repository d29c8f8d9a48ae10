#include "topreg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace topreg {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::knn: return "knn";
    case GraphKind::gaussian: return "gaussian";
    case GraphKind::grid: return "grid";
  }
  return "?";
}

void validate(const WeightedGraph& graph) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : graph.edges) {
    if (e.i < 0 || e.j >= graph.n || e.i >= e.j)
      throw std::invalid_argument("graph: edge endpoints must satisfy 0 <= i < j < n");
    if (!(e.w > 0) || !std::isfinite(e.w))
      throw std::invalid_argument("graph: weights must be positive and finite");
    if (!seen.emplace(e.i, e.j).second)
      throw std::invalid_argument("graph: duplicate edge");
  }
}

int default_knn_k(Eigen::Index n) {
  int k = static_cast<int>(std::lround(std::log(static_cast<double>(std::max<Eigen::Index>(n, 2)))));
  k = std::max(k, 3);
  k = std::min<int>(k, static_cast<int>(n) - 1);
  return k;
}

WeightedGraph knn_graph(const PointCloud& cloud, int k) {
  const int n = static_cast<int>(cloud.size());
  if (n == 0) throw std::invalid_argument("knn_graph: empty cloud");
  if (k < 1 || k >= n)
    throw std::invalid_argument("knn_graph: need 1 <= k < n, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));

  std::set<std::pair<int, int>> edge_set;
  std::vector<std::pair<double, int>> dist(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      dist[j] = {(cloud.points.row(i) - cloud.points.row(j)).squaredNorm(), j};
    dist[i].first = std::numeric_limits<double>::infinity();
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    for (int m = 0; m < k; ++m) {
      int j = dist[m].second;
      edge_set.emplace(std::min(i, j), std::max(i, j));
    }
  }

  WeightedGraph graph;
  graph.n = n;
  graph.kind = GraphKind::knn;
  graph.edges.reserve(edge_set.size());
  for (const auto& [i, j] : edge_set) graph.edges.push_back({i, j, 1.0});
  return graph;
}

WeightedGraph gaussian_graph(const PointCloud& cloud, double t, int intrinsic_dim,
                             double cutoff) {
  if (!(t > 0)) throw std::invalid_argument("gaussian_graph: t must be positive");
  const int n = static_cast<int>(cloud.size());
  const double d = static_cast<double>(intrinsic_dim);
  const double scale =
      1.0 / (n * t * std::pow(4.0 * std::numbers::pi * t, d / 2.0));
  const double cutoff_sq = cutoff > 0 ? cutoff * cutoff : std::numeric_limits<double>::infinity();

  WeightedGraph graph;
  graph.n = n;
  graph.kind = GraphKind::gaussian;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d2 = (cloud.points.row(i) - cloud.points.row(j)).squaredNorm();
      if (d2 > cutoff_sq) continue;
      double w = scale * std::exp(-d2 / (4.0 * t));
      if (w > 0) graph.edges.push_back({i, j, w});
    }
  }
  return graph;
}

WeightedGraph grid_graph(int rows, int cols, bool periodic, bool diagonals, double weight) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid_graph: grid must be at least 2x2");
  if (periodic && (rows < 3 || cols < 3))
    throw std::invalid_argument("grid_graph: periodic grids need rows, cols >= 3");
  if (!(weight > 0)) throw std::invalid_argument("grid_graph: weight must be positive");

  WeightedGraph graph;
  graph.n = rows * cols;
  graph.kind = GraphKind::grid;
  auto vid = [cols](int i, int j) { return i * cols + j; };
  auto add = [&](int a, int b) {
    graph.edges.push_back({std::min(a, b), std::max(a, b), weight});
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      bool right = periodic || i + 1 < rows;
      bool down = periodic || j + 1 < cols;
      if (right) add(vid(i, j), vid((i + 1) % rows, j));
      if (down) add(vid(i, j), vid(i, (j + 1) % cols));
      if (diagonals && right && down) add(vid(i, j), vid((i + 1) % rows, (j + 1) % cols));
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  return graph;
}

WeightedGraph cycle_graph(int n, double weight) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  WeightedGraph graph;
  graph.n = n;
  graph.kind = GraphKind::grid;
  for (int i = 0; i + 1 < n; ++i) graph.edges.push_back({i, i + 1, weight});
  graph.edges.push_back({0, n - 1, weight});
  std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  return graph;
}

Eigen::VectorXd degrees(const WeightedGraph& graph) {
  Eigen::VectorXd deg = Eigen::VectorXd::Zero(graph.n);
  for (const auto& e : graph.edges) {
    deg(e.i) += e.w;
    deg(e.j) += e.w;
  }
  return deg;
}

namespace {
int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}
}  // namespace

int connected_components(const WeightedGraph& graph) {
  std::vector<int> parent(graph.n);
  std::iota(parent.begin(), parent.end(), 0);
  int components = graph.n;
  for (const auto& e : graph.edges) {
    int a = find_root(parent, e.i);
    int b = find_root(parent, e.j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

double graph_total_variation(const WeightedGraph& graph, const Eigen::VectorXd& f) {
  if (f.size() != graph.n)
    throw std::invalid_argument("graph_total_variation: size mismatch");
  double tv = 0.0;
  for (const auto& e : graph.edges) tv += e.w * std::abs(f(e.i) - f(e.j));
  return tv;
}

void write_graph(std::ostream& out, const WeightedGraph& graph) {
  out << "# n=" << graph.n << " kind=" << to_string(graph.kind) << "\n";
  char buf[64];
  for (const auto& e : graph.edges) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.w);
    out << e.i << ' ' << e.j << ' ' << buf << "\n";
  }
}

}  // namespace topreg
