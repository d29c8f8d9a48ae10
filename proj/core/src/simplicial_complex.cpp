#include "topreg/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace topreg {

namespace {

Simplex make_simplex(std::initializer_list<int> verts) {
  Simplex s{-1, -1, -1, -1};
  int k = 0;
  for (int v : verts) s[k++] = v;
  std::sort(s.begin(), s.begin() + k);
  return s;
}

void check_budget(std::size_t total, std::size_t budget) {
  if (total > budget)
    throw std::runtime_error("flag_complex: simplex budget exceeded (" +
                             std::to_string(total) + " > " + std::to_string(budget) +
                             "); reduction cost grows cubically in the complex size");
}

}  // namespace

SimplicialComplex flag_complex(const WeightedGraph& graph, int max_dim, std::size_t budget) {
  if (max_dim < 1) throw std::invalid_argument("flag_complex: max_dim must be >= 1");
  if (max_dim > kMaxComplexDim)
    throw std::invalid_argument("flag_complex: max_dim capped at 3");

  SimplicialComplex complex;
  complex.n_vertices = graph.n;
  complex.cells.resize(max_dim + 1);

  // sorted adjacency, restricted to larger indices for clique extension
  std::vector<std::vector<std::int32_t>> adj(graph.n);
  for (const auto& e : graph.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  auto& edges = complex.cells[1];
  edges.reserve(graph.edges.size());
  for (const auto& e : graph.edges) edges.push_back(make_simplex({e.i, e.j}));
  std::sort(edges.begin(), edges.end());
  std::size_t total = static_cast<std::size_t>(graph.n) + edges.size();
  check_budget(total, budget);

  auto common_above = [&](const Simplex& s, int dim_s, std::int32_t floor_v,
                          std::vector<std::int32_t>& out) {
    out.clear();
    const auto& base = adj[s[0]];
    for (std::int32_t cand : base) {
      if (cand <= floor_v) continue;
      bool ok = true;
      for (int t = 1; t <= dim_s && ok; ++t)
        ok = std::binary_search(adj[s[t]].begin(), adj[s[t]].end(), cand);
      if (ok) out.push_back(cand);
    }
  };

  std::vector<std::int32_t> extension;
  for (int d = 2; d <= max_dim; ++d) {
    const auto& below = complex.cells[d - 1];
    auto& here = complex.cells[d];
    for (const auto& s : below) {
      common_above(s, d - 1, s[d - 1], extension);
      for (std::int32_t v : extension) {
        Simplex up = s;
        up[d] = v;
        here.push_back(up);
        check_budget(++total, budget);
      }
    }
    std::sort(here.begin(), here.end());
  }
  return complex;
}

SimplicialComplex grid_complex(int rows, int cols, bool periodic) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("grid_complex: grid must be at least 2x2");
  if (periodic && (rows < 3 || cols < 3))
    throw std::invalid_argument("grid_complex: periodic grids need rows, cols >= 3");

  SimplicialComplex complex;
  complex.n_vertices = rows * cols;
  complex.cells.resize(3);
  auto vid = [cols](int i, int j) { return i * cols + j; };

  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      bool right = periodic || i + 1 < rows;
      bool down = periodic || j + 1 < cols;
      int v = vid(i, j);
      int vr = vid((i + 1) % rows, j);
      int vd = vid(i, (j + 1) % cols);
      int vrd = vid((i + 1) % rows, (j + 1) % cols);
      if (right) complex.cells[1].push_back(make_simplex({v, vr}));
      if (down) complex.cells[1].push_back(make_simplex({v, vd}));
      if (right && down) {
        complex.cells[1].push_back(make_simplex({v, vrd}));
        complex.cells[2].push_back(make_simplex({v, vr, vrd}));
        complex.cells[2].push_back(make_simplex({v, vd, vrd}));
      }
    }
  }
  std::sort(complex.cells[1].begin(), complex.cells[1].end());
  std::sort(complex.cells[2].begin(), complex.cells[2].end());
  return complex;
}

void validate(const SimplicialComplex& complex) {
  for (std::size_t d = 1; d < complex.cells.size(); ++d) {
    const auto& cells = complex.cells[d];
    if (!std::is_sorted(cells.begin(), cells.end()))
      throw std::invalid_argument("complex: dimension " + std::to_string(d) + " not sorted");
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
      throw std::invalid_argument("complex: duplicate simplex in dimension " + std::to_string(d));
    for (const auto& s : cells) {
      for (std::size_t t = 0; t <= d; ++t) {
        if (s[t] < 0 || s[t] >= complex.n_vertices)
          throw std::invalid_argument("complex: vertex id out of range");
        if (t > 0 && s[t] <= s[t - 1])
          throw std::invalid_argument("complex: vertex tuple not strictly increasing");
      }
      if (d >= 2) {
        // every facet must be present one dimension down
        const auto& below = complex.cells[d - 1];
        for (std::size_t drop = 0; drop <= d; ++drop) {
          Simplex facet{-1, -1, -1, -1};
          int k = 0;
          for (std::size_t t = 0; t <= d; ++t)
            if (t != drop) facet[k++] = s[t];
          if (!std::binary_search(below.begin(), below.end(), facet))
            throw std::invalid_argument("complex: missing face, not closed");
        }
      }
    }
  }
}

}  // namespace topreg
