#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "topreg/graph.hpp"

namespace topreg {

/// Vertex tuple of a simplex, strictly increasing, padded with -1.
using Simplex = std::array<std::int32_t, 4>;

inline constexpr int kMaxComplexDim = 3;

/// Simplicial complex on vertices 0..n-1. cells[d] lists the
/// d-simplices (d >= 1) in lexicographic order; vertices are implicit.
/// Closed under faces by construction.
struct SimplicialComplex {
  int n_vertices = 0;
  std::vector<std::vector<Simplex>> cells;  // index = dimension, [0] unused

  int dimension() const {
    for (int d = static_cast<int>(cells.size()) - 1; d >= 1; --d)
      if (!cells[d].empty()) return d;
    return n_vertices > 0 ? 0 : -1;
  }

  std::size_t count(int dim) const {
    if (dim == 0) return static_cast<std::size_t>(n_vertices);
    if (dim < 0 || dim >= static_cast<int>(cells.size())) return 0;
    return cells[dim].size();
  }

  std::size_t total_cells() const {
    std::size_t total = static_cast<std::size_t>(n_vertices);
    for (std::size_t d = 1; d < cells.size(); ++d) total += cells[d].size();
    return total;
  }
};

/// Flag (clique) complex of a graph up to dimension max_dim <= 3.
/// Throws std::runtime_error when the number of simplices would exceed
/// the budget; cubic-cost reduction downstream makes unbounded
/// complexes infeasible.
SimplicialComplex flag_complex(const WeightedGraph& graph, int max_dim,
                               std::size_t budget = 5'000'000);

/// Triangulated rows x cols grid (row-major vertex ids), each cell split
/// along the (i, j) -> (i+1, j+1) diagonal. Periodic grids wrap both
/// directions and require rows, cols >= 3.
SimplicialComplex grid_complex(int rows, int cols, bool periodic);

/// Checks uniqueness, ordering and face closure; throws on violation.
void validate(const SimplicialComplex& complex);

}  // namespace topreg
