#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "topreg/simplicial_complex.hpp"

namespace topreg {

struct FiltrationCell {
  double value;             // max of f over the simplex vertices
  std::int8_t dim;
  Simplex verts;            // sorted vertex tuple, padded with -1
  std::int32_t max_vertex;  // vertex attaining the max; ties -> larger index
};

/// Lower-star filtration of a vertex function. Cells are sorted by
/// (value, dimension, lexicographic vertex tuple), so every face
/// precedes its cofaces and ties resolve deterministically. References
/// the complex, which must outlive the filtration.
struct Filtration {
  const SimplicialComplex* complex = nullptr;
  std::vector<FiltrationCell> cells;
  Eigen::VectorXd vertex_values;

  double max_value() const;
  /// Vertex of maximal value, ties resolved towards the larger index.
  std::int32_t max_vertex() const;
};

Filtration lower_star(const SimplicialComplex& complex, const Eigen::VectorXd& f);

/// Text dump, one "dim v0 .. vk value" line per cell in filtration order.
void write_filtration(std::ostream& out, const Filtration& filtration);

}  // namespace topreg
