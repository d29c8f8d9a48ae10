#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

#include "topreg/filtration.hpp"
#include "topreg/spectral.hpp"

namespace topreg {

struct PersistencePair {
  int dim;
  double birth;
  double death;             // finite; essential bars are clipped at max f
  std::int32_t birth_vertex;
  std::int32_t death_vertex;  // global-max vertex for clipped essential bars
  bool essential;

  double persistence() const { return death - birth; }
};

/// Persistence diagram of a lower-star filtration. Zero-persistence
/// pairs are dropped; essential classes are kept with death clipped to
/// max f.
struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;
  std::vector<int> betti;  // essential class count per dimension 0..max_hom_dim
  double max_value = 0.0;
  std::int32_t max_vertex = -1;
  int n_vertices = 0;

  /// Number of finite (non-essential) pairs.
  int num_finite() const;
  int total_betti() const;
};

/// Boundary-matrix reduction over Z/2 with the clearing optimization,
/// homology dimensions 0..max_hom_dim (max_hom_dim must not exceed the
/// complex dimension).
PersistenceDiagram reduce(const Filtration& filtration, int max_hom_dim);

/// Elder-rule union-find fast path, dimension 0 only. Agrees exactly
/// with the dimension-0 part of reduce.
PersistenceDiagram h0_union_find(const Filtration& filtration);

/// Sum of (death - birth) over pairs whose dimension is listed in dims,
/// clipped essential bars included.
double total_persistence(const PersistenceDiagram& diagram, const std::vector<int>& dims);

/// Subgradient of total persistence in the vertex values: +1 at each
/// pair's death vertex, -1 at its birth vertex (essential bars
/// contribute via the global-max vertex).
Eigen::VectorXd persistence_gradient(const PersistenceDiagram& diagram,
                                     const std::vector<int>& dims);

/// Weights below this floor are raised to the smallest weight above it
/// (or to the floor itself); near-constant eigenvectors would otherwise
/// be unpenalized with infinite variance.
inline constexpr double kWeightFloor = 1e-8;

Eigen::VectorXd apply_weight_floor(Eigen::VectorXd weights);

/// Total persistence of each eigenvector's lower-star filtration on the
/// data complex, floored. The per-column reductions run in parallel.
Eigen::VectorXd eigenvector_persistence(const EigenBasis& basis,
                                        const SimplicialComplex& complex,
                                        const std::vector<int>& dims);

/// CSV rows "dim,birth,death,birth_vertex,death_vertex,essential".
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram);

}  // namespace topreg
