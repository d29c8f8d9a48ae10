#include "topreg/persistence.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "topreg/parallel.hpp"

namespace topreg {

int PersistenceDiagram::num_finite() const {
  int count = 0;
  for (const auto& pair : pairs) count += pair.essential ? 0 : 1;
  return count;
}

int PersistenceDiagram::total_betti() const {
  return std::accumulate(betti.begin(), betti.end(), 0);
}

namespace {

/// Positions of every cell's facets in filtration order, resolved once
/// through binary search in the complex's lex-sorted dimension lists.
struct PositionIndex {
  const SimplicialComplex* complex;
  std::vector<std::int32_t> vertex_pos;               // vertex id -> position
  std::vector<std::vector<std::int32_t>> cell_pos;    // [dim][lex index] -> position

  explicit PositionIndex(const Filtration& filtration) {
    complex = filtration.complex;
    vertex_pos.assign(complex->n_vertices, -1);
    cell_pos.resize(complex->cells.size());
    for (std::size_t d = 1; d < complex->cells.size(); ++d)
      cell_pos[d].assign(complex->cells[d].size(), -1);
    for (std::size_t pos = 0; pos < filtration.cells.size(); ++pos) {
      const auto& cell = filtration.cells[pos];
      if (cell.dim == 0) {
        vertex_pos[cell.verts[0]] = static_cast<std::int32_t>(pos);
      } else {
        const auto& level = complex->cells[cell.dim];
        auto it = std::lower_bound(level.begin(), level.end(), cell.verts);
        cell_pos[cell.dim][it - level.begin()] = static_cast<std::int32_t>(pos);
      }
    }
  }

  std::int32_t lookup(const Simplex& simplex, int dim) const {
    if (dim == 0) return vertex_pos[simplex[0]];
    const auto& level = complex->cells[dim];
    auto it = std::lower_bound(level.begin(), level.end(), simplex);
    return cell_pos[dim][it - level.begin()];
  }

  /// Facet positions, ascending.
  void boundary(const FiltrationCell& cell, std::vector<std::int32_t>& out) const {
    out.clear();
    for (int drop = 0; drop <= cell.dim; ++drop) {
      Simplex facet{-1, -1, -1, -1};
      int k = 0;
      for (int t = 0; t <= cell.dim; ++t)
        if (t != drop) facet[k++] = cell.verts[t];
      out.push_back(lookup(facet, cell.dim - 1));
    }
    std::sort(out.begin(), out.end());
  }
};

void symmetric_difference(std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b,
                          std::vector<std::int32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(scratch));
  a.swap(scratch);
}

}  // namespace

PersistenceDiagram reduce(const Filtration& filtration, int max_hom_dim) {
  const SimplicialComplex& complex = *filtration.complex;
  const int complex_dim = std::max(complex.dimension(), 0);
  if (max_hom_dim < 0 || max_hom_dim > complex_dim)
    throw std::invalid_argument("reduce: max_hom_dim must lie in [0, complex dimension]");

  const auto& cells = filtration.cells;
  const std::size_t n_cells = cells.size();
  PositionIndex index(filtration);

  std::vector<std::int32_t> partner(n_cells, -1);
  std::vector<std::int32_t> owner(n_cells, -1);  // pivot position -> stored column
  std::vector<std::vector<std::int32_t>> columns;
  std::vector<std::int32_t> col, scratch;

  // Reduce by decreasing dimension so that pivots clear the known
  // creator columns below (twist optimization).
  const int top_dim = std::min(complex_dim, max_hom_dim + 1);
  for (int d = top_dim; d >= 1; --d) {
    std::fill(owner.begin(), owner.end(), -1);
    columns.clear();
    for (std::size_t j = 0; j < n_cells; ++j) {
      if (cells[j].dim != d || partner[j] != -1) continue;
      index.boundary(cells[j], col);
      while (!col.empty()) {
        std::int32_t low = col.back();
        std::int32_t other = owner[low];
        if (other == -1) break;
        symmetric_difference(col, columns[other], scratch);
      }
      if (!col.empty()) {
        std::int32_t low = col.back();
        owner[low] = static_cast<std::int32_t>(columns.size());
        partner[low] = static_cast<std::int32_t>(j);
        partner[j] = low;
        columns.push_back(col);
      }
    }
  }

  PersistenceDiagram diagram;
  diagram.max_value = filtration.max_value();
  diagram.max_vertex = filtration.max_vertex();
  diagram.n_vertices = complex.n_vertices;
  diagram.betti.assign(max_hom_dim + 1, 0);
  for (std::size_t j = 0; j < n_cells; ++j) {
    const auto& cell = cells[j];
    if (partner[j] == -1) {
      if (cell.dim <= max_hom_dim) {
        diagram.pairs.push_back({cell.dim, cell.value, diagram.max_value, cell.max_vertex,
                                 diagram.max_vertex, true});
        ++diagram.betti[cell.dim];
      }
    } else if (partner[j] > static_cast<std::int32_t>(j)) {
      const auto& death = cells[partner[j]];
      if (death.value > cell.value && cell.dim <= max_hom_dim)
        diagram.pairs.push_back(
            {cell.dim, cell.value, death.value, cell.max_vertex, death.max_vertex, false});
    }
  }
  return diagram;
}

PersistenceDiagram h0_union_find(const Filtration& filtration) {
  const SimplicialComplex& complex = *filtration.complex;
  const Eigen::VectorXd& f = filtration.vertex_values;
  const int n = complex.n_vertices;

  std::vector<std::int32_t> parent(n), tree_size(n, 1), birth_vtx(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::iota(birth_vtx.begin(), birth_vtx.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  // age of a component = (birth value, birth vertex); larger is younger
  auto younger = [&](std::int32_t ra, std::int32_t rb) {
    std::int32_t a = birth_vtx[ra], b = birth_vtx[rb];
    return std::pair(f(a), a) > std::pair(f(b), b) ? ra : rb;
  };

  PersistenceDiagram diagram;
  diagram.max_value = filtration.max_value();
  diagram.max_vertex = filtration.max_vertex();
  diagram.n_vertices = n;
  diagram.betti.assign(1, 0);

  for (const auto& cell : filtration.cells) {
    if (cell.dim != 1) continue;  // vertices precede their edges in the order
    std::int32_t ra = find(cell.verts[0]);
    std::int32_t rb = find(cell.verts[1]);
    if (ra == rb) continue;
    std::int32_t dying = younger(ra, rb);
    std::int32_t dying_birth = birth_vtx[dying];
    if (cell.value > f(dying_birth))
      diagram.pairs.push_back(
          {0, f(dying_birth), cell.value, dying_birth, cell.max_vertex, false});
    std::int32_t surviv_birth = birth_vtx[dying == ra ? rb : ra];
    // union by size; the merged component keeps the elder birth
    if (tree_size[ra] < tree_size[rb]) std::swap(ra, rb);
    parent[rb] = ra;
    tree_size[ra] += tree_size[rb];
    birth_vtx[ra] = surviv_birth;
  }

  for (std::int32_t v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    std::int32_t b = birth_vtx[v];
    diagram.pairs.push_back({0, f(b), diagram.max_value, b, diagram.max_vertex, true});
    ++diagram.betti[0];
  }
  std::sort(diagram.pairs.begin(), diagram.pairs.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.birth, a.death, a.birth_vertex) <
           std::tuple(b.birth, b.death, b.birth_vertex);
  });
  return diagram;
}

double total_persistence(const PersistenceDiagram& diagram, const std::vector<int>& dims) {
  for (int d : dims)
    if (d < 0 || d >= static_cast<int>(diagram.betti.size()))
      throw std::invalid_argument("total_persistence: dimension " + std::to_string(d) +
                                  " was not computed");
  double total = 0.0;
  for (const auto& pair : diagram.pairs)
    if (std::find(dims.begin(), dims.end(), pair.dim) != dims.end())
      total += pair.persistence();
  return total;
}

Eigen::VectorXd persistence_gradient(const PersistenceDiagram& diagram,
                                     const std::vector<int>& dims) {
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(diagram.n_vertices);
  for (const auto& pair : diagram.pairs) {
    if (std::find(dims.begin(), dims.end(), pair.dim) == dims.end()) continue;
    grad(pair.death_vertex) += 1.0;
    grad(pair.birth_vertex) -= 1.0;
  }
  return grad;
}

Eigen::VectorXd apply_weight_floor(Eigen::VectorXd weights) {
  double floor_value = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < weights.size(); ++j)
    if (weights(j) >= kWeightFloor) floor_value = std::min(floor_value, weights(j));
  if (!std::isfinite(floor_value)) floor_value = kWeightFloor;
  for (Eigen::Index j = 0; j < weights.size(); ++j)
    if (weights(j) < kWeightFloor) weights(j) = floor_value;
  return weights;
}

Eigen::VectorXd eigenvector_persistence(const EigenBasis& basis,
                                        const SimplicialComplex& complex,
                                        const std::vector<int>& dims) {
  if (basis.n() != complex.n_vertices)
    throw std::invalid_argument("eigenvector_persistence: vertex counts differ");
  if (dims.empty())
    throw std::invalid_argument("eigenvector_persistence: no dimensions requested");
  const int max_hom = *std::max_element(dims.begin(), dims.end());

  Eigen::VectorXd weights(basis.p());
  parallel_for(static_cast<std::size_t>(basis.p()), [&](std::size_t j) {
    Filtration filtration = lower_star(complex, basis.vectors.col(static_cast<Eigen::Index>(j)));
    PersistenceDiagram diagram = reduce(filtration, max_hom);
    weights(static_cast<Eigen::Index>(j)) = total_persistence(diagram, dims);
  });
  return apply_weight_floor(std::move(weights));
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram) {
  out << "dim,birth,death,birth_vertex,death_vertex,essential\n";
  char buf[64];
  for (const auto& pair : diagram.pairs) {
    out << pair.dim << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", pair.birth);
    out << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", pair.death);
    out << buf << ',' << pair.birth_vertex << ',' << pair.death_vertex << ','
        << (pair.essential ? 1 : 0) << "\n";
  }
}

}  // namespace topreg
