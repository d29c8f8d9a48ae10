#include "topreg/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace topreg {

double Filtration::max_value() const { return vertex_values.maxCoeff(); }

std::int32_t Filtration::max_vertex() const {
  std::int32_t arg = 0;
  for (Eigen::Index i = 1; i < vertex_values.size(); ++i)
    if (vertex_values(i) >= vertex_values(arg)) arg = static_cast<std::int32_t>(i);
  return arg;
}

Filtration lower_star(const SimplicialComplex& complex, const Eigen::VectorXd& f) {
  if (f.size() != complex.n_vertices)
    throw std::invalid_argument("lower_star: value count does not match vertex count");
  if (!f.allFinite()) throw std::invalid_argument("lower_star: non-finite vertex value");

  Filtration filtration;
  filtration.complex = &complex;
  filtration.vertex_values = f;
  filtration.cells.reserve(complex.total_cells());

  for (std::int32_t v = 0; v < complex.n_vertices; ++v)
    filtration.cells.push_back({f(v), 0, Simplex{v, -1, -1, -1}, v});

  for (std::size_t d = 1; d < complex.cells.size(); ++d) {
    for (const auto& s : complex.cells[d]) {
      double value = f(s[0]);
      std::int32_t maxv = s[0];
      for (std::size_t t = 1; t <= d; ++t) {
        // ties resolve to the larger vertex index, matching the order
        // in which vertices enter the filtration
        if (f(s[t]) >= value) {
          value = f(s[t]);
          maxv = s[t];
        }
      }
      filtration.cells.push_back({value, static_cast<std::int8_t>(d), s, maxv});
    }
  }

  std::sort(filtration.cells.begin(), filtration.cells.end(),
            [](const FiltrationCell& a, const FiltrationCell& b) {
              if (a.value != b.value) return a.value < b.value;
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.verts < b.verts;
            });
  return filtration;
}

void write_filtration(std::ostream& out, const Filtration& filtration) {
  char buf[64];
  for (const auto& cell : filtration.cells) {
    out << static_cast<int>(cell.dim);
    for (int t = 0; t <= cell.dim; ++t) out << ' ' << cell.verts[t];
    std::snprintf(buf, sizeof(buf), "%.17g", cell.value);
    out << ' ' << buf << "\n";
  }
}

}  // namespace topreg
