#pragma once

#include <cstdint>

#include "topreg/point_cloud.hpp"

namespace topreg {

// Synthetic datasets. All generators are pure functions of their
// parameters and the seed, and fill clean_response with the associated
// target so that noise can be added separately.

/// Uniform sample on the torus (2+cos t)cos p, (2+cos t)sin p, sin t.
/// t is drawn by rejection from density (1 + cos(t)/2) / (2 pi), p
/// uniformly on [0, 2pi). latent holds (theta, phi) per row.
PointCloud sample_torus(Eigen::Index n, std::uint64_t seed);

/// Radial sigmoid bump on the torus, in latent coordinates.
double target_torus(double theta, double phi);

/// Uniform sample of the Swiss roll (x cos x, y, x sin x) with
/// (x, y) in [1.5 pi, 3.5 pi] x [0, 21]. latent holds (x, y).
PointCloud sample_swiss_roll(Eigen::Index n, std::uint64_t seed);

double target_swiss(double x, double y);

/// Sum of four unit Gaussians (width 1) centred on the square lattice
/// (2.5, 2.5), (2.5, 7.5), (7.5, 2.5), (7.5, 7.5) inside [0, 10]^2.
double gaussian_sum_value(double x, double y);

/// The Gaussian-sum field evaluated on a regular rows x cols grid over
/// [0, 10]^2. Vertex order is row-major, matching grid_complex.
PointCloud gaussian_sum_grid(int rows, int cols);

/// The Gaussian-sum field at n points sampled uniformly in [0, 10]^2.
PointCloud gaussian_sum_samples(Eigen::Index n, std::uint64_t seed);

/// Pyramidal field on the unit square with subdivisions x subdivisions
/// cells of side eps = 1/subdivisions, sampled on the periodic
/// (2*subdivisions)^2 vertex grid. Each cell carries a pyramid of
/// height eps peaking at the cell centre and vanishing on the cell
/// boundary; with alternating set, cells checkerboard between +eps and
/// -eps (requires an even number of subdivisions). Vertex order is
/// row-major, matching grid_complex(2N, 2N, periodic).
PointCloud pyramid_field(int subdivisions, bool alternating);

/// response = clean_response + sigma * z with z iid standard normal.
/// Rejects sigma < 0 and clouds without clean_response.
PointCloud add_noise(const PointCloud& cloud, double sigma, std::uint64_t seed);

}  // namespace topreg
