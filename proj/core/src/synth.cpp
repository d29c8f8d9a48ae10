#include "topreg/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "topreg/random.hpp"

namespace topreg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
}  // namespace

void validate(const PointCloud& cloud) {
  if (!cloud.points.allFinite())
    throw std::invalid_argument("point cloud: non-finite coordinate");
  const auto n = cloud.size();
  if (cloud.has_latent() && cloud.latent.rows() != n)
    throw std::invalid_argument("point cloud: latent row count mismatch");
  if (cloud.has_clean() && cloud.clean_response.size() != n)
    throw std::invalid_argument("point cloud: clean_response length mismatch");
  if (cloud.has_response() && cloud.response.size() != n)
    throw std::invalid_argument("point cloud: response length mismatch");
}

double target_torus(double theta, double phi) {
  const double pi = std::numbers::pi;
  double r = std::hypot(theta - pi, phi - pi);
  return sigmoid(-17.0 * (r - 0.6 * pi));
}

PointCloud sample_torus(Eigen::Index n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_torus: n must be nonnegative");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  PointCloud cloud;
  cloud.points.resize(n, 3);
  cloud.latent.resize(n, 2);
  cloud.clean_response.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // theta ~ (1 + cos(theta)/2) / (2 pi), rejection against the
    // uniform envelope with bound 1.5
    double theta;
    for (;;) {
      theta = angle(rng);
      double u = unit(rng);
      if (1.5 * u <= 1.0 + 0.5 * std::cos(theta)) break;
    }
    double phi = angle(rng);
    cloud.latent(i, 0) = theta;
    cloud.latent(i, 1) = phi;
    cloud.points(i, 0) = (2.0 + std::cos(theta)) * std::cos(phi);
    cloud.points(i, 1) = (2.0 + std::cos(theta)) * std::sin(phi);
    cloud.points(i, 2) = std::sin(theta);
    cloud.clean_response(i) = target_torus(theta, phi);
  }
  return cloud;
}

double target_swiss(double x, double y) {
  double g = 4.0 * std::exp(-((y - 7.0) * (y - 7.0) / 20.0 + (x - 6.0) * (x - 6.0) / 5.0));
  double c = std::cos(x);
  double s = std::sin(y);
  return g + 2.0 * c * c * s * s;
}

PointCloud sample_swiss_roll(Eigen::Index n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_swiss_roll: n must be nonnegative");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> xdist(1.5 * std::numbers::pi, 3.5 * std::numbers::pi);
  std::uniform_real_distribution<double> ydist(0.0, 21.0);

  PointCloud cloud;
  cloud.points.resize(n, 3);
  cloud.latent.resize(n, 2);
  cloud.clean_response.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double x = xdist(rng);
    double y = ydist(rng);
    cloud.latent(i, 0) = x;
    cloud.latent(i, 1) = y;
    cloud.points(i, 0) = x * std::cos(x);
    cloud.points(i, 1) = y;
    cloud.points(i, 2) = x * std::sin(x);
    cloud.clean_response(i) = target_swiss(x, y);
  }
  return cloud;
}

double gaussian_sum_value(double x, double y) {
  static constexpr double centers[4][2] = {
      {2.5, 2.5}, {2.5, 7.5}, {7.5, 2.5}, {7.5, 7.5}};
  double v = 0.0;
  for (const auto& c : centers) {
    double dx = x - c[0];
    double dy = y - c[1];
    v += std::exp(-0.5 * (dx * dx + dy * dy));
  }
  return v;
}

PointCloud gaussian_sum_grid(int rows, int cols) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("gaussian_sum_grid: grid must be at least 2x2");
  PointCloud cloud;
  const Eigen::Index n = static_cast<Eigen::Index>(rows) * cols;
  cloud.points.resize(n, 2);
  cloud.clean_response.resize(n);
  for (int i = 0; i < rows; ++i) {
    double x = 10.0 * i / (rows - 1);
    for (int j = 0; j < cols; ++j) {
      double y = 10.0 * j / (cols - 1);
      Eigen::Index v = static_cast<Eigen::Index>(i) * cols + j;
      cloud.points(v, 0) = x;
      cloud.points(v, 1) = y;
      cloud.clean_response(v) = gaussian_sum_value(x, y);
    }
  }
  return cloud;
}

PointCloud gaussian_sum_samples(Eigen::Index n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gaussian_sum_samples: n must be nonnegative");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  PointCloud cloud;
  cloud.points.resize(n, 2);
  cloud.clean_response.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double x = coord(rng);
    double y = coord(rng);
    cloud.points(i, 0) = x;
    cloud.points(i, 1) = y;
    cloud.clean_response(i) = gaussian_sum_value(x, y);
  }
  return cloud;
}

PointCloud pyramid_field(int subdivisions, bool alternating) {
  if (subdivisions < 2)
    throw std::invalid_argument("pyramid_field: need at least 2 subdivisions");
  if (alternating && subdivisions % 2 != 0)
    throw std::invalid_argument("pyramid_field: alternating needs an even subdivision count");
  const int g = 2 * subdivisions;  // vertices per direction: cell corners and centres
  const double eps = 1.0 / subdivisions;
  PointCloud cloud;
  const Eigen::Index n = static_cast<Eigen::Index>(g) * g;
  cloud.points.resize(n, 2);
  cloud.clean_response.resize(n);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      Eigen::Index v = static_cast<Eigen::Index>(i) * g + j;
      cloud.points(v, 0) = static_cast<double>(i) / g;
      cloud.points(v, 1) = static_cast<double>(j) / g;
      double value = 0.0;
      if (i % 2 == 1 && j % 2 == 1) {  // cell centre
        value = eps;
        if (alternating && ((i / 2) + (j / 2)) % 2 == 1) value = -eps;
      }
      cloud.clean_response(v) = value;
    }
  }
  return cloud;
}

PointCloud add_noise(const PointCloud& cloud, double sigma, std::uint64_t seed) {
  if (sigma < 0) throw std::invalid_argument("add_noise: sigma must be nonnegative");
  if (!cloud.has_clean())
    throw std::invalid_argument("add_noise: cloud has no clean_response");
  PointCloud out = cloud;
  out.response = cloud.clean_response;
  if (sigma > 0) {
    auto rng = make_rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (Eigen::Index i = 0; i < out.response.size(); ++i)
      out.response(i) += sigma * normal(rng);
  }
  return out;
}

}  // namespace topreg
