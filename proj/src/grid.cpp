#include "guplab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace guplab {

ChebyshevGrid build_grid(const ModelParameters& params, std::size_t n) {
  params.require_deformed();
  if (n < 2) throw std::invalid_argument("build_grid: need at least 2 nodes");

  const double s = std::sqrt(params.beta);
  ChebyshevGrid grid;
  grid.params = params;
  grid.nodes.resize(n);
  grid.weights.assign(n, std::numbers::pi / (static_cast<double>(n) * s));
  for (std::size_t k = 1; k <= n; ++k) {
    const double x = std::cos((2.0 * static_cast<double>(k) - 1.0) * std::numbers::pi /
                              (2.0 * static_cast<double>(n)));
    // cos of the decreasing angle sequence is increasing; fill front to back.
    grid.nodes[k - 1] = -x / s;
  }
  return grid;
}

double quadrature(const ChebyshevGrid& grid, const std::vector<double>& values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("quadrature: value count does not match grid");
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += grid.weights[i] * values[i];
  return acc;
}

double measure_moment(const ModelParameters& params, unsigned k) {
  params.require_deformed();
  // int x^{2k} / sqrt(1-x^2) dx over (-1,1) equals pi (2k-1)!!/(2k)!!.
  double ratio = 1.0;
  for (unsigned j = 1; j <= k; ++j) ratio *= (2.0 * j - 1.0) / (2.0 * j);
  const double s = std::sqrt(params.beta);
  return std::numbers::pi * ratio / (s * std::pow(params.beta, static_cast<double>(k)));
}

}  // namespace guplab
