#pragma once

#include <vector>

#include "guplab/model.hpp"

namespace guplab {

// Gauss-Chebyshev (first kind) quadrature adapted to the weighted measure
// dp / sqrt(1 - beta p^2) on (-1/sqrt(beta), 1/sqrt(beta)).  Nodes are the
// Chebyshev points x_k = cos((2k-1)pi/(2N)) mapped to p = x/sqrt(beta) and
// stored in ascending order; all weights equal pi/(N sqrt(beta)).  The rule
// integrates polynomials of degree <= 2N-1 exactly against the measure.
struct ChebyshevGrid {
  ModelParameters params;
  std::vector<double> nodes;    // ascending, strictly inside the interval
  std::vector<double> weights;  // uniform, positive

  std::size_t size() const { return nodes.size(); }
  bool compatible_with(const ChebyshevGrid& o) const {
    return size() == o.size() && params.beta == o.params.beta;
  }
};

ChebyshevGrid build_grid(const ModelParameters& params, std::size_t n);

// Quadrature of sampled values against the weighted measure.
double quadrature(const ChebyshevGrid& grid, const std::vector<double>& values);

// Exact moment of p^(2k) under the weighted measure.  Odd moments vanish by
// symmetry.  Used by the exactness tests as an independent reference.
double measure_moment(const ModelParameters& params, unsigned k);

namespace defaults {
inline constexpr std::size_t kExpectationGridSize = 256;
inline constexpr std::size_t kPolynomialGridSize = 64;
}  // namespace defaults

}  // namespace guplab
