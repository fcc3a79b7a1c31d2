#pragma once

#include <cmath>
#include <stdexcept>

namespace guplab {

// Parameter bundle for the deformed algebra [X,P] = i hbar / (1 - beta p^2).
// Momentum space is the open interval (-1/sqrt(beta), 1/sqrt(beta)).
struct ModelParameters {
  double beta = 0.1;
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;

  // Dimensionless coupling governing the oscillator sector.
  double g() const { return beta * mass * omega * hbar; }

  // Half-width of the momentum interval.
  double p_max() const {
    require_deformed();
    return 1.0 / std::sqrt(beta);
  }

  // Minimal position uncertainty scale of the model.
  double min_length() const {
    require_deformed();
    return hbar * std::sqrt(beta);
  }

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(omega > 0.0))
      throw std::invalid_argument("ModelParameters: hbar, mass, omega must be positive");
    if (!(beta >= 0.0))
      throw std::invalid_argument("ModelParameters: beta must be non-negative");
  }

  // beta = 0 is admitted only by the classical-limit helpers; every deformed
  // operation calls this first.
  void require_deformed() const {
    validate();
    if (!(beta > 0.0))
      throw std::invalid_argument("ModelParameters: beta must be positive for deformed-algebra operations");
  }
};

}  // namespace guplab
