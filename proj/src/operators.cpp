#include "guplab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace guplab {

namespace {

// Jet of the multiplication symbol p / sqrt(1 - beta p^2).
Jet momentum_symbol(double p, double beta) {
  const double d = 1.0 - beta * p * p;
  const double r = std::sqrt(d);
  const double f0 = p / r;
  const double f1 = 1.0 / (d * r);
  const double f2 = 3.0 * beta * p / (d * d * r);
  const double f3 = 3.0 * beta * (1.0 + 4.0 * beta * p * p) / (d * d * d * r);
  return {{f0, 0.0}, {f1, 0.0}, {f2, 0.0}, {f3, 0.0}};
}

}  // namespace

AnalyticState apply_P(const AnalyticState& state) {
  state.params.require_deformed();
  AnalyticState out;
  out.order = state.order;
  out.params = state.params;
  out.eval = [inner = state.eval, beta = state.params.beta](double p) {
    return momentum_symbol(p, beta) * inner(p);
  };
  return out;
}

AnalyticState apply_X(const AnalyticState& state) {
  state.params.require_deformed();
  if (state.order < 1)
    throw std::invalid_argument("apply_X: state carries no trusted derivative");
  AnalyticState out;
  out.order = state.order - 1;
  out.params = state.params;
  const Complex ih{0.0, state.params.hbar};
  out.eval = [inner = state.eval, beta = state.params.beta, ih](double p) {
    return ih * (jet_sqrt_envelope(p, beta) * inner(p).shifted());
  };
  return out;
}

std::vector<double> commutator_residual(const AnalyticState& state,
                                        const std::vector<double>& probes) {
  if (state.order < 2)
    throw std::invalid_argument("commutator_residual: need jet order >= 2");
  const AnalyticState xp = apply_X(apply_P(state));
  const AnalyticState px = apply_P(apply_X(state));
  const double beta = state.params.beta;
  const Complex ih{0.0, state.params.hbar};

  std::vector<double> out;
  out.reserve(probes.size());
  for (double p : probes) {
    const Complex lhs = xp.at(p).f - px.at(p).f;
    const Complex rhs = ih * state.at(p).f / (1.0 - beta * p * p);
    const double scale = std::abs(rhs);
    const double diff = std::abs(lhs - rhs);
    out.push_back(scale > 1e-14 ? diff / scale : diff);
  }
  return out;
}

double max_commutator_residual(const AnalyticState& state, const std::vector<double>& probes) {
  double worst = 0.0;
  for (double r : commutator_residual(state, probes)) worst = std::max(worst, r);
  return worst;
}

Complex inner_product(const SampledState& a, const SampledState& b) {
  if (!a.grid.compatible_with(b.grid))
    throw std::invalid_argument("inner_product: sampled states live on different grids");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    acc += a.grid.weights[i] * std::conj(a.values[i]) * b.values[i];
  return acc;
}

Complex inner_product(const AnalyticState& a, const AnalyticState& b, const ChebyshevGrid& grid) {
  return inner_product(sample(a, grid), sample(b, grid));
}

double norm(const AnalyticState& a, const ChebyshevGrid& grid) {
  return std::sqrt(std::real(inner_product(a, a, grid)));
}

double symmetry_defect_X(const AnalyticState& a, const AnalyticState& b,
                         const ChebyshevGrid& grid) {
  const AnalyticState xa = apply_X(a), xb = apply_X(b);
  return std::abs(inner_product(xa, b, grid) - inner_product(a, xb, grid));
}

double symmetry_defect_P(const AnalyticState& a, const AnalyticState& b,
                         const ChebyshevGrid& grid) {
  const AnalyticState pa = apply_P(a), pb = apply_P(b);
  return std::abs(inner_product(pa, b, grid) - inner_product(a, pb, grid));
}

AnalyticState apply_oscillator_hamiltonian(const AnalyticState& state) {
  if (state.order < 2)
    throw std::invalid_argument("apply_oscillator_hamiltonian: need jet order >= 2");
  const ModelParameters& pp = state.params;
  const AnalyticState pp_term = apply_P(apply_P(state));
  const AnalyticState xx_term = apply_X(apply_X(state));
  return combine(pp_term, xx_term, 1.0 / (2.0 * pp.mass), 0.5 * pp.mass * pp.omega * pp.omega);
}

namespace {

struct Moments {
  double norm2 = 0.0;
  double mean_X = 0.0, mean_P = 0.0;
  double var_X = 0.0, var_P = 0.0;
  double p2_lower = 0.0, p2_deformed = 0.0;
  double robertson = 0.0;
};

Moments raw_moments(const AnalyticState& state, const ChebyshevGrid& grid) {
  const AnalyticState xs = apply_X(state);
  const AnalyticState ps = apply_P(state);

  const std::size_t n = grid.size();
  std::vector<Complex> v(n), xv(n), pv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = grid.nodes[i];
    v[i] = state.eval(p).f;
    xv[i] = xs.eval(p).f;
    pv[i] = ps.eval(p).f;
  }

  Moments m;
  Complex xp{0.0, 0.0};
  double sx = 0.0, sp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = grid.weights[i];
    m.norm2 += w * std::norm(v[i]);
    sx += w * std::real(std::conj(v[i]) * xv[i]);
    sp += w * std::real(std::conj(v[i]) * pv[i]);
    m.p2_lower += w * grid.nodes[i] * grid.nodes[i] * std::norm(v[i]);
    m.p2_deformed += w * std::norm(pv[i]);
    xp += w * std::conj(xv[i]) * pv[i];
  }
  if (!(m.norm2 > 0.0)) throw std::invalid_argument("expectation_report: zero-norm state");

  m.mean_X = sx / m.norm2;
  m.mean_P = sp / m.norm2;
  m.p2_lower /= m.norm2;
  m.p2_deformed /= m.norm2;
  // <[X,P]> = <Xpsi|Ppsi> - <Ppsi|Xpsi> = 2i Im <Xpsi|Ppsi>.
  m.robertson = std::abs(std::imag(xp)) / m.norm2;

  for (std::size_t i = 0; i < n; ++i) {
    const double w = grid.weights[i];
    m.var_X += w * std::norm(xv[i] - m.mean_X * v[i]);
    m.var_P += w * std::norm(pv[i] - m.mean_P * v[i]);
  }
  m.var_X /= m.norm2;
  m.var_P /= m.norm2;
  return m;
}

}  // namespace

ExpectationReport expectation_report(const AnalyticState& state, const ChebyshevGrid& grid) {
  if (state.order < 1)
    throw std::invalid_argument("expectation_report: need jet order >= 1");

  const Moments m = raw_moments(state, grid);
  const ChebyshevGrid doubled = build_grid(grid.params, 2 * grid.size());
  const Moments md = raw_moments(state, doubled);

  ExpectationReport rep;
  rep.norm = std::sqrt(m.norm2);
  rep.mean_X = m.mean_X;
  rep.mean_P = m.mean_P;
  rep.var_X = m.var_X;
  rep.mean_p2_lower = m.p2_lower;

  // Grid-doubling probe: a boundary-non-integrable deformed moment keeps
  // growing with resolution instead of settling.
  const double scale = std::max({std::abs(m.p2_deformed), std::abs(md.p2_deformed), 1e-300});
  if (std::abs(md.p2_deformed - m.p2_deformed) > 0.25 * scale) {
    rep.deformed_moments_divergent = true;
    rep.var_P = std::numeric_limits<double>::quiet_NaN();
    rep.mean_P2_deformed = std::numeric_limits<double>::quiet_NaN();
    rep.robertson_rhs = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  rep.var_P = m.var_P;
  rep.mean_P2_deformed = m.p2_deformed;
  rep.robertson_rhs = m.robertson;
  return rep;
}

}  // namespace guplab
