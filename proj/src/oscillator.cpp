#include "guplab/oscillator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "guplab/operators.hpp"

namespace guplab {

AlphaExponent alpha_exponent(const ModelParameters& params) {
  params.require_deformed();
  const double g = params.g();
  const double alpha = 0.25 + std::sqrt(g * g + 4.0) / (4.0 * g);
  return {alpha, g};
}

SpectrumRow energy_level(const ModelParameters& params, int n) {
  params.require_deformed();
  if (n < 0) throw std::invalid_argument("energy_level: negative level");
  const double g = params.g();
  const double hw = params.hbar * params.omega;
  const double dn = static_cast<double>(n);
  const double energy = (dn + 0.5) * hw * std::sqrt(1.0 + 0.25 * g * g) +
                        (dn * dn + dn + 0.5) * params.beta * params.mass *
                            params.omega * params.omega * params.hbar * params.hbar / 2.0;

  // Termination identity: (2 beta m E + 1)/g^2 = (n + 2 alpha)^2.
  const double lhs = (2.0 * params.beta * params.mass * energy + 1.0) / (g * g);
  const double t = dn + 2.0 * alpha_exponent(params).alpha;
  if (std::abs(lhs - t * t) > 1e-10 * std::max(1.0, t * t))
    throw std::logic_error("energy_level: termination identity violated");
  return {n, energy};
}

double energy_classical_limit(const ModelParameters& params, int n) {
  params.validate();
  if (n < 0) throw std::invalid_argument("energy_classical_limit: negative level");
  return (static_cast<double>(n) + 0.5) * params.hbar * params.omega;
}

double BetheRootSet::max_residual() const {
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, std::abs(r));
  return worst;
}

namespace {

// Residual vector of the coupled root equations at t.
Eigen::VectorXd bethe_residual(const std::vector<double>& t, double alpha) {
  const int n = static_cast<int>(t.size());
  Eigen::VectorXd f(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) s += 2.0 / (t[i] - t[j]);
    const double num = 1.0 + 4.0 * alpha - (2.0 + 8.0 * alpha) * t[i];
    const double den = 2.0 * (t[i] - t[i] * t[i]);
    f(i) = s + num / den;
  }
  return f;
}

Eigen::MatrixXd bethe_jacobian(const std::vector<double>& t, double alpha) {
  const int n = static_cast<int>(t.size());
  Eigen::MatrixXd jac(n, n);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = t[i] - t[j];
      jac(i, j) = 2.0 / (d * d);
      diag -= 2.0 / (d * d);
    }
    const double num = 1.0 + 4.0 * alpha - (2.0 + 8.0 * alpha) * t[i];
    const double den = 2.0 * (t[i] - t[i] * t[i]);
    const double dnum = -(2.0 + 8.0 * alpha);
    const double dden = 2.0 - 4.0 * t[i];
    jac(i, i) = diag + (dnum * den - num * dden) / (den * den);
  }
  return jac;
}

bool inside_unit_interval(const Eigen::VectorXd& t) {
  const double eps = 1e-12;
  for (int i = 0; i < t.size(); ++i)
    if (!(t(i) > eps && t(i) < 1.0 - eps)) return false;
  return true;
}

}  // namespace

BetheRootSet bethe_solve(const ModelParameters& params, int n) {
  params.require_deformed();
  if (n < 1) throw std::invalid_argument("bethe_solve: need n >= 1");
  const double alpha = alpha_exponent(params).alpha;

  // Chebyshev-spaced start, ascending in (0.1, 0.9).
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i)
    t[i] = 0.5 - 0.4 * std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * n));

  BetheRootSet out;
  out.n = n;
  const int max_iter = 200;
  bool converged = false;
  int used = 0;

  for (int iter = 0; iter < max_iter; ++iter) {
    used = iter + 1;
    Eigen::VectorXd f = bethe_residual(t, alpha);
    if (f.lpNorm<Eigen::Infinity>() < 1e-13) {
      converged = true;
      used = iter;
      break;
    }
    const Eigen::MatrixXd jac = bethe_jacobian(t, alpha);
    const Eigen::VectorXd step = jac.partialPivLu().solve(-f);

    Eigen::VectorXd cur = Eigen::Map<const Eigen::VectorXd>(t.data(), n);
    const double f0 = f.norm();
    double damp = 1.0;
    bool accepted = false;
    while (damp > 1e-7) {
      Eigen::VectorXd trial = cur + damp * step;
      if (inside_unit_interval(trial)) {
        std::vector<double> tt(trial.data(), trial.data() + n);
        if (bethe_residual(tt, alpha).norm() < f0) {
          t = std::move(tt);
          accepted = true;
          break;
        }
      }
      damp *= 0.5;
    }
    if (!accepted) break;  // stalled
  }

  std::sort(t.begin(), t.end());
  out.roots = t;
  const Eigen::VectorXd f = bethe_residual(t, alpha);
  out.residuals.assign(f.data(), f.data() + n);
  out.converged = converged && out.max_residual() < 1e-12;
  out.iterations = used;
  return out;
}

namespace {

// Gegenbauer value and derivative at x by the three-term recurrence
//   (k+1) C_{k+1} = 2 (k+mu) x C_k - (k + 2 mu - 1) C_{k-1}.
void gegenbauer_eval(int n, double mu, double x, double& value, double& deriv) {
  double cm1 = 1.0, dm1 = 0.0;  // C_0
  if (n == 0) {
    value = cm1;
    deriv = dm1;
    return;
  }
  double c = 2.0 * mu * x, d = 2.0 * mu;  // C_1
  for (int k = 1; k < n; ++k) {
    const double a = 2.0 * (k + mu) / (k + 1.0);
    const double b = (k + 2.0 * mu - 1.0) / (k + 1.0);
    const double cn = a * x * c - b * cm1;
    const double dn = a * (c + x * d) - b * dm1;
    cm1 = c;
    dm1 = d;
    c = cn;
    d = dn;
  }
  value = c;
  deriv = d;
}

}  // namespace

BetheRootSet polynomial_oracle_roots(const ModelParameters& params, int n) {
  params.require_deformed();
  if (n < 1) throw std::invalid_argument("polynomial_oracle_roots: need n >= 1");
  const double alpha = alpha_exponent(params).alpha;
  const double mu = 2.0 * alpha;

  // Bracket the n roots of C_n on a sign-change scan of (-1, 1).
  const int scan = std::max(64 * n, 512);
  std::vector<double> roots;
  double xa = -1.0 + 1e-9, va, dummy;
  gegenbauer_eval(n, mu, xa, va, dummy);
  for (int i = 1; i <= scan; ++i) {
    const double xb = -1.0 + 2.0 * static_cast<double>(i) / scan - 1e-9 * (i == scan);
    double vb;
    gegenbauer_eval(n, mu, xb, vb, dummy);
    if (va == 0.0) roots.push_back(xa);
    else if (va * vb < 0.0) {
      double lo = xa, hi = xb, vlo = va;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        double vm;
        gegenbauer_eval(n, mu, mid, vm, dummy);
        if (vm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (vlo * vm < 0.0) hi = mid;
        else {
          lo = mid;
          vlo = vm;
        }
      }
      double x = 0.5 * (lo + hi);
      // Newton polish on the polynomial itself.
      for (int it = 0; it < 4; ++it) {
        double v, dv;
        gegenbauer_eval(n, mu, x, v, dv);
        if (dv == 0.0) break;
        x -= v / dv;
      }
      roots.push_back(x);
    }
    xa = xb;
    va = vb;
  }
  if (static_cast<int>(roots.size()) != n)
    throw std::runtime_error("polynomial_oracle_roots: bracket scan missed roots");

  BetheRootSet out;
  out.n = n;
  out.roots.resize(n);
  for (int i = 0; i < n; ++i) out.roots[i] = 0.5 * (1.0 - roots[i]);  // t = (1-x)/2
  std::sort(out.roots.begin(), out.roots.end());
  const Eigen::VectorXd f = bethe_residual(out.roots, alpha);
  out.residuals.assign(f.data(), f.data() + n);
  out.converged = true;
  out.iterations = 0;
  return out;
}

AnalyticState oscillator_wavefunction(const ModelParameters& params, int n,
                                      const std::vector<double>* roots,
                                      std::size_t norm_grid_n) {
  params.require_deformed();
  if (n < 0) throw std::invalid_argument("oscillator_wavefunction: negative level");

  std::vector<double> t;
  if (n > 0) {
    if (roots) {
      if (static_cast<int>(roots->size()) != n)
        throw std::invalid_argument("oscillator_wavefunction: root count does not match level");
      t = *roots;
    } else {
      const BetheRootSet set = bethe_solve(params, n);
      if (!set.converged)
        throw std::runtime_error("oscillator_wavefunction: root solve did not converge");
      t = set.roots;
    }
  }

  const double alpha = alpha_exponent(params).alpha;
  const double beta = params.beta;
  const double sb = std::sqrt(beta);

  AnalyticState raw;
  raw.order = 3;
  raw.params = params;
  raw.eval = [alpha, beta, sb, t](double p) {
    // (1/4)(1 - beta p^2) as a jet, raised to alpha.
    Jet env = jet_pow(0.25 * jet_envelope(p, beta), alpha);
    for (double ti : t) {
      const Jet factor{{0.5 - 0.5 * sb * p - ti, 0.0}, {-0.5 * sb, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
      env = env * factor;
    }
    return env;
  };

  const ChebyshevGrid grid = build_grid(params, norm_grid_n);
  const double nrm = norm(raw, grid);
  if (!(nrm > 0.0)) throw std::runtime_error("oscillator_wavefunction: normalization failed");

  const Jet origin = raw.eval(0.0);
  double sign = 1.0;
  if (std::abs(std::real(origin.f)) > 1e-12) sign = std::real(origin.f) > 0.0 ? 1.0 : -1.0;
  else sign = std::real(origin.d1) > 0.0 ? 1.0 : -1.0;

  AnalyticState out = raw;
  out.eval = [inner = raw.eval, c = sign / nrm](double p) { return c * inner(p); };
  return out;
}

}  // namespace guplab
