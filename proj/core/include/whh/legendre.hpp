#pragma once

#include "whh/sampled_function.hpp"
#include "whh/types.hpp"

namespace whh::legendre {

/// Uniform grid in slope space carrying discrete conjugates.
struct DualGrid {
  double s_min;
  double s_max;
  int points;

  DualGrid(double lo, double hi, int n) : s_min(lo), s_max(hi), points(n) {
    if (!(lo < hi) || n < 3) throw std::domain_error("DualGrid: need s_min < s_max, points >= 3");
  }
  double s(int j) const noexcept {
    return s_min + (s_max - s_min) * static_cast<double>(j) / (points - 1);
  }
};

/// Slope range of the input(s) padded by 10%, with as many points as the
/// primal grid. The conjugate's effective domain is the closure of the slope
/// range; outside it the discrete max saturates at the grid endpoints.
DualGrid default_dual_grid(const SampledFunction& f);
DualGrid default_dual_grid(const SampledFunction& f, const SampledFunction& g);

/// Discrete Fenchel conjugate f*(s_j) = max_i (s_j x_i - f(x_i)).
/// Convex inputs take the monotone-argmax linear-time sweep; anything else
/// falls back to the direct scan. The result is convex for any input.
SampledFunction conjugate(const SampledFunction& f, const DualGrid& dual);

/// O(N*M) reference scan computing the same finite max.
SampledFunction conjugate_direct(const SampledFunction& f, const DualGrid& dual);

/// Conjugate twice; the discrete convex envelope of f on its own grid.
SampledFunction biconjugate(const SampledFunction& f);
SampledFunction biconjugate(const SampledFunction& f, const DualGrid& dual);

/// (1-t) f + t g on a shared grid; endpoints return the argument exactly.
SampledFunction func_arith(const SampledFunction& f, const SampledFunction& g, double t);

/// Harmonic mean ((1-lambda) f* + lambda g*)*; convex inputs only.
SampledFunction func_harm(const SampledFunction& f, const SampledFunction& g, double lambda,
                          const DualGrid& dual);

struct FuncQuadratureOptions {
  int nu_nodes_per_term = 24;
  int mu_nodes = 24;
};

/// Geometric mean: mu_lambda-average of the harmonic path t -> f !_t g.
SampledFunction func_geom(const SampledFunction& f, const SampledFunction& g, const Weight& w,
                          const DualGrid& dual, const FuncQuadratureOptions& opt = {});

/// nu_lambda-average of the conjugated arithmetic path, on the dual grid:
///   integral over [a,b] of (f nabla_t g)* dnu_lambda(t).
SampledFunction m_lambda_conjugate(const SampledFunction& f, const SampledFunction& g,
                                   const Weight& w, const DualGrid& dual,
                                   const FuncQuadratureOptions& opt = {},
                                   const SubInterval& iv = SubInterval::unit());

/// Harmonic-type weighted logarithmic mean: conjugate of m_lambda_conjugate.
SampledFunction func_weighted_log_bb(const SampledFunction& f, const SampledFunction& g,
                                     const Weight& w, const DualGrid& dual,
                                     const FuncQuadratureOptions& opt = {});

/// Geometric-type weighted logarithmic mean: nu_lambda-average of the
/// geometric path (nested quadrature, outer nu over t, inner mu_t).
SampledFunction func_weighted_log_frak(const SampledFunction& f, const SampledFunction& g,
                                       const Weight& w, const DualGrid& dual,
                                       const FuncQuadratureOptions& opt = {});

struct PointwiseLeq {
  bool holds;
  double worst_margin;  // min over the grid of g_i - f_i
  int worst_index;
};

/// f <= g pointwise up to tol * max(scale(f), scale(g)).
PointwiseLeq pointwise_leq(const SampledFunction& f, const SampledFunction& g, double tol);

}  // namespace whh::legendre
