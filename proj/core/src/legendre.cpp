#include "whh/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "whh/quadrature.hpp"

namespace whh::legendre {

namespace {

void require_same_grid(const SampledFunction& f, const SampledFunction& g, const char* where) {
  if (!f.same_grid(g)) {
    throw std::invalid_argument(std::string(where) + ": arguments live on different grids");
  }
}

void require_convex(const SampledFunction& f, const char* where) {
  if (!f.convex()) {
    throw std::invalid_argument(std::string(where) + ": requires a convex input");
  }
}

std::vector<double> mix_values(const SampledFunction& f, const SampledFunction& g, double t) {
  std::vector<double> out(f.size());
  for (int i = 0; i < f.size(); ++i) out[i] = (1.0 - t) * f[i] + t * g[i];
  return out;
}

DualGrid primal_as_dual(const SampledFunction& f) {
  return DualGrid(f.x_min(), f.x_max(), f.size());
}

}  // namespace

DualGrid default_dual_grid(const SampledFunction& f) {
  double lo = f.min_slope(), hi = f.max_slope();
  double pad = 0.1 * (hi - lo);
  if (pad <= 0.0) pad = std::max(0.5, 0.1 * std::abs(lo));  // affine input
  return DualGrid(lo - pad, hi + pad, f.size());
}

DualGrid default_dual_grid(const SampledFunction& f, const SampledFunction& g) {
  double lo = std::min(f.min_slope(), g.min_slope());
  double hi = std::max(f.max_slope(), g.max_slope());
  double pad = 0.1 * (hi - lo);
  if (pad <= 0.0) pad = std::max(0.5, 0.1 * std::abs(lo));
  return DualGrid(lo - pad, hi + pad, std::max(f.size(), g.size()));
}

SampledFunction conjugate_direct(const SampledFunction& f, const DualGrid& dual) {
  std::vector<double> out(dual.points);
  for (int j = 0; j < dual.points; ++j) {
    const double s = dual.s(j);
    double best = s * f.x(0) - f[0];
    for (int i = 1; i < f.size(); ++i) best = std::max(best, s * f.x(i) - f[i]);
    out[j] = best;
  }
  return SampledFunction(dual.s_min, dual.s_max, std::move(out));
}

SampledFunction conjugate(const SampledFunction& f, const DualGrid& dual) {
  if (!f.convex()) return conjugate_direct(f, dual);
  // The discrete objective i -> s x_i - f_i is concave for convex f, and its
  // (leftmost) argmax is nondecreasing in s, so one forward pass suffices.
  std::vector<double> out(dual.points);
  int i = 0;
  for (int j = 0; j < dual.points; ++j) {
    const double s = dual.s(j);
    double cur = s * f.x(i) - f[i];
    while (i + 1 < f.size()) {
      const double next = s * f.x(i + 1) - f[i + 1];
      if (next > cur) {
        cur = next;
        ++i;
      } else {
        break;
      }
    }
    out[j] = cur;
  }
  return SampledFunction(dual.s_min, dual.s_max, std::move(out));
}

SampledFunction biconjugate(const SampledFunction& f, const DualGrid& dual) {
  return conjugate(conjugate(f, dual), primal_as_dual(f));
}

SampledFunction biconjugate(const SampledFunction& f) {
  return biconjugate(f, default_dual_grid(f));
}

SampledFunction func_arith(const SampledFunction& f, const SampledFunction& g, double t) {
  require_same_grid(f, g, "func_arith");
  if (t == 0.0) return f;
  if (t == 1.0) return g;
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("func_arith: t must be in [0,1]");
  return SampledFunction(f.x_min(), f.x_max(), mix_values(f, g, t));
}

SampledFunction func_harm(const SampledFunction& f, const SampledFunction& g, double lambda,
                          const DualGrid& dual) {
  require_same_grid(f, g, "func_harm");
  if (lambda == 0.0) return f;
  if (lambda == 1.0) return g;
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("func_harm: lambda must be in [0,1]");
  }
  require_convex(f, "func_harm");
  require_convex(g, "func_harm");
  const SampledFunction fs = conjugate(f, dual);
  const SampledFunction gs = conjugate(g, dual);
  const SampledFunction mixed(dual.s_min, dual.s_max, mix_values(fs, gs, lambda));
  return conjugate(mixed, primal_as_dual(f));
}

namespace {

// mu_lambda-average of the harmonic path given precomputed conjugates.
SampledFunction geom_from_conjugates(const SampledFunction& fs, const SampledFunction& gs,
                                     const Weight& w, const DualGrid& dual,
                                     const DualGrid& primal, int mu_nodes) {
  const auto rule = quadrature::mu_rule(w, mu_nodes);
  std::vector<double> acc(primal.points, 0.0);
  for (const auto& node : rule) {
    const SampledFunction mixed(dual.s_min, dual.s_max, mix_values(fs, gs, node.t));
    const SampledFunction harm_t = conjugate(mixed, primal);
    for (int i = 0; i < primal.points; ++i) acc[i] += node.w * harm_t[i];
  }
  return SampledFunction(primal.s_min, primal.s_max, std::move(acc));
}

}  // namespace

SampledFunction func_geom(const SampledFunction& f, const SampledFunction& g, const Weight& w,
                          const DualGrid& dual, const FuncQuadratureOptions& opt) {
  require_same_grid(f, g, "func_geom");
  w.require_interior("func_geom");
  require_convex(f, "func_geom");
  require_convex(g, "func_geom");
  return geom_from_conjugates(conjugate(f, dual), conjugate(g, dual), w, dual, primal_as_dual(f),
                              opt.mu_nodes);
}

SampledFunction m_lambda_conjugate(const SampledFunction& f, const SampledFunction& g,
                                   const Weight& w, const DualGrid& dual,
                                   const FuncQuadratureOptions& opt, const SubInterval& iv) {
  require_same_grid(f, g, "m_lambda_conjugate");
  w.require_interior("m_lambda_conjugate");
  require_convex(f, "m_lambda_conjugate");
  require_convex(g, "m_lambda_conjugate");
  const auto rule = quadrature::nu_rule(w, iv, opt.nu_nodes_per_term);
  std::vector<double> acc(dual.points, 0.0);
  for (const auto& node : rule) {
    const SampledFunction mixed(f.x_min(), f.x_max(), mix_values(f, g, node.t));
    const SampledFunction conj_t = conjugate(mixed, dual);
    for (int j = 0; j < dual.points; ++j) acc[j] += node.w * conj_t[j];
  }
  return SampledFunction(dual.s_min, dual.s_max, std::move(acc));
}

SampledFunction func_weighted_log_bb(const SampledFunction& f, const SampledFunction& g,
                                     const Weight& w, const DualGrid& dual,
                                     const FuncQuadratureOptions& opt) {
  return conjugate(m_lambda_conjugate(f, g, w, dual, opt), primal_as_dual(f));
}

SampledFunction func_weighted_log_frak(const SampledFunction& f, const SampledFunction& g,
                                       const Weight& w, const DualGrid& dual,
                                       const FuncQuadratureOptions& opt) {
  require_same_grid(f, g, "func_weighted_log_frak");
  w.require_interior("func_weighted_log_frak");
  require_convex(f, "func_weighted_log_frak");
  require_convex(g, "func_weighted_log_frak");
  const SampledFunction fs = conjugate(f, dual);
  const SampledFunction gs = conjugate(g, dual);
  const DualGrid primal = primal_as_dual(f);
  const auto outer = quadrature::nu_rule(w, SubInterval::unit(), opt.nu_nodes_per_term);
  std::vector<double> acc(f.size(), 0.0);
  for (const auto& node : outer) {
    const SampledFunction sharp_t =
        geom_from_conjugates(fs, gs, Weight(node.t), dual, primal, opt.mu_nodes);
    for (int i = 0; i < f.size(); ++i) acc[i] += node.w * sharp_t[i];
  }
  return SampledFunction(f.x_min(), f.x_max(), std::move(acc));
}

PointwiseLeq pointwise_leq(const SampledFunction& f, const SampledFunction& g, double tol) {
  require_same_grid(f, g, "pointwise_leq");
  double worst = std::numeric_limits<double>::infinity();
  int worst_index = 0;
  for (int i = 0; i < f.size(); ++i) {
    const double margin = g[i] - f[i];
    if (margin < worst) {
      worst = margin;
      worst_index = i;
    }
  }
  const double scale = std::max(f.scale(), g.scale());
  return PointwiseLeq{worst >= -tol * scale, worst, worst_index};
}

}  // namespace whh::legendre
