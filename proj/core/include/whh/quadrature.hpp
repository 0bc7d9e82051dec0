#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "whh/types.hpp"

namespace whh::quadrature {

/// Gaussian rule on (0,1) against the weight t^beta0 (1-t)^alpha1.
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, interior
  std::vector<double> weights;  // all positive, summing to Beta(beta0+1, alpha1+1)
  double beta0 = 0.0;
  double alpha1 = 0.0;
  int order = 0;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int nodes_used = 0;
};

/// Thrown when node doubling exhausts the refinement budget without meeting
/// the caller tolerance; carries the last computed result.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, IntegralResult last)
      : std::runtime_error(what), last_result(last) {}
  IntegralResult last_result;
};

/// n-point Gauss-Jacobi rule on [0,1], exact for polynomials of degree
/// <= 2n-1 against t^beta0 (1-t)^alpha1. Built by Golub-Welsch from the
/// symmetric Jacobi-polynomial recurrence; results are cached (thread-safe)
/// keyed by (n, beta0, alpha1) rounded to 1e-12.
const QuadratureRule& gauss_jacobi_rule(int n, double beta0, double alpha1);

double ln_beta(double x, double y);
double beta_function(double x, double y);

/// A plain node/weight pair; weights absorb measure densities and interval
/// maps so that sum w_i f(t_i) approximates the target integral directly.
struct WeightedNode {
  double t;
  double w;
};

/// Composite rule for the nu_lambda measure restricted to [a,b]: each density
/// term uses a Jacobi rule anchored at its singular endpoint when that
/// endpoint belongs to [a,b], and a mapped Gauss-Legendre rule with the
/// density as an explicit factor otherwise.
std::vector<WeightedNode> nu_rule(const Weight& w, const SubInterval& iv, int n_per_term);

/// Rule for the mu_lambda measure on [0,1] (Jacobi weight beta0=lambda-1,
/// alpha1=-lambda, scaled by sin(pi lambda)/pi).
std::vector<WeightedNode> mu_rule(const Weight& w, int n);

/// Mapped Gauss-Legendre rule on [a,b].
std::vector<WeightedNode> legendre_rule(const SubInterval& iv, int n);

double apply_rule(const std::vector<WeightedNode>& rule, const std::function<double(double)>& f);

/// integral of f against nu_lambda over iv, node doubling from n=32 per term
/// up to 256 until |value(2n)-value(n)| < tol.
IntegralResult integrate_nu(const Weight& w, const std::function<double(double)>& f,
                            const SubInterval& iv = SubInterval::unit(), double tol = 1e-10);

/// integral of f against mu_lambda over [0,1], same refinement contract.
IntegralResult integrate_mu(const Weight& w, const std::function<double(double)>& f,
                            double tol = 1e-10);

/// Adaptive Gauss-Legendre integral of f over iv (sub-interval of [0,1]).
IntegralResult integrate_lebesgue(const std::function<double(double)>& f, const SubInterval& iv,
                                  double tol = 1e-12);

}  // namespace whh::quadrature
