#pragma once

#include <array>
#include <vector>

#include "whh/types.hpp"

namespace whh::scalar {

struct PositivePair {
  double a;
  double b;

  PositivePair(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
      throw std::domain_error("PositivePair: both entries must be positive and finite");
    }
  }
};

enum class MeanMethod { closed_form, nu_quadrature, mu_quadrature };

/// A computed mean together with how it was obtained. The value is checked to
/// lie between min(a,b) and max(a,b).
struct MeanValue {
  double value;
  MeanMethod method;
  double error_estimate;
};

/// Weighted arithmetic, harmonic, geometric means; t in [0,1], endpoints exact.
double arith(const PositivePair& p, double t);
double harm(const PositivePair& p, double t);
double geom(const PositivePair& p, double t);

/// Standard logarithmic mean (b-a)/(ln b - ln a), with L(a,a)=a.
double log_mean(const PositivePair& p);

/// Closed-form weighted logarithmic mean
///   [ (1-l)/l (a - a^(1-l) b^l) + l/(1-l) (a^(1-l) b^l - b) ] / ln(a/b),
/// extended by the limit value a when |a-b| <= 1e-12 max(a,b).
MeanValue weighted_log_closed(const PositivePair& p, const Weight& w);

/// nu_lambda-average of the geometric path: integral of a^(1-t) b^t dnu.
MeanValue weighted_log_frak(const PositivePair& p, const Weight& w, double tol = 1e-9);

/// Harmonic-type weighted logarithmic mean:
///   ( integral of ((1-t)a + t b)^(-1) dnu )^(-1).
MeanValue weighted_log_bb(const PositivePair& p, const Weight& w, double tol = 1e-9);

/// nu_lambda-average of the inverted arithmetic path (the inner integral of
/// weighted_log_bb); equals 1/weighted_log_bb.
double m_lambda_inversion(const PositivePair& p, const Weight& w, double tol = 1e-10);

/// nu_lambda-average of the harmonic path: integral of ((1-t)/a + t/b)^(-1) dnu.
/// This is the scalar reduction of the conjugated harmonic-type mean for
/// quadratic functions.
double harmonic_path_average(const PositivePair& p, const Weight& w, double tol = 1e-10);

/// Double average over t (against nu_lambda) and lambda (Lebesgue) of the
/// inverted arithmetic path.
double j_phi_inversion(const PositivePair& p, double tol = 1e-9);

struct Table1Row {
  double a, b;
  double frak, bb, closed;              // computed
  double ref_frak, ref_bb, ref_closed;  // reference values
  double max_abs_deviation() const;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  double tolerance;
  double max_abs_deviation;
  bool all_within;
};

/// Computes the three weighted logarithmic means at lambda=2/3 for the pairs
/// (2,4), (1/2,3), (1/4,1/2), (2,13) and compares with reference values.
Table1Report table1(double tol = 1e-6);

}  // namespace whh::scalar
