#pragma once

#include "whh/types.hpp"

namespace whh::measures {

/// Density of the weight measure nu_lambda on (0,1):
///   (1-lambda)(1-t)^((1-2 lambda)/lambda) + lambda t^((2 lambda-1)/(1-lambda)).
/// At lambda=1/2 this is identically 1 (Lebesgue measure). Endpoints t in {0,1}
/// are rejected when the corresponding exponent is negative.
double nu_density(const Weight& w, double t);

/// First moment of nu_lambda over [a,b] in closed form: integral of t dnu.
double nu_moment_xi(const Weight& w, const SubInterval& iv);

/// Mass of nu_lambda over [a,b] in closed form; equals 1 on [0,1].
double nu_mass_chi(const Weight& w, const SubInterval& iv);

/// Density of the Beta-type measure mu_lambda:
///   sin(pi lambda)/pi * t^(lambda-1) * (1-t)^(-lambda).
/// Singular at both endpoints; t must be interior.
double mu_density(const Weight& w, double t);

/// min resp. max of { b/a, (1-b)/(1-a) }; r(a,a)=R(a,a)=1, r <= 1 <= R.
double r_coeff(double a, double b);
double R_coeff(double a, double b);

/// alpha_{x,y} = y^2 (1 - x^((1-y)/y)) / (1-x) for x in [0,1), y > 0.
/// x=1 is a removable singularity with limit y(1-y); evaluating there requires
/// the explicit opt-in flag, otherwise it is a domain error.
double alpha_xy(double x, double y, bool allow_limit_at_one = false);

/// Closed forms for the nu_lambda-integrals of b -> r(a,b) resp. R(a,b):
///   integral r  = alpha_{a,1-lambda} + alpha_{1-a,lambda}
///   integral R  = lambda/a + (1-lambda)/(1-a) - integral r.
double integral_r_closed(double a, const Weight& w);
double integral_R_closed(double a, const Weight& w);

/// Refinement band coefficients
///   m(a,lambda) = (1-lambda)^2 (1-a^(lambda/(1-lambda)))/(1-a)
///               + lambda^2 (1-(1-a)^((1-lambda)/lambda))/a
///   M(a,lambda) = (1-lambda)/(1-a) + lambda/a - m(a,lambda).
/// Always 0 <= m <= M.
double m_coeff(double a, const Weight& w);
double M_coeff(double a, const Weight& w);

/// (m(1/2,lambda), M(1/2,lambda)); the pair sums to 2.
CoefficientPair alpha_beta(const Weight& w);

namespace detail {
/// pow restricted to bases in [0,1], via exp(e*log(b)). Negative bases are a
/// logic error (assert); 0^0 and 1^e return 1, 0^negative is a domain error.
double unit_pow(double base, double exponent);
}  // namespace detail

}  // namespace whh::measures
