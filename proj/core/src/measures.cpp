#include "whh/measures.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace whh::measures {

namespace detail {

double unit_pow(double base, double exponent) {
  assert(base >= 0.0 && base <= 1.0 && std::isfinite(base));
  if (exponent == 0.0 || base == 1.0) return 1.0;
  if (base == 0.0) {
    if (exponent > 0.0) return 0.0;
    throw std::domain_error("unit_pow: 0 raised to a negative exponent");
  }
  return std::exp(exponent * std::log(base));
}

}  // namespace detail

using detail::unit_pow;

double nu_density(const Weight& w, double t) {
  w.require_interior("nu_density");
  const double lam = w.lambda();
  const double e1 = (1.0 - 2.0 * lam) / lam;          // exponent on (1-t)
  const double e2 = (2.0 * lam - 1.0) / (1.0 - lam);  // exponent on t
  if (t < 0.0 || t > 1.0 || (t == 1.0 && e1 < 0.0) || (t == 0.0 && e2 < 0.0)) {
    throw std::domain_error("nu_density: t outside the domain of the density");
  }
  return (1.0 - lam) * unit_pow(1.0 - t, e1) + lam * unit_pow(t, e2);
}

double nu_moment_xi(const Weight& w, const SubInterval& iv) {
  w.require_interior("nu_moment_xi");
  const double lam = w.lambda();
  const double a = iv.a, b = iv.b;
  // Exact algebraic arrangement of the closed form; kept verbatim so the value
  // is bit-comparable across implementations.
  return lam * (1.0 - lam) *
             (unit_pow(1.0 - b, 1.0 / lam) + unit_pow(b, 1.0 / (1.0 - lam)) -
              unit_pow(1.0 - a, 1.0 / lam) - unit_pow(a, 1.0 / (1.0 - lam))) -
         lam * (unit_pow(1.0 - b, (1.0 - lam) / lam) - unit_pow(1.0 - a, (1.0 - lam) / lam));
}

double nu_mass_chi(const Weight& w, const SubInterval& iv) {
  w.require_interior("nu_mass_chi");
  const double lam = w.lambda();
  const double a = iv.a, b = iv.b;
  return lam * (unit_pow(1.0 - a, (1.0 - lam) / lam) - unit_pow(1.0 - b, (1.0 - lam) / lam)) +
         (1.0 - lam) * (unit_pow(b, lam / (1.0 - lam)) - unit_pow(a, lam / (1.0 - lam)));
}

double mu_density(const Weight& w, double t) {
  w.require_interior("mu_density");
  const double lam = w.lambda();
  if (!(t > 0.0 && t < 1.0)) {
    throw std::domain_error("mu_density: t must be in (0,1)");
  }
  return std::sin(M_PI * lam) / M_PI * unit_pow(t, lam - 1.0) * unit_pow(1.0 - t, -lam);
}

double r_coeff(double a, double b) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("r_coeff: a must be in (0,1)");
  return std::min(b / a, (1.0 - b) / (1.0 - a));
}

double R_coeff(double a, double b) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("R_coeff: a must be in (0,1)");
  return std::max(b / a, (1.0 - b) / (1.0 - a));
}

double alpha_xy(double x, double y, bool allow_limit_at_one) {
  if (!(x >= 0.0) || !(y > 0.0)) throw std::domain_error("alpha_xy: need x >= 0, y > 0");
  if (x == 1.0) {
    if (!allow_limit_at_one) {
      throw std::domain_error("alpha_xy: x=1 is a removable singularity; pass the opt-in flag");
    }
    return y * (1.0 - y);
  }
  if (x > 1.0) throw std::domain_error("alpha_xy: x > 1 not supported");
  return y * y * (1.0 - unit_pow(x, (1.0 - y) / y)) / (1.0 - x);
}

double integral_r_closed(double a, const Weight& w) {
  w.require_interior("integral_r_closed");
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("integral_r_closed: a must be in (0,1)");
  const double lam = w.lambda();
  return alpha_xy(a, 1.0 - lam) + alpha_xy(1.0 - a, lam);
}

double integral_R_closed(double a, const Weight& w) {
  w.require_interior("integral_R_closed");
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("integral_R_closed: a must be in (0,1)");
  const double lam = w.lambda();
  return lam / a + (1.0 - lam) / (1.0 - a) - alpha_xy(a, 1.0 - lam) - alpha_xy(1.0 - a, lam);
}

double m_coeff(double a, const Weight& w) {
  w.require_interior("m_coeff");
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("m_coeff: a must be in (0,1)");
  const double lam = w.lambda();
  return (1.0 - lam) * (1.0 - lam) * (1.0 - unit_pow(a, lam / (1.0 - lam))) / (1.0 - a) +
         lam * lam * (1.0 - unit_pow(1.0 - a, (1.0 - lam) / lam)) / a;
}

double M_coeff(double a, const Weight& w) {
  const double lam = w.lambda();
  return (1.0 - lam) / (1.0 - a) + lam / a - m_coeff(a, w);
}

CoefficientPair alpha_beta(const Weight& w) {
  return CoefficientPair(m_coeff(0.5, w), M_coeff(0.5, w));
}

}  // namespace whh::measures
