#include "whh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "whh/sym_eigen.hpp"

namespace whh::quadrature {

double ln_beta(double x, double y) { return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y); }

double beta_function(double x, double y) { return std::exp(ln_beta(x, y)); }

namespace {

QuadratureRule build_jacobi_rule(int n, double beta0, double alpha1) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: n must be >= 1");
  if (!(beta0 > -1.0) || !(alpha1 > -1.0)) {
    throw std::domain_error("gauss_jacobi_rule: exponents must be > -1 for integrability");
  }
  // Jacobi weight (1-x)^alpha (1+x)^beta on [-1,1]; t = (1+x)/2 maps it to
  // t^beta (1-t)^alpha on [0,1].
  const double alpha = alpha1, beta = beta0;
  std::vector<double> d(n), e(n, 0.0);
  const double apb = alpha + beta;
  d[0] = (beta - alpha) / (apb + 2.0);
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
    d[k] = (beta * beta - alpha * alpha) / den;
  }
  if (n > 1) {
    e[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) /
                     ((2.0 + apb) * (2.0 + apb) * (3.0 + apb)));
    for (int k = 2; k < n; ++k) {
      const double tk = 2.0 * k + apb;
      e[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + apb) /
                           (tk * tk * (tk + 1.0) * (tk - 1.0)));
    }
  }
  std::vector<double> z0(n, 0.0);
  z0[0] = 1.0;
  linalg::tridiagonal_ql(d, e, z0.data(), n, 1);

  // total mass on [0,1] is Beta(beta0+1, alpha1+1); computed in log space so
  // huge exponents stay finite
  const double mass = std::exp(ln_beta(beta0 + 1.0, alpha1 + 1.0));

  QuadratureRule rule;
  rule.beta0 = beta0;
  rule.alpha1 = alpha1;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int j = 0; j < n; ++j) {
    rule.nodes[j] = 0.5 * (1.0 + d[j]);
    rule.weights[j] = mass * z0[j] * z0[j];
  }
  for (int j = 0; j < n; ++j) {
    if (!(rule.nodes[j] > 0.0 && rule.nodes[j] < 1.0) || !(rule.weights[j] > 0.0) ||
        (j > 0 && !(rule.nodes[j] > rule.nodes[j - 1]))) {
      throw std::runtime_error("gauss_jacobi_rule: invalid node/weight layout");
    }
  }
  return rule;
}

struct RuleKey {
  int n;
  long long b0;
  long long a1;
  bool operator<(const RuleKey& o) const { return std::tie(n, b0, a1) < std::tie(o.n, o.b0, o.a1); }
};

long long quantize(double x) { return llround(x * 1e12); }

std::mutex g_cache_mutex;
std::map<RuleKey, std::unique_ptr<QuadratureRule>> g_rule_cache;

}  // namespace

const QuadratureRule& gauss_jacobi_rule(int n, double beta0, double alpha1) {
  const RuleKey key{n, quantize(beta0), quantize(alpha1)};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_rule_cache.find(key);
    if (it != g_rule_cache.end()) return *it->second;
  }
  auto rule = std::make_unique<QuadratureRule>(build_jacobi_rule(n, beta0, alpha1));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = g_rule_cache.emplace(key, std::move(rule));
  return *it->second;
}

std::vector<WeightedNode> legendre_rule(const SubInterval& iv, int n) {
  const QuadratureRule& gl = gauss_jacobi_rule(n, 0.0, 0.0);
  const double len = iv.b - iv.a;
  std::vector<WeightedNode> out(n);
  for (int j = 0; j < n; ++j) out[j] = {iv.a + len * gl.nodes[j], len * gl.weights[j]};
  return out;
}

namespace {

// One power-law density term coeff * base^expo where base is t (singular end
// 0) or 1-t (singular end 1).
void append_term_rule(std::vector<WeightedNode>& out, const SubInterval& iv, double coeff,
                      double expo, bool anchored_at_one, int n) {
  if (anchored_at_one ? (iv.b == 1.0) : (iv.a == 0.0)) {
    // Jacobi rule anchored at the weight's endpoint, affinely mapped so the
    // power factor is absorbed exactly.
    const double len = iv.b - iv.a;
    const double scale = coeff * std::pow(len, expo + 1.0);
    if (anchored_at_one) {
      const QuadratureRule& rule = gauss_jacobi_rule(n, 0.0, expo);
      for (int j = 0; j < n; ++j) {
        out.push_back({iv.a + len * rule.nodes[j], scale * rule.weights[j]});
      }
    } else {
      const QuadratureRule& rule = gauss_jacobi_rule(n, expo, 0.0);
      for (int j = 0; j < n; ++j) {
        out.push_back({len * rule.nodes[j], scale * rule.weights[j]});
      }
    }
  } else {
    // singular endpoint excluded: plain Gauss-Legendre with the density as an
    // explicit factor
    for (const WeightedNode& node : legendre_rule(iv, n)) {
      const double base = anchored_at_one ? 1.0 - node.t : node.t;
      out.push_back({node.t, coeff * node.w * std::exp(expo * std::log(base))});
    }
  }
}

}  // namespace

std::vector<WeightedNode> nu_rule(const Weight& w, const SubInterval& iv, int n_per_term) {
  w.require_interior("nu_rule");
  const double lam = w.lambda();
  const double e1 = (1.0 - 2.0 * lam) / lam;          // on (1-t), singular end 1
  const double e2 = (2.0 * lam - 1.0) / (1.0 - lam);  // on t, singular end 0
  std::vector<WeightedNode> out;
  out.reserve(2 * n_per_term);
  append_term_rule(out, iv, 1.0 - lam, e1, /*anchored_at_one=*/true, n_per_term);
  append_term_rule(out, iv, lam, e2, /*anchored_at_one=*/false, n_per_term);
  return out;
}

std::vector<WeightedNode> mu_rule(const Weight& w, int n) {
  w.require_interior("mu_rule");
  const double lam = w.lambda();
  const QuadratureRule& rule = gauss_jacobi_rule(n, lam - 1.0, -lam);
  const double scale = std::sin(M_PI * lam) / M_PI;
  std::vector<WeightedNode> out(n);
  for (int j = 0; j < n; ++j) out[j] = {rule.nodes[j], scale * rule.weights[j]};
  return out;
}

double apply_rule(const std::vector<WeightedNode>& rule, const std::function<double(double)>& f) {
  double sum = 0.0;
  for (const WeightedNode& node : rule) sum += node.w * f(node.t);
  return sum;
}

namespace {

constexpr int kStartNodes = 32;
constexpr int kMaxNodes = 256;

template <class RuleBuilder>
IntegralResult integrate_doubling(const RuleBuilder& build, const std::function<double(double)>& f,
                                  double tol, const char* what) {
  std::vector<WeightedNode> rule = build(kStartNodes);
  double prev = apply_rule(rule, f);
  IntegralResult res{prev, std::numeric_limits<double>::infinity(),
                     static_cast<int>(rule.size())};
  for (int n = 2 * kStartNodes; n <= kMaxNodes; n *= 2) {
    rule = build(n);
    const double value = apply_rule(rule, f);
    res = {value, std::abs(value - prev), static_cast<int>(rule.size())};
    if (res.error_estimate < tol) return res;
    prev = value;
  }
  throw NonConvergence(std::string(what) + ": node doubling exhausted without convergence", res);
}

}  // namespace

IntegralResult integrate_nu(const Weight& w, const std::function<double(double)>& f,
                            const SubInterval& iv, double tol) {
  return integrate_doubling([&](int n) { return nu_rule(w, iv, n); }, f, tol, "integrate_nu");
}

IntegralResult integrate_mu(const Weight& w, const std::function<double(double)>& f, double tol) {
  return integrate_doubling([&](int n) { return mu_rule(w, n); }, f, tol, "integrate_mu");
}

namespace {

struct AdaptiveState {
  const std::function<double(double)>* f;
  double tol_per_unit;  // absolute tolerance per unit length
  int nodes = 0;
  double error = 0.0;
  int max_depth = 48;
};

double adaptive_gl(AdaptiveState& st, double a, double b, int depth) {
  const SubInterval iv(a, b);
  const double coarse = apply_rule(legendre_rule(iv, 8), *st.f);
  const double fine = apply_rule(legendre_rule(iv, 16), *st.f);
  st.nodes += 24;
  const double err = std::abs(fine - coarse);
  if (err <= st.tol_per_unit * (b - a) || depth >= st.max_depth) {
    if (depth >= st.max_depth && err > st.tol_per_unit * (b - a)) {
      throw NonConvergence("integrate_lebesgue: bisection depth exhausted",
                           IntegralResult{fine, err, st.nodes});
    }
    st.error += err;
    return fine;
  }
  const double mid = 0.5 * (a + b);
  return adaptive_gl(st, a, mid, depth + 1) + adaptive_gl(st, mid, b, depth + 1);
}

}  // namespace

IntegralResult integrate_lebesgue(const std::function<double(double)>& f, const SubInterval& iv,
                                  double tol) {
  AdaptiveState st;
  st.f = &f;
  st.tol_per_unit = tol / (iv.b - iv.a);
  const double value = adaptive_gl(st, iv.a, iv.b, 0);
  return IntegralResult{value, st.error, st.nodes};
}

}  // namespace whh::quadrature
