#include "whh/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace whh::legendre {

SampledFunction::SampledFunction(double x_min, double x_max, std::vector<double> values)
    : x_min_(x_min), x_max_(x_max), values_(std::move(values)) {
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw std::domain_error("SampledFunction: need finite x_min < x_max");
  }
  if (values_.size() < 3) {
    throw std::domain_error("SampledFunction: need at least 3 samples");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::domain_error("SampledFunction: values must be finite");
  }
}

double SampledFunction::scale() const noexcept {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

bool SampledFunction::convex(double rel_tol) const noexcept {
  const double bound = -rel_tol * scale();
  for (int i = 1; i + 1 < size(); ++i) {
    if (values_[i + 1] - 2.0 * values_[i] + values_[i - 1] < bound) return false;
  }
  return true;
}

double SampledFunction::min_slope() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  const double h = step();
  for (int i = 0; i + 1 < size(); ++i) m = std::min(m, (values_[i + 1] - values_[i]) / h);
  return m;
}

double SampledFunction::max_slope() const noexcept {
  double m = -std::numeric_limits<double>::infinity();
  const double h = step();
  for (int i = 0; i + 1 < size(); ++i) m = std::max(m, (values_[i + 1] - values_[i]) / h);
  return m;
}

double SampledFunction::value_at(double xq) const {
  if (xq < x_min_ || xq > x_max_) {
    throw std::domain_error("SampledFunction::value_at: query outside the effective domain");
  }
  const double u = (xq - x_min_) / (x_max_ - x_min_) * (size() - 1);
  const int i = std::min(static_cast<int>(u), size() - 2);
  const double frac = u - i;
  return (1.0 - frac) * values_[i] + frac * values_[i + 1];
}

bool SampledFunction::same_grid(const SampledFunction& other, double rel_tol) const noexcept {
  const double span = x_max_ - x_min_;
  return size() == other.size() && std::abs(x_min_ - other.x_min_) <= rel_tol * span &&
         std::abs(x_max_ - other.x_max_) <= rel_tol * span;
}

SampledFunction SampledFunction::load_csv(std::istream& in) {
  std::vector<double> xs, vs;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x, v;
    if (!(row >> x >> v)) {
      if (first) {
        first = false;  // header row
        continue;
      }
      throw std::runtime_error("SampledFunction::load_csv: malformed row: " + line);
    }
    first = false;
    xs.push_back(x);
    vs.push_back(v);
  }
  if (xs.size() < 3) throw std::runtime_error("SampledFunction::load_csv: need at least 3 rows");
  const double span = xs.back() - xs.front();
  if (!(span > 0.0)) throw std::runtime_error("SampledFunction::load_csv: x must increase");
  const double h = span / (static_cast<double>(xs.size()) - 1);
  for (size_t i = 0; i < xs.size(); ++i) {
    const double expected = xs.front() + h * static_cast<double>(i);
    if (std::abs(xs[i] - expected) > 1e-9 * std::max(std::abs(span), 1.0)) {
      throw std::runtime_error("SampledFunction::load_csv: grid is not uniform at row " +
                               std::to_string(i));
    }
  }
  return SampledFunction(xs.front(), xs.back(), std::move(vs));
}

SampledFunction SampledFunction::load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("SampledFunction: cannot open " + path);
  return load_csv(in);
}

void SampledFunction::save_csv(std::ostream& out, bool header) const {
  if (header) out << "x,value\n";
  out << std::setprecision(17);
  for (int i = 0; i < size(); ++i) out << x(i) << ',' << values_[i] << '\n';
}

void SampledFunction::save_csv_file(const std::string& path, bool header) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("SampledFunction: cannot open " + path);
  save_csv(out, header);
}

}  // namespace whh::legendre
