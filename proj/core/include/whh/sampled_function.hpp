#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace whh::legendre {

/// A real function sampled on a uniform grid over [x_min, x_max], with value
/// +infinity outside the interval by convention (the effective domain is the
/// sampled interval). Values must be finite.
class SampledFunction {
 public:
  SampledFunction(double x_min, double x_max, std::vector<double> values);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  double step() const noexcept { return (x_max_ - x_min_) / (size() - 1); }
  double x(int i) const noexcept {
    return x_min_ + (x_max_ - x_min_) * static_cast<double>(i) / (size() - 1);
  }
  double operator[](int i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double> take_values() && { return std::move(values_); }

  /// max |value| over the grid; 0 for the zero function.
  double scale() const noexcept;

  /// second differences >= -1e-12 * scale
  bool convex(double rel_tol = 1e-12) const noexcept;

  double min_slope() const noexcept;
  double max_slope() const noexcept;

  /// linear interpolation inside [x_min, x_max]; throws outside.
  double value_at(double x) const;

  bool same_grid(const SampledFunction& other, double rel_tol = 1e-12) const noexcept;

  /// Two-column CSV (x, value); header row optional on load. Grid uniformity
  /// is validated with relative tolerance 1e-9.
  static SampledFunction load_csv(std::istream& in);
  static SampledFunction load_csv_file(const std::string& path);
  void save_csv(std::ostream& out, bool header = true) const;
  void save_csv_file(const std::string& path, bool header = true) const;

 private:
  double x_min_;
  double x_max_;
  std::vector<double> values_;
};

}  // namespace whh::legendre
