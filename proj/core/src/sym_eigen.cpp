#include "whh/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace whh::linalg {

namespace {
constexpr int kMaxQlIterations = 64;
}

void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, double* z, int n,
                    int z_rows) {
  if (n <= 0) throw EigenError("tridiagonal_ql: empty matrix");
  if (n == 1) return;
  // shift the off-diagonal so e[i] couples d[i] and d[i+1], e[n-1] spare
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxQlIterations) {
          throw EigenError("tridiagonal_ql: eigenvalue failed to converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (int k = 0; k < z_rows; ++k) {
              f = z[k * n + i + 1];
              z[k * n + i + 1] = s * z[k * n + i] + c * f;
              z[k * n + i] = c * z[k * n + i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  // sort ascending, permuting eigenvector columns alongside
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  for (int j = 0; j < n; ++j) ds[j] = d[idx[j]];
  d = ds;
  if (z != nullptr) {
    std::vector<double> row(n);
    for (int i = 0; i < z_rows; ++i) {
      for (int j = 0; j < n; ++j) row[j] = z[i * n + idx[j]];
      for (int j = 0; j < n; ++j) z[i * n + j] = row[j];
    }
  }
}

EigenDecomposition symmetric_eigen(const std::vector<double>& matrix, int n) {
  if (n <= 0 || static_cast<int>(matrix.size()) != n * n) {
    throw EigenError("symmetric_eigen: bad dimensions");
  }
  EigenDecomposition out;
  out.n = n;
  out.values.assign(n, 0.0);
  out.vectors = matrix;  // Householder reduction works in place
  std::vector<double>& d = out.values;
  std::vector<double> e(n, 0.0);
  double* a = out.vectors.data();

  // Householder tridiagonalization with transform accumulation
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(a[i * n + k]);
      if (scale == 0.0) {
        e[i] = a[i * n + l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i * n + k] /= scale;
          h += a[i * n + k] * a[i * n + k];
        }
        double f = a[i * n + l];
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a[i * n + l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          a[j * n + i] = a[i * n + j] / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
          for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
          e[j] = g / h;
          f += e[j] * a[i * n + j];
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a[i * n + j];
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) a[j * n + k] -= f * e[k] + g * a[i * n + k];
        }
      }
    } else {
      e[i] = a[i * n + l];
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += a[i * n + k] * a[k * n + j];
        for (int k = 0; k <= l; ++k) a[k * n + j] -= g * a[k * n + i];
      }
    }
    d[i] = a[i * n + i];
    a[i * n + i] = 1.0;
    for (int j = 0; j <= l; ++j) a[j * n + i] = a[i * n + j] = 0.0;
  }
  // e holds subdiagonal in positions 1..n-1; QL expects coupling at e[i]
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  tridiagonal_ql(d, e, a, n, n);
  return out;
}

}  // namespace whh::linalg
