#pragma once

#include <stdexcept>
#include <vector>

namespace whh::linalg {

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix.
/// vectors is column-major: column j (entries vectors[i*n + j]) is the
/// eigenvector for values[j].
struct EigenDecomposition {
  int n = 0;
  std::vector<double> values;
  std::vector<double> vectors;
};

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
/// diag (size n) and offdiag (size n, offdiag[n-1] unused) are overwritten:
/// diag receives the eigenvalues in ascending order. If vectors is non-null it
/// must hold z_rows*n doubles (row-major) initialized to the matrix the
/// rotations should be accumulated onto -- identity for plain eigenvectors,
/// the first unit row vector when only first eigenvector components are needed
/// (Golub-Welsch weights). Throws EigenError if any eigenvalue fails to
/// converge within the iteration cap.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& offdiag, double* vectors,
                    int n, int z_rows);

/// Full symmetric eigensolver: Householder tridiagonalization followed by QL.
/// matrix is n*n row-major and is expected symmetric (not checked here).
EigenDecomposition symmetric_eigen(const std::vector<double>& matrix, int n);

}  // namespace whh::linalg
