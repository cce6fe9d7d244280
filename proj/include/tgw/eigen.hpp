#pragma once

#include <cstddef>
#include <vector>

namespace tgw {

// Dense row-major real matrix.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}
  static Matrix identity(int n);

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

double max_abs_difference(const Matrix& a, const Matrix& b);
bool is_symmetric(const Matrix& a);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column j belongs to values[j]
  int sweeps = 0;
  bool converged = false;
  double off_diagonal = 0;     // Frobenius norm of the final off-diagonal part
};

// Cyclic Jacobi rotations until the off-diagonal norm is at most `tolerance`.
// Eigenvectors are normalized so that their first entry of magnitude above
// 1e-12 is positive.
EigenDecomposition jacobi_eigen(const Matrix& a, double tolerance = 1e-12, int max_sweeps = 100);

// V diag(values) V^T
Matrix reconstruct(const EigenDecomposition& e);
// max |V^T V - I|
double orthonormality_error(const Matrix& v);

}  // namespace tgw
