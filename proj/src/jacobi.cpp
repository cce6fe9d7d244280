#include <algorithm>
#include <cmath>
#include <numeric>

#include "tgw/eigen.hpp"
#include "tgw/error.hpp"

namespace tgw {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw ShapeError("matrix product dimension mismatch");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ShapeError("matrix shapes differ");
  double out = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) out = std::max(out, std::abs(a.data[i] - b.data[i]));
  return out;
}

bool is_symmetric(const Matrix& a) {
  if (a.rows != a.cols) return false;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

namespace {

double off_norm(const Matrix& a) {
  double s = 0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const Matrix& input, double tolerance, int max_sweeps) {
  if (!is_symmetric(input)) throw PreconditionError("jacobi_eigen needs a symmetric matrix");
  const int n = input.rows;
  Matrix a = input;
  Matrix v = Matrix::identity(n);
  EigenDecomposition out;

  while ((out.off_diagonal = off_norm(a)) > tolerance && out.sweeps < max_sweeps) {
    ++out.sweeps;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  out.converged = out.off_diagonal <= tolerance;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
  out.vectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values.push_back(a(order[j], order[j]));
    double sign = 1.0;
    for (int i = 0; i < n; ++i)
      if (std::abs(v(i, order[j])) > 1e-12) {
        sign = v(i, order[j]) < 0 ? -1.0 : 1.0;
        break;
      }
    for (int i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, order[j]);
  }
  return out;
}

Matrix reconstruct(const EigenDecomposition& e) {
  const int n = e.vectors.rows;
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < static_cast<int>(e.values.size()); ++k)
        out(i, j) += e.vectors(i, k) * e.values[k] * e.vectors(j, k);
  return out;
}

double orthonormality_error(const Matrix& v) {
  return max_abs_difference(v.transpose() * v, Matrix::identity(v.cols));
}

}  // namespace tgw
