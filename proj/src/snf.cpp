#include "tgw/snf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace tgw {

namespace {

using Int = std::int64_t;

Int reduce(Int x, Int d) {
  x %= d;
  return x < 0 ? x + d : x;
}

// s*a + t*b = g = gcd(a, b)
Int extended_gcd(Int a, Int b, Int& s, Int& t) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const Int q = a / b;
    std::tie(a, b) = std::pair{b, a - q * b};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  s = s0;
  t = t0;
  return a;
}

}  // namespace

SmithForm smith_normal_form_mod(std::vector<std::vector<Int>> a, int n, Int d) {
  if (d <= 0) throw std::invalid_argument("modulus must be positive");
  const int r = static_cast<int>(a.size());
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged relation matrix");
    for (auto& x : row) x = reduce(x, d);
  }
  std::vector<std::vector<Int>> v(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) v[i][i] = 1;

  // row_i <- x*row_i + y*row_j ; row_j <- z*row_i + w*row_j
  auto row_combine = [&](int i, int j, Int x, Int y, Int z, Int w) {
    for (int c = 0; c < n; ++c) {
      const Int p = a[i][c], q = a[j][c];
      a[i][c] = reduce(reduce(x * p, d) + reduce(y * q, d), d);
      a[j][c] = reduce(reduce(z * p, d) + reduce(w * q, d), d);
    }
  };
  auto col_combine = [&](int i, int j, Int x, Int y, Int z, Int w) {
    for (int rr = 0; rr < r; ++rr) {
      const Int p = a[rr][i], q = a[rr][j];
      a[rr][i] = reduce(reduce(x * p, d) + reduce(y * q, d), d);
      a[rr][j] = reduce(reduce(z * p, d) + reduce(w * q, d), d);
    }
    for (int rr = 0; rr < n; ++rr) {
      const Int p = v[rr][i], q = v[rr][j];
      v[rr][i] = reduce(reduce(x * p, d) + reduce(y * q, d), d);
      v[rr][j] = reduce(reduce(z * p, d) + reduce(w * q, d), d);
    }
  };

  SmithForm out;
  out.diagonal.assign(n, 0);
  const int steps = std::min(r, n);
  for (int t = 0; t < steps; ++t) {
    int pr = -1, pc = -1;
    for (int i = t; i < r && pr < 0; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    if (pc != t) col_combine(t, pc, 0, 1, 1, 0);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = t + 1; i < r; ++i) {
        const Int p = a[t][t], b = a[i][t];
        if (b == 0) continue;
        if (b % p == 0) {
          row_combine(i, t, 1, d - reduce(b / p, d), 0, 1);
        } else {
          Int s = 0, u = 0;
          const Int g = extended_gcd(p, b, s, u);
          row_combine(t, i, s, u, -(b / g), p / g);
        }
      }
      for (int j = t + 1; j < n; ++j) {
        const Int p = a[t][t], b = a[t][j];
        if (b == 0) continue;
        if (b % p == 0) {
          col_combine(j, t, 1, d - reduce(b / p, d), 0, 1);
        } else {
          Int s = 0, u = 0;
          const Int g = extended_gcd(p, b, s, u);
          col_combine(t, j, s, u, -(b / g), p / g);
          dirty = true;
        }
      }
      for (int i = t + 1; i < r && !dirty; ++i)
        if (a[i][t] != 0) dirty = true;
    }
    out.diagonal[t] = a[t][t];
  }
  out.factors.resize(n);
  for (int i = 0; i < n; ++i) out.factors[i] = std::gcd(out.diagonal[i], d);
  out.transform = std::move(v);
  return out;
}

}  // namespace tgw
