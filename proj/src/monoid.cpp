#include "tgw/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "tgw/error.hpp"
#include "tgw/union_find.hpp"

namespace tgw {

namespace {

int table_size(const std::vector<int>& add) {
  return static_cast<int>(std::lround(std::sqrt(static_cast<double>(add.size()))));
}

}  // namespace

std::vector<int> order_census(const std::vector<int>& add, int zero) {
  const int n = table_size(add);
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) {
    std::set<int> seen{zero};
    int cur = zero;
    for (;;) {
      cur = add[cur * n + x];
      if (!seen.insert(cur).second) break;
    }
    out[x] = static_cast<int>(seen.size());
  }
  return out;
}

std::string structure_tag(const std::vector<int>& add, int zero) {
  const int n = table_size(add);
  if (n == 1) return "trivial";
  const auto census = order_census(add, zero);
  if (std::find(census.begin(), census.end(), n) != census.end()) return "cyclic-" + std::to_string(n);
  return "monoid-" + std::to_string(n);
}

MonoidPresentation bourne_monoid_quotient(const FiniteMonoid& m, const std::vector<int>& carrier,
                                          const std::vector<int>& sub, std::string backend) {
  const int n = m.size();
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
  const int k = static_cast<int>(carrier.size());
  // Node k + z stands for the meeting point z of translates x + sub.
  UnionFind uf(k + n);
  for (int i = 0; i < k; ++i)
    for (int b : sub) {
      const int z = m.sum(carrier[i], b);
      if (z >= 0) uf.unite(i, k + z);
    }
  std::vector<int> root(k);
  for (int i = 0; i < k; ++i) root[i] = uf.find(i);
  std::vector<int> class_of(k, -1), rep;
  for (int i = 0; i < k; ++i) {
    int c = -1;
    for (int j = 0; j < i; ++j)
      if (root[j] == root[i]) {
        c = class_of[j];
        break;
      }
    if (c < 0) {
      c = static_cast<int>(rep.size());
      rep.push_back(i);
    }
    class_of[i] = c;
  }

  MonoidPresentation p;
  p.backend = std::move(backend);
  const int q = static_cast<int>(rep.size());
  for (int c = 0; c < q; ++c) p.classes.push_back("[" + m.labels[carrier[rep[c]]] + "]");
  p.add.assign(static_cast<std::size_t>(q) * q, 0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      const int s = m.sum(carrier[x], carrier[y]);
      if (s < 0 || pos[s] < 0) {
        p.well_defined = false;
        continue;
      }
      const int c = class_of[pos[s]];
      if (x == rep[class_of[x]] && y == rep[class_of[y]]) {
        p.add[class_of[x] * q + class_of[y]] = c;
      }
    }
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      const int s = m.sum(carrier[x], carrier[y]);
      if (s >= 0 && pos[s] >= 0 && p.add[class_of[x] * q + class_of[y]] != class_of[pos[s]]) p.well_defined = false;
    }
  if (pos[m.zero] < 0) throw PreconditionError("submonoid does not contain zero");
  p.zero = class_of[pos[m.zero]];
  p.structure_tag = structure_tag(p.add, p.zero);
  return p;
}

std::optional<std::vector<int>> find_monoid_isomorphism(const MonoidPresentation& a,
                                                        const MonoidPresentation& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  auto ca = order_census(a.add, a.zero), cb = order_census(b.add, b.zero);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return std::nullopt;
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  phi[a.zero] = b.zero;
  used[b.zero] = true;
  std::vector<int> order;
  for (int x = 0; x < n; ++x)
    if (x != a.zero) order.push_back(x);

  auto consistent = [&]() {
    for (int x = 0; x < n; ++x) {
      if (phi[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (phi[y] < 0) continue;
        const int s = a.sum(x, y);
        if (phi[s] >= 0 && phi[s] != b.sum(phi[x], phi[y])) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == order.size()) return consistent();
    const int x = order[i];
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      phi[x] = y;
      used[y] = true;
      if (consistent() && search(i + 1)) return true;
      used[y] = false;
      phi[x] = -1;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return phi;
}

}  // namespace tgw
