#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tgw {

/// A finite commutative monoid produced by a quotient construction
/// (tensor products, Ext^1, Tor_1, quotient of a monoid by a submonoid).
struct MonoidPresentation {
  std::vector<std::string> classes;  // representative description per class
  std::vector<int> add;              // classes x classes -> class
  int zero = 0;
  std::string structure_tag;         // "trivial", "cyclic-k" or "monoid-k"
  bool approximate = false;
  bool well_defined = true;          // induced addition independent of representatives
  std::string backend;               // construction used
  std::vector<std::string> relations;  // relation families actually imposed

  int size() const { return static_cast<int>(classes.size()); }
  bool is_trivial() const { return classes.size() == 1; }
  int sum(int x, int y) const { return add[x * size() + y]; }
};

// "trivial" for one class, "cyclic-k" when some class generates the whole
// monoid (k = size), otherwise "monoid-k".
std::string structure_tag(const std::vector<int>& add, int zero);

// Order census: for every class, the size of the cyclic submonoid it
// generates.
std::vector<int> order_census(const std::vector<int>& add, int zero);

// Finite commutative monoid given by a table; elements 0..n-1.
struct FiniteMonoid {
  std::vector<std::string> labels;
  std::vector<int> add;
  int zero = 0;
  int size() const { return static_cast<int>(labels.size()); }
  int sum(int x, int y) const { return add[x * size() + y]; }
};

// Bourne quotient of a submonoid `carrier` by a submonoid `sub` of it:
// x ~ y iff x + b = y + b' for b, b' in sub. Both are lists of element ids of
// `m`; sub must lie inside carrier.
MonoidPresentation bourne_monoid_quotient(const FiniteMonoid& m, const std::vector<int>& carrier,
                                          const std::vector<int>& sub, std::string backend);

// Bijection of classes preserving zero and addition.
std::optional<std::vector<int>> find_monoid_isomorphism(const MonoidPresentation& a,
                                                        const MonoidPresentation& b);

}  // namespace tgw
