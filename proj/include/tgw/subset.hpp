#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tgw {

// Subsets of a carrier of at most 64 elements, as bitmasks.
using Subset = std::uint64_t;

inline constexpr int kMaxSubsetCarrier = 64;

inline Subset bit(int i) { return Subset{1} << i; }
inline bool contains(Subset s, int i) { return (s >> i) & 1U; }
inline bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
inline int cardinality(Subset s) { return std::popcount(s); }
inline Subset full_subset(int n) { return n >= 64 ? ~Subset{0} : (bit(n) - 1); }

inline std::vector<int> members(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

inline Subset from_members(const std::vector<int>& xs) {
  Subset s = 0;
  for (int x : xs) s |= bit(x);
  return s;
}

// Ascending cardinality, then lexicographic on the sorted member lists.
inline bool subset_order(Subset a, Subset b) {
  if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
  return members(a) < members(b);
}

// "{0,(1,0)}" style rendering against a label list.
inline std::string render_subset(Subset s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int i : members(s)) {
    if (!first) out += ",";
    out += labels[i];
    first = false;
  }
  return out + "}";
}

}  // namespace tgw
