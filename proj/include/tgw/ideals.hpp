#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgw/options.hpp"
#include "tgw/semiring.hpp"
#include "tgw/subset.hpp"

namespace tgw {

enum class Flag { unchecked, yes, no };

inline Flag to_flag(bool b) { return b ? Flag::yes : Flag::no; }

struct IdealSet {
  Subset members = 0;
  Flag is_ideal = Flag::unchecked;
  Flag is_prime = Flag::unchecked;
  Flag is_maximal = Flag::unchecked;

  friend bool operator==(const IdealSet&, const IdealSet&) = default;
};

// Contains zero, closed under +, absorbing in every slot of tri.
bool is_ideal(const Semiring& s, Subset members);

// Least ideal containing the seed.
IdealSet ideal_closure(const Semiring& s, Subset seed);

// All ideals, ascending by cardinality then lexicographically. Built by
// closing single-element extensions of already found ideals. Throws
// BudgetError when |T| exceeds the subset bound.
std::vector<IdealSet> enumerate_ideals(const Semiring& s, const Options& opt = {});

// Proper ideal I with (for all alpha, beta: tri(a,alpha,b,beta,c) in I) implying
// a, b or c in I. Throws PreconditionError for non-ideals and for I = T.
bool is_prime(const Semiring& s, Subset ideal);

struct SpectrumSpace {
  std::vector<IdealSet> points;  // proper prime ideals
  std::vector<IdealSet> ideals;  // full ideal lattice
  // closed_sets[i] = V(ideals[i]) as a bitmask over point indices.
  std::vector<Subset> closed_sets;
  bool lenient = false;

  // V(I) for an arbitrary subset I (points P with I contained in P).
  Subset closed_set(Subset ideal) const;
};

SpectrumSpace spectrum(const Semiring& s, const Options& opt = {});

struct ZariskiFailure {
  Subset left = 0, right = 0;  // the ideals I, J
  Subset intersection = 0;     // V(I) n V(J)
  Subset of_sum = 0;           // V(I + J)
};

struct ZariskiReport {
  std::size_t pairs_checked = 0;
  std::vector<ZariskiFailure> intersection_failures;
  // Point pairs whose closures V(P) coincide.
  std::vector<std::pair<int, int>> t0_failures;
  bool passed() const { return intersection_failures.empty() && t0_failures.empty(); }
};

ZariskiReport zariski_report(const Semiring& s, const SpectrumSpace& spec);

/// Localization T_P at a prime P.
///
/// Fractions (a, s) with s outside P are related when some u outside P and
/// some (alpha, beta) give tri(u,alpha,a,beta,t) = tri(u,alpha,b,beta,s); the
/// classes are the equivalence closure of that relation. Operations:
///   a/s + b/t = (a.t + b.s) / (s.t)   with x.y = tri(x, g0, y, g0, w)
///   tri(a/s, al, b/t, be, c/r) = tri(a,al,b,be,c) / tri(s,al,t,be,r)
/// where w is the unit when present and otherwise the least element outside P.
struct LocalizedSemiring {
  Subset prime = 0;
  int multiplier = 0;                       // w above
  std::vector<std::pair<int, int>> fractions;  // (numerator, denominator)
  std::vector<int> class_of;                // fraction -> class
  std::vector<int> representative;          // class -> first fraction
  int class_count = 0;
  // class x class -> class; -1 where the result is undefined.
  std::vector<int> add;
  // class x g x class x g x class -> class; -1 where undefined.
  std::vector<int> tri;
  std::vector<int> maximal_ideal;  // classes holding a fraction with numerator in P
  bool well_defined = true;
  std::string witness;             // first representative-dependence found
  // Set when a unit exists: non-invertible classes coincide with maximal_ideal.
  std::optional<bool> local;
  bool lenient = false;

  int fraction_index(int numerator, int denominator) const;
  std::string label(int cls, const Semiring& s) const;
};

LocalizedSemiring localize(const Semiring& s, Subset prime, const Options& opt = {});

struct GelfandReport {
  bool injective = true;
  std::vector<Subset> maximal_primes;
  std::optional<std::pair<int, int>> witness;  // distinct elements with equal images
  bool lenient = false;
};

// a -> (class of a/1 in T_P) over the maximal primes P.
GelfandReport gelfand_injectivity(const Semiring& s, const Options& opt = {});

}  // namespace tgw
