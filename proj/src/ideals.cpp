#include "tgw/ideals.hpp"

#include <algorithm>
#include <set>

#include "tgw/error.hpp"
#include "tgw/union_find.hpp"

namespace tgw {

namespace {

void check_carrier(const Semiring& s, const Options& opt) {
  if (s.size() > opt.budget.subset_bound || s.size() > kMaxSubsetCarrier) {
    throw BudgetError("|T| = " + std::to_string(s.size()) + " exceeds subset bound " +
                      std::to_string(opt.budget.subset_bound));
  }
}

// One absorption/addition pass; returns the enlarged set.
Subset close_once(const Semiring& s, Subset cur) {
  const int n = s.size(), g = s.gamma_count();
  Subset next = cur;
  const auto in = members(cur);
  for (int x : in)
    for (int y : in) next |= bit(s.add(x, y));
  for (int x : in)
    for (int al = 0; al < g; ++al)
      for (int be = 0; be < g; ++be)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            next |= bit(s.tri(x, al, y, be, z));
            next |= bit(s.tri(y, al, x, be, z));
            next |= bit(s.tri(y, al, z, be, x));
          }
  return next;
}

}  // namespace

bool is_ideal(const Semiring& s, Subset m) {
  if (s.size() > kMaxSubsetCarrier) throw BudgetError("carrier too large for subsets");
  if (!contains(m, s.zero())) return false;
  return close_once(s, m) == m;
}

IdealSet ideal_closure(const Semiring& s, Subset seed) {
  if (s.size() > kMaxSubsetCarrier) throw BudgetError("carrier too large for subsets");
  Subset cur = seed | bit(s.zero());
  for (;;) {
    const Subset next = close_once(s, cur);
    if (next == cur) break;
    cur = next;
  }
  return {cur, Flag::yes, Flag::unchecked, Flag::unchecked};
}

std::vector<IdealSet> enumerate_ideals(const Semiring& s, const Options& opt) {
  check_carrier(s, opt);
  const int n = s.size();
  const Subset whole = full_subset(n);

  std::set<Subset> seen;
  std::vector<Subset> frontier{ideal_closure(s, 0).members};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset ideal : frontier) {
      for (int x = 0; x < n; ++x) {
        if (contains(ideal, x)) continue;
        const Subset c = ideal_closure(s, ideal | bit(x)).members;
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }

  std::vector<Subset> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), subset_order);

  std::vector<IdealSet> out;
  for (Subset m : sorted) {
    IdealSet id{m, Flag::yes, Flag::no, Flag::no};
    if (m != whole) {
      id.is_prime = to_flag(is_prime(s, m));
      const bool maximal = std::none_of(sorted.begin(), sorted.end(), [&](Subset other) {
        return other != whole && other != m && is_subset_of(m, other);
      });
      id.is_maximal = to_flag(maximal);
    }
    out.push_back(id);
  }
  return out;
}

bool is_prime(const Semiring& s, Subset ideal) {
  if (!is_ideal(s, ideal)) throw PreconditionError("is_prime: not an ideal");
  if (ideal == full_subset(s.size())) throw PreconditionError("is_prime: improper ideal");
  const int n = s.size(), g = s.gamma_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (contains(ideal, a) || contains(ideal, b) || contains(ideal, c)) continue;
        bool all_inside = true;
        for (int al = 0; al < g && all_inside; ++al)
          for (int be = 0; be < g && all_inside; ++be)
            all_inside = contains(ideal, s.tri(a, al, b, be, c));
        if (all_inside) return false;
      }
  return true;
}

Subset SpectrumSpace::closed_set(Subset ideal) const {
  Subset v = 0;
  for (std::size_t p = 0; p < points.size(); ++p)
    if (is_subset_of(ideal, points[p].members)) v |= bit(static_cast<int>(p));
  return v;
}

SpectrumSpace spectrum(const Semiring& s, const Options& opt) {
  SpectrumSpace sp;
  sp.lenient = require_axioms(s, opt);
  sp.ideals = enumerate_ideals(s, opt);
  if (sp.ideals.size() > kMaxSubsetCarrier) {
    // closed sets are bitmasks over points; primes are a subset of ideals
    std::size_t primes = std::count_if(sp.ideals.begin(), sp.ideals.end(),
                                       [](const IdealSet& i) { return i.is_prime == Flag::yes; });
    if (primes > kMaxSubsetCarrier) throw BudgetError("more than 64 prime ideals");
  }
  for (const auto& id : sp.ideals)
    if (id.is_prime == Flag::yes) sp.points.push_back(id);
  for (const auto& id : sp.ideals) sp.closed_sets.push_back(sp.closed_set(id.members));
  return sp;
}

ZariskiReport zariski_report(const Semiring& s, const SpectrumSpace& spec) {
  ZariskiReport r;
  for (std::size_t i = 0; i < spec.ideals.size(); ++i) {
    for (std::size_t j = 0; j < spec.ideals.size(); ++j) {
      ++r.pairs_checked;
      const Subset I = spec.ideals[i].members, J = spec.ideals[j].members;
      const Subset sum = ideal_closure(s, I | J).members;
      const Subset lhs = spec.closed_sets[i] & spec.closed_sets[j];
      const Subset rhs = spec.closed_set(sum);
      if (lhs != rhs) r.intersection_failures.push_back({I, J, lhs, rhs});
    }
  }
  // The closure of a point P is V(P).
  for (std::size_t p = 0; p < spec.points.size(); ++p)
    for (std::size_t q = p + 1; q < spec.points.size(); ++q)
      if (spec.closed_set(spec.points[p].members) == spec.closed_set(spec.points[q].members))
        r.t0_failures.emplace_back(static_cast<int>(p), static_cast<int>(q));
  return r;
}

int LocalizedSemiring::fraction_index(int numerator, int denominator) const {
  auto it = std::find(fractions.begin(), fractions.end(), std::pair{numerator, denominator});
  if (it == fractions.end()) throw PreconditionError("denominator lies in the prime");
  return static_cast<int>(it - fractions.begin());
}

std::string LocalizedSemiring::label(int cls, const Semiring& s) const {
  const auto& [a, d] = fractions[representative[cls]];
  return s.label(a) + "/" + s.label(d);
}

LocalizedSemiring localize(const Semiring& s, Subset prime, const Options& opt) {
  LocalizedSemiring L;
  L.lenient = require_axioms(s, opt);
  if (!is_prime(s, prime)) throw PreconditionError("localize: ideal is not prime");
  const int n = s.size(), g = s.gamma_count();
  L.prime = prime;

  std::vector<int> outside;
  for (int x = 0; x < n; ++x)
    if (!contains(prime, x)) outside.push_back(x);
  L.multiplier = s.unit() ? *s.unit() : outside.front();

  for (int a = 0; a < n; ++a)
    for (int d : outside) L.fractions.emplace_back(a, d);
  const int F = static_cast<int>(L.fractions.size());
  if (static_cast<std::size_t>(F) * F * F > opt.budget.state_budget * 64) {
    throw BudgetError("localization: too many fractions");
  }

  UnionFind uf(F);
  for (int i = 0; i < F; ++i) {
    for (int j = i + 1; j < F; ++j) {
      const auto [a, d1] = L.fractions[i];
      const auto [b, d2] = L.fractions[j];
      bool related = false;
      for (int u : outside) {
        for (int al = 0; al < g && !related; ++al)
          for (int be = 0; be < g && !related; ++be)
            related = s.tri(u, al, a, be, d2) == s.tri(u, al, b, be, d1);
        if (related) break;
      }
      if (related) uf.unite(i, j);
    }
  }
  L.class_of = uf.canonical_classes();
  L.class_count = F == 0 ? 0 : *std::max_element(L.class_of.begin(), L.class_of.end()) + 1;
  L.representative.assign(L.class_count, -1);
  for (int f = 0; f < F; ++f)
    if (L.representative[L.class_of[f]] < 0) L.representative[L.class_of[f]] = f;

  const int w = L.multiplier;
  auto mul = [&](int x, int y) { return s.tri(x, 0, y, 0, w); };
  // class of the fraction num/den, or -1 when den falls into P
  auto cls = [&](int num, int den) {
    if (contains(prime, den)) return -1;
    return L.class_of[L.fraction_index(num, den)];
  };
  auto frac_add = [&](int f1, int f2) {
    const auto [a, x] = L.fractions[f1];
    const auto [b, y] = L.fractions[f2];
    return cls(s.add(mul(a, y), mul(b, x)), mul(x, y));
  };
  auto frac_tri = [&](int f1, int al, int f2, int be, int f3) {
    const auto [a, x] = L.fractions[f1];
    const auto [b, y] = L.fractions[f2];
    const auto [c, z] = L.fractions[f3];
    return cls(s.tri(a, al, b, be, c), s.tri(x, al, y, be, z));
  };
  auto fail = [&L](std::string msg) {
    if (L.well_defined) L.witness = std::move(msg);
    L.well_defined = false;
  };
  auto frac_label = [&](int f) {
    return s.label(L.fractions[f].first) + "/" + s.label(L.fractions[f].second);
  };

  const int C = L.class_count;
  L.add.assign(static_cast<std::size_t>(C) * C, -1);
  for (int x = 0; x < C; ++x)
    for (int y = 0; y < C; ++y) L.add[x * C + y] = frac_add(L.representative[x], L.representative[y]);
  for (int f1 = 0; f1 < F; ++f1)
    for (int f2 = 0; f2 < F; ++f2) {
      const int got = frac_add(f1, f2);
      if (got < 0) fail("sum " + frac_label(f1) + " + " + frac_label(f2) + " has denominator in P");
      if (got != L.add[L.class_of[f1] * C + L.class_of[f2]]) {
        fail("sum depends on representatives: " + frac_label(f1) + " + " + frac_label(f2));
      }
    }

  L.tri.assign(static_cast<std::size_t>(C) * g * C * g * C, -1);
  auto tidx = [C, g](int x, int al, int y, int be, int z) {
    return (((static_cast<std::size_t>(x) * g + al) * C + y) * g + be) * C + z;
  };
  for (int x = 0; x < C; ++x)
    for (int al = 0; al < g; ++al)
      for (int y = 0; y < C; ++y)
        for (int be = 0; be < g; ++be)
          for (int z = 0; z < C; ++z)
            L.tri[tidx(x, al, y, be, z)] = frac_tri(L.representative[x], al, L.representative[y],
                                                    be, L.representative[z]);
  for (int f1 = 0; f1 < F; ++f1)
    for (int al = 0; al < g; ++al)
      for (int f2 = 0; f2 < F; ++f2)
        for (int be = 0; be < g; ++be)
          for (int f3 = 0; f3 < F; ++f3) {
            const int got = frac_tri(f1, al, f2, be, f3);
            const std::string where = frac_label(f1) + ", " + frac_label(f2) + ", " + frac_label(f3);
            if (got < 0) fail("product of " + where + " has denominator in P");
            if (got != L.tri[tidx(L.class_of[f1], al, L.class_of[f2], be, L.class_of[f3])]) {
              fail("product depends on representatives: " + where);
            }
          }

  std::vector<bool> in_max(C, false);
  for (int f = 0; f < F; ++f)
    if (contains(prime, L.fractions[f].first)) in_max[L.class_of[f]] = true;
  for (int c = 0; c < C; ++c)
    if (in_max[c]) L.maximal_ideal.push_back(c);

  if (s.unit()) {
    const int u = *s.unit();
    const int one = L.class_of[L.fraction_index(u, u)];
    bool local = true;
    for (int x = 0; x < C; ++x) {
      bool invertible = false;
      for (int y = 0; y < C && !invertible; ++y)
        for (int al = 0; al < g && !invertible; ++al)
          for (int be = 0; be < g && !invertible; ++be)
            invertible = L.tri[tidx(x, al, y, be, one)] == one;
      if (invertible == in_max[x]) local = false;
    }
    L.local = local;
  }
  return L;
}

GelfandReport gelfand_injectivity(const Semiring& s, const Options& opt) {
  GelfandReport r;
  r.lenient = require_axioms(s, opt);
  if (!s.unit()) throw PreconditionError("gelfand: structure declares no unit");
  const int n = s.size();
  if (n <= 1) return r;
  for (const auto& id : enumerate_ideals(s, opt))
    if (id.is_prime == Flag::yes && id.is_maximal == Flag::yes) r.maximal_primes.push_back(id.members);
  if (r.maximal_primes.empty()) throw PreconditionError("gelfand: no maximal ideals found");

  const int u = *s.unit();
  std::vector<std::vector<int>> image(n);
  for (Subset p : r.maximal_primes) {
    const auto L = localize(s, p, opt);
    for (int a = 0; a < n; ++a) image[a].push_back(L.class_of[L.fraction_index(a, u)]);
  }
  for (int a = 0; a < n && r.injective; ++a)
    for (int b = a + 1; b < n; ++b)
      if (image[a] == image[b]) {
        r.injective = false;
        r.witness = std::pair{a, b};
        break;
      }
  return r;
}

}  // namespace tgw
