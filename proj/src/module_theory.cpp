#include "tgw/module_theory.hpp"

#include <algorithm>
#include <functional>

#include "tgw/error.hpp"

namespace tgw {

namespace {

// Position of each member of `outer` inside the submodule built from it.
Subset reindex(Subset inner, Subset outer) {
  Subset out = 0;
  int pos = 0;
  for (int x : members(outer)) {
    if (contains(inner, x)) out |= bit(pos);
    ++pos;
  }
  return out;
}

std::string render_partition(const GammaModule& m, const std::vector<int>& class_of) {
  const int classes = *std::max_element(class_of.begin(), class_of.end()) + 1;
  std::string out;
  for (int c = 0; c < classes; ++c) {
    Subset block = 0;
    for (int x = 0; x < m.size(); ++x)
      if (class_of[x] == c) block |= bit(x);
    if (c > 0) out += "|";
    const std::string r = render_subset(block, m.carrier());
    out += r.substr(1, r.size() - 2);
  }
  return out;
}

}  // namespace

bool is_simple(const GammaModule& m, const Options& opt) {
  if (m.size() <= 1) return false;
  const Subset zero_only = bit(m.zero());
  const Subset whole = full_subset(m.size());
  for (Subset s : enumerate_submodules(m, opt))
    if (s != zero_only && s != whole) return false;
  return true;
}

IdealSet element_annihilator(const GammaModule& m, int x) {
  const Semiring& s = m.base();
  const int n = s.size(), g = s.gamma_count();
  Subset ann = bit(s.zero());
  for (int a = 0; a < n; ++a) {
    bool kills = true;
    for (int al = 0; al < g && kills; ++al)
      for (int be = 0; be < g && kills; ++be)
        for (int b = 0; b < n && kills; ++b) kills = m.act(a, al, x, be, b) == m.zero();
    if (kills) ann |= bit(a);
  }
  return {ann, to_flag(is_ideal(s, ann)), Flag::unchecked, Flag::unchecked};
}

IdealSet annihilator(const GammaModule& m, const Options& opt) {
  require_module_axioms(m, opt);
  Subset ann = full_subset(m.base().size());
  for (int x = 0; x < m.size(); ++x) ann &= element_annihilator(m, x).members;
  return {ann, to_flag(is_ideal(m.base(), ann)), Flag::unchecked, Flag::unchecked};
}

FaithfulReport is_faithful(const GammaModule& m, const Options& opt) {
  const auto ann = annihilator(m, opt);
  FaithfulReport r;
  const Subset extra = ann.members & ~bit(m.base().zero());
  r.faithful = extra == 0;
  if (!r.faithful) r.witness = members(extra).front();
  return r;
}

EndReport end_semiring(const GammaModule& m, const Options& opt) {
  EndReport r;
  r.lenient = require_module_axioms(m, opt);
  r.endos = hom_set(m, m, opt);
  const int e = static_cast<int>(r.endos.size()), k = m.size();
  auto index_of = [&](const std::vector<int>& f) {
    for (int i = 0; i < e; ++i)
      if (r.endos[i].map == f) return i;
    return -1;
  };
  r.add_table.assign(static_cast<std::size_t>(e) * e, -1);
  r.compose_table.assign(static_cast<std::size_t>(e) * e, -1);
  std::vector<int> tmp(k);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      const auto& f = r.endos[i].map;
      const auto& h = r.endos[j].map;
      for (int x = 0; x < k; ++x) tmp[x] = m.add(f[x], h[x]);
      r.add_table[i * e + j] = index_of(tmp);
      for (int x = 0; x < k; ++x) tmp[x] = f[h[x]];
      r.compose_table[i * e + j] = index_of(tmp);
      if (r.add_table[i * e + j] < 0 || r.compose_table[i * e + j] < 0) r.closed = false;
    }
  std::vector<int> identity(k), zero(k, m.zero());
  for (int x = 0; x < k; ++x) identity[x] = x;
  r.identity_index = index_of(identity);
  r.zero_index = index_of(zero);
  for (const auto& f : r.endos)
    if (is_bijective(f.map, k)) ++r.bijective_count;

  // Equivariance-only census by brute force over all k^k maps.
  double total = 1;
  for (int i = 0; i < k; ++i) total *= k;
  if (total <= static_cast<double>(opt.budget.map_budget)) {
    const Semiring& s = m.base();
    const int n = s.size(), g = s.gamma_count();
    long long count = 0;
    std::vector<int> f(k, 0);
    for (;;) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int al = 0; al < g && ok; ++al)
          for (int x = 0; x < k && ok; ++x)
            for (int be = 0; be < g && ok; ++be)
              for (int b = 0; b < n && ok; ++b) ok = f[m.act(a, al, x, be, b)] == m.act(a, al, f[x], be, b);
      if (ok) ++count;
      int i = 0;
      while (i < k && ++f[i] == k) f[i++] = 0;
      if (i == k) break;
    }
    r.equivariant_map_count = count;
  }

  r.simple = is_simple(m, opt);
  if (r.simple) {
    bool schur = true, local = true;
    for (int i = 0; i < e; ++i) {
      if (i == r.zero_index) continue;
      if (!is_bijective(r.endos[i].map, k)) {
        schur = false;
        r.schur_counterexamples.push_back(i);
      }
      bool invertible = false;
      for (int j = 0; j < e && !invertible && r.identity_index >= 0; ++j)
        invertible = r.compose_table[i * e + j] == r.identity_index &&
                     r.compose_table[j * e + i] == r.identity_index;
      if (!invertible) local = false;
    }
    r.schur = schur;
    r.local = local;
  }
  return r;
}

DensityReport density_check(const GammaModule& m, std::optional<int> anchor, bool check_rank2,
                            const Options& opt) {
  DensityReport r;
  r.lenient = require_module_axioms(m, opt);
  if (!is_simple(m, opt)) throw PreconditionError("density_check: module " + m.name() + " is not simple");
  const Semiring& s = m.base();
  if (!anchor) anchor = s.unit() ? s.unit() : s.anchor();
  if (!anchor) throw PreconditionError("density_check: no unit and no anchor element designated");
  if (*anchor < 0 || *anchor >= s.size()) throw IndexError("density_check: anchor out of range");
  r.anchor = *anchor;
  const int n = s.size(), g = s.gamma_count(), k = m.size(), e = *anchor;

  r.dense = true;
  for (int x = 0; x < k; ++x) {
    if (x == m.zero()) continue;
    for (int y = 0; y < k; ++y) {
      std::optional<DensityWitness> found;
      for (int al = 0; al < g && !found; ++al)
        for (int be = 0; be < g && !found; ++be)
          for (int a = 0; a < n && !found; ++a)
            if (m.act(a, al, x, be, e) == y) found = DensityWitness{x, y, a, al, be};
      if (found) {
        r.witnesses.push_back(*found);
      } else if (r.dense) {
        r.dense = false;
        r.failure = std::pair{x, y};
      }
    }
  }

  if (check_rank2) {
    bool ok = true;
    for (int x1 = 0; x1 < k && ok; ++x1)
      for (int x2 = x1 + 1; x2 < k && ok; ++x2) {
        if (x1 == m.zero() || x2 == m.zero()) continue;
        for (int y1 = 0; y1 < k && ok; ++y1)
          for (int y2 = 0; y2 < k && ok; ++y2) {
            bool solved = false;
            for (int al = 0; al < g && !solved; ++al)
              for (int be = 0; be < g && !solved; ++be)
                for (int a = 0; a < n && !solved; ++a)
                  solved = m.act(a, al, x1, be, e) == y1 && m.act(a, al, x2, be, e) == y2;
            ok = solved;
          }
      }
    r.rank2 = ok;
  }
  return r;
}

IsoInstance first_isomorphism(const GammaModule& m, const GammaModule& n, const std::vector<int>& f,
                              const Options&) {
  IsoInstance r;
  r.theorem = "first";
  if (!is_hom(m, n, f)) {
    r.detail = "map is not a homomorphism";
    return r;
  }
  const Subset ker = kernel(m, n, f);
  const Subset im = image(f);
  const auto q = bourne_quotient(m, ker);
  const auto im_module = submodule(n, im);
  r.left_size = q.quotient.size();
  r.right_size = im_module.size();
  r.detail = "ker f = " + render_subset(ker, m.carrier()) + ", im f = " + render_subset(im, n.carrier());

  // f-bar([x]) = f(x), in local indices of im f.
  std::vector<int> fbar(q.quotient.size(), -1);
  std::vector<int> local(n.size(), -1);
  {
    int pos = 0;
    for (int y : members(im)) local[y] = pos++;
  }
  for (int x = 0; x < m.size(); ++x) {
    const int c = q.congruence.class_of[x];
    const int y = local[f[x]];
    if (fbar[c] >= 0 && fbar[c] != y) {
      r.detail += "; induced map not well defined";
      return r;
    }
    fbar[c] = y;
  }
  if (!q.congruence.compatible) {
    r.detail += "; quotient congruence not compatible: " + q.congruence.witness;
    return r;
  }
  const bool bij = is_bijective(fbar, im_module.size());
  r.holds = bij && is_hom(q.quotient, im_module, fbar) && is_hom(im_module, q.quotient, inverse_map(fbar));
  if (!bij) r.detail += "; induced map not bijective";
  return r;
}

IsoInstance second_isomorphism(const GammaModule& m, Subset n, Subset p, const Options& opt) {
  IsoInstance r;
  r.theorem = "second";
  if (!is_submodule(m, n) || !is_submodule(m, p)) {
    r.detail = "arguments are not submodules";
    return r;
  }
  const Subset sum = generated_submodule(m, n | p);
  const Subset meet = n & p;
  const auto left = bourne_quotient(submodule(m, sum), reindex(p, sum));
  const auto right = bourne_quotient(submodule(m, n), reindex(meet, n));
  r.left_size = left.quotient.size();
  r.right_size = right.quotient.size();
  r.detail = "N+P = " + render_subset(sum, m.carrier()) + ", N n P = " + render_subset(meet, m.carrier());
  if (!left.congruence.compatible || !right.congruence.compatible) {
    r.detail += "; quotient congruence not compatible";
    return r;
  }
  r.holds = find_isomorphism(left.quotient, right.quotient, opt).has_value();
  return r;
}

IsoInstance third_isomorphism(const GammaModule& m, Subset n, Subset p, const Options& opt) {
  IsoInstance r;
  r.theorem = "third";
  if (!is_submodule(m, n) || !is_submodule(m, p) || !is_subset_of(p, n)) {
    r.detail = "need submodules P inside N";
    return r;
  }
  const auto mp = bourne_quotient(m, p);
  Subset np = 0;
  for (int x : members(n)) np |= bit(mp.congruence.class_of[x]);
  const auto left = bourne_quotient(mp.quotient, np);
  const auto right = bourne_quotient(m, n);
  r.left_size = left.quotient.size();
  r.right_size = right.quotient.size();
  r.detail = "N/P = " + render_subset(np, mp.quotient.carrier());
  if (!mp.congruence.compatible || !left.congruence.compatible || !right.congruence.compatible) {
    r.detail += "; quotient congruence not compatible";
    return r;
  }
  r.holds = find_isomorphism(left.quotient, right.quotient, opt).has_value();
  return r;
}

std::vector<CatalogEntry> cyclic_module_catalog(std::shared_ptr<const Semiring> s, const Options& opt) {
  require_axioms(*s, opt);
  const GammaModule regular = regular_module(s);
  auto congruences = enumerate_congruences(regular, opt);
  std::sort(congruences.begin(), congruences.end(), [](const ModuleCongruence& a, const ModuleCongruence& b) {
    if (a.class_count != b.class_count) return a.class_count < b.class_count;
    return a.class_of < b.class_of;
  });

  std::vector<CatalogEntry> out;
  for (const auto& c : congruences) {
    const bool identity = c.class_count == regular.size();
    GammaModule q = identity ? regular
                             : quotient_module(regular, c,
                                               s->name() + "/regular/" + render_partition(regular, c.class_of));
    bool duplicate = false;
    for (const auto& e : out)
      if (find_isomorphism(e.module, q, opt)) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    const bool simple = is_simple(q, opt);
    out.push_back({std::move(q), c, simple});
  }
  return out;
}

RadicalReport jacobson_radical(const Semiring& s, const std::vector<CatalogEntry>& catalog, const Options& opt) {
  RadicalReport r;
  Subset rad = full_subset(s.size());
  for (const auto& e : catalog) {
    if (!e.simple) continue;
    const auto ann = annihilator(e.module, opt);
    r.primitive.push_back(ann);
    rad &= ann.members;
  }
  r.radical = {rad, to_flag(is_ideal(s, rad)), Flag::unchecked, Flag::unchecked};
  r.semiprimitive = rad == bit(s.zero());
  return r;
}

SemisimpleReport is_semisimple(const GammaModule& m, const Options& opt) {
  SemisimpleReport r;
  const auto subs = enumerate_submodules(m, opt);
  const Subset zero_only = bit(m.zero());
  for (Subset s : subs) {
    if (cardinality(s) <= 1) continue;
    const bool simple = std::all_of(subs.begin(), subs.end(), [&](Subset t) {
      return !is_subset_of(t, s) || t == s || t == zero_only;
    });
    if (simple) r.simple_submodules.push_back(s);
  }

  const int k = m.size();
  std::vector<Subset> chosen;
  // Sum map from the product of the chosen submodules must hit every element once.
  auto sum_map_bijective = [&]() {
    std::vector<int> sums{m.zero()};
    for (Subset s : chosen) {
      std::vector<int> next;
      for (int acc : sums)
        for (int x : members(s)) next.push_back(m.add(acc, x));
      sums = std::move(next);
    }
    if (static_cast<int>(sums.size()) != k) return false;
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
  };
  std::function<bool(std::size_t, long long)> search = [&](std::size_t start, long long product) {
    if (product == k && sum_map_bijective()) return true;
    for (std::size_t i = start; i < r.simple_submodules.size(); ++i) {
      const Subset s = r.simple_submodules[i];
      const long long next = product * cardinality(s);
      if (next > k) continue;
      const bool disjoint = std::all_of(chosen.begin(), chosen.end(),
                                        [&](Subset c) { return (c & s) == zero_only; });
      if (!disjoint) continue;
      chosen.push_back(s);
      if (search(i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  r.semisimple = search(0, 1);
  if (r.semisimple) r.decomposition = chosen;
  return r;
}

}  // namespace tgw
