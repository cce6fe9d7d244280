#include <algorithm>
#include <map>
#include <set>

#include "tgw/error.hpp"
#include "tgw/homology.hpp"

namespace tgw {

namespace {

std::vector<int> build_act(const Semiring& s, int k,
                           const std::function<int(int, int, int, int, int)>& f) {
  const int n = s.size(), g = s.gamma_count();
  std::vector<int> act(static_cast<std::size_t>(n) * g * k * g * n);
  for (int a = 0; a < n; ++a)
    for (int al = 0; al < g; ++al)
      for (int m = 0; m < k; ++m)
        for (int be = 0; be < g; ++be)
          for (int b = 0; b < n; ++b)
            act[(((static_cast<std::size_t>(a) * g + al) * k + m) * g + be) * n + b] = f(a, al, m, be, b);
  return act;
}

Subset as_subset(const std::vector<bool>& xs) {
  Subset s = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i]) s |= bit(static_cast<int>(i));
  return s;
}

void require_subset_size(const GammaModule& m) {
  if (m.size() > kMaxSubsetCarrier) {
    throw BudgetError("module " + m.name() + " is too large for subset computations");
  }
}

// Greedy choice of elements x_i of `target` (a subset of u containing zero)
// so that {sum_i act(a_i, al, x_i, be, unit)} equals the target.
std::vector<int> cover(const GammaModule& u, Subset target, int al, int be) {
  const Semiring& s = u.base();
  const int unit = *s.unit();
  if (!contains(target, u.zero())) throw PreconditionError("cover target lacks zero");
  Subset reached = bit(u.zero());
  std::vector<int> gens;
  while (reached != target) {
    int best = -1;
    Subset best_set = 0;
    for (int x : members(target & ~reached)) {
      Subset next = reached;
      for (int y : members(reached))
        for (int a = 0; a < s.size(); ++a) next |= bit(u.add(y, u.act(a, al, x, be, unit)));
      if (!is_subset_of(next, target)) {
        throw PreconditionError("kernel of " + u.name() + " is not closed under the action");
      }
      if (cardinality(next) > cardinality(best_set)) {
        best = x;
        best_set = next;
      }
    }
    if (best < 0 || best_set == reached) {
      throw PreconditionError("no generating set reaches every element of " + u.name());
    }
    gens.push_back(best);
    reached = best_set;
  }
  return gens;
}

Subset kernel_set(const std::vector<int>& map, int zero) {
  std::vector<bool> k(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) k[i] = map[i] == zero;
  return as_subset(k);
}

// Hom(T^r, N) by basis images.
std::vector<ModuleHom> free_homs(const GammaModule& free, int rank, const GammaModule& n,
                                 int al, int be, const Options& opt) {
  double candidates = 1;
  for (int i = 0; i < rank; ++i) candidates *= n.size();
  if (candidates > static_cast<double>(opt.budget.map_budget)) {
    throw BudgetError("Hom(" + free.name() + ", " + n.name() + ") exceeds the map budget");
  }
  std::set<ModuleHom> found;
  std::vector<int> images(rank, 0);
  for (;;) {
    auto map = free_map(free, rank, n, images, al, be);
    if (is_hom(free, n, map)) found.insert(ModuleHom{std::move(map), true});
    int i = rank - 1;
    while (i >= 0 && ++images[i] == n.size()) images[i--] = 0;
    if (i < 0) break;
  }
  return {found.begin(), found.end()};
}

std::map<std::vector<int>, int> index_homs(const std::vector<ModuleHom>& homs) {
  std::map<std::vector<int>, int> out;
  for (std::size_t i = 0; i < homs.size(); ++i) out.emplace(homs[i].map, static_cast<int>(i));
  return out;
}

std::string map_label(const GammaModule& dst, const std::vector<int>& map) {
  std::string out = "[";
  for (std::size_t i = 0; i < map.size(); ++i) out += (i ? "," : "") + dst.label(map[i]);
  return out + "]";
}

// Pointwise sum of maps into n, as a monoid on the listed maps.
FiniteMonoid pointwise_monoid(const std::vector<ModuleHom>& homs, const GammaModule& n) {
  FiniteMonoid fm;
  const auto index = index_homs(homs);
  const int k = static_cast<int>(homs.size());
  fm.add.assign(static_cast<std::size_t>(k) * k, -1);
  fm.zero = -1;
  for (int i = 0; i < k; ++i) {
    fm.labels.push_back(map_label(n, homs[i].map));
    if (std::all_of(homs[i].map.begin(), homs[i].map.end(), [&](int v) { return v == n.zero(); })) {
      fm.zero = i;
    }
    for (int j = 0; j < k; ++j) {
      std::vector<int> sum(homs[i].map.size());
      for (std::size_t x = 0; x < sum.size(); ++x) sum[x] = n.add(homs[i].map[x], homs[j].map[x]);
      auto it = index.find(sum);
      if (it != index.end()) fm.add[i * k + j] = it->second;
    }
  }
  if (fm.zero < 0) throw PreconditionError("zero map is not a homomorphism into " + n.name());
  return fm;
}

FiniteMonoid presentation_monoid(const MonoidPresentation& p) {
  return FiniteMonoid{p.classes, p.add, p.zero};
}

bool tensor_map_respects_relations(const TensorProduct& src, const TensorProduct& dst,
                                   const std::vector<int>& f) {
  auto eval = [&](const std::vector<int>& terms) {
    int acc = dst.presentation.zero;
    for (int g : terms) acc = dst.presentation.sum(acc, dst.class_of(f[g / src.right_size], g % src.right_size));
    return acc;
  };
  for (const auto& r : src.relations)
    if (eval(r.left) != eval(r.right)) return false;
  return true;
}

}  // namespace

int free_index(int base_size, const std::vector<int>& coords) {
  int out = 0;
  for (int c : coords) out = out * base_size + c;
  return out;
}

std::vector<int> free_coords(int base_size, int rank, int index) {
  std::vector<int> out(rank);
  for (int i = rank - 1; i >= 0; --i) {
    out[i] = index % base_size;
    index /= base_size;
  }
  return out;
}

int basis_vector(const Semiring& s, int rank, int i) {
  if (!s.unit()) throw PreconditionError("basis vectors need a unit");
  if (i < 0 || i >= rank) throw IndexError("basis index out of range");
  std::vector<int> c(rank, s.zero());
  c[i] = *s.unit();
  return free_index(s.size(), c);
}

GammaModule free_module(std::shared_ptr<const Semiring> s, int rank, const Options& opt) {
  if (!s->unit()) throw PreconditionError("free module over " + s->name() + ": no unit");
  if (rank < 0) throw PreconditionError("negative rank");
  const int n = s->size();
  double total = 1;
  for (int i = 0; i < rank; ++i) total *= n;
  if (total > static_cast<double>(opt.budget.state_budget)) {
    throw BudgetError("free module of rank " + std::to_string(rank) + " exceeds the state budget");
  }
  const std::string name = s->name() + "^" + std::to_string(rank);
  if (rank == 0) return zero_module(s).renamed(name);
  const int k = static_cast<int>(total);
  std::vector<std::string> carrier;
  for (int x = 0; x < k; ++x) {
    const auto c = free_coords(n, rank, x);
    if (rank == 1) {
      carrier.push_back(s->label(c[0]));
      continue;
    }
    std::string label = "(";
    for (int i = 0; i < rank; ++i) label += (i ? "," : "") + s->label(c[i]);
    carrier.push_back(label + ")");
  }
  std::vector<int> madd(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x) {
    const auto cx = free_coords(n, rank, x);
    for (int y = 0; y < k; ++y) {
      auto cy = free_coords(n, rank, y);
      for (int i = 0; i < rank; ++i) cy[i] = s->add(cx[i], cy[i]);
      madd[x * k + y] = free_index(n, cy);
    }
  }
  const Semiring& t = *s;
  auto act = build_act(t, k, [&](int a, int al, int m, int be, int b) {
    auto c = free_coords(n, rank, m);
    for (int i = 0; i < rank; ++i) c[i] = t.tri(a, al, c[i], be, b);
    return free_index(n, c);
  });
  std::vector<int> zero(rank, s->zero());
  return GammaModule(s, name, std::move(carrier), free_index(n, zero), std::move(madd), std::move(act));
}

std::vector<int> free_map(const GammaModule& free, int rank, const GammaModule& target,
                          const std::vector<int>& images, int alpha0, int beta0) {
  const Semiring& s = free.base();
  if (!s.unit()) throw PreconditionError("free_map needs a unit");
  if (static_cast<int>(images.size()) != rank) throw ShapeError("free_map: one image per basis vector");
  const int unit = *s.unit();
  std::vector<int> out(free.size());
  for (int x = 0; x < free.size(); ++x) {
    const auto c = free_coords(s.size(), rank, x);
    int acc = target.zero();
    for (int i = 0; i < rank; ++i) acc = target.add(acc, target.act(c[i], alpha0, images[i], beta0, unit));
    out[x] = acc;
  }
  return out;
}

FreeResolution free_resolution(const GammaModule& m, const Options& opt, int alpha0, int beta0) {
  const Semiring& s = m.base();
  if (!s.unit()) throw PreconditionError("free resolution over " + s.name() + ": no unit");
  if (alpha0 < 0 || alpha0 >= s.gamma_count() || beta0 < 0 || beta0 >= s.gamma_count()) {
    throw IndexError("designated parameters out of range");
  }
  FreeResolution r;
  r.lenient = require_module_axioms(m, opt);
  r.alpha0 = alpha0;
  r.beta0 = beta0;
  require_subset_size(m);

  r.modules.reserve(3);
  r.generators0 = cover(m, full_subset(m.size()), alpha0, beta0);
  r.ranks.push_back(static_cast<int>(r.generators0.size()));
  r.modules.push_back(free_module(m.base_ptr(), r.ranks[0], opt));
  const GammaModule& p0 = r.modules[0];
  require_subset_size(p0);
  r.augmentation = free_map(p0, r.ranks[0], m, r.generators0, alpha0, beta0);
  r.kernel0 = kernel_set(r.augmentation, m.zero());

  r.generators1 = cover(p0, r.kernel0, alpha0, beta0);
  r.ranks.push_back(static_cast<int>(r.generators1.size()));
  r.modules.push_back(free_module(m.base_ptr(), r.ranks[1], opt));
  const GammaModule& p1 = r.modules[1];
  require_subset_size(p1);
  r.d1 = free_map(p1, r.ranks[1], p0, r.generators1, alpha0, beta0);
  r.kernel1 = kernel_set(r.d1, p0.zero());

  r.generators2 = cover(p1, r.kernel1, alpha0, beta0);
  r.ranks.push_back(static_cast<int>(r.generators2.size()));
  r.modules.push_back(free_module(m.base_ptr(), r.ranks[2], opt));
  const GammaModule& p2 = r.modules[2];
  r.d2 = free_map(p2, r.ranks[2], p1, r.generators2, alpha0, beta0);

  r.surjective = image(r.augmentation) == full_subset(m.size());
  r.exact_at_p0 = image(r.d1) == kernel_set(r.augmentation, m.zero());
  r.exact_at_p1 = image(r.d2) == kernel_set(r.d1, p0.zero());
  r.maps_are_homs = is_hom(p0, m, r.augmentation) && is_hom(p1, p0, r.d1) && is_hom(p2, p1, r.d2);
  return r;
}

ExtReport ext1(const GammaModule& m, const GammaModule& n, const Options& opt) {
  ExtReport out;
  out.lenient = require_module_axioms(n, opt);
  const FreeResolution res = free_resolution(m, opt);
  out.lenient = out.lenient || res.lenient;
  out.exact = res.exact();
  const auto h0 = free_homs(res.modules[0], res.ranks[0], n, res.alpha0, res.beta0, opt);
  const auto h1 = free_homs(res.modules[1], res.ranks[1], n, res.alpha0, res.beta0, opt);
  const auto h2 = free_homs(res.modules[2], res.ranks[2], n, res.alpha0, res.beta0, opt);
  out.hom0 = h0.size();
  out.hom1 = h1.size();
  out.hom2 = h2.size();
  const auto index1 = index_homs(h1);

  std::vector<int> cycles, boundaries;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    const auto& g = h1[i].map;
    if (std::all_of(res.d2.begin(), res.d2.end(), [&](int x) { return g[x] == n.zero(); })) {
      cycles.push_back(static_cast<int>(i));
    }
  }
  std::set<int> bset;
  for (const auto& f : h0) {
    std::vector<int> pulled(res.d1.size());
    for (std::size_t x = 0; x < pulled.size(); ++x) pulled[x] = f.map[res.d1[x]];
    if (std::all_of(pulled.begin(), pulled.end(), [&](int v) { return v == n.zero(); })) ++out.ext0;
    auto it = index1.find(pulled);
    if (it == index1.end()) throw PreconditionError("pullback along d1 is not a homomorphism");
    bset.insert(it->second);
  }
  boundaries.assign(bset.begin(), bset.end());
  for (int b : boundaries)
    if (!std::binary_search(cycles.begin(), cycles.end(), b)) {
      throw PreconditionError("boundaries are not cycles: the resolution is not a complex");
    }
  out.cycles = cycles.size();
  out.boundaries = boundaries.size();
  out.ext1 = bourne_monoid_quotient(pointwise_monoid(h1, n), cycles, boundaries, "bourne");
  out.hom_mn = hom_set(m, n, opt).size();
  out.ext0_matches = out.ext0 == out.hom_mn;
  return out;
}

TorReport tor1(const GammaModule& m, const GammaModule& n, TensorBackend backend, const Options& opt) {
  TorReport out;
  const FreeResolution res = free_resolution(m, opt);
  out.lenient = res.lenient || require_module_axioms(n, opt);
  const TensorProduct t0 = tensor(res.modules[0], n, backend, opt);
  const TensorProduct t1 = tensor(res.modules[1], n, backend, opt);
  const TensorProduct t2 = tensor(res.modules[2], n, backend, opt);
  out.backend = t0.presentation.backend;
  const auto phi1 = tensor_map(t1, t0, res.d1);
  const auto phi2 = tensor_map(t2, t1, res.d2);
  out.maps_well_defined = tensor_map_respects_relations(t1, t0, res.d1) &&
                          tensor_map_respects_relations(t2, t1, res.d2);

  std::vector<int> ker, img;
  for (int c = 0; c < t1.presentation.size(); ++c)
    if (phi1[c] == t0.presentation.zero) ker.push_back(c);
  std::set<int> iset(phi2.begin(), phi2.end());
  out.complex_ok = true;
  for (int c : iset) {
    if (std::binary_search(ker.begin(), ker.end(), c)) img.push_back(c);
    else out.complex_ok = false;
  }
  out.tor1 = bourne_monoid_quotient(presentation_monoid(t1.presentation), ker, img, "bourne");

  std::vector<int> all(t0.presentation.size());
  for (int c = 0; c < t0.presentation.size(); ++c) all[c] = c;
  std::set<int> im1(phi1.begin(), phi1.end());
  out.tor0 = bourne_monoid_quotient(presentation_monoid(t0.presentation), all,
                                    std::vector<int>(im1.begin(), im1.end()), "bourne");
  const TensorProduct mn = tensor(m, n, backend, opt);
  out.tensor_size = mn.presentation.size();
  out.tor0_matches = find_monoid_isomorphism(out.tor0, mn.presentation).has_value();
  return out;
}

HomModule hom_module(const GammaModule& n, const GammaModule& p, const Options& opt) {
  HomModule out;
  out.homs = hom_set(n, p, opt);
  const auto index = index_homs(out.homs);
  const int k = static_cast<int>(out.homs.size());
  const Semiring& s = n.base();
  int zero = -1;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(map_label(p, out.homs[i].map));
    if (std::all_of(out.homs[i].map.begin(), out.homs[i].map.end(), [&](int v) { return v == p.zero(); })) {
      zero = i;
    }
  }
  if (zero < 0) {
    out.witness = "zero map is not a homomorphism";
    return out;
  }
  bool closed = true;
  auto lookup = [&](std::vector<int> v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    if (closed) out.witness = "pointwise result " + map_label(p, v) + " is not a homomorphism";
    closed = false;
    return 0;
  };
  std::vector<int> madd(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> v(n.size());
      for (int x = 0; x < n.size(); ++x) v[x] = p.add(out.homs[i].map[x], out.homs[j].map[x]);
      madd[i * k + j] = lookup(std::move(v));
    }
  auto act = build_act(s, k, [&](int a, int al, int f, int be, int b) {
    std::vector<int> v(n.size());
    for (int x = 0; x < n.size(); ++x) v[x] = p.act(a, al, out.homs[f].map[x], be, b);
    return lookup(std::move(v));
  });
  if (!closed) return out;
  out.module.emplace(n.base_ptr(), "Hom(" + n.name() + "," + p.name() + ")", std::move(labels), zero,
                     std::move(madd), std::move(act));
  return out;
}

AdjunctionReport adjunction_check(const GammaModule& m, const GammaModule& n, const GammaModule& p,
                                  const Options& opt) {
  AdjunctionReport out;
  out.lenient = require_module_axioms(m, opt) | require_module_axioms(n, opt) |
                require_module_axioms(p, opt);
  const TensorProduct t = tensor(m, n, TensorBackend::automatic, opt);
  out.tensor_well_defined = t.presentation.well_defined && t.action_well_defined;
  const GammaModule& mn = *t.module;
  const auto lhs = hom_set(mn, p, opt);
  out.lhs = lhs.size();
  const HomModule h = hom_module(n, p, opt);
  if (!h.module) {
    out.hom_module_closed = false;
    out.detail = "Hom(N,P) is not a module: " + h.witness;
    return out;
  }
  const auto rhs = hom_set(m, *h.module, opt);
  out.rhs = rhs.size();
  const auto lhs_index = index_homs(lhs);
  const auto rhs_index = index_homs(rhs);
  const auto hn_index = index_homs(h.homs);

  auto phi = [&](const std::vector<int>& f) -> std::optional<std::vector<int>> {
    std::vector<int> g(m.size());
    for (int x = 0; x < m.size(); ++x) {
      std::vector<int> row(n.size());
      for (int y = 0; y < n.size(); ++y) row[y] = f[t.class_of(x, y)];
      auto it = hn_index.find(row);
      if (it == hn_index.end()) return std::nullopt;
      g[x] = it->second;
    }
    return g;
  };
  auto psi = [&](const std::vector<int>& g) {
    std::vector<int> f(t.presentation.size());
    for (int c = 0; c < t.presentation.size(); ++c) {
      int acc = p.zero();
      for (int gen : t.class_terms[c]) acc = p.add(acc, h.homs[g[gen / n.size()]].map[gen % n.size()]);
      f[c] = acc;
    }
    return f;
  };

  out.phi_total = out.round_trip_left = true;
  for (const auto& f : lhs) {
    const auto g = phi(f.map);
    if (!g || !rhs_index.count(*g)) {
      out.phi_total = false;
      if (out.detail.empty()) out.detail = "Phi(" + map_label(p, f.map) + ") is not a homomorphism";
      continue;
    }
    if (psi(*g) != f.map) out.round_trip_left = false;
  }
  out.psi_total = out.round_trip_right = true;
  for (const auto& g : rhs) {
    const auto f = psi(g.map);
    if (!lhs_index.count(f)) {
      out.psi_total = false;
      if (out.detail.empty()) out.detail = "Psi(" + map_label(*h.module, g.map) + ") is not a homomorphism";
      continue;
    }
    const auto back = phi(f);
    if (!back || *back != g.map) out.round_trip_right = false;
  }
  if (!out.tensor_well_defined && out.detail.empty()) out.detail = "induced action on M(x)N is not well defined";
  return out;
}

InternalHomReport internal_hom_ternary(const GammaModule& n, const Options& opt) {
  InternalHomReport out;
  const GammaModule t = regular_module(n.base_ptr());
  const Semiring& s = n.base();
  out.homs = hom_set(n, t, opt);
  const auto index = index_homs(out.homs);
  const int k = static_cast<int>(out.homs.size()), g = s.gamma_count();
  for (int i = 0; i < k; ++i) {
    const auto& f = out.homs[i].map;
    if (std::all_of(f.begin(), f.end(), [&](int v) { return v == s.zero(); })) out.zero_index = i;
    if (n.same_tables(t)) {
      bool id = true;
      for (int x = 0; x < n.size(); ++x) id = id && f[x] == x;
      if (id) out.identity_index = i;
    }
  }
  out.table.assign(static_cast<std::size_t>(k) * g * k * g * k, -1);
  for (int f = 0; f < k; ++f)
    for (int al = 0; al < g; ++al)
      for (int gg = 0; gg < k; ++gg)
        for (int be = 0; be < g; ++be)
          for (int h = 0; h < k; ++h) {
            std::vector<int> v(n.size());
            for (int x = 0; x < n.size(); ++x) {
              v[x] = s.tri(out.homs[f].map[x], al, out.homs[gg].map[x], be, out.homs[h].map[x]);
            }
            auto it = index.find(v);
            const std::size_t pos = (((static_cast<std::size_t>(f) * g + al) * k + gg) * g + be) * k + h;
            if (it != index.end()) {
              out.table[pos] = it->second;
            } else if (out.closed) {
              out.closed = false;
              out.witness = std::vector<int>{f, al, gg, be, h};
            }
          }
  return out;
}

SemisimplicityReport homological_semisimplicity(const std::vector<CatalogEntry>& catalog,
                                                const Options& opt) {
  SemisimplicityReport out;
  if (catalog.empty()) throw PreconditionError("empty module catalog");
  const Semiring& s = catalog.front().module.base();
  out.lenient = require_axioms(s, opt);
  out.semisimple = true;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      ++out.pairs_checked;
      const ExtReport e = ext1(catalog[i].module, catalog[j].module, opt);
      if (!e.ext1.is_trivial() && out.semisimple) {
        out.semisimple = false;
        out.witness = std::pair<int, int>(static_cast<int>(i), static_cast<int>(j));
      }
    }
  const RadicalReport rad = jacobson_radical(s, catalog, opt);
  out.radical_zero = rad.semiprimitive;
  out.consistent = out.semisimple == out.radical_zero;
  return out;
}

}  // namespace tgw
