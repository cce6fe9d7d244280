#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "tgw/error.hpp"
#include "tgw/homology.hpp"
#include "tgw/snf.hpp"
#include "tgw/union_find.hpp"

namespace tgw {

namespace {

const char* const kFamilies[] = {"zero-left", "zero-right", "bilinear-left", "bilinear-right",
                                 "balance"};
const char* const kFamilyLaws[] = {
    "0 (x) n = 0",
    "m (x) 0 = 0",
    "(m + m') (x) n = m (x) n + m' (x) n",
    "m (x) (n + n') = m (x) n + m (x) n'",
    "act(a,al,m,be,b) (x) n = m (x) act(a,al,n,be,b)",
};

bool idempotent(const GammaModule& m) {
  for (int x = 0; x < m.size(); ++x)
    if (m.add(x, x) != x) return false;
  return true;
}

bool group(const GammaModule& m) {
  for (int x = 0; x < m.size(); ++x) {
    bool inverse = false;
    for (int y = 0; y < m.size() && !inverse; ++y) inverse = m.add(x, y) == m.zero();
    if (!inverse) return false;
  }
  return true;
}

long long exponent(const GammaModule& m) {
  long long e = 1;
  for (int x = 0; x < m.size(); ++x) {
    long long order = 1;
    for (int cur = x; cur != m.zero(); cur = m.add(cur, x)) ++order;
    e = std::lcm(e, order);
  }
  return e;
}

std::vector<TensorRelation> build_relations(const GammaModule& m, const GammaModule& n,
                                            std::vector<std::size_t>& counts) {
  const Semiring& s = m.base();
  const int km = m.size(), kn = n.size();
  auto gen = [kn](int x, int y) { return x * kn + y; };
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<TensorRelation> out;
  counts.assign(5, 0);
  auto push = [&](int family, std::vector<int> l, std::vector<int> r) {
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    if (l == r) return;
    if (r < l) std::swap(l, r);
    if (!seen.emplace(l, r).second) return;
    ++counts[family];
    out.push_back({kFamilies[family], std::move(l), std::move(r)});
  };
  for (int y = 0; y < kn; ++y) push(0, {gen(m.zero(), y)}, {});
  for (int x = 0; x < km; ++x) push(1, {gen(x, n.zero())}, {});
  for (int x = 0; x < km; ++x)
    for (int x2 = x; x2 < km; ++x2)
      for (int y = 0; y < kn; ++y) push(2, {gen(m.add(x, x2), y)}, {gen(x, y), gen(x2, y)});
  for (int x = 0; x < km; ++x)
    for (int y = 0; y < kn; ++y)
      for (int y2 = y; y2 < kn; ++y2) push(3, {gen(x, n.add(y, y2))}, {gen(x, y), gen(x, y2)});
  const int t = s.size(), g = s.gamma_count();
  for (int a = 0; a < t; ++a)
    for (int al = 0; al < g; ++al)
      for (int be = 0; be < g; ++be)
        for (int b = 0; b < t; ++b)
          for (int x = 0; x < km; ++x)
            for (int y = 0; y < kn; ++y)
              push(4, {gen(m.act(a, al, x, be, b), y)}, {gen(x, n.act(a, al, y, be, b))});
  return out;
}

// A finite commutative monoid generated by the generator images, before
// canonical renumbering.
struct RawMonoid {
  int count = 0;
  int zero = 0;
  std::vector<int> add;        // count x count
  std::vector<int> generator;  // generator -> element
  bool approximate = false;
};

RawMonoid run_idempotent(int gens, const std::vector<TensorRelation>& rels, const Options& opt) {
  using Bits = boost::dynamic_bitset<>;
  std::vector<std::pair<Bits, Bits>> rules;
  for (const auto& r : rels) {
    Bits l(gens), rr(gens);
    for (int x : r.left) l.set(x);
    for (int x : r.right) rr.set(x);
    rules.emplace_back(l, rr);
  }
  auto close = [&](Bits x) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [l, r] : rules) {
        if (l.is_subset_of(x) && !r.is_subset_of(x)) {
          x |= r;
          changed = true;
        }
        if (r.is_subset_of(x) && !l.is_subset_of(x)) {
          x |= l;
          changed = true;
        }
      }
    }
    return x;
  };
  std::vector<Bits> states;
  std::map<Bits, int> index;
  auto intern = [&](const Bits& b) {
    auto [it, fresh] = index.emplace(b, static_cast<int>(states.size()));
    if (fresh) {
      if (states.size() >= opt.budget.state_budget) {
        throw BudgetError("tensor: idempotent closure exceeds the state budget");
      }
      states.push_back(b);
    }
    return it->second;
  };
  RawMonoid raw;
  raw.zero = intern(close(Bits(gens)));
  for (std::size_t i = 0; i < states.size(); ++i)
    for (int g = 0; g < gens; ++g) {
      Bits b = states[i];
      b.set(g);
      intern(close(b));
    }
  raw.count = static_cast<int>(states.size());
  raw.add.resize(static_cast<std::size_t>(raw.count) * raw.count);
  for (int x = 0; x < raw.count; ++x)
    for (int y = x; y < raw.count; ++y) {
      const int z = index.at(close(states[x] | states[y]));
      raw.add[x * raw.count + y] = raw.add[y * raw.count + x] = z;
    }
  for (int g = 0; g < gens; ++g) {
    Bits b = states[raw.zero];
    b.set(g);
    raw.generator.push_back(index.at(close(b)));
  }
  return raw;
}

RawMonoid run_group(int gens, const std::vector<TensorRelation>& rels, long long modulus,
                    const Options& opt) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : rels) {
    std::vector<std::int64_t> row(gens, 0);
    for (int x : r.left) ++row[x];
    for (int x : r.right) --row[x];
    rows.push_back(std::move(row));
  }
  const SmithForm snf = smith_normal_form_mod(std::move(rows), gens, modulus);
  std::vector<int> live;
  double total = 1;
  for (int i = 0; i < gens; ++i)
    if (snf.factors[i] > 1) {
      live.push_back(i);
      total *= static_cast<double>(snf.factors[i]);
    }
  if (total > static_cast<double>(opt.budget.state_budget)) {
    throw BudgetError("tensor: group quotient exceeds the state budget");
  }
  RawMonoid raw;
  raw.count = static_cast<int>(total);
  auto encode = [&](const std::vector<std::int64_t>& c) {
    long long code = 0;
    for (std::size_t j = 0; j < live.size(); ++j) code = code * snf.factors[live[j]] + c[j];
    return static_cast<int>(code);
  };
  auto decode = [&](int code) {
    std::vector<std::int64_t> c(live.size());
    for (std::size_t j = live.size(); j-- > 0;) {
      c[j] = code % snf.factors[live[j]];
      code = static_cast<int>(code / snf.factors[live[j]]);
    }
    return c;
  };
  raw.zero = 0;
  raw.add.resize(static_cast<std::size_t>(raw.count) * raw.count);
  for (int x = 0; x < raw.count; ++x) {
    const auto cx = decode(x);
    for (int y = 0; y < raw.count; ++y) {
      auto cy = decode(y);
      for (std::size_t j = 0; j < live.size(); ++j) cy[j] = (cy[j] + cx[j]) % snf.factors[live[j]];
      raw.add[x * raw.count + y] = encode(cy);
    }
  }
  for (int g = 0; g < gens; ++g) {
    std::vector<std::int64_t> c(live.size());
    for (std::size_t j = 0; j < live.size(); ++j) {
      const std::int64_t f = snf.factors[live[j]];
      c[j] = ((snf.transform[g][live[j]] % f) + f) % f;
    }
    raw.generator.push_back(encode(c));
  }
  return raw;
}

RawMonoid run_saturation(int gens, const std::vector<TensorRelation>& rels, const Options& opt) {
  const int cap = opt.budget.saturation_cap;
  if (cap < 1) throw PreconditionError("saturation cap must be positive");
  double total = 1;
  for (int g = 0; g < gens; ++g) total *= cap + 1;
  if (total > static_cast<double>(opt.budget.state_budget)) {
    throw BudgetError("tensor: saturation states exceed the state budget");
  }
  const int count = static_cast<int>(total);
  std::vector<int> stride(gens);
  for (int g = gens - 1, s = 1; g >= 0; --g, s *= cap + 1) stride[g] = s;
  auto digit = [&](int state, int g) { return state / stride[g] % (cap + 1); };
  auto plus = [&](int x, int y) {
    int out = 0;
    for (int g = 0; g < gens; ++g) out += std::min(cap, digit(x, g) + digit(y, g)) * stride[g];
    return out;
  };
  RawMonoid raw;
  auto vec_state = [&](const std::vector<int>& terms) {
    std::vector<int> c(gens, 0);
    for (int x : terms) ++c[x];
    int out = 0;
    for (int g = 0; g < gens; ++g) {
      if (c[g] > cap) raw.approximate = true;
      out += std::min(cap, c[g]) * stride[g];
    }
    return out;
  };
  UnionFind uf(count);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& r : rels) pairs.emplace_back(vec_state(r.left), vec_state(r.right));
  for (int z = 0; z < count; ++z)
    for (const auto& [l, r] : pairs) uf.unite(plus(z, l), plus(z, r));
  const auto cls = uf.canonical_classes();
  int classes = 0;
  std::vector<int> rep;
  for (int x = 0; x < count; ++x)
    if (cls[x] == classes) {
      rep.push_back(x);
      ++classes;
    }
  raw.count = classes;
  raw.zero = cls[0];
  raw.add.resize(static_cast<std::size_t>(classes) * classes);
  for (int x = 0; x < classes; ++x)
    for (int y = 0; y < classes; ++y) raw.add[x * classes + y] = cls[plus(rep[x], rep[y])];
  for (int g = 0; g < gens; ++g) {
    raw.generator.push_back(cls[stride[g]]);
    if (cls[cap * stride[g]] != cls[(cap - 1) * stride[g]]) raw.approximate = true;
  }
  return raw;
}

std::string generator_label(const GammaModule& m, const GammaModule& n, int g) {
  return m.label(g / n.size()) + "⊗" + n.label(g % n.size());
}

int eval_terms(const MonoidPresentation& p, const std::vector<int>& gen_class,
               const std::vector<int>& terms) {
  int acc = p.zero;
  for (int g : terms) acc = p.sum(acc, gen_class[g]);
  return acc;
}

}  // namespace

const char* backend_name(TensorBackend b) {
  switch (b) {
    case TensorBackend::automatic: return "auto";
    case TensorBackend::idempotent: return "idempotent";
    case TensorBackend::group: return "group";
    case TensorBackend::saturation: return "saturation";
  }
  return "auto";
}

TensorBackend parse_backend(std::string_view name) {
  for (auto b : {TensorBackend::automatic, TensorBackend::idempotent, TensorBackend::group,
                 TensorBackend::saturation})
    if (name == backend_name(b)) return b;
  throw ParseError("unknown tensor backend: " + std::string(name));
}

bool backend_applies(const GammaModule& m, const GammaModule& n, TensorBackend backend) {
  switch (backend) {
    case TensorBackend::automatic:
    case TensorBackend::saturation: return true;
    case TensorBackend::idempotent: return idempotent(m) && idempotent(n);
    case TensorBackend::group: return group(m) && group(n);
  }
  return false;
}

TensorProduct tensor(const GammaModule& m, const GammaModule& n, TensorBackend backend,
                     const Options& opt) {
  if (!(m.base_ptr() == n.base_ptr() || m.base() == n.base())) {
    throw PreconditionError("tensor: modules over different bases");
  }
  require_module_axioms(m, opt);
  require_module_axioms(n, opt);
  if (backend == TensorBackend::automatic) {
    if (backend_applies(m, n, TensorBackend::idempotent)) backend = TensorBackend::idempotent;
    else if (backend_applies(m, n, TensorBackend::group)) backend = TensorBackend::group;
    else backend = TensorBackend::saturation;
  } else if (!backend_applies(m, n, backend)) {
    throw PreconditionError(std::string("tensor: backend ") + backend_name(backend) +
                            " does not apply to " + m.name() + " and " + n.name());
  }

  TensorProduct out;
  out.left_size = m.size();
  out.right_size = n.size();
  const int gens = m.size() * n.size();
  out.relations = build_relations(m, n, out.relation_counts);

  RawMonoid raw;
  switch (backend) {
    case TensorBackend::idempotent: raw = run_idempotent(gens, out.relations, opt); break;
    case TensorBackend::group:
      raw = run_group(gens, out.relations, std::gcd(exponent(m), exponent(n)), opt);
      break;
    default: raw = run_saturation(gens, out.relations, opt); break;
  }

  // Canonical numbering: breadth-first from zero, adding generators in order.
  std::vector<int> id(raw.count, -1), order;
  std::deque<int> queue{raw.zero};
  id[raw.zero] = 0;
  order.push_back(raw.zero);
  out.class_terms.push_back({});
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g = 0; g < gens; ++g) {
      const int y = raw.add[x * raw.count + raw.generator[g]];
      if (id[y] >= 0) continue;
      id[y] = static_cast<int>(order.size());
      order.push_back(y);
      auto terms = out.class_terms[id[x]];
      terms.push_back(g);
      out.class_terms.push_back(std::move(terms));
      queue.push_back(y);
    }
  }
  const int k = static_cast<int>(order.size());
  MonoidPresentation& p = out.presentation;
  p.backend = backend_name(backend);
  p.approximate = raw.approximate;
  p.zero = 0;
  p.add.resize(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) p.add[x * k + y] = id[raw.add[order[x] * raw.count + order[y]]];
  for (int c = 0; c < k; ++c) {
    std::string label;
    for (int g : out.class_terms[c]) label += (label.empty() ? "" : " + ") + generator_label(m, n, g);
    p.classes.push_back(label.empty() ? "0" : label);
  }
  for (int g = 0; g < gens; ++g) out.generator_class.push_back(id[raw.generator[g]]);
  p.structure_tag = structure_tag(p.add, p.zero);
  for (int f = 0; f < 5; ++f) {
    p.relations.push_back(std::string(kFamilies[f]) + ": " + kFamilyLaws[f] + " [" +
                          std::to_string(out.relation_counts[f]) + "]");
  }
  for (const auto& r : out.relations)
    if (eval_terms(p, out.generator_class, r.left) != eval_terms(p, out.generator_class, r.right)) {
      p.well_defined = false;
    }

  // Induced action.
  const Semiring& s = m.base();
  const int t = s.size(), gc = s.gamma_count();
  auto moved = [&](const std::vector<int>& terms, int a, int al, int be, int b) {
    int acc = p.zero;
    for (int g : terms) {
      const int x = g / n.size(), y = g % n.size();
      acc = p.sum(acc, out.class_of(m.act(a, al, x, be, b), y));
    }
    return acc;
  };
  std::vector<int> act(static_cast<std::size_t>(t) * gc * k * gc * t);
  for (int a = 0; a < t; ++a)
    for (int al = 0; al < gc; ++al)
      for (int c = 0; c < k; ++c)
        for (int be = 0; be < gc; ++be)
          for (int b = 0; b < t; ++b)
            act[(((static_cast<std::size_t>(a) * gc + al) * k + c) * gc + be) * t + b] =
                moved(out.class_terms[c], a, al, be, b);
  for (const auto& r : out.relations) {
    for (int a = 0; a < t && out.action_well_defined; ++a)
      for (int al = 0; al < gc && out.action_well_defined; ++al)
        for (int be = 0; be < gc && out.action_well_defined; ++be)
          for (int b = 0; b < t && out.action_well_defined; ++b)
            if (moved(r.left, a, al, be, b) != moved(r.right, a, al, be, b)) {
              out.action_well_defined = false;
              out.action_witness = r.family + " relation at a=" + s.label(a) + ", alpha=" +
                                   s.gamma()[al] + ", beta=" + s.gamma()[be] + ", b=" + s.label(b);
            }
    if (!out.action_well_defined) break;
  }
  out.module.emplace(m.base_ptr(), m.name() + "⊗" + n.name(), p.classes, p.zero, p.add,
                     std::move(act));
  return out;
}

std::vector<int> tensor_map(const TensorProduct& src, const TensorProduct& dst,
                            const std::vector<int>& f) {
  if (src.right_size != dst.right_size) {
    throw PreconditionError("tensor_map: right factors differ");
  }
  std::vector<int> out;
  for (const auto& terms : src.class_terms) {
    int acc = dst.presentation.zero;
    for (int g : terms) {
      const int x = g / src.right_size, y = g % src.right_size;
      acc = dst.presentation.sum(acc, dst.class_of(f[x], y));
    }
    out.push_back(acc);
  }
  return out;
}

BackendAgreement compare_backends(const GammaModule& m, const GammaModule& n, const Options& opt) {
  BackendAgreement out;
  std::vector<TensorProduct> runs;
  for (auto b : {TensorBackend::idempotent, TensorBackend::group, TensorBackend::saturation}) {
    if (!backend_applies(m, n, b)) continue;
    try {
      runs.push_back(tensor(m, n, b, opt));
      out.backends.push_back(backend_name(b));
    } catch (const BudgetError&) {
    }
  }
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const auto& a = runs[i];
    const auto& b = runs[i + 1];
    if (!find_monoid_isomorphism(a.presentation, b.presentation)) out.agree = false;
    if (a.presentation.size() != b.presentation.size()) {
      out.natural = false;
      continue;
    }
    std::vector<int> phi;
    for (const auto& terms : a.class_terms) phi.push_back(eval_terms(b.presentation, b.generator_class, terms));
    std::vector<int> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) out.natural = false;
    for (std::size_t g = 0; g < a.generator_class.size(); ++g)
      if (phi[a.generator_class[g]] != b.generator_class[g]) out.natural = false;
    for (int x = 0; x < a.presentation.size(); ++x)
      for (int y = 0; y < a.presentation.size(); ++y)
        if (phi[a.presentation.sum(x, y)] != b.presentation.sum(phi[x], phi[y])) out.natural = false;
  }
  return out;
}

}  // namespace tgw
