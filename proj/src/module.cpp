#include "tgw/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include "json.hpp"
#include <set>

#include "tgw/error.hpp"
#include "tgw/union_find.hpp"

namespace tgw {

namespace {

using json = nlohmann::ordered_json;

void require_subset_carrier(const GammaModule& m) {
  if (m.size() > kMaxSubsetCarrier) {
    throw BudgetError("module " + m.name() + " has more than 64 elements");
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

const json& expect_array(const json& j, std::size_t len, const std::string& what) {
  if (!j.is_array()) throw ShapeError(what + " must be an array");
  if (j.size() != len) {
    throw ShapeError(what + " has length " + std::to_string(j.size()) + ", expected " +
                     std::to_string(len));
  }
  return j;
}

std::vector<int> build_act(const Semiring& s, int k,
                           const std::function<int(int, int, int, int, int)>& f) {
  const int n = s.size(), g = s.gamma_count();
  std::vector<int> act;
  act.reserve(static_cast<std::size_t>(n) * g * k * g * n);
  for (int a = 0; a < n; ++a)
    for (int al = 0; al < g; ++al)
      for (int m = 0; m < k; ++m)
        for (int be = 0; be < g; ++be)
          for (int b = 0; b < n; ++b) act.push_back(f(a, al, m, be, b));
  return act;
}

// One closure pass of a subset under madd and the action.
Subset close_once(const GammaModule& m, Subset cur) {
  const Semiring& s = m.base();
  const int n = s.size(), g = s.gamma_count();
  Subset next = cur | bit(m.zero());
  const auto in = members(cur);
  for (int x : in)
    for (int y : in) next |= bit(m.add(x, y));
  for (int x : in)
    for (int a = 0; a < n; ++a)
      for (int al = 0; al < g; ++al)
        for (int be = 0; be < g; ++be)
          for (int b = 0; b < n; ++b) next |= bit(m.act(a, al, x, be, b));
  return next;
}

}  // namespace

GammaModule::GammaModule(std::shared_ptr<const Semiring> base, std::string name,
                         std::vector<std::string> carrier, int zero, std::vector<int> madd,
                         std::vector<int> act, M2Profile profile)
    : base_(std::move(base)),
      name_(std::move(name)),
      carrier_(std::move(carrier)),
      zero_(zero),
      madd_(std::move(madd)),
      act_(std::move(act)),
      profile_(profile) {
  if (!base_) throw PreconditionError("module without base structure");
  const std::size_t k = carrier_.size(), n = base_->size(), g = base_->gamma_count();
  if (k == 0) throw ShapeError("module carrier must be nonempty");
  if (madd_.size() != k * k) throw ShapeError("madd table must be |M| x |M|");
  if (act_.size() != n * g * k * g * n) throw ShapeError("act table must be n x g x |M| x g x n");
  auto in_range = [k](int v) { return v >= 0 && static_cast<std::size_t>(v) < k; };
  if (!in_range(zero_)) throw IndexError("module zero out of range");
  if (!std::all_of(madd_.begin(), madd_.end(), in_range)) throw IndexError("madd entry out of range");
  if (!std::all_of(act_.begin(), act_.end(), in_range)) throw IndexError("act entry out of range");
}

int GammaModule::element_index(std::string_view label) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), label);
  if (it == carrier_.end()) throw ReferenceError("carrier label not declared: " + std::string(label));
  return static_cast<int>(it - carrier_.begin());
}

GammaModule GammaModule::renamed(std::string name) const {
  GammaModule copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool GammaModule::same_tables(const GammaModule& o) const {
  return (base_ == o.base_ || *base_ == *o.base_) && zero_ == o.zero_ && madd_ == o.madd_ &&
         act_ == o.act_ && carrier_.size() == o.carrier_.size();
}

GammaModule load_module(std::string_view text, std::shared_ptr<const Semiring> base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("module fixture must be a JSON object");
  const json& base_name = field(j, "base");
  if (!base_name.is_string()) throw ParseError("base must be a string");
  if (base_name.get<std::string>() != base->name()) {
    throw ReferenceError("module base '" + base_name.get<std::string>() + "' does not match '" +
                         base->name() + "'");
  }
  std::string name = base->name() + "/module";
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ParseError("name must be a string");
    name = it->get<std::string>();
  }
  const json& carrier_json = field(j, "carrier");
  if (!carrier_json.is_array()) throw ParseError("carrier must be an array");
  std::vector<std::string> carrier;
  for (const auto& e : carrier_json) {
    if (!e.is_string()) throw ParseError("carrier entries must be strings");
    carrier.push_back(e.get<std::string>());
  }
  const std::size_t k = carrier.size(), n = base->size(), g = base->gamma_count();
  if (k == 0) throw ShapeError("carrier must be nonempty");
  auto idx = [&](const json& e) -> int {
    if (!e.is_string()) throw ParseError("table entries must be carrier labels");
    auto it = std::find(carrier.begin(), carrier.end(), e.get<std::string>());
    if (it == carrier.end()) throw ReferenceError("carrier label not declared: " + e.get<std::string>());
    return static_cast<int>(it - carrier.begin());
  };

  M2Profile profile = M2Profile::none;
  if (auto it = j.find("m2_profile"); it != j.end()) {
    if (*it == "nested") {
      profile = M2Profile::nested;
    } else if (*it != "none") {
      throw ParseError("m2_profile must be \"none\" or \"nested\"");
    }
  }

  std::vector<int> madd;
  for (const auto& row : expect_array(field(j, "madd"), k, "madd"))
    for (const auto& e : expect_array(row, k, "madd row")) madd.push_back(idx(e));
  std::vector<int> act;
  for (const auto& l1 : expect_array(field(j, "act"), n, "act"))
    for (const auto& l2 : expect_array(l1, g, "act[a]"))
      for (const auto& l3 : expect_array(l2, k, "act[a][alpha]"))
        for (const auto& l4 : expect_array(l3, g, "act[a][alpha][m]"))
          for (const auto& e : expect_array(l4, n, "act[a][alpha][m][beta]")) act.push_back(idx(e));
  return GammaModule(std::move(base), std::move(name), std::move(carrier), idx(field(j, "zero")),
                     std::move(madd), std::move(act), profile);
}

std::string serialize_module(const GammaModule& m) {
  const Semiring& s = m.base();
  const int n = s.size(), g = s.gamma_count(), k = m.size();
  json j;
  j["name"] = m.name();
  j["base"] = s.name();
  j["carrier"] = m.carrier();
  j["zero"] = m.label(m.zero());
  json madd = json::array();
  for (int x = 0; x < k; ++x) {
    json row = json::array();
    for (int y = 0; y < k; ++y) row.push_back(m.label(m.add(x, y)));
    madd.push_back(row);
  }
  j["madd"] = madd;
  json act = json::array();
  for (int a = 0; a < n; ++a) {
    json l1 = json::array();
    for (int al = 0; al < g; ++al) {
      json l2 = json::array();
      for (int x = 0; x < k; ++x) {
        json l3 = json::array();
        for (int be = 0; be < g; ++be) {
          json l4 = json::array();
          for (int b = 0; b < n; ++b) l4.push_back(m.label(m.act(a, al, x, be, b)));
          l3.push_back(l4);
        }
        l2.push_back(l3);
      }
      l1.push_back(l2);
    }
    act.push_back(l1);
  }
  j["act"] = act;
  j["m2_profile"] = m.profile() == M2Profile::nested ? "nested" : "none";
  return j.dump(2) + "\n";
}

GammaModule regular_module(std::shared_ptr<const Semiring> s) {
  const Semiring& t = *s;
  const int n = t.size();
  std::vector<int> madd(t.add_table());
  auto act = build_act(t, n, [&t](int a, int al, int m, int be, int b) { return t.tri(a, al, m, be, b); });
  return GammaModule(s, t.name() + "/regular", t.elements(), t.zero(), std::move(madd), std::move(act));
}

GammaModule zero_module(std::shared_ptr<const Semiring> s) {
  auto act = build_act(*s, 1, [](int, int, int, int, int) { return 0; });
  return GammaModule(s, s->name() + "/zero", {"0"}, 0, {0}, std::move(act));
}

GammaModule direct_sum(const GammaModule& left, const GammaModule& right) {
  if (!(left.base_ptr() == right.base_ptr() || left.base() == right.base())) {
    throw PreconditionError("direct sum of modules over different bases");
  }
  const int k1 = left.size(), k2 = right.size(), k = k1 * k2;
  std::vector<std::string> carrier;
  for (int x = 0; x < k1; ++x)
    for (int y = 0; y < k2; ++y) carrier.push_back("(" + left.label(x) + "," + right.label(y) + ")");
  std::vector<int> madd(static_cast<std::size_t>(k) * k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      madd[p * k + q] = left.add(p / k2, q / k2) * k2 + right.add(p % k2, q % k2);
  auto act = build_act(left.base(), k, [&](int a, int al, int m, int be, int b) {
    return left.act(a, al, m / k2, be, b) * k2 + right.act(a, al, m % k2, be, b);
  });
  const M2Profile profile = left.profile() == M2Profile::nested && right.profile() == M2Profile::nested
                                ? M2Profile::nested
                                : M2Profile::none;
  return GammaModule(left.base_ptr(), left.name() + "+" + right.name(), std::move(carrier),
                     left.zero() * k2 + right.zero(), std::move(madd), std::move(act), profile);
}

GammaModule submodule(const GammaModule& m, Subset sub, std::string name) {
  require_subset_carrier(m);
  const auto elems = members(sub);
  std::vector<int> pos(m.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  auto local = [&](int x) {
    if (pos[x] < 0) throw PreconditionError("subset is not closed under the module operations");
    return pos[x];
  };
  const int k = static_cast<int>(elems.size());
  std::vector<std::string> carrier;
  for (int x : elems) carrier.push_back(m.label(x));
  std::vector<int> madd;
  for (int x : elems)
    for (int y : elems) madd.push_back(local(m.add(x, y)));
  auto act = build_act(m.base(), k, [&](int a, int al, int x, int be, int b) {
    return local(m.act(a, al, elems[x], be, b));
  });
  if (name.empty()) name = m.name() + render_subset(sub, m.carrier());
  return GammaModule(m.base_ptr(), std::move(name), std::move(carrier), local(m.zero()),
                     std::move(madd), std::move(act), m.profile());
}

AxiomReport check_module_axioms(const GammaModule& m) {
  const Semiring& s = m.base();
  const int n = s.size(), g = s.gamma_count(), k = m.size();
  const int z = m.zero(), tz = s.zero();
  std::vector<Violation> out;
  auto record = [&out](const char* law, std::vector<int> w, int l, int r) {
    if (l != r) out.push_back({law, std::move(w), l, r});
  };

  for (int x = 0; x < k; ++x) {
    record("madd-identity", {x}, m.add(x, z), x);
    for (int y = 0; y < k; ++y) {
      record("madd-commutativity", {x, y}, m.add(x, y), m.add(y, x));
      for (int w = 0; w < k; ++w)
        record("madd-associativity", {x, y, w}, m.add(m.add(x, y), w), m.add(x, m.add(y, w)));
    }
  }

  for (int a = 0; a < n; ++a)
    for (int al = 0; al < g; ++al)
      for (int be = 0; be < g; ++be)
        for (int b = 0; b < n; ++b) {
          record("act-zero-module", {a, al, be, b}, m.act(a, al, z, be, b), z);
          for (int x = 0; x < k; ++x) {
            const int v = m.act(a, al, x, be, b);
            if (a == tz || b == tz) record("act-zero-absorption", {a, al, x, be, b}, v, z);
            for (int a2 = 0; a2 < n; ++a2)
              record("act-additive-left", {a, a2, al, x, be, b}, m.act(s.add(a, a2), al, x, be, b),
                     m.add(v, m.act(a2, al, x, be, b)));
            for (int x2 = 0; x2 < k; ++x2)
              record("act-additive-middle", {a, al, x, x2, be, b}, m.act(a, al, m.add(x, x2), be, b),
                     m.add(v, m.act(a, al, x2, be, b)));
            for (int b2 = 0; b2 < n; ++b2)
              record("act-additive-right", {a, al, x, be, b, b2}, m.act(a, al, x, be, s.add(b, b2)),
                     m.add(v, m.act(a, al, x, be, b2)));
          }
        }

  if (m.profile() == M2Profile::nested) {
    for (int a = 0; a < n; ++a)
      for (int al = 0; al < g; ++al)
        for (int b = 0; b < n; ++b)
          for (int be = 0; be < g; ++be)
            for (int c = 0; c < n; ++c)
              for (int ga = 0; ga < g; ++ga)
                for (int x = 0; x < k; ++x)
                  for (int de = 0; de < g; ++de)
                    for (int d = 0; d < n; ++d)
                      record("compatibility-nested", {a, al, b, be, c, ga, x, de, d},
                             m.act(s.tri(a, al, b, be, c), ga, x, de, d),
                             m.act(a, al, m.act(b, be, x, ga, c), de, d));
  }

  std::sort(out.begin(), out.end());
  return {std::move(out), check_axioms(s).violations};
}

bool module_axioms_hold(const GammaModule& m) {
  const auto r = check_module_axioms(m);
  return r.passed() && r.warnings.empty();
}

bool require_module_axioms(const GammaModule& m, const Options& opt) {
  if (module_axioms_hold(m)) return false;
  if (!opt.lenient) {
    throw AxiomError("module " + m.name() + " or its base fails the axioms (use lenient mode)");
  }
  return true;
}

bool is_submodule(const GammaModule& m, Subset s) {
  require_subset_carrier(m);
  return contains(s, m.zero()) && close_once(m, s) == s;
}

Subset generated_submodule(const GammaModule& m, Subset seed) {
  require_subset_carrier(m);
  Subset cur = seed | bit(m.zero());
  for (;;) {
    const Subset next = close_once(m, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Subset> enumerate_submodules(const GammaModule& m, const Options& opt) {
  require_subset_carrier(m);
  if (m.size() > opt.budget.subset_bound) {
    throw BudgetError("|M| = " + std::to_string(m.size()) + " exceeds subset bound");
  }
  const int k = m.size();
  std::set<Subset> seen;
  std::vector<Subset> frontier{generated_submodule(m, 0)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset sub : frontier)
      for (int x = 0; x < k; ++x) {
        if (contains(sub, x)) continue;
        const Subset c = generated_submodule(m, sub | bit(x));
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), subset_order);
  return out;
}

std::vector<int> generating_set(const GammaModule& m) {
  require_subset_carrier(m);
  const Subset whole = full_subset(m.size());
  std::vector<int> gens;
  Subset span = generated_submodule(m, 0);
  while (span != whole) {
    int best = -1;
    Subset best_span = 0;
    for (int x = 0; x < m.size(); ++x) {
      if (contains(span, x)) continue;
      const Subset c = generated_submodule(m, span | bit(x));
      if (best < 0 || cardinality(c) > cardinality(best_span)) {
        best = x;
        best_span = c;
      }
    }
    gens.push_back(best);
    span = best_span;
  }
  return gens;
}

ModuleCongruence make_congruence(const GammaModule& m, std::vector<int> class_of) {
  const Semiring& s = m.base();
  const int n = s.size(), g = s.gamma_count(), k = m.size();
  ModuleCongruence c;
  {
    UnionFind uf(k);
    std::map<int, int> first;
    for (int x = 0; x < k; ++x) {
      auto [it, fresh] = first.emplace(class_of[x], x);
      if (!fresh) uf.unite(it->second, x);
    }
    c.class_of = uf.canonical_classes();
  }
  c.class_count = k == 0 ? 0 : *std::max_element(c.class_of.begin(), c.class_of.end()) + 1;
  for (int x = 0; x < k && c.compatible; ++x)
    for (int y = x + 1; y < k && c.compatible; ++y) {
      if (c.class_of[x] != c.class_of[y]) continue;
      for (int w = 0; w < k && c.compatible; ++w)
        if (c.class_of[m.add(x, w)] != c.class_of[m.add(y, w)]) {
          c.compatible = false;
          c.witness = "addition of " + m.label(w) + " separates " + m.label(x) + " ~ " + m.label(y);
        }
      for (int a = 0; a < n && c.compatible; ++a)
        for (int al = 0; al < g && c.compatible; ++al)
          for (int be = 0; be < g && c.compatible; ++be)
            for (int b = 0; b < n && c.compatible; ++b)
              if (c.class_of[m.act(a, al, x, be, b)] != c.class_of[m.act(a, al, y, be, b)]) {
                c.compatible = false;
                c.witness = "action (" + s.label(a) + "," + s.gamma()[al] + "," + s.gamma()[be] + "," +
                            s.label(b) + ") separates " + m.label(x) + " ~ " + m.label(y);
              }
    }
  return c;
}

ModuleCongruence congruence_closure(const GammaModule& m, const std::vector<std::pair<int, int>>& pairs) {
  const Semiring& s = m.base();
  const int n = s.size(), g = s.gamma_count(), k = m.size();
  UnionFind uf(k);
  for (auto [x, y] : pairs) uf.unite(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < k; ++x) {
      const int r = uf.find(x);
      if (r == x) continue;
      for (int w = 0; w < k; ++w) changed |= uf.unite(m.add(x, w), m.add(r, w));
      for (int a = 0; a < n; ++a)
        for (int al = 0; al < g; ++al)
          for (int be = 0; be < g; ++be)
            for (int b = 0; b < n; ++b) changed |= uf.unite(m.act(a, al, x, be, b), m.act(a, al, r, be, b));
    }
  }
  ModuleCongruence c;
  c.class_of = uf.canonical_classes();
  c.class_count = *std::max_element(c.class_of.begin(), c.class_of.end()) + 1;
  return c;
}

std::vector<ModuleCongruence> enumerate_congruences(const GammaModule& m, const Options& opt) {
  const int k = m.size();
  if (k > opt.budget.subset_bound) throw BudgetError("|M| exceeds bound for congruence enumeration");
  std::set<std::vector<int>> seen;
  std::vector<ModuleCongruence> all;
  std::vector<ModuleCongruence> frontier{congruence_closure(m, {})};
  seen.insert(frontier.front().class_of);
  all.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<ModuleCongruence> next;
    for (const auto& c : frontier) {
      std::vector<std::pair<int, int>> base_pairs;
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          if (c.class_of[x] == c.class_of[y]) base_pairs.emplace_back(x, y);
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) {
          if (c.class_of[x] == c.class_of[y]) continue;
          auto pairs = base_pairs;
          pairs.emplace_back(x, y);
          auto d = congruence_closure(m, pairs);
          if (seen.insert(d.class_of).second) {
            if (seen.size() > opt.budget.state_budget) throw BudgetError("too many congruences");
            all.push_back(d);
            next.push_back(d);
          }
        }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const ModuleCongruence& a, const ModuleCongruence& b) {
    if (a.class_count != b.class_count) return a.class_count > b.class_count;
    return a.class_of < b.class_of;
  });
  return all;
}

GammaModule quotient_module(const GammaModule& m, const ModuleCongruence& c, std::string name) {
  const int k = m.size(), q = c.class_count;
  std::vector<int> rep(q, -1);
  for (int x = 0; x < k; ++x)
    if (rep[c.class_of[x]] < 0) rep[c.class_of[x]] = x;
  std::vector<std::string> carrier;
  for (int r : rep) carrier.push_back("[" + m.label(r) + "]");
  std::vector<int> madd;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) madd.push_back(c.class_of[m.add(rep[x], rep[y])]);
  auto act = build_act(m.base(), q, [&](int a, int al, int x, int be, int b) {
    return c.class_of[m.act(a, al, rep[x], be, b)];
  });
  if (name.empty()) name = m.name() + "/~";
  return GammaModule(m.base_ptr(), std::move(name), std::move(carrier), c.class_of[m.zero()],
                     std::move(madd), std::move(act), m.profile());
}

BourneQuotient bourne_quotient(const GammaModule& m, Subset sub) {
  require_subset_carrier(m);
  const int k = m.size();
  // m ~ m' iff the translates m + N and m' + N meet; join through the meeting point.
  UnionFind uf(2 * k);
  for (int x = 0; x < k; ++x)
    for (int y : members(sub)) uf.unite(x, k + m.add(x, y));
  std::vector<int> raw(k);
  for (int x = 0; x < k; ++x) raw[x] = uf.find(x);
  auto cong = make_congruence(m, raw);
  auto q = quotient_module(m, cong, m.name() + "/" + render_subset(sub, m.carrier()));
  return {std::move(q), std::move(cong)};
}

bool is_hom(const GammaModule& src, const GammaModule& dst, const std::vector<int>& f) {
  const Semiring& s = src.base();
  const int n = s.size(), g = s.gamma_count(), k = src.size();
  if (static_cast<int>(f.size()) != k) return false;
  if (f[src.zero()] != dst.zero()) return false;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (f[src.add(x, y)] != dst.add(f[x], f[y])) return false;
  for (int a = 0; a < n; ++a)
    for (int al = 0; al < g; ++al)
      for (int x = 0; x < k; ++x)
        for (int be = 0; be < g; ++be)
          for (int b = 0; b < n; ++b)
            if (f[src.act(a, al, x, be, b)] != dst.act(a, al, f[x], be, b)) return false;
  return true;
}

bool is_bijective(const std::vector<int>& f, int target_size) {
  if (static_cast<int>(f.size()) != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (int y : f) {
    if (y < 0 || y >= target_size || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::vector<int> inverse_map(const std::vector<int>& f) {
  std::vector<int> inv(f.size(), -1);
  for (std::size_t x = 0; x < f.size(); ++x) inv[f[x]] = static_cast<int>(x);
  return inv;
}

std::vector<ModuleHom> hom_set(const GammaModule& src, const GammaModule& dst, const Options& opt) {
  if (!(src.base_ptr() == dst.base_ptr() || src.base() == dst.base())) {
    throw PreconditionError("hom_set: modules over different bases");
  }
  const Semiring& s = src.base();
  const int n = s.size(), g = s.gamma_count(), k = src.size(), target = dst.size();
  const auto gens = generating_set(src);

  double candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) candidates *= target;
  if (candidates > static_cast<double>(opt.budget.map_budget)) {
    throw BudgetError("hom_set: " + std::to_string(static_cast<long long>(candidates)) +
                      " candidate maps exceed the map budget");
  }

  std::vector<ModuleHom> out;
  std::vector<int> images(gens.size(), 0);
  std::vector<int> f(k);
  std::vector<int> queue;
  for (;;) {
    // Propagate the generator images through + and the action.
    std::fill(f.begin(), f.end(), -1);
    queue.clear();
    bool ok = true;
    auto assign = [&](int x, int y) {
      if (f[x] < 0) {
        f[x] = y;
        queue.push_back(x);
      } else if (f[x] != y) {
        ok = false;
      }
    };
    assign(src.zero(), dst.zero());
    for (std::size_t i = 0; i < gens.size() && ok; ++i) assign(gens[i], images[i]);
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const int x = queue[head];
      for (std::size_t j = 0; j <= head && ok; ++j) {
        const int y = queue[j];
        assign(src.add(x, y), dst.add(f[x], f[y]));
      }
      for (int a = 0; a < n && ok; ++a)
        for (int al = 0; al < g && ok; ++al)
          for (int be = 0; be < g && ok; ++be)
            for (int b = 0; b < n && ok; ++b) assign(src.act(a, al, x, be, b), dst.act(a, al, f[x], be, b));
    }
    if (ok && std::find(f.begin(), f.end(), -1) == f.end() && is_hom(src, dst, f)) {
      out.push_back({f, true});
    }

    std::size_t i = 0;
    while (i < images.size() && ++images[i] == target) images[i++] = 0;
    if (i == images.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ModuleHom> find_isomorphism(const GammaModule& a, const GammaModule& b, const Options& opt) {
  if (a.size() != b.size()) return std::nullopt;
  for (const auto& h : hom_set(a, b, opt)) {
    if (!is_bijective(h.map, b.size())) continue;
    if (is_hom(b, a, inverse_map(h.map))) return h;
  }
  return std::nullopt;
}

Subset kernel(const GammaModule& src, const GammaModule& dst, const std::vector<int>& f) {
  require_subset_carrier(src);
  Subset k = 0;
  for (int x = 0; x < src.size(); ++x)
    if (f[x] == dst.zero()) k |= bit(x);
  return k;
}

Subset image(const std::vector<int>& f) {
  Subset im = 0;
  for (int y : f) im |= bit(y);
  return im;
}

}  // namespace tgw
