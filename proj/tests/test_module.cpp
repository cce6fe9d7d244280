#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tgw/error.hpp"
#include "tgw/fixtures.hpp"
#include "tgw/module.hpp"
#include "tgw/module_theory.hpp"

using namespace tgw;

namespace {

Options lenient() {
  Options o;
  o.lenient = true;
  return o;
}

struct Fixture {
  std::shared_ptr<const Semiring> base;
  GammaModule module;
};

std::vector<Fixture> all_modules() {
  std::vector<Fixture> out;
  for (const auto& s : bundled_structure_names()) {
    const auto base = bundled_structure(s);
    for (const auto& m : bundled_module_names(s)) out.push_back({base, bundled_module(base, m)});
  }
  return out;
}

std::vector<std::vector<int>> maps_of(const std::vector<ModuleHom>& hs) {
  std::vector<std::vector<int>> out;
  for (const auto& h : hs) out.push_back(h.map);
  return out;
}

// T2 element ids: (x,y) -> 2x + y
constexpr Subset kAxisY = 0b0011;  // {(0,0),(0,1)}
constexpr Subset kAxisX = 0b0101;  // {(0,0),(1,0)}
const std::vector<int> kProjection{0, 0, 1, 1};

}  // namespace

TEST(ModuleAxioms, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_TRUE(check_module_axioms(regular_module(b2)).passed());
  EXPECT_TRUE(check_module_axioms(bundled_module(b2, "T2")).passed());
  const auto z3 = bundled_structure("Z3");
  const auto r = check_module_axioms(regular_module(z3));
  for (const auto& v : r.violations) EXPECT_EQ(v.law.rfind("madd-", 0), std::string::npos) << v.law;
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_THROW(require_module_axioms(regular_module(z3), {}), AxiomError);
}

TEST(ModuleAxioms, LoadRoundTrip) {
  for (const auto& f : all_modules()) {
    const auto text = serialize_module(f.module);
    const auto back = load_module(text, f.base);
    EXPECT_TRUE(back.same_tables(f.module)) << f.module.name();
  }
}

TEST(Submodules, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_EQ(enumerate_submodules(regular_module(b2)), (std::vector<Subset>{0b01, 0b11}));
  EXPECT_EQ(enumerate_submodules(zero_module(b2)), std::vector<Subset>{0b1});
  const auto t2 = enumerate_submodules(bundled_module(b2, "T2"));
  EXPECT_EQ(t2.size(), 7u);
  for (Subset s : {kAxisY, kAxisX, Subset{0b1001}, Subset{0b1111}})
    EXPECT_NE(std::find(t2.begin(), t2.end(), s), t2.end());
}

TEST(Submodules, MatchOracleOnEveryFixture) {
  for (const auto& f : all_modules())
    EXPECT_EQ(enumerate_submodules(f.module, lenient()), oracle::submodules(f.module)) << f.module.name();
}

TEST(Submodules, GeneratedIsLeast) {
  for (const auto& f : all_modules()) {
    const auto subs = oracle::submodules(f.module);
    for (Subset seed = 0; seed <= full_subset(f.module.size()); ++seed) {
      Subset least = full_subset(f.module.size());
      for (Subset s : subs)
        if (is_subset_of(seed, s)) least &= s;
      EXPECT_EQ(generated_submodule(f.module, seed), least);
    }
  }
}

TEST(Homs, Examples) {
  const auto b2 = bundled_structure("B2");
  const auto reg = regular_module(b2);
  EXPECT_EQ(maps_of(hom_set(reg, reg)), (std::vector<std::vector<int>>{{0, 0}, {0, 1}}));
  EXPECT_EQ(hom_set(zero_module(b2), reg).size(), 1u);
  const auto homs = maps_of(hom_set(bundled_module(b2, "T2"), reg));
  EXPECT_NE(std::find(homs.begin(), homs.end(), kProjection), homs.end());
}

TEST(Homs, MatchOracleOnEveryPair) {
  const auto fixtures = all_modules();
  for (const auto& a : fixtures)
    for (const auto& b : fixtures) {
      if (a.base != b.base) continue;
      const auto got = hom_set(a.module, b.module, lenient());
      EXPECT_EQ(maps_of(got), oracle::homs(a.module, b.module)) << a.module.name() << " -> " << b.module.name();
      for (const auto& h : got) {
        EXPECT_TRUE(h.verified);
        EXPECT_TRUE(oracle::hom(a.module, b.module, h.map));
      }
    }
}

TEST(Homs, BudgetExceeded) {
  const auto b2 = bundled_structure("B2");
  Options o;
  o.budget.map_budget = 1;
  EXPECT_THROW(hom_set(bundled_module(b2, "T2"), bundled_module(b2, "T2"), o), BudgetError);
}

TEST(Congruences, MatchOracle) {
  for (const auto& f : all_modules()) {
    std::vector<std::vector<int>> expected;
    for (const auto& p : oracle::partitions(f.module.size()))
      if (oracle::compatible(f.module, p)) expected.push_back(p);
    std::vector<std::vector<int>> got;
    for (const auto& c : enumerate_congruences(f.module, lenient())) {
      EXPECT_TRUE(c.compatible);
      got.push_back(c.class_of);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << f.module.name();
  }
}

TEST(Congruences, ClosureIsLeast) {
  const auto b2 = bundled_structure("B2");
  const auto t2 = bundled_module(b2, "T2");
  const auto parts = oracle::partitions(t2.size());
  for (int x = 0; x < t2.size(); ++x)
    for (int y = 0; y < t2.size(); ++y) {
      const auto c = congruence_closure(t2, {{x, y}});
      EXPECT_TRUE(c.compatible);
      EXPECT_EQ(c.class_of[x], c.class_of[y]);
      // every compatible partition joining x and y refines no further than c
      for (const auto& p : parts) {
        if (!oracle::compatible(t2, p) || p[x] != p[y]) continue;
        for (int u = 0; u < t2.size(); ++u)
          for (int v = 0; v < t2.size(); ++v)
            if (c.class_of[u] == c.class_of[v]) EXPECT_EQ(p[u], p[v]);
      }
    }
}

TEST(Bourne, Examples) {
  const auto b2 = bundled_structure("B2");
  const auto t2 = bundled_module(b2, "T2");
  const auto q = bourne_quotient(t2, kAxisY);
  EXPECT_EQ(q.quotient.size(), 2);
  EXPECT_TRUE(q.congruence.compatible);
  EXPECT_TRUE(find_isomorphism(q.quotient, regular_module(b2)).has_value());
  EXPECT_EQ(bourne_quotient(t2, 0b0001).quotient.size(), 4);
  EXPECT_EQ(bourne_quotient(t2, 0b1111).quotient.size(), 1);
}

TEST(Bourne, WellDefinedOnEverySubmodule) {
  for (const auto& f : all_modules())
    for (Subset n : oracle::submodules(f.module)) {
      const auto q = bourne_quotient(f.module, n);
      EXPECT_TRUE(q.congruence.compatible) << f.module.name() << " / " << n;
      EXPECT_TRUE(oracle::compatible(f.module, q.congruence.class_of));
      // k ~ 0 for k in N
      for (int k : members(n)) EXPECT_EQ(q.congruence.class_of[k], q.congruence.class_of[f.module.zero()]);
    }
}

TEST(Iso, FirstProjection) {
  const auto b2 = bundled_structure("B2");
  const auto t2 = bundled_module(b2, "T2");
  const auto reg = regular_module(b2);
  EXPECT_EQ(kernel(t2, reg, kProjection), kAxisY);
  EXPECT_EQ(image(kProjection), Subset{0b11});
  const auto r = first_isomorphism(t2, reg, kProjection);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.left_size, 2);
  EXPECT_EQ(r.right_size, 2);
}

TEST(Iso, FirstOnEveryFixtureHom) {
  const auto fixtures = all_modules();
  for (const auto& a : fixtures)
    for (const auto& b : fixtures) {
      if (a.base != b.base || a.base->name() == "Z3") continue;
      for (const auto& h : hom_set(a.module, b.module)) {
        // holds exactly when the Bourne relation of ker f is the kernel pair of f
        const Subset ker = kernel(a.module, b.module, h.map);
        bool expected = true;
        for (int x = 0; x < a.module.size(); ++x)
          for (int y = 0; y < a.module.size(); ++y) {
            bool related = false;
            for (int k : members(ker))
              for (int l : members(ker)) related = related || a.module.add(x, k) == a.module.add(y, l);
            expected = expected && related == (h.map[x] == h.map[y]);
          }
        EXPECT_EQ(first_isomorphism(a.module, b.module, h.map).holds, expected);
      }
    }
}

TEST(Iso, SecondAndThird) {
  const auto t2 = bundled_module(bundled_structure("B2"), "T2");
  const auto second = second_isomorphism(t2, kAxisX, kAxisY);
  EXPECT_TRUE(second.holds);
  EXPECT_EQ(second.left_size, 2);
  const auto third = third_isomorphism(t2, kAxisY, 0b0001);
  EXPECT_TRUE(third.holds);
  EXPECT_EQ(third.left_size, 2);
}

TEST(Simple, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_TRUE(is_simple(regular_module(b2)));
  EXPECT_FALSE(is_simple(bundled_module(b2, "T2")));
  EXPECT_FALSE(is_simple(zero_module(b2)));
  EXPECT_TRUE(is_simple(regular_module(bundled_structure("Z3")), lenient()));
}

TEST(Annihilator, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_EQ(annihilator(regular_module(b2)).members, Subset{0b01});
  EXPECT_EQ(annihilator(zero_module(b2)).members, Subset{0b11});
  EXPECT_EQ(annihilator(bundled_module(b2, "T2")).members, Subset{0b01});
  EXPECT_EQ(annihilator(regular_module(bundled_structure("Z3")), lenient()).members, Subset{0b001});
}

TEST(Annihilator, IntersectionOfElementwise) {
  for (const auto& f : all_modules()) {
    if (f.base->name() == "Z3") continue;
    const auto ann = annihilator(f.module);
    EXPECT_EQ(ann.is_ideal, Flag::yes);
    Subset meet = full_subset(f.base->size());
    for (int m = 0; m < f.module.size(); ++m) meet &= element_annihilator(f.module, m).members;
    EXPECT_EQ(ann.members, meet);
  }
}

TEST(Faithful, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_TRUE(is_faithful(regular_module(b2)).faithful);
  const auto z = is_faithful(zero_module(b2));
  EXPECT_FALSE(z.faithful);
  EXPECT_EQ(z.witness, 1);
  EXPECT_TRUE(is_faithful(regular_module(bundled_structure("Z3")), lenient()).faithful);
}

TEST(End, Boolean) {
  const auto e = end_semiring(regular_module(bundled_structure("B2")));
  EXPECT_EQ(e.endos.size(), 2u);
  ASSERT_TRUE(e.schur.has_value());
  EXPECT_TRUE(*e.schur);
  EXPECT_TRUE(e.schur_counterexamples.empty());
  EXPECT_FALSE(end_semiring(bundled_module(bundled_structure("B2"), "T2")).schur.has_value());
}

TEST(End, Z3Census) {
  const auto z3 = regular_module(bundled_structure("Z3"));
  const auto e = end_semiring(z3, lenient());
  EXPECT_TRUE(e.lenient);
  EXPECT_EQ(e.endos.size(), oracle::homs(z3, z3).size());
  // maps commuting with the action only, counted over all 27
  long long eq = 0;
  std::vector<int> f(3, 0);
  for (int code = 0; code < 27; ++code) {
    f = {code / 9, (code / 3) % 3, code % 3};
    bool ok = true;
    for (int x = 0; x < 3 && ok; ++x)
      for (int a = 0; a < 3 && ok; ++a)
        for (int b = 0; b < 3 && ok; ++b)
          for (int al = 0; al < 2 && ok; ++al)
            for (int be = 0; be < 2 && ok; ++be) ok = f[z3.act(a, al, x, be, b)] == z3.act(a, al, f[x], be, b);
    eq += ok;
  }
  EXPECT_EQ(e.equivariant_map_count, eq);
}

TEST(Density, Boolean) {
  const auto d = density_check(regular_module(bundled_structure("B2")));
  EXPECT_TRUE(d.dense);
  EXPECT_EQ(d.anchor, 1);
  for (const auto& w : d.witnesses) {
    if (w.source == 1 && w.target == 0) EXPECT_EQ(w.element, 0);
    if (w.source == 1 && w.target == 1) EXPECT_EQ(w.element, 1);
  }
}

TEST(Density, Z3Anchor) {
  const auto z3 = regular_module(bundled_structure("Z3"));
  const auto d = density_check(z3, std::nullopt, false, lenient());
  EXPECT_TRUE(d.dense);
  EXPECT_EQ(d.anchor, 0);
  bool seen = false;
  for (const auto& w : d.witnesses) {
    EXPECT_EQ(z3.act(w.element, w.alpha, w.source, w.beta, d.anchor), w.target);
    if (w.source == 1 && w.target == 0) {
      seen = true;
      EXPECT_EQ(w.element, 2);
      EXPECT_EQ(w.alpha, 0);
      EXPECT_EQ(w.beta, 0);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Density, ZeroModuleRejected) {
  EXPECT_THROW(density_check(zero_module(bundled_structure("B2"))), PreconditionError);
}

TEST(Catalog, Boolean) {
  const auto cat = cyclic_module_catalog(bundled_structure("B2"));
  ASSERT_EQ(cat.size(), 2u);
  EXPECT_EQ(std::count_if(cat.begin(), cat.end(), [](const auto& e) { return e.simple; }), 1);
}

TEST(Catalog, ProductHasTwoSimples) {
  const auto cat = cyclic_module_catalog(bundled_structure("B2xB2"));
  std::vector<const GammaModule*> simples;
  for (const auto& e : cat)
    if (e.simple) simples.push_back(&e.module);
  ASSERT_EQ(simples.size(), 2u);
  EXPECT_FALSE(find_isomorphism(*simples[0], *simples[1]).has_value());
}

TEST(Catalog, NoDuplicatesAndSchurHolds) {
  for (const auto& name : bundled_structure_names()) {
    const auto cat = cyclic_module_catalog(bundled_structure(name), lenient());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      for (std::size_t j = i + 1; j < cat.size(); ++j)
        EXPECT_FALSE(find_isomorphism(cat[i].module, cat[j].module, lenient()).has_value());
      if (cat[i].simple) EXPECT_TRUE(end_semiring(cat[i].module, lenient()).schur_counterexamples.empty());
    }
  }
  const auto z3 = cyclic_module_catalog(bundled_structure("Z3"), lenient());
  EXPECT_TRUE(std::any_of(z3.begin(), z3.end(), [](const auto& e) { return e.simple && e.module.size() == 3; }));
}

TEST(Radical, Examples) {
  const auto b2 = bundled_structure("B2");
  const auto r = jacobson_radical(*b2, cyclic_module_catalog(b2));
  EXPECT_EQ(r.radical.members, Subset{0b01});
  EXPECT_TRUE(r.semiprimitive);
  const auto z3 = bundled_structure("Z3");
  EXPECT_EQ(jacobson_radical(*z3, cyclic_module_catalog(z3, lenient()), lenient()).radical.members, Subset{0b001});
}

TEST(Semisimple, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_TRUE(is_semisimple(regular_module(b2)).semisimple);
  const auto t2 = is_semisimple(bundled_module(b2, "T2"));
  EXPECT_TRUE(t2.semisimple);
  EXPECT_EQ(t2.decomposition.size(), 2u);
  EXPECT_TRUE(is_semisimple(zero_module(b2)).semisimple);
}
