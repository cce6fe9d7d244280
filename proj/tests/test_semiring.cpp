#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "tgw/error.hpp"
#include "tgw/fixtures.hpp"
#include "tgw/semiring.hpp"

using namespace tgw;

namespace {

Semiring patched_b2(int x, int y, int value) {
  auto b = bundled_structure("B2");
  auto add = b->add_table();
  add[x * 2 + y] = value;
  return Semiring("B2-patched", b->elements(), b->zero(), b->unit(), b->gamma(), add, b->tri_table());
}

nlohmann::json b2_json() { return nlohmann::json::parse(serialize_structure(*bundled_structure("B2"))); }

}  // namespace

TEST(Load, BundledShapes) {
  EXPECT_EQ(bundled_structure("B2")->size(), 2);
  EXPECT_EQ(bundled_structure("B2")->gamma_count(), 2);
  EXPECT_EQ(bundled_structure("Z3")->size(), 3);
  EXPECT_EQ(bundled_structure("Z3")->gamma_count(), 2);
  EXPECT_FALSE(bundled_structure("Z3")->unit().has_value());
  EXPECT_EQ(bundled_structure("B2xB2")->size(), 4);
}

TEST(Load, MalformedText) { EXPECT_THROW(load_structure("{\"name\": "), ParseError); }

TEST(Load, UndeclaredLabel) {
  auto j = b2_json();
  j["zero"] = "7";
  EXPECT_THROW(load_structure(j.dump()), ReferenceError);
}

TEST(Load, WrongAddWidth) {
  auto j = b2_json();
  j["add"][0].push_back("0");
  EXPECT_THROW(load_structure(j.dump()), ShapeError);
}

TEST(Load, WrongTriDepth) {
  auto j = b2_json();
  j["tri"].erase(1);
  EXPECT_THROW(load_structure(j.dump()), ShapeError);
}

TEST(Load, RoundTrip) {
  for (const auto& name : bundled_structure_names()) {
    const auto s = bundled_structure(name);
    const auto text = serialize_structure(*s);
    const Semiring back = load_structure(text);
    EXPECT_EQ(back, *s) << name;
    EXPECT_EQ(serialize_structure(back), text) << name;
  }
}

TEST(TriEval, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_EQ(tri_eval(*b2, 1, 0, 1, 0, 1), 1);
  EXPECT_EQ(tri_eval(*b2, 0, 0, 1, 1, 1), 0);
  const auto z3 = bundled_structure("Z3");
  EXPECT_EQ(tri_eval(*z3, 1, 0, 2, 1, 0), 1);
}

TEST(TriEval, OutOfRange) {
  const auto b2 = bundled_structure("B2");
  EXPECT_THROW(tri_eval(*b2, 2, 0, 0, 0, 0), IndexError);
  EXPECT_THROW(tri_eval(*b2, 0, 2, 0, 0, 0), IndexError);
  EXPECT_THROW(tri_eval(*b2, 0, 0, 0, 0, -1), IndexError);
}

TEST(Axioms, BooleanPasses) {
  EXPECT_TRUE(check_axioms(*bundled_structure("B2")).passed());
  EXPECT_TRUE(check_axioms(*bundled_structure("B2xB2")).passed());
}

TEST(Axioms, Z3AbsorptionWitness) {
  const auto r = check_axioms(*bundled_structure("Z3"));
  EXPECT_FALSE(r.passed());
  const Violation expected{"zero-absorption", {0, 0, 0, 1, 0}, 1, 0};
  EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), expected), r.violations.end());
}

// 1 + 1 = 0 turns B2 into the two-element field, which is still a valid structure
TEST(Axioms, PatchedToFieldPasses) { EXPECT_TRUE(check_axioms(patched_b2(1, 1, 0)).passed()); }

TEST(Axioms, PatchedAdditionFails) {
  const auto r = check_axioms(patched_b2(0, 1, 0));
  ASSERT_FALSE(r.passed());
  bool add_law = false;
  for (const auto& v : r.violations)
    add_law = add_law || v.law.rfind("add-", 0) == 0;
  EXPECT_TRUE(add_law);
}

TEST(Axioms, SortedAndIdempotent) {
  for (const auto& name : bundled_structure_names()) {
    const auto s = bundled_structure(name);
    const auto a = check_axioms(*s), b = check_axioms(*s);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(std::is_sorted(a.violations.begin(), a.violations.end()));
  }
}

TEST(Axioms, WitnessesReevaluate) {
  std::vector<Semiring> cases{*bundled_structure("Z3"), patched_b2(0, 1, 0), patched_b2(1, 0, 0)};
  for (const auto& s : cases) {
    for (const auto& v : check_axioms(s).violations) {
      const auto [l, r] = reevaluate(s, v);
      EXPECT_EQ(l, v.left) << v.law;
      EXPECT_EQ(r, v.right) << v.law;
      EXPECT_NE(l, r) << v.law;
    }
  }
}

// independent spot checks of the laws on random tuples
TEST(Axioms, RandomTuplesOnPassingStructures) {
  std::mt19937 rng(20260);
  for (const char* name : {"B2", "B2xB2"}) {
    const auto s = bundled_structure(name);
    const int n = s->size(), g = s->gamma_count();
    std::uniform_int_distribution<int> el(0, n - 1), pa(0, g - 1);
    for (int t = 0; t < 1000; ++t) {
      const int a = el(rng), b = el(rng), c = el(rng), d = el(rng), e = el(rng), x = el(rng);
      const int al = pa(rng), be = pa(rng), ga = pa(rng), de = pa(rng);
      ASSERT_EQ(s->add(s->add(a, b), c), s->add(a, s->add(b, c)));
      ASSERT_EQ(s->add(a, b), s->add(b, a));
      ASSERT_EQ(s->add(a, s->zero()), a);
      ASSERT_EQ(s->tri(s->add(a, x), al, b, be, c), s->add(s->tri(a, al, b, be, c), s->tri(x, al, b, be, c)));
      ASSERT_EQ(s->tri(a, al, s->add(b, x), be, c), s->add(s->tri(a, al, b, be, c), s->tri(a, al, x, be, c)));
      ASSERT_EQ(s->tri(a, al, b, be, s->add(c, x)), s->add(s->tri(a, al, b, be, c), s->tri(a, al, b, be, x)));
      ASSERT_EQ(s->tri(s->tri(a, al, b, be, c), ga, d, de, e), s->tri(a, al, s->tri(b, be, c, ga, d), de, e));
      ASSERT_EQ(s->tri(a, al, s->tri(b, be, c, ga, d), de, e), s->tri(a, al, b, be, s->tri(c, ga, d, de, e)));
      ASSERT_EQ(s->tri(s->zero(), al, b, be, c), s->zero());
      ASSERT_EQ(s->tri(a, al, s->zero(), be, c), s->zero());
      ASSERT_EQ(s->tri(a, al, b, be, s->zero()), s->zero());
      ASSERT_EQ(s->tri(a, al, b, be, c), s->tri(b, al, a, be, c));
      ASSERT_EQ(s->tri(a, al, b, be, c), s->tri(c, al, b, be, a));
      if (s->unit()) ASSERT_EQ(s->tri(*s->unit(), al, *s->unit(), be, a), a);
    }
  }
}

TEST(Axioms, RequireAxioms) {
  const auto z3 = bundled_structure("Z3");
  EXPECT_THROW(require_axioms(*z3, {}), AxiomError);
  Options lenient;
  lenient.lenient = true;
  EXPECT_TRUE(require_axioms(*z3, lenient));
  EXPECT_FALSE(require_axioms(*bundled_structure("B2"), {}));
}

TEST(Product, Componentwise) {
  const auto b2 = bundled_structure("B2");
  const Semiring p = product(*b2, *b2, "P");
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.label(p.zero()), "(0,0)");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const int r = p.tri(a, 0, b, 1, c);
        EXPECT_EQ(r / 2, b2->tri(a / 2, 0, b / 2, 1, c / 2));
        EXPECT_EQ(r % 2, b2->tri(a % 2, 0, b % 2, 1, c % 2));
      }
}

TEST(Budget, Parse) {
  EXPECT_EQ(Budget::parse("7").subset_bound, 7);
  const auto b = Budget::parse("subset=5,maps=100,states=20,cap=3");
  EXPECT_EQ(b.subset_bound, 5);
  EXPECT_EQ(b.map_budget, 100u);
  EXPECT_EQ(b.state_budget, 20u);
  EXPECT_EQ(b.saturation_cap, 3);
  EXPECT_THROW(Budget::parse("bogus=1"), ParseError);
  EXPECT_THROW(Budget::parse("subset"), ParseError);
}
