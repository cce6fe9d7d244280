#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tgw/error.hpp"
#include "tgw/fixtures.hpp"
#include "tgw/ideals.hpp"

using namespace tgw;

namespace {

Options lenient() {
  Options o;
  o.lenient = true;
  return o;
}

std::vector<Subset> members_of(const std::vector<IdealSet>& xs) {
  std::vector<Subset> out;
  for (const auto& i : xs) out.push_back(i.members);
  return out;
}

// B2xB2 element ids: (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
constexpr int kP10 = 2, kP01 = 1;

}  // namespace

TEST(Closure, Examples) {
  const auto b2 = bundled_structure("B2");
  EXPECT_EQ(ideal_closure(*b2, bit(1)).members, Subset{0b11});
  EXPECT_EQ(ideal_closure(*b2, 0).members, Subset{0b01});
  const auto bb = bundled_structure("B2xB2");
  EXPECT_EQ(ideal_closure(*bb, bit(kP10)).members, bit(0) | bit(kP10));
}

TEST(Closure, OperatorLaws) {
  for (const char* name : {"B2", "B2xB2"}) {
    const auto s = bundled_structure(name);
    const Subset all = full_subset(s->size());
    for (Subset a = 0; a <= all; ++a) {
      const Subset ca = ideal_closure(*s, a).members;
      EXPECT_TRUE(is_subset_of(a, ca));
      EXPECT_TRUE(oracle::ideal(*s, ca));
      EXPECT_EQ(ideal_closure(*s, ca).members, ca);
      for (Subset b = 0; b <= all; ++b)
        if (is_subset_of(a, b)) EXPECT_TRUE(is_subset_of(ca, ideal_closure(*s, b).members));
    }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(members_of(enumerate_ideals(*bundled_structure("B2"))), (std::vector<Subset>{0b01, 0b11}));
  EXPECT_EQ(members_of(enumerate_ideals(*bundled_structure("B2xB2"))),
            (std::vector<Subset>{0b0001, 0b0011, 0b0101, 0b1111}));
}

TEST(Enumerate, MatchesOracleOnEveryFixture) {
  for (const auto& name : bundled_structure_names()) {
    const auto s = bundled_structure(name);
    EXPECT_EQ(members_of(enumerate_ideals(*s, lenient())), oracle::ideals(*s)) << name;
  }
}

TEST(Enumerate, Z3) {
  EXPECT_THROW(spectrum(*bundled_structure("Z3")), AxiomError);
  EXPECT_TRUE(spectrum(*bundled_structure("Z3"), lenient()).lenient);
  const auto ideals = members_of(enumerate_ideals(*bundled_structure("Z3"), lenient()));
  EXPECT_TRUE(ideals.empty() || ideals == std::vector<Subset>{0b111});
}

TEST(Enumerate, BudgetExceeded) {
  Options o;
  o.budget.subset_bound = 3;
  EXPECT_THROW(enumerate_ideals(*bundled_structure("B2xB2"), o), BudgetError);
}

TEST(Prime, Examples) {
  EXPECT_TRUE(is_prime(*bundled_structure("B2"), 0b01));
  const auto bb = bundled_structure("B2xB2");
  EXPECT_FALSE(is_prime(*bb, 0b0001));
  EXPECT_TRUE(is_prime(*bb, bit(0) | bit(kP10)));
  EXPECT_TRUE(is_prime(*bb, bit(0) | bit(kP01)));
}

TEST(Prime, Preconditions) {
  const auto bb = bundled_structure("B2xB2");
  EXPECT_THROW(is_prime(*bb, 0b1111), PreconditionError);
  EXPECT_THROW(is_prime(*bb, 0b0110), PreconditionError);
}

TEST(Prime, MatchesOracle) {
  for (const char* name : {"B2", "B2xB2"}) {
    const auto s = bundled_structure(name);
    for (Subset i : oracle::ideals(*s)) {
      if (i == full_subset(s->size())) continue;
      EXPECT_EQ(is_prime(*s, i), oracle::prime(*s, i)) << name << " " << i;
    }
  }
}

TEST(Spectrum, Points) {
  const auto b2 = spectrum(*bundled_structure("B2"));
  ASSERT_EQ(b2.points.size(), 1u);
  EXPECT_EQ(b2.points[0].members, Subset{0b01});
  const auto bb = spectrum(*bundled_structure("B2xB2"));
  ASSERT_EQ(bb.points.size(), 2u);
  EXPECT_EQ(bb.points[0].members, bit(0) | bit(kP01));
  EXPECT_EQ(bb.points[1].members, bit(0) | bit(kP10));
  EXPECT_EQ(bb.closed_set(0b0001), Subset{0b11});
  EXPECT_EQ(bb.closed_set(0b1111), Subset{0});
}

TEST(Spectrum, ClosedSetsReverseInclusion) {
  for (const char* name : {"B2", "B2xB2"}) {
    const auto sp = spectrum(*bundled_structure(name));
    for (std::size_t i = 0; i < sp.ideals.size(); ++i)
      for (std::size_t j = 0; j < sp.ideals.size(); ++j)
        if (is_subset_of(sp.ideals[i].members, sp.ideals[j].members))
          EXPECT_TRUE(is_subset_of(sp.closed_sets[j], sp.closed_sets[i]));
  }
}

TEST(Zariski, IntersectionIdentity) {
  const auto b2 = bundled_structure("B2");
  const auto z1 = zariski_report(*b2, spectrum(*b2));
  EXPECT_TRUE(z1.passed());
  EXPECT_EQ(z1.pairs_checked, 4u);
  const auto bb = bundled_structure("B2xB2");
  const auto z2 = zariski_report(*bb, spectrum(*bb));
  EXPECT_TRUE(z2.passed());
  EXPECT_EQ(z2.pairs_checked, 16u);
}

TEST(Zariski, OracleOnPointSets) {
  const auto bb = bundled_structure("B2xB2");
  const auto sp = spectrum(*bb);
  for (const auto& i : sp.ideals)
    for (const auto& j : sp.ideals) {
      Subset lhs = 0, rhs = 0;
      const Subset sum = ideal_closure(*bb, i.members | j.members).members;
      for (std::size_t p = 0; p < sp.points.size(); ++p) {
        const Subset pm = sp.points[p].members;
        if (is_subset_of(i.members, pm) && is_subset_of(j.members, pm)) lhs |= bit(static_cast<int>(p));
        if (is_subset_of(sum, pm)) rhs |= bit(static_cast<int>(p));
      }
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Localize, BooleanAtZero) {
  const auto b2 = bundled_structure("B2");
  const auto l = localize(*b2, 0b01);
  EXPECT_TRUE(l.well_defined);
  EXPECT_EQ(l.class_count, 2);
  EXPECT_EQ(l.maximal_ideal, std::vector<int>{l.class_of[l.fraction_index(0, 1)]});
  ASSERT_TRUE(l.local.has_value());
  EXPECT_TRUE(*l.local);
}

TEST(Localize, ProductCollapsesComponent) {
  const auto bb = bundled_structure("B2xB2");
  const auto l = localize(*bb, bit(0) | bit(kP10));
  EXPECT_TRUE(l.well_defined);
  EXPECT_EQ(l.class_count, 2);
  // (1,0)/1 sits with 0/1
  EXPECT_EQ(l.class_of[l.fraction_index(kP10, 3)], l.class_of[l.fraction_index(0, 3)]);
  EXPECT_NE(l.class_of[l.fraction_index(kP01, 3)], l.class_of[l.fraction_index(0, 3)]);
  ASSERT_TRUE(l.local.has_value());
  EXPECT_TRUE(*l.local);
}

TEST(Localize, ZeroNumeratorInMaximalIdeal) {
  const auto bb = bundled_structure("B2xB2");
  for (const auto& p : spectrum(*bb).points) {
    const auto l = localize(*bb, p.members);
    for (std::size_t f = 0; f < l.fractions.size(); ++f) {
      if (l.fractions[f].first != bb->zero()) continue;
      const int c = l.class_of[f];
      EXPECT_NE(std::find(l.maximal_ideal.begin(), l.maximal_ideal.end(), c), l.maximal_ideal.end());
    }
  }
}

TEST(Localize, NonPrimeRejected) {
  EXPECT_THROW(localize(*bundled_structure("B2xB2"), 0b0001), PreconditionError);
}

TEST(Localize, RandomRepresentativeRepicks) {
  std::mt19937 rng(7);
  for (const char* name : {"B2", "B2xB2"}) {
    const auto s = bundled_structure(name);
    const int g = s->gamma_count();
    for (const auto& p : spectrum(*s).points) {
      const auto l = localize(*s, p.members);
      ASSERT_TRUE(l.well_defined);
      const int q = l.class_count, w = l.multiplier;
      std::vector<std::vector<int>> reps(q);
      for (std::size_t f = 0; f < l.fractions.size(); ++f) reps[l.class_of[f]].push_back(static_cast<int>(f));
      std::uniform_int_distribution<int> cls(0, q - 1), par(0, g - 1);
      auto pick = [&](int c) {
        std::uniform_int_distribution<std::size_t> d(0, reps[c].size() - 1);
        return l.fractions[reps[c][d(rng)]];
      };
      auto mul = [&](int x, int y) { return s->tri(x, 0, y, 0, w); };
      auto class_of = [&](int a, int d) -> int {
        if (contains(p.members, d)) return -1;
        return l.class_of[l.fraction_index(a, d)];
      };
      int checked = 0;
      for (int t = 0; t < 1000; ++t) {
        const int c1 = cls(rng), c2 = cls(rng), c3 = cls(rng), al = par(rng), be = par(rng);
        const auto [a, x] = pick(c1);
        const auto [b, y] = pick(c2);
        const auto [c, z] = pick(c3);
        const int sum = class_of(s->add(mul(a, y), mul(b, x)), mul(x, y));
        if (sum >= 0) {
          EXPECT_EQ(sum, l.add[c1 * q + c2]);
          ++checked;
        }
        const int prod = class_of(s->tri(a, al, b, be, c), s->tri(x, al, y, be, z));
        if (prod >= 0) {
          EXPECT_EQ(prod, l.tri[(((static_cast<std::size_t>(c1) * g + al) * q + c2) * g + be) * q + c3]);
          ++checked;
        }
      }
      EXPECT_GT(checked, 0);
    }
  }
}

TEST(Localize, LocalityMatchesTableSearch) {
  for (const char* name : {"B2", "B2xB2"}) {
    const auto s = bundled_structure(name);
    const int g = s->gamma_count();
    for (const auto& p : spectrum(*s).points) {
      const auto l = localize(*s, p.members);
      const int q = l.class_count, u = *s->unit();
      const int one = l.class_of[l.fraction_index(u, u)];
      std::vector<int> non_invertible;
      for (int x = 0; x < q; ++x) {
        bool inv = false;
        for (int y = 0; y < q; ++y)
          for (int al = 0; al < g; ++al)
            for (int be = 0; be < g; ++be)
              inv = inv || l.tri[(((static_cast<std::size_t>(x) * g + al) * q + y) * g + be) * q + one] == one;
        if (!inv) non_invertible.push_back(x);
      }
      EXPECT_EQ(non_invertible, l.maximal_ideal) << name;
    }
  }
}

TEST(Gelfand, Injective) {
  EXPECT_TRUE(gelfand_injectivity(*bundled_structure("B2")).injective);
  const auto r = gelfand_injectivity(*bundled_structure("B2xB2"));
  EXPECT_TRUE(r.injective);
  EXPECT_EQ(r.maximal_primes.size(), 2u);
}

TEST(Gelfand, NeedsUnit) {
  EXPECT_THROW(gelfand_injectivity(*bundled_structure("Z3"), lenient()), PreconditionError);
}
