#include "cyltqft/theory.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

using namespace cyltqft;

namespace {

FinSet values(std::size_t n) { return FinSet::range(n); }

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// One region bounded by every component of `b`.
Body blob(const CobObject& b) {
  FinSet r{"x"};
  return Body(r, b, FinMap(b.components, r, std::vector<std::size_t>(b.size(), 0)));
}

// Objects with at most two components, their cylinders, a pair of pants,
// a cobordism with a closed region, and the symmetries of each.
TheoryUniverse small_universe() {
  TheoryUniverse u;
  for (std::size_t p = 0; p <= 2; ++p) {
    for (std::size_t m = 0; p + m <= 2; ++m) u.objects.push_back(canonical_object(p, m));
  }
  for (const auto& s : u.objects) u.cobordisms.push_back(cylinder(s));
  CobObject two = canonical_object(2, 0), one = canonical_object(1, 0);
  FinSet r{"a"};
  u.cobordisms.push_back(Cobordism(two, one, r, FinMap(two.components, r, {0, 0}),
                                   FinMap(one.components, r, {0})));
  FinSet r2{"a", "b"};
  u.cobordisms.push_back(Cobordism(one, one, r2, FinMap(one.components, r2, {0}),
                                   FinMap(one.components, r2, {0})));
  for (const auto& m : u.cobordisms) u.diffeos.push_back(identity_diffeo(m));
  FinSet c = two.components;
  FinMap sw(c, c, {1, 0});
  u.diffeos.push_back(CobDiffeo{cylinder(two), cylinder(two), sw, sw, sw});
  Cobordism pants = u.cobordisms[u.cobordisms.size() - 2];
  u.diffeos.push_back(CobDiffeo{pants, pants, sw, FinMap::identity(r), FinMap::identity(one.components)});
  u.object_diffeos.push_back(ObjectDiffeo{two, two, sw});
  u.object_diffeos.push_back(identity_diffeo(two));
  return u;
}

}  // namespace

TEST(ConstantSheaf, OneComponent) {
  TheoryPtr t = constant_sheaf_theory(values(2));
  CobObject s = canonical_object(1, 0);
  EXPECT_EQ(t->germ_space(s).size(), 2u);
  Cobordism c = cylinder(s);
  EXPECT_EQ(t->solution_space(c.body()).size(), 2u);
  // Oracle: a solution is one value v on the single region; it restricts to (v, v).
  std::set<std::pair<std::string, std::string>> expected{{"(0)", "(0)"}, {"(1)", "(1)"}};
  FinMap a = source_germ(*t, c), b = target_germ(*t, c);
  std::set<std::pair<std::string, std::string>> image;
  for (std::size_t i = 0; i < a.dom().size(); ++i) {
    image.emplace(a.cod()[a(i)], b.cod()[b(i)]);
  }
  EXPECT_EQ(image, expected);
}

TEST(ConstantSheaf, OneRegionThreeComponents) {
  TheoryPtr t = constant_sheaf_theory(values(3));
  Body x = blob(canonical_object(2, 1));
  EXPECT_EQ(t->solution_space(x).size(), 3u);
  EXPECT_TRUE(is_injective(t->restriction(x)));
  EXPECT_EQ(t->restriction(x).cod().size(), 27u);
}

TEST(ConstantSheaf, EmptyObjectHasOneGerm) {
  TheoryPtr t = constant_sheaf_theory(values(3));
  FinSet g = t->germ_space(CobObject());
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], "()");
}

TEST(ConstantSheaf, EmptyValueSetIsInputError) {
  EXPECT_THROW(constant_sheaf_theory(FinSet()), InputError);
}

TEST(ConstantSheaf, GluingIsBijectionOntoEqualizer) {
  TheoryPtr t = constant_sheaf_theory(values(2));
  // Two regions: x bounds c0+ and c2-, y bounds c1+ and c3-.
  CobObject b = canonical_object(2, 2);
  FinSet r{"x", "y"};
  Body body(r, b, FinMap(b.components, r, {0, 1, 0, 1}));
  for (const auto& tr : all_triples(body)) {
    FinMap g = t->gluing(tr);
    EXPECT_TRUE(is_injective(g));
    // Oracle: classes of regions under the pairing, counted by hand.
    std::vector<std::size_t> cls{0, 1};
    for (const auto& s : tr.sigma) {
      std::size_t a = body.incidence(s) == "x" ? 0 : 1;
      std::size_t c = body.incidence(tr.pairing(s)) == "x" ? 0 : 1;
      std::size_t lo = std::min(cls[a], cls[c]);
      for (auto& v : cls) {
        if (v == cls[a] || v == cls[c]) v = lo;
      }
    }
    std::set<std::size_t> distinct(cls.begin(), cls.end());
    EXPECT_EQ(g.dom().size(), power(2, distinct.size()));
  }
}

TEST(FreeBoundary, CylinderRestrictsOntoSquare) {
  TheoryPtr t = free_boundary_theory(values(2), "0");
  Cobordism c = cylinder(canonical_object(1, 0));
  EXPECT_EQ(t->solution_space(c.body()).size(), 4u);
  FinMap a = source_germ(*t, c), b = target_germ(*t, c);
  std::set<std::pair<std::string, std::string>> image;
  for (std::size_t i = 0; i < a.dom().size(); ++i) image.emplace(a.cod()[a(i)], b.cod()[b(i)]);
  EXPECT_EQ(image.size(), 4u);
}

TEST(FreeBoundary, FillMustBeAValue) {
  EXPECT_THROW(free_boundary_theory(values(2), "7"), InputError);
}

TEST(FreeBoundary, ImageSmallerThanEqualizer) {
  TheoryPtr t = free_boundary_theory(values(2), "0");
  CobObject b = canonical_object(2, 1);
  Body x = blob(b);
  GluingTriple tr{x, FinSet{"c0"}, FinSet{"c1"}, FinSet{"c2"},
                  FinMap(FinSet{"c1"}, FinSet{"c2"}, {0}), std::nullopt};
  FinMap g = t->gluing(tr);
  // Oracle: boundary functions agreeing on c1 and c2.
  std::size_t eq = 0;
  for (std::size_t v0 = 0; v0 < 2; ++v0) {
    for (std::size_t v1 = 0; v1 < 2; ++v1) {
      for (std::size_t v2 = 0; v2 < 2; ++v2) eq += v1 == v2;
    }
  }
  EXPECT_EQ(eq, 4u);
  EXPECT_EQ(image_indices(g).size(), 2u);
}

TEST(Splits, HypersurfaceAndRegions) {
  TheoryPtr t = constant_sheaf_theory(values(2));
  CobObject a = canonical_object(1, 1), b = canonical_object(0, 1);
  FinMap s = split_germ(*t, a, b);
  EXPECT_TRUE(is_bijective(s));
  EXPECT_EQ(s.cod().size(), 8u);
  Body x = blob(a), y = cylinder(b).body();
  EXPECT_TRUE(is_bijective(split_solution(*t, x, y)));
}

TEST(CheckAxioms, ReportListsNineAxioms) {
  TheoryPtr t = constant_sheaf_theory(values(2));
  AxiomReport r = check_axioms(*t, TheoryUniverse{});
  ASSERT_EQ(r.summary().size(), 9u);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(r.summary()[i].first, axiom_names()[i]);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.notes().size(), 2u);
}

TEST(CheckAxioms, ConstantPassesOnSmallUniverse) {
  TheoryUniverse u = small_universe();
  for (std::size_t n = 1; n <= 3; ++n) {
    AxiomReport r = check_axioms(*constant_sheaf_theory(values(n)), u);
    EXPECT_TRUE(r.ok()) << n;
    for (const auto& [name, tally] : r.summary()) {
      EXPECT_EQ(tally.failed, 0u) << name;
      EXPECT_GT(tally.passed, 0u) << name;
    }
  }
}

TEST(CheckAxioms, FreeBoundaryFailsDiagonalAndGluing) {
  AxiomReport r = check_axioms(*free_boundary_theory(values(2), "0"), small_universe());
  EXPECT_FALSE(r.ok());
  std::set<std::string> failed;
  for (const auto& [name, tally] : r.summary()) {
    if (tally.failed) failed.insert(name);
  }
  EXPECT_EQ(failed, (std::set<std::string>{"diagonal", "gluing"}));
  const Record* d = nullptr;
  for (const auto& rec : r.records()) {
    if (rec.check == "diagonal" && rec.instance == "cylinder {c0+}") d = &rec;
  }
  ASSERT_NE(d, nullptr);
  EXPECT_FALSE(d->pass);
  EXPECT_EQ(d->witness, "((0),(1))");
  const Record* g = r.first_failure("gluing");
  ASSERT_NE(g, nullptr);
  EXPECT_FALSE(g->witness.empty());
}

TEST(CheckAxioms, FreeBoundaryOnSingletonPasses) {
  AxiomReport r = check_axioms(*free_boundary_theory(values(1), "0"), small_universe());
  EXPECT_TRUE(r.ok());
}
