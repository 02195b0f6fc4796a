#include "cyltqft/ccob.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

#include "cyltqft/error.hpp"

using namespace cyltqft;

namespace {

// A cobordism with regions "r0".."r{k-1}" and incidences given by index tables.
Cobordism make(const CobObject& src, const CobObject& tgt, std::size_t k,
               std::vector<std::size_t> in_src, std::vector<std::size_t> in_tgt) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("r" + std::to_string(i));
  FinSet regs = FinSet::from_tokens(names);
  return Cobordism(src, tgt, regs, FinMap(src.components, regs, std::move(in_src)),
                   FinMap(tgt.components, regs, std::move(in_tgt)));
}

// Every cobordism a -> b with between 1 and max_regions regions.
std::vector<Cobordism> all_cobordisms(const CobObject& a, const CobObject& b,
                                      std::size_t max_regions) {
  std::vector<Cobordism> out;
  for (std::size_t k = 1; k <= max_regions; ++k) {
    std::size_t n = a.size() + b.size();
    std::vector<std::size_t> t(n, 0);
    while (true) {
      std::vector<std::size_t> s(t.begin(), t.begin() + a.size());
      std::vector<std::size_t> u(t.begin() + a.size(), t.end());
      out.push_back(make(a, b, k, s, u));
      std::size_t i = 0;
      while (i < n && ++t[i] == k) t[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

// Oracle: number of connected components of the graph on regions(M) + regions(N)
// joined along the shared boundary, by depth-first search.
std::size_t glued_region_count(const Cobordism& m, const Cobordism& n) {
  std::size_t a = m.regions.size(), total = a + n.regions.size();
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t c = 0; c < m.target.size(); ++c) {
    std::size_t x = m.in_tgt(c), y = a + n.in_src(c);
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(total, 0);
  std::size_t count = 0;
  for (std::size_t v = 0; v < total; ++v) {
    if (seen[v]) continue;
    ++count;
    std::vector<std::size_t> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST(CobObject, ReverseIsInvolution) {
  CobObject s = canonical_object(2, 1);
  EXPECT_EQ(reverse(reverse(s)), s);
  EXPECT_NE(reverse(s), s);
  EXPECT_TRUE(reverse(s).positive(2));
}

TEST(CobObject, CanonicalNamesAndSigns) {
  CobObject s = canonical_object(11, 1);
  EXPECT_EQ(s.size(), 12u);
  EXPECT_TRUE(s.positive(s.components.index_of("c10")));
  EXPECT_FALSE(s.positive(s.components.index_of("c11")));
}

TEST(CobObject, RejectsPartialOrientation) {
  FinSet c{"a", "b"};
  EXPECT_THROW(CobObject(c, FinMap(FinSet{"a"}, signs(), {0})), InputError);
}

TEST(CobObject, DisjointUnionSize) {
  CobObject a = canonical_object(1, 1), b = canonical_object(0, 3);
  ObjectUnion u = disjoint_union(a, b);
  EXPECT_EQ(u.object.size(), a.size() + b.size());
  EXPECT_FALSE(u.object.positive(u.object.components.index_of("1:c0")));
}

TEST(Cylinder, RegionsAreComponents) {
  Cobordism c1 = cylinder(canonical_object(1, 0));
  EXPECT_EQ(c1.regions.size(), 1u);
  CobObject s = canonical_object(2, 1);
  Cobordism c3 = cylinder(s);
  EXPECT_EQ(c3.regions, s.components);
  EXPECT_EQ(c3.in_src, FinMap::identity(s.components));
  EXPECT_EQ(c3.in_tgt, FinMap::identity(s.components));
}

TEST(Glue, CylinderWithCylinder) {
  CobObject s = canonical_object(2, 1);
  GlueResult g = glue(cylinder(s), cylinder(s));
  EXPECT_EQ(g.composite.regions.size(), s.size());
  EXPECT_TRUE(is_bijective(g.composite.in_src));
  EXPECT_EQ(canonical_form(g.composite).form, canonical_form(cylinder(s)).form);
}

TEST(Glue, MergesThroughSharedComponent) {
  CobObject empty;
  CobObject one = canonical_object(1, 0);
  // M: two regions, only r1 meets the single middle component. N: one region.
  Cobordism m = make(empty, one, 2, {}, {1});
  Cobordism n = make(one, empty, 1, {0}, {});
  GlueResult g = glue(m, n);
  EXPECT_EQ(g.composite.regions.size(), glued_region_count(m, n));
  EXPECT_EQ(g.composite.regions.size(), 2u);
  EXPECT_EQ(g.from_left(1), g.from_right(0));
  EXPECT_NE(g.from_left(0), g.from_left(1));
}

TEST(Glue, BoundaryMismatchIsInputError) {
  EXPECT_THROW(glue(cylinder(canonical_object(1, 0)), cylinder(canonical_object(0, 1))),
               InputError);
}

TEST(Glue, RegionCountMatchesComponentOracle) {
  CobObject a = canonical_object(1, 0), b = canonical_object(1, 1);
  for (const auto& m : all_cobordisms(a, b, 3)) {
    for (const auto& n : all_cobordisms(b, a, 2)) {
      EXPECT_EQ(glue(m, n).composite.regions.size(), glued_region_count(m, n));
    }
  }
}

TEST(Glue, AssociativeAfterCanonicalRelabelling) {
  CobObject a = canonical_object(1, 0), b = canonical_object(1, 1);
  auto ab = all_cobordisms(a, b, 2), ba = all_cobordisms(b, a, 2);
  std::size_t checked = 0;
  for (const auto& m : ab) {
    for (const auto& n : ba) {
      for (const auto& p : ab) {
        Cobordism l = glue(glue(m, n).composite, p).composite;
        Cobordism r = glue(m, glue(n, p).composite).composite;
        ASSERT_EQ(canonical_form(l).form, canonical_form(r).form);
        CobDiffeo d = associativity_diffeo(m, n, p);
        ASSERT_TRUE(validate_diffeo(d).ok());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Glue, AssociativeOnAllSmallTriples) {
  // Every triple of cobordisms between one-component objects with <= 3 regions.
  CobObject p = canonical_object(1, 0);
  auto cs = all_cobordisms(p, p, 3);
  for (const auto& m : cs) {
    for (const auto& n : cs) {
      for (const auto& q : cs) {
        Cobordism l = glue(glue(m, n).composite, q).composite;
        Cobordism r = glue(m, glue(n, q).composite).composite;
        ASSERT_EQ(canonical_form(l).form, canonical_form(r).form);
      }
    }
  }
}

TEST(Glue, CylinderIsTwoSidedUnit) {
  CobObject a = canonical_object(1, 0), b = canonical_object(1, 1);
  for (const auto& m : all_cobordisms(a, b, 3)) {
    GlueResult l = glue(cylinder(a), m);
    GlueResult r = glue(m, cylinder(b));
    EXPECT_EQ(l.composite.regions.size(), m.regions.size());
    EXPECT_TRUE(is_bijective(l.from_right));
    EXPECT_TRUE(is_bijective(r.from_left));
    EXPECT_EQ(canonical_form(l.composite).form, canonical_form(m).form);

    BodyDiffeo lc = left_collapse(m), rc = right_collapse(m);
    EXPECT_TRUE(is_valid(lc));
    EXPECT_TRUE(is_valid(rc));
    EXPECT_EQ(lc.to, m.body());
  }
}

TEST(Diffeo, SymmetryValidates) {
  CobObject a = canonical_object(1, 0), b = canonical_object(1, 1);
  Cobordism m = make(a, b, 2, {0}, {0, 1});
  Cobordism n = cylinder(b);
  CobDiffeo s = symmetry_diffeo(m, n);
  EXPECT_TRUE(validate_diffeo(s).ok());
  EXPECT_EQ(compose(symmetry_diffeo(n, m), s), identity_diffeo(disjoint_union(m, n)));
  EXPECT_TRUE(is_valid(s.body()));
}

TEST(Diffeo, DetectsBrokenIncidence) {
  CobObject a = canonical_object(1, 0);
  Cobordism m = make(a, a, 2, {0}, {1});
  CobDiffeo d{m, m, FinMap::identity(a.components), FinMap(m.regions, m.regions, {1, 0}),
              FinMap::identity(a.components)};
  ValidationReport r = validate_diffeo(d);
  EXPECT_EQ(r.failures("incidence"), 1u);
  EXPECT_EQ(r.first_failure("incidence")->witness, "c0");
  EXPECT_EQ(r.failures("bijective"), 0u);
}

TEST(Diffeo, DetectsOrientationFlip) {
  FinSet c{"x", "y"};
  CobObject s(c, FinMap(c, signs(), {0, 1}));
  Cobordism m = cylinder(s);
  FinMap sw(c, c, {1, 0});
  CobDiffeo d{m, m, sw, sw, sw};
  ValidationReport r = validate_diffeo(d);
  EXPECT_EQ(r.failures("orientation"), 1u);
  EXPECT_EQ(r.failures("incidence"), 0u);
}

TEST(Diffeo, GlueDiffeoOfIdentities) {
  CobObject a = canonical_object(1, 1);
  Cobordism m = make(a, a, 2, {0, 1}, {1, 1});
  CobDiffeo g = glue_diffeo(identity_diffeo(m), identity_diffeo(m));
  EXPECT_EQ(g, identity_diffeo(glue(m, m).composite));
}

TEST(Diffeo, CylinderDiffeo) {
  FinSet c{"x", "y"};
  CobObject s(c, FinMap(c, signs(), {0, 0}));
  ObjectDiffeo phi{s, s, FinMap(c, c, {1, 0})};
  ASSERT_TRUE(is_valid(phi));
  EXPECT_TRUE(validate_diffeo(cylinder_diffeo(phi)).ok());
  EXPECT_EQ(compose(cylinder_diffeo(phi), cylinder_diffeo(phi)), identity_diffeo(cylinder(s)));
}

TEST(GlueTriple, TwoCylindersGiveOneCylinder) {
  CobObject s = canonical_object(1, 0);
  Cobordism c = cylinder(s);
  GluingTriple t = composable_triple(c, c);
  EXPECT_TRUE(validate_triple(t).ok());
  GluedBody g = glue_triple(t);
  EXPECT_EQ(g.body.regions.size(), 1u);
  EXPECT_EQ(g.body.boundary.size(), 2u);
  BodyDiffeo d = glued_to_composite(c, c);
  EXPECT_TRUE(is_valid(d));
  EXPECT_EQ(d.to, glue(c, c).composite.body());
  EXPECT_EQ(canonical_form(glue(c, c).composite).form, canonical_form(c).form);
}

TEST(GlueTriple, AgreesWithGlue) {
  CobObject a = canonical_object(1, 0), b = canonical_object(1, 1);
  for (const auto& m : all_cobordisms(a, b, 2)) {
    for (const auto& n : all_cobordisms(b, a, 3)) {
      BodyDiffeo d = glued_to_composite(m, n);
      ASSERT_TRUE(is_valid(d)) << print(m) << " ; " << print(n);
    }
  }
}

TEST(GlueTriple, SelfGluing) {
  // One region bounded by c0+ and c1-; glue c0 to c1.
  CobObject b = canonical_object(1, 1);
  FinSet r{"x"};
  Body x(FinSet{"x"}, b, FinMap(b.components, r, {0, 0}));
  GluingTriple t{x, FinSet(), FinSet{"c0"}, FinSet{"c1"}, FinMap(FinSet{"c0"}, FinSet{"c1"}, {0}),
                 std::nullopt};
  GluedBody g = glue_triple(t);
  EXPECT_EQ(g.body.regions.size(), 1u);
  EXPECT_EQ(g.body.boundary.size(), 0u);
}

TEST(GlueTriple, SelfGluingKeepsLambda) {
  CobObject b = canonical_object(2, 1);
  FinSet r{"x"};
  Body x(r, b, FinMap(b.components, r, {0, 0, 0}));
  GluingTriple t{x, FinSet{"c1"}, FinSet{"c0"}, FinSet{"c2"},
                 FinMap(FinSet{"c0"}, FinSet{"c2"}, {0}), std::nullopt};
  GluedBody g = glue_triple(t);
  EXPECT_EQ(g.body.regions.size(), 1u);
  EXPECT_EQ(g.body.boundary.components, FinSet{"c1"});
}

TEST(GlueTriple, SameOrientationPairingIsInputError) {
  CobObject b = canonical_object(2, 0);
  FinSet r{"x", "y"};
  Body x(r, b, FinMap(b.components, r, {0, 1}));
  GluingTriple t{x, FinSet(), FinSet{"c0"}, FinSet{"c1"}, FinMap(FinSet{"c0"}, FinSet{"c1"}, {0}),
                 std::nullopt};
  EXPECT_EQ(validate_triple(t).failures("pairing"), 1u);
  EXPECT_THROW(glue_triple(t), InputError);
}

TEST(GlueTriple, OverlappingPartsFailPartition) {
  CobObject b = canonical_object(1, 1);
  FinSet r{"x"};
  Body x(r, b, FinMap(b.components, r, {0, 0}));
  GluingTriple t{x, FinSet{"c0"}, FinSet{"c0"}, FinSet{"c1"},
                 FinMap(FinSet{"c0"}, FinSet{"c1"}, {0}), std::nullopt};
  ValidationReport rep = validate_triple(t);
  EXPECT_EQ(rep.failures("partition"), 1u);
  EXPECT_EQ(rep.first_failure("partition")->witness, "c0");
}

TEST(GlueTriple, Corners) {
  CobObject b = canonical_object(1, 1);
  FinSet r{"x"};
  Body x(r, b, FinMap(b.components, r, {0, 0}));
  GluingTriple t{x, FinSet(), FinSet{"c0"}, FinSet{"c1"}, FinMap(FinSet{"c0"}, FinSet{"c1"}, {0}),
                 Corners{FinSet{"p"}, FinSet{"p"}, FinSet{"q"}}};
  EXPECT_TRUE(validate_triple(t).ok());
  t.corners = Corners{FinSet{"z"}, FinSet{"p"}, FinSet{"q"}};
  EXPECT_EQ(validate_triple(t).failures("corners"), 1u);
  t.corners = Corners{FinSet(), FinSet{"p"}, FinSet{"q", "s"}};
  EXPECT_EQ(validate_triple(t).failures("corners"), 1u);
}

TEST(GlueTriple, OrderOfGluingDoesNotMatter) {
  // Two pairs glued in either order give the same quotient.
  CobObject m = canonical_object(1, 0), n = canonical_object(1, 1);
  for (const auto& x : all_cobordisms(n, n, 3)) {
    Body body = x.body();
    for (const auto& t : all_triples(body)) {
      if (t.sigma.size() < 2) continue;
      FinSet first{t.sigma[0]};
      FinSet second{t.sigma[1]};
      auto [a1, a2] = split_triple(t, first);
      auto [b1, b2] = split_triple(t, second);
      GluedBody direct = glue_triple(t);
      GluedBody ga = glue_triple(a2), gb = glue_triple(b2);
      EXPECT_EQ(ga.body.regions.size(), direct.body.regions.size());
      EXPECT_EQ(gb.body.regions.size(), direct.body.regions.size());
      EXPECT_EQ(ga.body.boundary, direct.body.boundary);
      EXPECT_EQ(gb.body.boundary, direct.body.boundary);
    }
  }
  (void)m;
}

TEST(GlueTriple, AllTriplesCount) {
  // Boundary c0+, c1+, c2-: matchings are {}, {c0-c2}, {c1-c2}.
  CobObject b = canonical_object(2, 1);
  FinSet r{"x"};
  Body x(r, b, FinMap(b.components, r, {0, 0, 0}));
  auto ts = all_triples(x);
  EXPECT_EQ(ts.size(), 3u);
  for (const auto& t : ts) EXPECT_TRUE(validate_triple(t).ok());
  // Oracle: sum over k of C(p,k) C(m,k) k! for p = m = 2.
  CobObject b2 = canonical_object(2, 2);
  Body x2(r, b2, FinMap(b2.components, r, {0, 0, 0, 0}));
  EXPECT_EQ(all_triples(x2).size(), 1u + 4u + 2u);
}

TEST(GlueTriple, InducedDiffeo) {
  CobObject s = canonical_object(1, 0);
  Cobordism c = cylinder(s);
  GluingTriple t = composable_triple(c, c);
  auto id = induced_glued_diffeo(t, identity_diffeo(t.body));
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, identity_diffeo(glue_triple(t).body));
}

TEST(CanonicalForm, ClosedRegionsLast) {
  CobObject a = canonical_object(1, 0);
  Cobordism m = make(a, a, 3, {2}, {2});
  CanonicalForm f = canonical_form(m);
  EXPECT_EQ(f.form.regions, FinSet({"r0", "r1", "r2"}));
  EXPECT_EQ(f.relabel("r2"), "r0");
  EXPECT_EQ(f.form.in_src(0), 0u);
}

TEST(Print, Deterministic) {
  Cobordism c = cylinder(canonical_object(1, 1));
  EXPECT_EQ(print(c), "{c0+ c1-} -> {c0+ c1-} [c0 c1] src: c0 c1 tgt: c0 c1");
}
