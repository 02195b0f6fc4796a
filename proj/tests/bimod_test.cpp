#include "cyltqft/bimod.hpp"

#include <gtest/gtest.h>

#include "builders.hpp"
#include "cyltqft/error.hpp"

using namespace cyltqft;
using namespace testing_builders;

namespace {

// A bimodule over trivial semi-groups on the given bases with trivial actions.
FiberedBimodule plain(const FinMap& s, const FinMap& t) {
  FiberedSemiGroup l = trivial_fsgrp(s.cod()), r = trivial_fsgrp(t.cod());
  return FiberedBimodule::tabulate(l, r, s, t, [](std::size_t, std::size_t w) { return w; },
                                   [](std::size_t w, std::size_t) { return w; });
}

}  // namespace

TEST(IdentityBimodule, Trivial) {
  FiberedSemiGroup e = trivial_fsgrp(FinSet{"0", "1"});
  FiberedBimodule i = identity_bimodule(e);
  EXPECT_EQ(i.carrier(), e.total());
  EXPECT_EQ(i.src(), FinMap::identity(e.total()));
  EXPECT_TRUE(validate_bimodule(i).ok());
  EXPECT_TRUE(is_rigid(i));
}

TEST(IdentityBimodule, CyclicIsNotRigid) {
  FiberedBimodule i = identity_bimodule(cyclic(2));
  EXPECT_TRUE(validate_bimodule(i).ok());
  EXPECT_EQ(i.lpairs().size(), 4u);
  EXPECT_FALSE(is_rigid(i));
  EXPECT_TRUE(is_rigid(identity_bimodule(singleton())));
}

TEST(IdentityBimodule, RejectsInvalidSemiGroup) {
  EXPECT_THROW(identity_bimodule(subtraction(3)), InputError);
}

TEST(ValidateBimodule, DetectsBrokenAction) {
  FiberedSemiGroup z2 = cyclic(2);
  // lambda(e, w) = 1 - w: acting twice returns w, acting once by a product flips it.
  FiberedBimodule b = left_module_over_point(z2, 2, [](std::size_t, std::size_t w) { return 1 - w; });
  ValidationReport r = validate_bimodule(b);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures("left associativity"), 1u);
  EXPECT_EQ(r.summary().size(), 7u);
}

TEST(Hcompose, DiagonalOfTrivial) {
  FiberedBimodule i = identity_bimodule(trivial_fsgrp(FinSet{"0", "1"}));
  FiberedBimodule c = hcompose(i, i);
  EXPECT_EQ(c.carrier(), FinSet({"[0|0]", "[1|1]"}));
  EXPECT_TRUE(validate_bimodule(c).ok());
}

TEST(Hcompose, TerminalBase) {
  FinSet pt{"*"};
  FinSet a = FinSet::range(3), b = FinSet{"x", "y"};
  FiberedBimodule ma = plain(FinMap(a, pt, {0, 0, 0}), FinMap(a, pt, {0, 0, 0}));
  FiberedBimodule mb = plain(FinMap(b, pt, {0, 0}), FinMap(b, pt, {0, 0}));
  FiberedBimodule c = hcompose(ma, mb);
  EXPECT_EQ(c.carrier().size(), 6u);
  EXPECT_TRUE(validate_bimodule(c).ok());
}

TEST(Hcompose, ParityMatching) {
  FinSet eo{"e", "o"};
  FinSet a = FinSet::range(3);
  FinMap parity(a, eo, {0, 1, 0});
  FiberedBimodule ma = plain(FinMap(a, FinSet{"*"}, {0, 0, 0}), parity);
  FiberedBimodule mb = plain(FinMap::identity(eo), FinMap::identity(eo));
  // Oracle: count pairs (w, v) with t(w) = s(v).
  std::size_t oracle = 0;
  for (std::size_t w = 0; w < 3; ++w) {
    for (std::size_t v = 0; v < 2; ++v) oracle += parity(w) == v;
  }
  FiberedBimodule c = hcompose(ma, mb);
  EXPECT_EQ(c.carrier().size(), oracle);
  EXPECT_EQ(oracle, 3u);
  EXPECT_TRUE(validate_bimodule(c).ok());
}

TEST(Hcompose, MiddleMismatch) {
  FiberedBimodule a = identity_bimodule(cyclic(2));
  FiberedBimodule b = identity_bimodule(cyclic(3));
  EXPECT_THROW(hcompose(a, b), InputError);
}

TEST(Hcompose, StrictlyAssociative) {
  FiberedSemiGroup z2 = cyclic(2);
  FiberedBimodule i = identity_bimodule(z2);
  FiberedBimodule m = left_module_over_point(z2, 3, [](std::size_t e, std::size_t w) {
    return w == 2 ? 2 : (w + e) % 2;
  });
  ASSERT_TRUE(validate_bimodule(m).ok());
  EXPECT_EQ(hcompose(hcompose(i, i), m), hcompose(i, hcompose(i, m)));
  EXPECT_TRUE(validate_bimodule(hcompose(hcompose(i, i), m)).ok());
}

TEST(HcomposeMor, Identities) {
  FiberedBimodule i = identity_bimodule(cyclic(2));
  EquivariantMorphism id = identity_equivariant(i);
  EXPECT_EQ(hcompose_mor(id, id), identity_equivariant(hcompose(i, i)));
}

TEST(HcomposeMor, OverPointIsProductMap) {
  FinSet pt{"*"};
  FinSet a{"0", "1"};
  FiberedBimodule m = plain(FinMap(a, pt, {0, 0}), FinMap(a, pt, {0, 0}));
  FinMap flip(a, a, {1, 0});
  FsgMorphism idp = identity_morphism(m.left());
  EquivariantMorphism f{m, m, idp, idp, flip};
  ASSERT_TRUE(validate_equivariant(f).ok());
  EquivariantMorphism ff = hcompose_mor(f, f);
  EXPECT_EQ(ff.mid.cod().size(), 4u);
  EXPECT_EQ(ff.mid("[0|1]"), "[1|0]");
  EXPECT_TRUE(validate_equivariant(ff).ok());
}

TEST(HcomposeMor, SwapWithIdentity) {
  FiberedSemiGroup z2 = cyclic(2);
  FiberedBimodule i = identity_bimodule(z2);
  // Translation by 1 commutes with the Z/2 actions.
  FinMap shift(i.carrier(), i.carrier(), {1, 0});
  EquivariantMorphism sw{i, i, identity_morphism(z2), identity_morphism(z2), shift};
  ASSERT_TRUE(validate_equivariant(sw).ok());
  EquivariantMorphism c = hcompose_mor(sw, identity_equivariant(i));
  ValidationReport r = validate_equivariant(c);
  EXPECT_TRUE(r.ok());
  for (const char* n : {"source", "target", "left action", "right action"}) {
    EXPECT_EQ(r.failures(n), 0u) << n;
  }
}

TEST(Unitors, RigidTrivialIsBijection) {
  FiberedBimodule i = identity_bimodule(trivial_fsgrp(FinSet{"0", "1"}));
  EquivariantMorphism l = left_unitor(i), r = right_unitor(i);
  EXPECT_TRUE(is_bijective(l.mid));
  EXPECT_TRUE(is_bijective(r.mid));
  EXPECT_TRUE(validate_equivariant(l).ok());
}

TEST(Unitors, CyclicIsSurjectiveNotInjective) {
  FiberedBimodule i = identity_bimodule(cyclic(2));
  EquivariantMorphism l = left_unitor(i);
  // Oracle: preimage counts of each element under (a, b) |-> a + b mod 2.
  std::vector<int> pre(2, 0);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) ++pre[(a + b) % 2];
  }
  EXPECT_EQ(l.mid.dom().size(), 4u);
  EXPECT_TRUE(is_surjective(l.mid));
  EXPECT_FALSE(is_injective(l.mid));
  for (std::size_t w = 0; w < 2; ++w) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < 4; ++k) n += l.mid(k) == w;
    EXPECT_EQ(n, static_cast<std::size_t>(pre[w]));
  }
  EXPECT_TRUE(validate_equivariant(l).ok());
}

TEST(Unitors, TriangleOnRigid) {
  FiberedBimodule i = identity_bimodule(trivial_fsgrp(FinSet{"0", "1"}));
  EquivariantMorphism a = hcompose_mor(right_unitor(i), identity_equivariant(i));
  EquivariantMorphism b = hcompose_mor(identity_equivariant(i), left_unitor(i));
  EXPECT_EQ(a.from, b.from);
  EXPECT_EQ(a.mid, b.mid);
}

TEST(Unitors, MiddleTriangleFailsOnCyclic) {
  FiberedBimodule i = identity_bimodule(cyclic(2));
  EquivariantMorphism a = hcompose_mor(right_unitor(i), identity_equivariant(i));
  EquivariantMorphism b = hcompose_mor(identity_equivariant(i), left_unitor(i));
  ASSERT_EQ(a.from, b.from);
  EXPECT_EQ(a.mid("[0|1|0]"), "[1|0]");
  EXPECT_EQ(b.mid("[0|1|0]"), "[0|1]");
}

TEST(ProductBimodule, IdentityIsMonoidal) {
  FiberedSemiGroup e = cyclic(2), f = trivial_fsgrp(FinSet{"a", "b"});
  EXPECT_EQ(identity_bimodule(product_fsgrp(e, f)),
            product_bimodule(identity_bimodule(e), identity_bimodule(f)));
}

TEST(Interchange, ValidatesAndIsBijective) {
  FiberedBimodule ie = identity_bimodule(cyclic(2));
  FiberedBimodule it = identity_bimodule(trivial_fsgrp(FinSet{"a", "b"}));
  EquivariantMorphism m = interchange(ie, ie, it, it);
  EXPECT_TRUE(validate_equivariant(m).ok());
  EXPECT_TRUE(is_bijective(m.mid));
}

TEST(Laws, SingleRigidUniverse) {
  LawUniverse u;
  u.sgrps.push_back(trivial_fsgrp(FinSet{"0", "1"}));
  LawReport r = check_double_category_laws(u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.failures("unitor iso"), 0u);
  EXPECT_EQ(r.failures("middle triangle (lax)"), 0u);
}

TEST(Laws, CyclicUniverseIsLax) {
  LawUniverse u;
  u.sgrps.push_back(cyclic(2));
  LawReport r = check_double_category_laws(u);
  EXPECT_TRUE(r.ok());
  const Record* rec = r.first_failure("unitor iso");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->witness, "lax only");
  EXPECT_TRUE(rec->audit);
}

TEST(Laws, AllOverPointUpToThree) {
  // Every associative operation on {0..n-1}, n <= 3, by brute force.
  LawUniverse u;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t cells = n * n;
    std::vector<std::size_t> t(cells, 0);
    while (true) {
      bool assoc = true;
      for (std::size_t a = 0; a < n && assoc; ++a) {
        for (std::size_t b = 0; b < n && assoc; ++b) {
          for (std::size_t c = 0; c < n && assoc; ++c) {
            assoc = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
          }
        }
      }
      if (assoc) {
        u.sgrps.push_back(over_point(n, [&t, n](std::size_t a, std::size_t b) { return t[a * n + b]; }));
      }
      std::size_t i = 0;
      while (i < cells && ++t[i] == n) t[i++] = 0;
      if (i == cells) break;
    }
  }
  EXPECT_EQ(u.sgrps.size(), 1u + 8u + 113u);
  LawReport r = check_double_category_laws(u);
  EXPECT_TRUE(r.ok());
  for (const char* law : {"bimodule axioms", "strict associativity", "unitor naturality",
                          "triangle", "monoidality", "rigid closure"}) {
    EXPECT_EQ(r.failures(law), 0u) << law;
  }
}
