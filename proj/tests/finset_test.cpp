#include "cyltqft/finset.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

using namespace cyltqft;

namespace {

FinMap map_of(const FinSet& dom, const FinSet& cod,
              std::map<std::string, std::string> table) {
  return FinMap::from_table(dom, cod, table);
}

FinMap random_map(std::mt19937& rng, const FinSet& dom, const FinSet& cod) {
  std::uniform_int_distribution<std::size_t> pick(0, cod.size() - 1);
  std::vector<std::size_t> t(dom.size());
  for (auto& x : t) x = pick(rng);
  return FinMap(dom, cod, t);
}

// Labels connected components of the graph on B with an edge f(a) -- g(a),
// by repeated relaxation to the minimum label.
std::vector<std::size_t> component_labels(const FinMap& f, const FinMap& g) {
  std::vector<std::size_t> label(f.cod().size());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < f.dom().size(); ++a) {
      std::size_t m = std::min(label[f(a)], label[g(a)]);
      for (std::size_t x : {f(a), g(a)}) {
        if (label[x] != m) {
          label[x] = m;
          changed = true;
        }
      }
    }
  }
  return label;
}

}  // namespace

TEST(Token, Grammar) {
  EXPECT_TRUE(token::is_valid("abc"));
  EXPECT_TRUE(token::is_valid("()"));
  EXPECT_TRUE(token::is_valid("(a,(b,c))"));
  EXPECT_TRUE(token::is_valid("0:a"));
  EXPECT_TRUE(token::is_valid("[a|b|c]"));
  EXPECT_TRUE(token::is_valid("([a|b],c)"));
  EXPECT_FALSE(token::is_valid(""));
  EXPECT_FALSE(token::is_valid("a,b"));
  EXPECT_FALSE(token::is_valid("[a]"));
  EXPECT_FALSE(token::is_valid("[[a|b]|c]"));
  EXPECT_FALSE(token::is_valid("x:a"));
  EXPECT_FALSE(token::is_valid("(a"));
}

TEST(Token, ChainsSplice) {
  EXPECT_EQ(token::chain("a", "b"), "[a|b]");
  EXPECT_EQ(token::chain(token::chain("a", "b"), "c"), token::chain("a", token::chain("b", "c")));
  EXPECT_EQ(token::chain_parts("[a|(b,c)|d]"), (std::vector<std::string>{"a", "(b,c)", "d"}));
  EXPECT_EQ(token::tuple_parts("(a,[b|c])"), (std::vector<std::string>{"a", "[b|c]"}));
}

TEST(FinSet, SortedAndDistinct) {
  FinSet s{"b", "a", "c"};
  EXPECT_EQ(s[0], "a");
  EXPECT_EQ(s.index_of("c"), 2u);
  EXPECT_THROW(FinSet({"a", "a"}), InputError);
  EXPECT_THROW(FinSet({"a|b"}), InputError);
  EXPECT_THROW(s.index_of("z"), InputError);
  EXPECT_EQ(FinSet({"x", "y"}), FinSet({"y", "x"}));
}

TEST(FinMap, Totality) {
  FinSet a{"0", "1"}, b{"x"};
  EXPECT_THROW(map_of(a, b, {{"0", "x"}}), InputError);
  EXPECT_THROW(map_of(a, b, {{"0", "x"}, {"1", "y"}}), InputError);
  EXPECT_THROW(map_of(a, b, {{"0", "x"}, {"1", "x"}, {"2", "x"}}), InputError);
  EXPECT_THROW(FinMap(a, b, {0}), InputError);
  EXPECT_THROW(FinMap(a, b, {0, 1}), InputError);
  EXPECT_EQ(map_of(a, b, {{"0", "x"}, {"1", "x"}})("1"), "x");
}

TEST(FiberProduct, DiagonalOfIdentity) {
  FinSet s{"0", "1"};
  PairSet p = fiber_product(FinMap::identity(s), FinMap::identity(s));
  EXPECT_EQ(p.carrier(), FinSet({"(0,0)", "(1,1)"}));
}

TEST(FiberProduct, TerminalCodomainIsFullProduct) {
  FinSet pt{"*"};
  FinSet a{"a", "b"}, b{"c", "d"};
  PairSet p = fiber_product(map_of(a, pt, {{"a", "*"}, {"b", "*"}}),
                            map_of(b, pt, {{"c", "*"}, {"d", "*"}}));
  EXPECT_EQ(p.size(), 4u);
}

TEST(FiberProduct, ParityAgainstConstant) {
  FinSet a{"0", "1", "2"}, c{"e", "o"}, b{"x"};
  FinMap f = map_of(a, c, {{"0", "e"}, {"1", "o"}, {"2", "e"}});
  FinMap g = map_of(b, c, {{"x", "e"}});
  // Oracle: enumerate all 3 x 1 pairs and keep the matching ones.
  std::vector<std::string> expected;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (f(x) == g(y)) expected.push_back("(" + x + "," + y + ")");
    }
  }
  PairSet p = fiber_product(f, g);
  EXPECT_EQ(p.carrier(), FinSet(expected));
  EXPECT_EQ(p.carrier(), FinSet({"(0,x)", "(2,x)"}));
}

TEST(FiberProduct, CodomainMismatch) {
  EXPECT_THROW(fiber_product(FinMap::identity(FinSet{"0"}), FinMap::identity(FinSet{"1"})),
               InputError);
}

TEST(FiberProduct, ChainCollisionIsRejected) {
  FinSet pt{"*"};
  FinSet a{"[x|y]", "x"}, b{"z", "[y|z]"};
  FinMap f(a, pt, {0, 0}), g(b, pt, {0, 0});
  EXPECT_THROW(fiber_product(f, g, PairStyle::kChain), InputError);
}

TEST(FiberProduct, SizeMatchesDoubleLoop) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    FinSet a = FinSet::range(1 + trial % 5), b = FinSet::range(1 + trial % 4);
    FinSet c = FinSet::range(1 + trial % 3);
    FinMap f = random_map(rng, a, c), g = random_map(rng, b, c);
    std::size_t oracle = 0;
    for (std::size_t z = 0; z < c.size(); ++z) {
      std::size_t nf = 0, ng = 0;
      for (std::size_t i = 0; i < a.size(); ++i) nf += f(i) == z;
      for (std::size_t j = 0; j < b.size(); ++j) ng += g(j) == z;
      oracle += nf * ng;
    }
    PairSet p = fiber_product(f, g);
    ASSERT_EQ(p.size(), oracle);
    for (std::size_t k = 0; k < p.size(); ++k) {
      ASSERT_EQ(f(p.left()(k)), g(p.right()(k)));
      ASSERT_EQ(p.at(p.left()(k), p.right()(k)), k);
    }
  }
}

TEST(FiberProduct, PullbackUniversalProperty) {
  std::mt19937 rng(11);
  int cones = 0;
  for (int trial = 0; trial < 400 && cones < 60; ++trial) {
    FinSet a = FinSet::range(1 + trial % 3), b = FinSet::range(1 + (trial / 3) % 3);
    FinSet c = FinSet::range(1 + trial % 2);
    FinMap f = random_map(rng, a, c), g = random_map(rng, b, c);
    FinSet d = FinSet::range(1 + trial % 4);
    FinMap u = random_map(rng, d, a), v = random_map(rng, d, b);
    if (!(compose(f, u) == compose(g, v))) continue;
    ++cones;
    PairSet p = fiber_product(f, g);
    auto h = pair_into(p, u, v);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(compose(p.left(), *h), u);
    EXPECT_EQ(compose(p.right(), *h), v);
    // Uniqueness: no other map D -> P has the same projections.
    std::vector<std::size_t> t(d.size(), 0);
    std::size_t matches = 0;
    while (true) {
      FinMap k(d, p.carrier(), t);
      if (compose(p.left(), k) == u && compose(p.right(), k) == v) ++matches;
      std::size_t i = 0;
      while (i < t.size() && ++t[i] == p.size()) t[i++] = 0;
      if (i == t.size()) break;
    }
    EXPECT_EQ(matches, 1u);
  }
  EXPECT_GT(cones, 10);
}

TEST(Coequalizer, EqualMapsGiveBijection) {
  FinSet a{"a", "b"}, b{"0", "1", "2"};
  FinMap f(a, b, {0, 2});
  EXPECT_TRUE(is_bijective(coequalizer(f, f)));
}

TEST(Coequalizer, ForcedIdentification) {
  FinSet pt{"*"}, b{"0", "1"};
  FinMap q = coequalizer(FinMap(pt, b, {0}), FinMap(pt, b, {1}));
  EXPECT_EQ(q.cod(), FinSet({"0"}));
}

TEST(Coequalizer, ChainOfRelations) {
  FinSet a{"a", "b"}, b{"0", "1", "2"};
  FinMap f = map_of(a, b, {{"a", "0"}, {"b", "1"}});
  FinMap g = map_of(a, b, {{"a", "1"}, {"b", "2"}});
  auto labels = component_labels(f, g);
  EXPECT_EQ(std::set<std::size_t>(labels.begin(), labels.end()).size(), 1u);
  FinMap q = coequalizer(f, g);
  EXPECT_EQ(q.cod().size(), 1u);
  EXPECT_EQ(q.cod()[0], "0");
}

TEST(Coequalizer, Mismatch) {
  FinSet a{"a"}, b{"0"}, c{"1"};
  EXPECT_THROW(coequalizer(FinMap(a, b, {0}), FinMap(a, c, {0})), InputError);
}

TEST(Coequalizer, MatchesComponentLabelling) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    FinSet a = FinSet::range(trial % 5), b = FinSet::range(1 + trial % 6);
    FinMap f = random_map(rng, a, b), g = random_map(rng, a, b);
    FinMap q = coequalizer(f, g);
    auto labels = component_labels(f, g);
    ASSERT_TRUE(is_surjective(q));
    ASSERT_EQ(compose(q, f), compose(q, g));
    for (std::size_t i = 0; i < b.size(); ++i) {
      // Representative is the least element of the class.
      ASSERT_EQ(q.cod()[q(i)], b[labels[i]]);
    }
  }
}

TEST(Commutes, SamePath) {
  FinSet a{"0", "1"}, b{"x", "y"};
  FinMap f(a, b, {1, 0});
  std::vector<FinMap> p{f};
  EXPECT_TRUE(commutes(p, p).pass);
}

TEST(Commutes, IdentityLaw) {
  FinSet a{"0", "1"}, b{"x", "y"};
  FinMap f(a, b, {1, 0});
  std::vector<FinMap> p1{FinMap::identity(a), f}, p2{f};
  EXPECT_TRUE(commutes(p1, p2).pass);
}

TEST(Commutes, SwapWitness) {
  PairSet sq = product(FinSet{"0", "1"}, FinSet{"0", "1"});
  FinMap swap = FinMap::tabulate(sq.carrier(), sq.carrier(), [&](std::size_t k) {
    return sq.at(sq.right()(k), sq.left()(k));
  });
  // Oracle: the first element, in carrier order, that swap moves.
  std::string expected;
  for (std::size_t k = 0; k < sq.size(); ++k) {
    if (swap(k) != k) {
      expected = sq.carrier()[k];
      break;
    }
  }
  std::vector<FinMap> p1{swap}, p2{FinMap::identity(sq.carrier())};
  auto r = commutes(p1, p2);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.witness, expected);
  EXPECT_EQ(r.witness, "(0,1)");
  EXPECT_EQ(r.lhs, "(1,0)");
  EXPECT_EQ(r.rhs, "(0,1)");
}

TEST(Commutes, NonComposable) {
  FinSet a{"0"}, b{"1"};
  std::vector<FinMap> bad{FinMap::identity(a), FinMap::identity(b)};
  std::vector<FinMap> ok{FinMap::identity(a)};
  EXPECT_THROW(commutes(bad, ok), InputError);
  std::vector<FinMap> empty;
  EXPECT_THROW(commutes(empty, ok), InputError);
}

TEST(Utilities, ProductAndUnion) {
  EXPECT_EQ(product(FinSet{"0", "1"}, FinSet{"a"}).size(), 2u);
  TaggedUnion u = disjoint_union(FinSet{"p"}, FinSet{"p"});
  EXPECT_EQ(u.carrier.size(), 2u);
  EXPECT_NE(u.inl("p"), u.inr("p"));
  FinSet c{"0", "1"};
  FinMap h = copair(u, FinMap(FinSet{"p"}, c, {0}), FinMap(FinSet{"p"}, c, {1}));
  EXPECT_EQ(compose(h, u.inl), FinMap(FinSet{"p"}, c, {0}));
}

TEST(Utilities, ParityIsNotBijective) {
  FinSet a{"0", "1", "2"}, c{"e", "o"};
  FinMap parity(a, c, {0, 1, 0});
  EXPECT_EQ(image_indices(parity).size(), 2u);
  EXPECT_FALSE(is_injective(parity));
  EXPECT_FALSE(is_bijective(parity));
  EXPECT_TRUE(is_surjective(parity));
}

TEST(Utilities, ComposeIsAssociative) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    FinSet a = FinSet::range(1 + trial % 4), b = FinSet::range(1 + trial % 3);
    FinSet c = FinSet::range(1 + trial % 5), d = FinSet::range(1 + trial % 2);
    FinMap f = random_map(rng, a, b), g = random_map(rng, b, c), h = random_map(rng, c, d);
    ASSERT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
  }
  EXPECT_THROW(compose(FinMap::identity(FinSet{"0"}), FinMap::identity(FinSet{"1"})), InputError);
}

TEST(Utilities, Inverse) {
  FinSet a{"0", "1", "2"};
  FinMap f(a, a, {2, 0, 1});
  EXPECT_EQ(compose(inverse(f), f), FinMap::identity(a));
  EXPECT_THROW(inverse(FinMap(a, a, {0, 0, 1})), InputError);
}
