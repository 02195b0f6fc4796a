#include "cyltqft/fsgrp.hpp"

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

namespace cyltqft {

namespace {

std::string triple(const FinSet& s, std::size_t a, std::size_t b, std::size_t c) {
  const std::string parts[] = {s[a], s[b], s[c]};
  return token::tuple(parts);
}

}  // namespace

FiberedSemiGroup::FiberedSemiGroup()
    : FiberedSemiGroup(FinMap(FinSet{"*"}, FinSet{"*"}, {0}),
                       FinMap(FinSet{"(*,*)"}, FinSet{"*"}, {0})) {}

FiberedSemiGroup::FiberedSemiGroup(FinMap proj, FinMap mul) {
  PairSet pairs = fiber_product(proj, proj);
  if (!(mul.dom() == pairs.carrier())) {
    throw InputError("mu must be defined exactly on the fiber product E x_pi E (" +
                     std::to_string(pairs.size()) + " pairs, got " +
                     std::to_string(mul.dom().size()) + ")");
  }
  if (!(mul.cod() == proj.dom())) {
    throw InputError("mu must take values in the total space");
  }
  // Share the carrier storage so equality checks hit the pointer fast path.
  FinMap m(pairs.carrier(), proj.dom(), std::vector<std::size_t>(mul.table().begin(),
                                                                  mul.table().end()));
  impl_ = std::make_shared<const Impl>(Impl{std::move(proj), std::move(m), std::move(pairs)});
}

bool FiberedSemiGroup::valid() const {
  if (impl_->valid < 0) impl_->valid = validate_fsgrp(*this).ok() ? 1 : 0;
  return impl_->valid == 1;
}

bool operator==(const FiberedSemiGroup& a, const FiberedSemiGroup& b) {
  return a.impl_ == b.impl_ || (a.impl_->proj == b.impl_->proj && a.impl_->mul == b.impl_->mul);
}

std::vector<AssociativityWitness> associativity_witnesses(const FiberedSemiGroup& f) {
  std::vector<AssociativityWitness> out;
  const FinMap& pi = f.proj();
  const FinMap& mu = f.mul();
  const PairSet& p = f.pairs();
  const FinSet& e = f.total();
  // Triples (a, b, c) in one fiber, in lexicographic index order.
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::size_t a = p.left()(k);
    std::size_t b = p.right()(k);
    for (std::size_t c = 0; c < e.size(); ++c) {
      if (pi(c) != pi(b)) continue;
      auto ab_c = p.find(mu(k), c);
      auto bc = p.find(b, c);
      std::optional<std::size_t> a_bc;
      if (bc) a_bc = p.find(a, mu(*bc));
      if (!ab_c || !a_bc) {
        out.push_back({triple(e, a, b, c), "a product leaves the fiber"});
        continue;
      }
      std::size_t lhs = mu(*ab_c);
      std::size_t rhs = mu(*a_bc);
      if (lhs != rhs) {
        out.push_back({triple(e, a, b, c), "(ab)c = " + e[lhs] + ", a(bc) = " + e[rhs]});
      }
    }
  }
  return out;
}

ValidationReport validate_fsgrp(const FiberedSemiGroup& f, const std::string& instance) {
  ValidationReport rep("fibered semi-group");
  rep.declare("compatibility");
  rep.declare("associativity");
  const FinMap& pi = f.proj();
  const FinMap& mu = f.mul();
  const PairSet& p = f.pairs();

  bool compatible = true;
  for (std::size_t k = 0; k < p.size() && compatible; ++k) {
    std::size_t x = pi(mu(k));
    if (x != pi(p.left()(k)) || x != pi(p.right()(k))) {
      compatible = false;
      rep.fail("compatibility", instance, p.carrier()[k],
               "pi(mu) = " + f.base()[x] + ", pi(a) = " + f.base()[pi(p.left()(k))]);
    }
  }
  if (compatible) rep.pass("compatibility", instance);

  auto bad = associativity_witnesses(f);
  if (!bad.empty()) {
    rep.fail("associativity", instance, bad.front().triple,
             bad.front().detail + " (" + std::to_string(bad.size()) + " failing triples)");
  }
  if (bad.empty()) rep.pass("associativity", instance);
  return rep;
}

void require_valid(const FiberedSemiGroup& f, const char* what) {
  if (!f.valid()) {
    throw InputError(std::string(what) + ": fibered semi-group fails validation");
  }
}

bool is_rigid(const FiberedSemiGroup& f) { return is_bijective(f.mul()); }

FiberedSemiGroup opposite(const FiberedSemiGroup& f) {
  const PairSet& p = f.pairs();
  return FiberedSemiGroup(
      f.proj(), FinMap::tabulate(p.carrier(), f.total(), [&](std::size_t k) {
        return f.mul()(p.at(p.right()(k), p.left()(k)));
      }));
}

FiberedSemiGroup product_fsgrp(const FiberedSemiGroup& f, const FiberedSemiGroup& g) {
  PairSet total = product(f.total(), g.total());
  PairSet base = product(f.base(), g.base());
  FinMap proj = product_map(total, base, f.proj(), g.proj());
  return FiberedSemiGroup::tabulate(std::move(proj), [&](std::size_t x, std::size_t y) {
    std::size_t a = f(total.left()(x), total.left()(y));
    std::size_t b = g(total.right()(x), total.right()(y));
    return total.at(a, b);
  });
}

FiberedSemiGroup trivial_fsgrp(const FinSet& s) {
  return FiberedSemiGroup::tabulate(FinMap::identity(s),
                                    [](std::size_t a, std::size_t) { return a; });
}

ValidationReport validate_morphism(const FsgMorphism& m, const std::string& instance) {
  const FinMap& phi = m.total_map;
  const FinMap& psi = m.base_map;
  if (!(phi.dom() == m.from.total()) || !(phi.cod() == m.to.total()) ||
      !(psi.dom() == m.from.base()) || !(psi.cod() == m.to.base())) {
    throw InputError("morphism maps do not match the fibered semi-groups");
  }
  ValidationReport rep("fibered semi-group morphism");
  rep.declare("projection");
  rep.declare("multiplication");
  auto proj_sq = commutes(compose(m.to.proj(), phi), compose(psi, m.from.proj()));
  if (proj_sq.pass) {
    rep.pass("projection", instance);
  } else {
    rep.fail("projection", instance, proj_sq.witness,
             "pi'(phi) = " + proj_sq.lhs + ", psi(pi) = " + proj_sq.rhs);
  }

  const PairSet& p = m.from.pairs();
  bool ok = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::size_t lhs = phi(m.from.mul()(k));
    auto image = m.to.pairs().find(phi(p.left()(k)), phi(p.right()(k)));
    if (!image) {
      ok = false;
      rep.fail("multiplication", instance, p.carrier()[k], "phi x phi leaves E' x E'");
      break;
    }
    std::size_t rhs = m.to.mul()(*image);
    if (lhs != rhs) {
      ok = false;
      rep.fail("multiplication", instance, p.carrier()[k],
               "phi(mu) = " + m.to.total()[lhs] + ", mu'(phi x phi) = " + m.to.total()[rhs]);
      break;
    }
  }
  if (ok) rep.pass("multiplication", instance);
  return rep;
}

FsgMorphism identity_morphism(const FiberedSemiGroup& f) {
  return {f, f, FinMap::identity(f.total()), FinMap::identity(f.base())};
}

FsgMorphism compose(const FsgMorphism& g, const FsgMorphism& f) {
  if (!(f.to == g.from)) throw InputError("compose: morphisms are not composable");
  return {f.from, g.to, compose(g.total_map, f.total_map), compose(g.base_map, f.base_map)};
}

FsgMorphism swap_morphism(const FiberedSemiGroup& f, const FiberedSemiGroup& g) {
  FiberedSemiGroup fg = product_fsgrp(f, g);
  FiberedSemiGroup gf = product_fsgrp(g, f);
  PairSet e1 = product(f.total(), g.total());
  PairSet e2 = product(g.total(), f.total());
  PairSet x1 = product(f.base(), g.base());
  PairSet x2 = product(g.base(), f.base());
  FinMap total = FinMap::tabulate(e1.carrier(), e2.carrier(), [&](std::size_t k) {
    return e2.at(e1.right()(k), e1.left()(k));
  });
  FinMap base = FinMap::tabulate(x1.carrier(), x2.carrier(), [&](std::size_t k) {
    return x2.at(x1.right()(k), x1.left()(k));
  });
  return {fg, gf, total, base};
}

std::string fingerprint(const FiberedSemiGroup& f) {
  std::string out;
  for (const auto& e : f.total()) out += e + ' ';
  out += '/';
  for (const auto& x : f.base()) out += x + ' ';
  out += '/';
  for (std::size_t t : f.proj().table()) out += std::to_string(t) + ' ';
  out += '/';
  for (std::size_t t : f.mul().table()) out += std::to_string(t) + ' ';
  return out;
}

}  // namespace cyltqft
