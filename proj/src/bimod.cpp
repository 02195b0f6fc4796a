#include "cyltqft/bimod.hpp"

#include <map>
#include <utility>

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

namespace cyltqft {

namespace {

std::vector<std::vector<std::size_t>> fibers(const FinMap& f) {
  std::vector<std::vector<std::size_t>> out(f.cod().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) out[f(i)].push_back(i);
  return out;
}

std::string tup(std::initializer_list<std::string> parts) {
  std::vector<std::string> v(parts);
  return token::tuple(v);
}

struct Composite {
  FiberedBimodule bimodule;
  PairSet pairs;  // t_A x s_B with chain tokens
};

Composite hcompose_impl(const FiberedBimodule& a, const FiberedBimodule& b) {
  if (!(a.right() == b.left())) {
    throw InputError("hcompose: middle fibered semi-groups differ");
  }
  if (!a.valid() || !b.valid()) throw InputError("hcompose: input bimodule fails validation");
  PairSet p = fiber_product(a.tgt(), b.src(), PairStyle::kChain);
  FinMap src = compose(a.src(), p.left());
  FinMap tgt = compose(b.tgt(), p.right());
  FiberedBimodule c = FiberedBimodule::tabulate(
      a.left(), b.right(), std::move(src), std::move(tgt),
      [&](std::size_t e, std::size_t k) {
        return p.at(a.act_left(e, p.left()(k)), p.right()(k));
      },
      [&](std::size_t k, std::size_t e) {
        return p.at(p.left()(k), b.act_right(p.right()(k), e));
      });
  return {std::move(c), std::move(p)};
}

// Empty when equal; otherwise a witness for the first difference.
std::string difference(const EquivariantMorphism& x, const EquivariantMorphism& y) {
  if (!(x.from == y.from)) return "source bimodules differ";
  if (!(x.to == y.to)) return "target bimodules differ";
  if (!(x.left == y.left)) return "left morphisms differ";
  if (!(x.right == y.right)) return "right morphisms differ";
  auto c = commutes(x.mid, y.mid);
  if (!c.pass) return c.witness + " |-> " + c.lhs + " vs " + c.rhs;
  return {};
}

std::string difference(const FiberedBimodule& x, const FiberedBimodule& y) {
  if (x == y) return {};
  if (!(x.carrier() == y.carrier())) return "carriers differ";
  if (!(x.left() == y.left()) || !(x.right() == y.right())) return "semi-groups differ";
  if (!(x.src() == y.src()) || !(x.tgt() == y.tgt())) return "source or target maps differ";
  return "actions differ";
}

}  // namespace

FiberedBimodule::FiberedBimodule(FiberedSemiGroup left, FiberedSemiGroup right,
                                 FinMap src, FinMap tgt, FinMap lact, FinMap ract) {
  if (!(src.dom() == tgt.dom())) throw InputError("s and t must share the carrier");
  if (!(src.cod() == left.base())) throw InputError("s must land in the left base");
  if (!(tgt.cod() == right.base())) throw InputError("t must land in the right base");
  PairSet lp = fiber_product(left.proj(), src);
  PairSet rp = fiber_product(tgt, right.proj());
  if (!(lact.dom() == lp.carrier()) || !(lact.cod() == src.dom())) {
    throw InputError("left action must be defined exactly on E x_{pi,s} Omega");
  }
  if (!(ract.dom() == rp.carrier()) || !(ract.cod() == src.dom())) {
    throw InputError("right action must be defined exactly on Omega x_{t,pi} E'");
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(left), std::move(right), std::move(src),
                                            std::move(tgt), std::move(lact), std::move(ract),
                                            std::move(lp), std::move(rp)});
}

bool FiberedBimodule::valid() const {
  if (impl_->valid < 0) {
    impl_->valid = (left().valid() && right().valid() && validate_bimodule(*this).ok()) ? 1 : 0;
  }
  return impl_->valid == 1;
}

bool operator==(const FiberedBimodule& a, const FiberedBimodule& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  return x.src == y.src && x.tgt == y.tgt && x.lact == y.lact && x.ract == y.ract &&
         x.left == y.left && x.right == y.right;
}

ValidationReport validate_bimodule(const FiberedBimodule& b, const std::string& instance) {
  ValidationReport rep("fibered bimodule");
  const char* names[] = {"left associativity", "right associativity", "left source",
                         "left target",        "right target",        "right source",
                         "actions commute"};
  for (const char* n : names) rep.declare(n);

  const FiberedSemiGroup& e = b.left();
  const FiberedSemiGroup& f = b.right();
  const FinSet& om = b.carrier();
  const FinSet& et = e.total();
  const FinSet& ft = f.total();
  const PairSet& lp = b.lpairs();
  const PairSet& rp = b.rpairs();
  auto by_src = fibers(b.src());
  auto e_fibers = fibers(e.proj());
  auto f_fibers = fibers(f.proj());

  auto report = [&](const char* name, bool ok, const std::string& witness,
                    const std::string& detail) {
    if (ok) rep.pass(name, instance);
    else rep.fail(name, instance, witness, detail);
  };

  {  // lambda(mu(e, e'), w) = lambda(e, lambda(e', w))
    bool ok = true;
    std::string wit, det;
    const PairSet& ep = e.pairs();
    for (std::size_t k = 0; k < ep.size() && ok; ++k) {
      std::size_t a = ep.left()(k), a2 = ep.right()(k);
      for (std::size_t w : by_src[e.proj()(a2)]) {
        auto l1 = lp.find(e.mul()(k), w);
        auto inner = lp.find(a2, w);
        std::optional<std::size_t> l2;
        if (inner) l2 = lp.find(a, b.lact()(*inner));
        if (!l1 || !l2) {
          ok = false;
          wit = tup({et[a], et[a2], om[w]});
          det = "an action leaves the fiber product";
          break;
        }
        if (b.lact()(*l1) != b.lact()(*l2)) {
          ok = false;
          wit = tup({et[a], et[a2], om[w]});
          det = "(ee')w = " + om[b.lact()(*l1)] + ", e(e'w) = " + om[b.lact()(*l2)];
          break;
        }
      }
    }
    report("left associativity", ok, wit, det);
  }
  {  // rho(w, mu(e, e')) = rho(rho(w, e), e')
    bool ok = true;
    std::string wit, det;
    for (std::size_t k = 0; k < rp.size() && ok; ++k) {
      std::size_t w = rp.left()(k), a = rp.right()(k);
      for (std::size_t a2 : f_fibers[f.proj()(a)]) {
        auto r1 = rp.find(w, f(a, a2));
        auto r2 = rp.find(b.ract()(k), a2);
        if (!r1 || !r2) {
          ok = false;
          wit = tup({om[w], ft[a], ft[a2]});
          det = "an action leaves the fiber product";
          break;
        }
        if (b.ract()(*r1) != b.ract()(*r2)) {
          ok = false;
          wit = tup({om[w], ft[a], ft[a2]});
          det = "w(ee') = " + om[b.ract()(*r1)] + ", (we)e' = " + om[b.ract()(*r2)];
          break;
        }
      }
    }
    report("right associativity", ok, wit, det);
  }
  {
    bool src_ok = true, tgt_ok = true;
    std::string sw, tw;
    for (std::size_t k = 0; k < lp.size(); ++k) {
      std::size_t a = lp.left()(k), w = lp.right()(k), r = b.lact()(k);
      if (src_ok && b.src()(r) != e.proj()(a)) {
        src_ok = false;
        sw = lp.carrier()[k];
      }
      if (tgt_ok && b.tgt()(r) != b.tgt()(w)) {
        tgt_ok = false;
        tw = lp.carrier()[k];
      }
    }
    report("left source", src_ok, sw, "s(ew) != pi(e)");
    report("left target", tgt_ok, tw, "t(ew) != t(w)");
  }
  {
    bool tgt_ok = true, src_ok = true;
    std::string sw, tw;
    for (std::size_t k = 0; k < rp.size(); ++k) {
      std::size_t w = rp.left()(k), a = rp.right()(k), r = b.ract()(k);
      if (tgt_ok && b.tgt()(r) != f.proj()(a)) {
        tgt_ok = false;
        tw = rp.carrier()[k];
      }
      if (src_ok && b.src()(r) != b.src()(w)) {
        src_ok = false;
        sw = rp.carrier()[k];
      }
    }
    report("right target", tgt_ok, tw, "t(we') != pi'(e')");
    report("right source", src_ok, sw, "s(we') != s(w)");
  }
  {  // rho(lambda(e, w), e') = lambda(e, rho(w, e'))
    bool ok = true;
    std::string wit, det;
    for (std::size_t k = 0; k < lp.size() && ok; ++k) {
      std::size_t a = lp.left()(k), w = lp.right()(k);
      for (std::size_t a2 : f_fibers[b.tgt()(w)]) {
        auto r1 = rp.find(b.lact()(k), a2);
        auto inner = rp.find(w, a2);
        std::optional<std::size_t> l2;
        if (inner) l2 = lp.find(a, b.ract()(*inner));
        if (!r1 || !l2) {
          ok = false;
          wit = tup({et[a], om[w], ft[a2]});
          det = "an action leaves the fiber product";
          break;
        }
        if (b.ract()(*r1) != b.lact()(*l2)) {
          ok = false;
          wit = tup({et[a], om[w], ft[a2]});
          det = "(ew)e' = " + om[b.ract()(*r1)] + ", e(we') = " + om[b.lact()(*l2)];
          break;
        }
      }
    }
    report("actions commute", ok, wit, det);
  }
  (void)e_fibers;
  return rep;
}

bool is_rigid(const FiberedBimodule& b) {
  return is_bijective(b.lact()) && is_bijective(b.ract());
}

ValidationReport validate_equivariant(const EquivariantMorphism& m, const std::string& instance) {
  const FsgMorphism& phi = m.left;
  const FsgMorphism& psi = m.right;
  if (!(phi.from == m.from.left()) || !(phi.to == m.to.left()) ||
      !(psi.from == m.from.right()) || !(psi.to == m.to.right()) ||
      !(m.mid.dom() == m.from.carrier()) || !(m.mid.cod() == m.to.carrier())) {
    throw InputError("equivariant morphism maps do not match the bimodules");
  }
  ValidationReport rep("equivariant morphism");
  rep.merge(validate_morphism(phi, instance + " left"));
  rep.merge(validate_morphism(psi, instance + " right"));
  for (const char* n : {"source", "target", "left action", "right action"}) rep.declare(n);

  auto square = [&](const char* name, const FinMap& lhs, const FinMap& rhs) {
    auto c = commutes(lhs, rhs);
    if (c.pass) rep.pass(name, instance);
    else rep.fail(name, instance, c.witness, c.lhs + " vs " + c.rhs);
  };
  square("source", compose(m.to.src(), m.mid), compose(phi.base_map, m.from.src()));
  square("target", compose(m.to.tgt(), m.mid), compose(psi.base_map, m.from.tgt()));

  const FinMap& mid = m.mid;
  {
    const PairSet& lp = m.from.lpairs();
    bool ok = true;
    for (std::size_t k = 0; k < lp.size() && ok; ++k) {
      std::size_t lhs = mid(m.from.lact()(k));
      auto img = m.to.lpairs().find(phi.total_map(lp.left()(k)), mid(lp.right()(k)));
      if (!img) {
        ok = false;
        rep.fail("left action", instance, lp.carrier()[k], "phi x Phi leaves the fiber product");
      } else if (m.to.lact()(*img) != lhs) {
        ok = false;
        rep.fail("left action", instance, lp.carrier()[k],
                 m.to.carrier()[lhs] + " vs " + m.to.carrier()[m.to.lact()(*img)]);
      }
    }
    if (ok) rep.pass("left action", instance);
  }
  {
    const PairSet& rp = m.from.rpairs();
    bool ok = true;
    for (std::size_t k = 0; k < rp.size() && ok; ++k) {
      std::size_t lhs = mid(m.from.ract()(k));
      auto img = m.to.rpairs().find(mid(rp.left()(k)), psi.total_map(rp.right()(k)));
      if (!img) {
        ok = false;
        rep.fail("right action", instance, rp.carrier()[k], "Phi x psi leaves the fiber product");
      } else if (m.to.ract()(*img) != lhs) {
        ok = false;
        rep.fail("right action", instance, rp.carrier()[k],
                 m.to.carrier()[lhs] + " vs " + m.to.carrier()[m.to.ract()(*img)]);
      }
    }
    if (ok) rep.pass("right action", instance);
  }
  return rep;
}

FiberedBimodule identity_bimodule(const FiberedSemiGroup& e) {
  require_valid(e, "identity_bimodule");
  return FiberedBimodule(e, e, e.proj(), e.proj(), e.mul(), e.mul());
}

FiberedBimodule hcompose(const FiberedBimodule& a, const FiberedBimodule& b) {
  return hcompose_impl(a, b).bimodule;
}

EquivariantMorphism hcompose_mor(const EquivariantMorphism& m1, const EquivariantMorphism& m2) {
  if (!(m1.right == m2.left)) {
    throw InputError("hcompose_mor: boundary morphisms differ");
  }
  Composite from = hcompose_impl(m1.from, m2.from);
  Composite to = hcompose_impl(m1.to, m2.to);
  FinMap mid = FinMap::tabulate(from.pairs.carrier(), to.pairs.carrier(), [&](std::size_t k) {
    auto img = to.pairs.find(m1.mid(from.pairs.left()(k)), m2.mid(from.pairs.right()(k)));
    if (!img) throw InputError("hcompose_mor: mid maps do not respect the middle base");
    return *img;
  });
  return {from.bimodule, to.bimodule, m1.left, m2.right, std::move(mid)};
}

EquivariantMorphism identity_equivariant(const FiberedBimodule& b) {
  return {b, b, identity_morphism(b.left()), identity_morphism(b.right()),
          FinMap::identity(b.carrier())};
}

EquivariantMorphism identity_bimodule_mor(const FsgMorphism& phi) {
  return {identity_bimodule(phi.from), identity_bimodule(phi.to), phi, phi, phi.total_map};
}

EquivariantMorphism vcompose(const EquivariantMorphism& n, const EquivariantMorphism& m) {
  if (!(m.to == n.from)) throw InputError("vcompose: morphisms are not composable");
  return {m.from, n.to, compose(n.left, m.left), compose(n.right, m.right),
          compose(n.mid, m.mid)};
}

EquivariantMorphism left_unitor(const FiberedBimodule& a) {
  Composite c = hcompose_impl(identity_bimodule(a.left()), a);
  FinMap mid = FinMap::tabulate(c.pairs.carrier(), a.carrier(), [&](std::size_t k) {
    return a.act_left(c.pairs.left()(k), c.pairs.right()(k));
  });
  return {c.bimodule, a, identity_morphism(a.left()), identity_morphism(a.right()),
          std::move(mid)};
}

EquivariantMorphism right_unitor(const FiberedBimodule& a) {
  Composite c = hcompose_impl(a, identity_bimodule(a.right()));
  FinMap mid = FinMap::tabulate(c.pairs.carrier(), a.carrier(), [&](std::size_t k) {
    return a.act_right(c.pairs.left()(k), c.pairs.right()(k));
  });
  return {c.bimodule, a, identity_morphism(a.left()), identity_morphism(a.right()),
          std::move(mid)};
}

FiberedBimodule product_bimodule(const FiberedBimodule& a, const FiberedBimodule& b) {
  FiberedSemiGroup l = product_fsgrp(a.left(), b.left());
  FiberedSemiGroup r = product_fsgrp(a.right(), b.right());
  PairSet om = product(a.carrier(), b.carrier());
  PairSet el = product(a.left().total(), b.left().total());
  PairSet er = product(a.right().total(), b.right().total());
  FinMap src = product_map(om, product(a.left().base(), b.left().base()), a.src(), b.src());
  FinMap tgt = product_map(om, product(a.right().base(), b.right().base()), a.tgt(), b.tgt());
  return FiberedBimodule::tabulate(
      l, r, src, tgt,
      [&](std::size_t x, std::size_t y) {
        return om.at(a.act_left(el.left()(x), om.left()(y)),
                     b.act_left(el.right()(x), om.right()(y)));
      },
      [&](std::size_t y, std::size_t x) {
        return om.at(a.act_right(om.left()(y), er.left()(x)),
                     b.act_right(om.right()(y), er.right()(x)));
      });
}

EquivariantMorphism interchange(const FiberedBimodule& a, const FiberedBimodule& b,
                                const FiberedBimodule& c, const FiberedBimodule& d) {
  Composite ab = hcompose_impl(a, b);
  Composite cd = hcompose_impl(c, d);
  FiberedBimodule from = product_bimodule(ab.bimodule, cd.bimodule);
  PairSet from_pairs = product(ab.bimodule.carrier(), cd.bimodule.carrier());
  FiberedBimodule ac = product_bimodule(a, c);
  FiberedBimodule bd = product_bimodule(b, d);
  PairSet ac_pairs = product(a.carrier(), c.carrier());
  PairSet bd_pairs = product(b.carrier(), d.carrier());
  Composite to = hcompose_impl(ac, bd);
  FinMap mid = FinMap::tabulate(from.carrier(), to.bimodule.carrier(), [&](std::size_t k) {
    std::size_t i = from_pairs.left()(k), j = from_pairs.right()(k);
    std::size_t x = ac_pairs.at(ab.pairs.left()(i), cd.pairs.left()(j));
    std::size_t y = bd_pairs.at(ab.pairs.right()(i), cd.pairs.right()(j));
    return to.pairs.at(x, y);
  });
  return {from, to.bimodule, identity_morphism(from.left()), identity_morphism(from.right()),
          std::move(mid)};
}

std::string describe(const FiberedBimodule& b) {
  return "|Omega|=" + std::to_string(b.carrier().size()) +
         " |E|=" + std::to_string(b.left().total().size()) +
         " |E'|=" + std::to_string(b.right().total().size());
}

// ---------------------------------------------------------------------------

LawReport check_double_category_laws(const LawUniverse& u) {
  LawReport rep("double category laws");
  rep.add_note("unitors are directed composite -> module and may be non-invertible (lax)");
  for (const char* n : {"bimodule axioms", "strict associativity", "unitor naturality",
                        "triangle", "middle triangle (rigid)", "monoidality", "rigid closure"}) {
    rep.declare(n);
  }
  rep.declare("middle triangle (lax)", true);
  rep.declare("unitor iso", true);

  std::vector<FiberedBimodule> all;
  std::vector<std::string> names;
  std::vector<std::size_t> identity_of(u.sgrps.size(), SIZE_MAX);
  for (std::size_t i = 0; i < u.sgrps.size(); ++i) {
    const std::string name = "E" + std::to_string(i);
    ValidationReport v = validate_fsgrp(u.sgrps[i], name);
    if (!v.ok()) {
      const Record* r = v.first_failure("compatibility");
      if (!r) r = v.first_failure("associativity");
      rep.fail("bimodule axioms", name, r->witness, r->check + ": " + r->detail);
      continue;
    }
    identity_of[i] = all.size();
    all.push_back(identity_bimodule(u.sgrps[i]));
    names.push_back("i(" + name + ")");
  }
  for (std::size_t i = 0; i < u.bimodules.size(); ++i) {
    all.push_back(u.bimodules[i]);
    names.push_back("B" + std::to_string(i));
  }

  auto check_bimodule = [&](const FiberedBimodule& b, const std::string& name) {
    ValidationReport v = validate_bimodule(b, name);
    if (!b.left().valid() || !b.right().valid()) {
      rep.fail("bimodule axioms", name, "", "a boundary semi-group fails validation");
      return false;
    }
    if (v.ok()) {
      rep.pass("bimodule axioms", name, describe(b));
      return true;
    }
    for (const auto& r : v.records()) {
      if (!r.pass) {
        rep.fail("bimodule axioms", name, r.witness, r.check + ": " + r.detail);
        break;
      }
    }
    return false;
  };

  std::vector<char> good(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) good[i] = check_bimodule(all[i], names[i]);

  // Composable pairs, bucketed by the shared semi-group.
  std::map<std::string, std::vector<std::size_t>> by_left;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (good[i]) by_left[fingerprint(all[i].left())].push_back(i);
  }
  auto next = [&](std::size_t i) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> kNone;
    auto it = by_left.find(fingerprint(all[i].right()));
    return it == by_left.end() ? kNone : it->second;
  };

  std::vector<EquivariantMorphism> lu(all.size()), ru(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!good[i]) continue;
    lu[i] = left_unitor(all[i]);
    ru[i] = right_unitor(all[i]);
    bool iso = is_bijective(lu[i].mid) && is_bijective(ru[i].mid);
    if (iso) rep.pass("unitor iso", names[i], "iso");
    else rep.fail("unitor iso", names[i], "lax only", "unitor mid map is not bijective");
    bool rigid_in = is_rigid(all[i]) && is_rigid(all[i].left()) && is_rigid(all[i].right());
    if (rigid_in) {
      if (iso) rep.pass("rigid closure", names[i] + " unitors");
      else rep.fail("rigid closure", names[i] + " unitors", "lax only",
                    "unitor of rigid input is not invertible");
    }
  }

  for (std::size_t i = 0; i < u.sgrps.size(); ++i) {
    std::size_t k = identity_of[i];
    if (k == SIZE_MAX) continue;
    if (is_rigid(u.sgrps[i])) {
      if (is_rigid(all[k])) rep.pass("rigid closure", names[k]);
      else rep.fail("rigid closure", names[k], "identity bimodule", "i_E of rigid E is not rigid");
    }
    std::string d = difference(lu[k], ru[k]);
    if (d.empty()) rep.pass("triangle", names[k] + " L=R");
    else rep.fail("triangle", names[k] + " L=R", d);
  }

  // Composable pairs and triples, capped per starting bimodule.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!good[i]) continue;
    std::size_t count = 0;
    for (std::size_t j : next(i)) {
      if (count++ >= u.max_triples_per_bimodule) break;
      if (all[i].right() == all[j].left()) pairs.emplace_back(i, j);
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, FiberedBimodule> composite;
  for (auto [i, j] : pairs) {
    const std::string name = names[i] + "(*)" + names[j];
    FiberedBimodule ab = hcompose(all[i], all[j]);
    if (!check_bimodule(ab, name)) continue;
    composite.emplace(std::make_pair(i, j), ab);

    bool rigid_in = is_rigid(all[i]) && is_rigid(all[j]) && is_rigid(all[i].left()) &&
                    is_rigid(all[i].right()) && is_rigid(all[j].right());
    if (rigid_in) {
      if (is_rigid(ab)) rep.pass("rigid closure", name);
      else rep.fail("rigid closure", name, "composite", "composite of rigid inputs is not rigid");
    }

    std::string d = difference(left_unitor(ab), hcompose_mor(lu[i], identity_equivariant(all[j])));
    if (d.empty()) rep.pass("triangle", name + " L_AB=L_A(*)id");
    else rep.fail("triangle", name + " L_AB=L_A(*)id", d);
    d = difference(right_unitor(ab), hcompose_mor(identity_equivariant(all[i]), ru[j]));
    if (d.empty()) rep.pass("triangle", name + " R_AB=id(*)R_B");
    else rep.fail("triangle", name + " R_AB=id(*)R_B", d);

    d = difference(hcompose_mor(ru[i], identity_equivariant(all[j])),
                   hcompose_mor(identity_equivariant(all[i]), lu[j]));
    bool rigid_mid = is_rigid(all[i]) && is_rigid(all[j]) && is_rigid(all[i].right());
    const char* law = rigid_mid ? "middle triangle (rigid)" : "middle triangle (lax)";
    if (d.empty()) rep.pass(law, name);
    else rep.fail(law, name, d, "R (*) id != id (*) L");
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!good[i]) continue;
    const FiberedBimodule& a = all[i];
    // L o (id (*) R) = R o (L (*) id) on i_E (*) A (*) i_E'.
    EquivariantMorphism lhs =
        vcompose(lu[i], hcompose_mor(identity_equivariant(identity_bimodule(a.left())), ru[i]));
    EquivariantMorphism rhs =
        vcompose(ru[i], hcompose_mor(lu[i], identity_equivariant(identity_bimodule(a.right()))));
    std::string d = difference(lhs, rhs);
    if (d.empty()) rep.pass("triangle", names[i] + " L(id*R)=R(L*id)");
    else rep.fail("triangle", names[i] + " L(id*R)=R(L*id)", d);
  }

  for (auto [i, j] : pairs) {
    auto ij = composite.find({i, j});
    if (ij == composite.end()) continue;
    std::size_t count = 0;
    for (std::size_t k : next(j)) {
      if (count++ >= u.max_triples_per_bimodule) break;
      if (!(all[j].right() == all[k].left())) continue;
      const std::string name = names[i] + "(*)" + names[j] + "(*)" + names[k];
      auto jk = composite.find({j, k});
      if (jk == composite.end()) continue;
      std::string d = difference(hcompose(ij->second, all[k]), hcompose(all[i], jk->second));
      if (d.empty()) rep.pass("strict associativity", name);
      else rep.fail("strict associativity", name, d);
    }
  }

  // Unitor naturality over identities and the supplied morphisms.
  std::vector<EquivariantMorphism> mors;
  std::vector<std::string> mor_names;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!good[i]) continue;
    mors.push_back(identity_equivariant(all[i]));
    mor_names.push_back("id(" + names[i] + ")");
  }
  for (std::size_t i = 0; i < u.morphisms.size(); ++i) {
    mors.push_back(u.morphisms[i]);
    mor_names.push_back("M" + std::to_string(i));
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const EquivariantMorphism& m = mors[i];
    ValidationReport v = validate_equivariant(m, mor_names[i]);
    if (!v.ok()) {
      rep.fail("unitor naturality", mor_names[i], "", "morphism is not equivariant");
      continue;
    }
    std::string d = difference(vcompose(left_unitor(m.to), hcompose_mor(identity_bimodule_mor(m.left), m)),
                               vcompose(m, left_unitor(m.from)));
    if (d.empty()) rep.pass("unitor naturality", mor_names[i] + " left");
    else rep.fail("unitor naturality", mor_names[i] + " left", d);
    d = difference(vcompose(right_unitor(m.to), hcompose_mor(m, identity_bimodule_mor(m.right))),
                   vcompose(m, right_unitor(m.from)));
    if (d.empty()) rep.pass("unitor naturality", mor_names[i] + " right");
    else rep.fail("unitor naturality", mor_names[i] + " right", d);
  }

  // Monoidality on small semi-groups.
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < u.sgrps.size(); ++i) {
    if (identity_of[i] != SIZE_MAX && u.sgrps[i].total().size() <= u.monoidal_max_total) {
      small.push_back(i);
    }
  }
  for (std::size_t x : small) {
    for (std::size_t y : small) {
      const FiberedSemiGroup& e = u.sgrps[x];
      const FiberedSemiGroup& f = u.sgrps[y];
      const std::string name = "E" + std::to_string(x) + "xE" + std::to_string(y);
      FiberedSemiGroup ef = product_fsgrp(e, f);
      if (!ef.valid()) {
        rep.fail("monoidality", name, "product", "product semi-group fails validation");
        continue;
      }
      // An empty factor makes the product empty, hence vacuously rigid.
      bool empty = e.total().empty() || f.total().empty();
      if (is_rigid(ef) != (empty || (is_rigid(e) && is_rigid(f)))) {
        rep.fail("monoidality", name, "rigidity", "product rigidity differs from factors");
        continue;
      }
      const FiberedBimodule& ie = all[identity_of[x]];
      const FiberedBimodule& iff = all[identity_of[y]];
      std::string d = difference(identity_bimodule(ef), product_bimodule(ie, iff));
      if (!d.empty()) {
        rep.fail("monoidality", name, d, "i_{ExF} != i_E x i_F");
        continue;
      }
      if (!validate_morphism(swap_morphism(e, f), name).ok()) {
        rep.fail("monoidality", name, "swap", "symmetry is not a morphism");
        continue;
      }
      EquivariantMorphism ic = interchange(ie, ie, iff, iff);
      ValidationReport v = validate_equivariant(ic, name);
      if (!v.ok() || !is_bijective(ic.mid)) {
        rep.fail("monoidality", name, "interchange", "(*) does not commute with x");
        continue;
      }
      rep.pass("monoidality", name);
    }
  }
  return rep;
}

}  // namespace cyltqft
