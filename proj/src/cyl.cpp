#include "cyltqft/cyl.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

namespace cyltqft {

namespace {

// (a, b) in L_X x L_Y |-> L_collapse(glue^{-1}(a + b)) for a triple on the
// union X + Y. The inverse of the gluing map is only taken after checking
// the map is injective; a pair outside its image is a theory violation.
class GlueAction {
 public:
  GlueAction(const LocalTheory& t, const Body& x, const Body& y, const GluingTriple& tr,
             const BodyDiffeo& collapse, std::string where)
      : where_(std::move(where)) {
    FinMap sp = split_solution(t, x, y);
    if (!is_bijective(sp)) {
      throw TheoryViolation("region decomposition guard: solutions on " + where_ +
                            " do not split as a product");
    }
    left_size_ = t.solution_space(x).size();
    right_size_ = t.solution_space(y).size();
    PairSet prod = product(t.solution_space(x), t.solution_space(y));
    unsplit_.assign(prod.size(), 0);
    for (std::size_t i = 0; i < sp.dom().size(); ++i) unsplit_[sp(i)] = i;
    slot_.assign(left_size_ * right_size_, 0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      slot_[prod.left()(k) * right_size_ + prod.right()(k)] = k;
    }
    FinMap g = t.gluing(tr);
    if (!is_injective(g)) {
      throw TheoryViolation("gluing guard: the gluing map on " + where_ + " is not injective");
    }
    pre_.assign(g.cod().size(), SIZE_MAX);
    for (std::size_t k = 0; k < g.dom().size(); ++k) pre_[g(k)] = k;
    collapse_ = t.on_body_diffeo(collapse);
    union_ = g.cod();
  }

  std::size_t operator()(std::size_t a, std::size_t b) const {
    std::size_t i = unsplit_[slot_[a * right_size_ + b]];
    std::size_t k = pre_[i];
    if (k == SIZE_MAX) {
      throw TheoryViolation("gluing guard: the solution " + union_[i] + " on " + where_ +
                            " is not in the image of the gluing map");
    }
    return collapse_(k);
  }

 private:
  std::string where_;
  std::size_t left_size_ = 0;
  std::size_t right_size_ = 0;
  std::vector<std::size_t> unsplit_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> pre_;
  FinMap collapse_;
  FinSet union_;
};

FiberedSemiGroup semigroup_from(const LocalTheory& t, const CobObject& s, bool left) {
  Cobordism c = cylinder(s);
  Body b = c.body();
  GlueAction op(t, b, b, left ? left_collar_triple(c) : right_collar_triple(c),
                left ? left_collapse(c) : right_collapse(c), "two cylinders over " + print(s));
  return FiberedSemiGroup::tabulate(source_germ(t, c), op);
}

FiberedBimodule bimodule_from(const LocalTheory& t, const Cobordism& m, const FiberedSemiGroup& es,
                              const FiberedSemiGroup& et) {
  Body body = m.body();
  GlueAction l(t, cylinder(m.source).body(), body, left_collar_triple(m), left_collapse(m),
               "the left collar of " + print(m));
  GlueAction r(t, body, cylinder(m.target).body(), right_collar_triple(m), right_collapse(m),
               "the right collar of " + print(m));
  return FiberedBimodule::tabulate(es, et, source_germ(t, m), target_germ(t, m), l, r);
}

using IndexPair = std::pair<std::size_t, std::size_t>;

// For each solution w on glue(M, N), the indices in L_M x L_N of its
// restrictions to M and N, read through the gluing map.
std::vector<IndexPair> glued_parts(const LocalTheory& t, const Cobordism& m, const Cobordism& n,
                                   const Cobordism& composite) {
  GluingTriple tr = composable_triple(m, n);
  FinMap back = t.on_body_diffeo(inverse(glued_to_composite(tr, composite)));
  FinMap g = t.gluing(tr);
  auto [fm, fn] = solution_summands(t, m.body(), n.body());
  std::vector<IndexPair> out;
  out.reserve(back.dom().size());
  for (std::size_t w = 0; w < back.dom().size(); ++w) {
    std::size_t k = g(back(w));
    out.emplace_back(fm(k), fn(k));
  }
  return out;
}

EquivariantMorphism associator_from(const LocalTheory& t, const Cobordism& m, const Cobordism& n,
                                    const FiberedBimodule& om, const FiberedBimodule& on,
                                    const FiberedBimodule& og) {
  FiberedBimodule h = hcompose(om, on);
  std::vector<IndexPair> parts = glued_parts(t, m, n, glue(m, n).composite);
  FinMap mid = FinMap::tabulate(og.carrier(), h.carrier(), [&](std::size_t w) {
    std::string tok = token::chain(om.carrier()[parts[w].first], on.carrier()[parts[w].second]);
    auto j = h.carrier().find(tok);
    if (!j) {
      throw TheoryViolation("gluing guard: " + tok + " glued along " + print(m.target) +
                            " does not match boundary germs");
    }
    return *j;
  });
  return {og, h, identity_morphism(og.left()), identity_morphism(og.right()), std::move(mid)};
}

}  // namespace

FiberedSemiGroup cylinder_semigroup(const LocalTheory& t, const CobObject& s) {
  return semigroup_from(t, s, true);
}

FiberedSemiGroup cylinder_semigroup_right(const LocalTheory& t, const CobObject& s) {
  return semigroup_from(t, s, false);
}

namespace {

FsgMorphism fsg_morphism_from(const LocalTheory& t, const ObjectDiffeo& phi,
                              const FiberedSemiGroup& from, const FiberedSemiGroup& to) {
  FinMap total = t.on_body_diffeo(cylinder_diffeo(phi).body());
  return {from, to, std::move(total), t.on_object_diffeo(phi)};
}

}  // namespace

FsgMorphism cylinder_fsg_morphism(const LocalTheory& t, const ObjectDiffeo& phi) {
  return fsg_morphism_from(t, phi, cylinder_semigroup(t, phi.from), cylinder_semigroup(t, phi.to));
}

FiberedBimodule cylinder_bimodule(const LocalTheory& t, const Cobordism& m) {
  return bimodule_from(t, m, cylinder_semigroup(t, m.source), cylinder_semigroup(t, m.target));
}

EquivariantMorphism cylinder_bimodule_morphism(const LocalTheory& t, const CobDiffeo& d) {
  return {cylinder_bimodule(t, d.from), cylinder_bimodule(t, d.to),
          cylinder_fsg_morphism(t, d.source()), cylinder_fsg_morphism(t, d.target()),
          t.on_body_diffeo(d.body())};
}

EquivariantMorphism associator(const LocalTheory& t, const Cobordism& m, const Cobordism& n) {
  return associator_from(t, m, n, cylinder_bimodule(t, m), cylinder_bimodule(t, n),
                         cylinder_bimodule(t, glue(m, n).composite));
}

const FiberedSemiGroup& CylinderFunctor::semigroup(const CobObject& s) {
  std::string key = print(s);
  auto it = sgrps_.find(key);
  if (it == sgrps_.end()) it = sgrps_.emplace(key, cylinder_semigroup(*theory_, s)).first;
  return it->second;
}

const FiberedBimodule& CylinderFunctor::bimodule(const Cobordism& m) {
  std::string key = print(m);
  auto it = bimods_.find(key);
  if (it == bimods_.end()) {
    FiberedBimodule b = bimodule_from(*theory_, m, semigroup(m.source), semigroup(m.target));
    it = bimods_.emplace(key, std::move(b)).first;
  }
  return it->second;
}

FsgMorphism CylinderFunctor::semigroup_morphism(const ObjectDiffeo& phi) {
  return fsg_morphism_from(*theory_, phi, semigroup(phi.from), semigroup(phi.to));
}

EquivariantMorphism CylinderFunctor::bimodule_morphism(const CobDiffeo& d) {
  return {bimodule(d.from), bimodule(d.to), semigroup_morphism(d.source()),
          semigroup_morphism(d.target()), theory_->on_body_diffeo(d.body())};
}

const EquivariantMorphism& CylinderFunctor::associator(const Cobordism& m, const Cobordism& n) {
  std::string key = print(m) + " ; " + print(n);
  auto it = assocs_.find(key);
  if (it == assocs_.end()) {
    const FiberedBimodule& om = bimodule(m);
    const FiberedBimodule& on = bimodule(n);
    const FiberedBimodule& og = bimodule(glue(m, n).composite);
    it = assocs_.emplace(key, associator_from(*theory_, m, n, om, on, og)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

const char* const kChecks[] = {"source/target", "identity",   "identity morphisms",
                               "functoriality", "associator", "associator naturality",
                               "hexagon",       "monoidality", "involution",
                               "rigidity",      "well-definedness"};

// cylinder(A + B) -> cylinder(A) + cylinder(B) on bodies: boundary "s:k:c"
// (side s of summand k) goes to "k:s:c".
BodyDiffeo unmix(const CobObject& a, const CobObject& b) {
  Body from = cylinder(disjoint_union(a, b).object).body();
  Body to = disjoint_union(cylinder(a).body(), cylinder(b).body()).body;
  FinMap regs = FinMap::tabulate(from.regions, to.regions, [&](std::size_t i) {
    return to.regions.index_of(from.regions[i]);
  });
  const FinSet& fb = from.boundary.components;
  FinMap bdry = FinMap::tabulate(fb, to.boundary.components, [&](std::size_t i) {
    auto [side, rest] = token::split_tag(fb[i]);
    auto [summand, c] = token::split_tag(rest);
    return to.boundary.components.index_of(token::tagged(summand, token::tagged(side, c)));
  });
  return {from, to, std::move(regs), std::move(bdry)};
}

class Verifier {
 public:
  Verifier(CylinderFunctor& f, const FunctorUniverse& u)
      : f_(f), t_(f.theory()), u_(u), rep_("double functor laws") {
    for (const char* c : kChecks) rep_.declare(c);
    rep_.add_note("theory: " + t_.name());
  }

  FunctorLawReport run() {
    for (const auto& s : u_.objects) objects(s);
    for (const auto& a : u_.objects) {
      for (const auto& b : u_.objects) monoidality(a, b);
    }
    for (const auto& phi : u_.object_diffeos) object_diffeo(phi);
    for (const auto& m : u_.cobordisms) cobordism(m);
    for (const auto& d : u_.diffeos) diffeo(d);
    composable();
    return std::move(rep_);
  }

 private:
  void guarded(const char* check, const std::string& inst, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      rep_.fail(check, inst, "refused", e.what());
    }
  }

  void expect(const char* check, const std::string& inst, bool ok, const std::string& detail) {
    if (ok) rep_.pass(check, inst);
    else rep_.fail(check, inst, inst, detail);
  }

  void objects(const CobObject& s) {
    std::string inst = print(s);
    guarded("rigidity", inst, [&] {
      const FiberedSemiGroup& e = f_.semigroup(s);
      ValidationReport v = validate_fsgrp(e, inst);
      expect("rigidity", inst, v.ok() && is_rigid(e), "E_S is not a valid rigid semi-group");
    });
    guarded("well-definedness", inst, [&] {
      expect("well-definedness", inst, cylinder_semigroup_right(t_, s) == f_.semigroup(s),
             "left and right collars give different products");
    });
    guarded("involution", inst, [&] {
      expect("involution", inst, f_.semigroup(reverse(s)) == opposite(f_.semigroup(s)),
             "E_{-S} differs from the opposite of E_S");
    });
    guarded("identity", inst, [&] {
      expect("identity", inst, f_.bimodule(cylinder(s)) == identity_bimodule(f_.semigroup(s)),
             "Omega of the cylinder differs from the identity bimodule");
    });
  }

  void monoidality(const CobObject& a, const CobObject& b) {
    std::string inst = print(a) + " + " + print(b);
    guarded("monoidality", inst, [&] {
      const FiberedSemiGroup& eu = f_.semigroup(disjoint_union(a, b).object);
      FiberedSemiGroup p = product_fsgrp(f_.semigroup(a), f_.semigroup(b));
      FinMap total = compose(split_solution(t_, cylinder(a).body(), cylinder(b).body()),
                             t_.on_body_diffeo(unmix(a, b)))
                         .with_cod(p.total());
      FinMap base = split_germ(t_, a, b).with_cod(p.base());
      FsgMorphism m{eu, p, total, base};
      expect("monoidality", inst,
             is_bijective(total) && is_bijective(base) && validate_morphism(m, inst).ok(),
             "E_{A+B} is not carried onto E_A x E_B by the splitting");
    });
  }

  void object_diffeo(const ObjectDiffeo& phi) {
    std::string inst = print(phi.from) + " => " + print(phi.to);
    guarded("functoriality", inst, [&] {
      FsgMorphism m = f_.semigroup_morphism(phi);
      expect("functoriality", inst,
             validate_morphism(m, inst).ok() && is_bijective(m.total_map) &&
                 is_bijective(m.base_map),
             "E_phi is not an isomorphism");
      for (const auto& psi : u_.object_diffeos) {
        if (!(psi.from == phi.to)) continue;
        expect("functoriality", inst,
               f_.semigroup_morphism(compose(psi, phi)) ==
                   compose(f_.semigroup_morphism(psi), m),
               "E_{psi phi} differs from E_psi E_phi");
      }
    });
    guarded("identity morphisms", inst, [&] {
      expect("identity morphisms", inst,
             f_.bimodule_morphism(cylinder_diffeo(phi)) ==
                 identity_bimodule_mor(f_.semigroup_morphism(phi)),
             "Omega of phi x [0,1] differs from i_{E_phi}");
    });
  }

  void cobordism(const Cobordism& m) {
    std::string inst = print(m);
    guarded("rigidity", inst, [&] {
      const FiberedBimodule& b = f_.bimodule(m);
      expect("rigidity", inst, validate_bimodule(b, inst).ok() && is_rigid(b),
             "Omega_M is not a valid rigid bimodule");
    });
    guarded("source/target", inst, [&] {
      const FiberedBimodule& b = f_.bimodule(m);
      expect("source/target", inst,
             b.left() == f_.semigroup(m.source) && b.right() == f_.semigroup(m.target),
             "Omega_M is not over E_source and E_target");
    });
  }

  void diffeo(const CobDiffeo& d) {
    std::string inst = print(d.from) + " => " + print(d.to);
    guarded("functoriality", inst, [&] {
      EquivariantMorphism m = f_.bimodule_morphism(d);
      expect("functoriality", inst, validate_equivariant(m, inst).ok() && is_bijective(m.mid),
             "Omega_Phi is not an equivariant isomorphism");
      for (const auto& e : u_.diffeos) {
        if (!(e.from == d.to)) continue;
        expect("functoriality", inst,
               f_.bimodule_morphism(compose(e, d)) == vcompose(f_.bimodule_morphism(e), m),
               "Omega_{Psi Phi} differs from Omega_Psi Omega_Phi");
      }
    });
    guarded("source/target", inst, [&] {
      EquivariantMorphism m = f_.bimodule_morphism(d);
      expect("source/target", inst,
             m.left == f_.semigroup_morphism(d.source()) &&
                 m.right == f_.semigroup_morphism(d.target()) && m.from == f_.bimodule(d.from),
             "Omega_Phi does not lie over E_phi and E_psi");
    });
  }

  void composable() {
    const std::vector<Cobordism>& cobs = u_.cobordisms;
    std::map<std::string, std::vector<std::size_t>> by_source;
    for (std::size_t i = 0; i < cobs.size(); ++i) by_source[print(cobs[i].source)].push_back(i);
    std::map<std::string, std::vector<const CobDiffeo*>> diffeos_of;
    for (const auto& d : u_.diffeos) diffeos_of[print(d.from)].push_back(&d);
    std::vector<std::string> names;
    for (const auto& m : cobs) names.push_back(print(m));
    auto next = [&](const Cobordism& m) -> const std::vector<std::size_t>* {
      auto it = by_source.find(print(m.target));
      return it == by_source.end() ? nullptr : &it->second;
    };

    for (std::size_t i = 0; i < cobs.size(); ++i) {
      const Cobordism& m = cobs[i];
      const std::vector<std::size_t>* ns = next(m);
      if (!ns) continue;
      right_.clear();
      std::size_t triples = 0;
      for (std::size_t j : *ns) {
        const Cobordism& n = cobs[j];
        std::string inst = names[i] + " ; " + names[j];
        guarded("associator", inst, [&] { associator(m, n, inst); });
        guarded("associator naturality", inst, [&] {
          auto dm = diffeos_of.find(names[i]), dn = diffeos_of.find(names[j]);
          if (dm == diffeos_of.end() || dn == diffeos_of.end()) return;
          for (const CobDiffeo* phi : dm->second) {
            for (const CobDiffeo* psi : dn->second) {
              if (!(phi->target() == psi->source())) continue;
              naturality(*phi, *psi, inst);
            }
          }
        });
        const std::vector<std::size_t>* ps = next(n);
        if (!ps) continue;
        for (std::size_t k : *ps) {
          if (u_.max_triples_per_cobordism && triples >= u_.max_triples_per_cobordism) break;
          ++triples;
          std::string tinst = inst + " ; " + names[k];
          guarded("hexagon", tinst, [&] { hexagon(i, j, k, tinst); });
        }
      }
    }
  }

  void associator(const Cobordism& m, const Cobordism& n, const std::string& inst) {
    const EquivariantMorphism& a = f_.associator(m, n);
    const FiberedBimodule& om = f_.bimodule(m);
    const FiberedBimodule& on = f_.bimodule(n);
    // Matching pairs over the middle germs, by a plain double loop.
    std::size_t count = 0;
    for (std::size_t w = 0; w < om.carrier().size(); ++w) {
      for (std::size_t v = 0; v < on.carrier().size(); ++v) count += om.tgt()(w) == on.src()(v);
    }
    bool ok = validate_equivariant(a, inst).ok() && is_bijective(a.mid) &&
              a.from.carrier().size() == count;
    expect("associator", inst, ok,
           "A_{M,N} is not an equivariant bijection onto " + std::to_string(count) + " pairs");
  }

  void naturality(const CobDiffeo& phi, const CobDiffeo& psi, const std::string& inst) {
    const EquivariantMorphism& a = f_.associator(phi.from, psi.from);
    const EquivariantMorphism& b = f_.associator(phi.to, psi.to);
    EquivariantMorphism glued = f_.bimodule_morphism(glue_diffeo(phi, psi));
    EquivariantMorphism lhs = vcompose(b, glued);
    EquivariantMorphism rhs =
        vcompose(hcompose_mor(f_.bimodule_morphism(phi), f_.bimodule_morphism(psi)), a);
    expect("associator naturality", inst, lhs == rhs,
           "A does not commute with Omega of a glued diffeomorphism");
  }

  // A gluing with its solutions split into pieces, see glued_parts.
  struct Glued {
    GlueResult g;
    std::string key;
    Body body;
    std::vector<IndexPair> parts;
  };

  Glued glued(const Cobordism& a, const Cobordism& b) {
    GlueResult g = glue(a, b);
    std::string key = print(g.composite);
    Body body = g.composite.body();
    std::vector<IndexPair> parts = glued_parts(t_, a, b, g.composite);
    return {std::move(g), std::move(key), std::move(body), std::move(parts)};
  }

  const Glued& pair(std::size_t i, std::size_t j) {
    std::size_t key = i * u_.cobordisms.size() + j;
    auto it = pairs_.find(key);
    if (it == pairs_.end()) {
      it = pairs_.emplace(key, glued(u_.cobordisms[i], u_.cobordisms[j])).first;
    }
    return it->second;
  }

  // Both composites Omega_L -> Omega_M (*) Omega_N (*) Omega_P for
  // L = (MN)P, evaluated pointwise as index triples. (A_{M,N} (*) id) A_{MN,P}
  // splits w into (x, c) and x into (a, b); the other side first moves w to
  // R = M(NP) by Omega of the associativity diffeomorphism, splits it into
  // (a, y) and y into (b, c).
  void hexagon(std::size_t i, std::size_t j, std::size_t k, const std::string& inst) {
    const Cobordism& m = u_.cobordisms[i];
    const Cobordism& p = u_.cobordisms[k];
    const Glued& mn = pair(i, j);
    const Glued& np = pair(j, k);
    std::string lkey = mn.key + " ; " + std::to_string(k);
    auto lt = left_.find(lkey);
    if (lt == left_.end()) lt = left_.emplace(lkey, glued(mn.g.composite, p)).first;
    auto rt = right_.find(np.key);
    if (rt == right_.end()) rt = right_.emplace(np.key, glued(m, np.g.composite)).first;
    const Glued& l = lt->second;
    const Glued& r = rt->second;
    // The associativity diffeomorphism fixes every boundary component.
    CobDiffeo assoc = associativity_diffeo(mn.g, l.g, np.g, r.g);
    FinMap d = t_.on_body_diffeo(BodyDiffeo{l.body, r.body, assoc.region_map,
                                            FinMap::identity(l.body.boundary.components)});
    if (d.dom().size() != l.parts.size() || d.cod().size() != r.parts.size()) {
      rep_.fail("hexagon", inst, inst, "Omega_L and Omega_R differ in size");
      return;
    }
    for (std::size_t w = 0; w < l.parts.size(); ++w) {
      auto [x, c1] = l.parts[w];
      auto [a1, b1] = mn.parts[x];
      auto [a2, y] = r.parts[d(w)];
      auto [b2, c2] = np.parts[y];
      if (a1 != a2 || b1 != b2 || c1 != c2) {
        rep_.fail("hexagon", inst, d.dom()[w], "the two associator composites differ");
        return;
      }
    }
    rep_.pass("hexagon", inst);
  }

  CylinderFunctor& f_;
  const LocalTheory& t_;
  const FunctorUniverse& u_;
  FunctorLawReport rep_;
  std::unordered_map<std::size_t, Glued> pairs_;
  std::unordered_map<std::string, Glued> left_;
  std::unordered_map<std::string, Glued> right_;
};

}  // namespace

FunctorLawReport verify_double_functor(CylinderFunctor& f, const FunctorUniverse& u) {
  return Verifier(f, u).run();
}

}  // namespace cyltqft
