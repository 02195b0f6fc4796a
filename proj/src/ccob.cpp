#include "cyltqft/ccob.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

namespace cyltqft {

namespace {

TaggedUnion as_tagged(const ObjectUnion& u) { return {u.object.components, u.inl, u.inr}; }

// Restriction of f to the elements of `part` (a subset of f.dom).
FinMap restrict(const FinMap& f, const FinSet& part) {
  return FinMap::tabulate(part, f.cod(), [&](std::size_t i) {
    return f(f.dom().index_of(part[i]));
  });
}

void require_subset(const FinSet& part, const FinSet& whole, const char* what) {
  for (const auto& x : part) {
    if (!whole.contains(x)) throw InputError(std::string(what) + ": '" + x + "' is not present");
  }
}

FinSet union_of(std::initializer_list<const FinSet*> parts) {
  std::vector<std::string> v;
  for (const FinSet* p : parts) v.insert(v.end(), p->begin(), p->end());
  return FinSet::from_tokens(std::move(v));
}

FinSet difference(const FinSet& a, const FinSet& b) {
  std::vector<std::string> v;
  for (const auto& x : a) {
    if (!b.contains(x)) v.push_back(x);
  }
  return FinSet::from_tokens(std::move(v));
}

FinSet image_set(const FinMap& f, const FinSet& part) {
  std::vector<std::string> v;
  for (const auto& x : part) v.push_back(f(x));
  return FinSet::from_tokens(std::move(v));
}

// "a:b:x" |-> "a:x".
std::string drop_inner_tag(const std::string& t) {
  auto [outer, rest] = token::split_tag(t);
  auto [inner, x] = token::split_tag(rest);
  (void)inner;
  return token::tagged(outer, x);
}

FinSet tagged_set(std::size_t outer, std::size_t inner, const FinSet& s) {
  std::vector<std::string> v;
  for (const auto& x : s) v.push_back(token::tagged(outer, token::tagged(inner, x)));
  return FinSet::from_tokens(std::move(v));
}

}  // namespace

const FinSet& signs() {
  static const FinSet kSigns{"+", "-"};
  return kSigns;
}

CobObject::CobObject() : orientation(FinSet(), signs(), {}) {}

CobObject::CobObject(FinSet comps, FinMap orient)
    : components(std::move(comps)), orientation(std::move(orient)) {
  if (!(orientation.dom() == components) || !(orientation.cod() == signs())) {
    throw InputError("orientation must assign + or - to every component");
  }
}

CobObject canonical_object(std::size_t plus, std::size_t minus) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < plus + minus; ++i) names.push_back("c" + std::to_string(i));
  FinSet comps = FinSet::from_tokens(names);
  return CobObject(comps, FinMap::tabulate(comps, signs(), [&](std::size_t i) {
                     return comps[i].size() > 1 && std::stoul(comps[i].substr(1)) < plus ? 0u : 1u;
                   }));
}

CobObject reverse(const CobObject& s) {
  return CobObject(s.components, FinMap::tabulate(s.components, signs(), [&](std::size_t i) {
                     return 1 - s.orientation(i);
                   }));
}

ObjectUnion disjoint_union(const CobObject& a, const CobObject& b) {
  TaggedUnion u = disjoint_union(a.components, b.components);
  FinMap orient = copair(u, a.orientation, b.orientation);
  return {CobObject(u.carrier, orient), u.inl, u.inr};
}

CobObject sub_object(const CobObject& s, const FinSet& part) {
  require_subset(part, s.components, "sub_object");
  return CobObject(part, restrict(s.orientation, part));
}

bool is_valid(const ObjectDiffeo& d) {
  if (!(d.map.dom() == d.from.components) || !(d.map.cod() == d.to.components)) return false;
  if (!is_bijective(d.map)) return false;
  for (std::size_t i = 0; i < d.from.size(); ++i) {
    if (d.from.orientation(i) != d.to.orientation(d.map(i))) return false;
  }
  return true;
}

ObjectDiffeo identity_diffeo(const CobObject& s) {
  return {s, s, FinMap::identity(s.components)};
}

ObjectDiffeo compose(const ObjectDiffeo& g, const ObjectDiffeo& f) {
  if (!(f.to == g.from)) throw InputError("compose: diffeomorphisms are not composable");
  return {f.from, g.to, compose(g.map, f.map)};
}

ObjectDiffeo inverse(const ObjectDiffeo& d) { return {d.to, d.from, inverse(d.map)}; }

ObjectDiffeo reverse(const ObjectDiffeo& d) { return {reverse(d.from), reverse(d.to), d.map}; }

ObjectDiffeo untag(const CobObject& tagged, std::size_t tag, const CobObject& to) {
  FinMap m = FinMap::tabulate(tagged.components, to.components, [&](std::size_t i) {
    auto [t, rest] = token::split_tag(tagged.components[i]);
    if (t != tag) throw InputError("untag: unexpected tag in '" + tagged.components[i] + "'");
    return to.components.index_of(rest);
  });
  return {tagged, to, std::move(m)};
}

// ---------------------------------------------------------------------------

Body::Body() : incidence(FinSet(), FinSet(), {}) {}

Body::Body(FinSet regs, CobObject bdry, FinMap inc)
    : regions(std::move(regs)), boundary(std::move(bdry)), incidence(std::move(inc)) {
  if (!(incidence.dom() == boundary.components) || !(incidence.cod() == regions)) {
    throw InputError("incidence must send every boundary component to a region");
  }
}

BodyUnion disjoint_union(const Body& a, const Body& b) {
  TaggedUnion r = disjoint_union(a.regions, b.regions);
  ObjectUnion c = disjoint_union(a.boundary, b.boundary);
  FinMap inc = copair(as_tagged(c), compose(r.inl, a.incidence), compose(r.inr, b.incidence));
  return {Body(r.carrier, c.object, inc), r.inl, r.inr};
}

Body sub_body(const Body& x, const FinSet& regions) {
  require_subset(regions, x.regions, "sub_body");
  std::vector<std::string> comps;
  for (std::size_t i = 0; i < x.boundary.size(); ++i) {
    if (regions.contains(x.regions[x.incidence(i)])) comps.push_back(x.boundary.components[i]);
  }
  CobObject bdry = sub_object(x.boundary, FinSet::from_tokens(std::move(comps)));
  FinMap inc = FinMap::tabulate(bdry.components, regions, [&](std::size_t i) {
    return regions.index_of(x.incidence(bdry.components[i]));
  });
  return Body(regions, bdry, inc);
}

bool is_valid(const BodyDiffeo& d) {
  if (!(d.regions.dom() == d.from.regions) || !(d.regions.cod() == d.to.regions)) return false;
  if (!is_valid(boundary_diffeo(d))) return false;
  if (!is_bijective(d.regions)) return false;
  return compose(d.to.incidence, d.boundary) == compose(d.regions, d.from.incidence);
}

BodyDiffeo identity_diffeo(const Body& x) {
  return {x, x, FinMap::identity(x.regions), FinMap::identity(x.boundary.components)};
}

BodyDiffeo compose(const BodyDiffeo& g, const BodyDiffeo& f) {
  if (!(f.to == g.from)) throw InputError("compose: diffeomorphisms are not composable");
  return {f.from, g.to, compose(g.regions, f.regions), compose(g.boundary, f.boundary)};
}

BodyDiffeo inverse(const BodyDiffeo& d) {
  return {d.to, d.from, inverse(d.regions), inverse(d.boundary)};
}

ObjectDiffeo boundary_diffeo(const BodyDiffeo& d) {
  return {d.from.boundary, d.to.boundary, d.boundary};
}

BodyDiffeo untag(const Body& tagged, std::size_t tag, const Body& to) {
  FinMap regs = FinMap::tabulate(tagged.regions, to.regions, [&](std::size_t i) {
    auto [t, rest] = token::split_tag(tagged.regions[i]);
    if (t != tag) throw InputError("untag: unexpected tag in '" + tagged.regions[i] + "'");
    return to.regions.index_of(rest);
  });
  return {tagged, to, std::move(regs), untag(tagged.boundary, tag, to.boundary).map};
}

// ---------------------------------------------------------------------------

Cobordism::Cobordism() : in_src(FinSet(), FinSet(), {}), in_tgt(FinSet(), FinSet(), {}) {}

Cobordism::Cobordism(CobObject src, CobObject tgt, FinSet regs, FinMap is, FinMap it)
    : source(std::move(src)),
      target(std::move(tgt)),
      regions(std::move(regs)),
      in_src(std::move(is)),
      in_tgt(std::move(it)) {
  if (!(in_src.dom() == source.components) || !(in_src.cod() == regions)) {
    throw InputError("in_src must send every source component to a region");
  }
  if (!(in_tgt.dom() == target.components) || !(in_tgt.cod() == regions)) {
    throw InputError("in_tgt must send every target component to a region");
  }
}

Body Cobordism::body() const {
  ObjectUnion u = disjoint_union(reverse(source), target);
  return Body(regions, u.object, copair(as_tagged(u), in_src, in_tgt));
}

std::string print(const CobObject& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s.components[i] + (s.positive(i) ? "+" : "-");
  }
  return out + "}";
}

std::string print(const Cobordism& m) {
  std::string out = print(m.source) + " -> " + print(m.target) + " [";
  for (std::size_t i = 0; i < m.regions.size(); ++i) {
    if (i) out += ' ';
    out += m.regions[i];
  }
  out += "] src:";
  for (std::size_t i = 0; i < m.source.size(); ++i) out += ' ' + m.regions[m.in_src(i)];
  out += " tgt:";
  for (std::size_t i = 0; i < m.target.size(); ++i) out += ' ' + m.regions[m.in_tgt(i)];
  return out;
}

Cobordism cylinder(const CobObject& s) {
  return Cobordism(s, s, s.components, FinMap::identity(s.components),
                   FinMap::identity(s.components));
}

GlueResult glue(const Cobordism& m, const Cobordism& n) {
  if (!(m.target == n.source)) throw InputError("glue: target and source differ");
  TaggedUnion u = disjoint_union(m.regions, n.regions);
  FinMap q = coequalizer(compose(u.inl, m.in_tgt), compose(u.inr, n.in_src));
  FinMap left = compose(q, u.inl);
  FinMap right = compose(q, u.inr);
  Cobordism c(m.source, n.target, q.cod(), compose(left, m.in_src), compose(right, n.in_tgt));
  return {std::move(c), std::move(left), std::move(right)};
}

Cobordism disjoint_union(const Cobordism& m, const Cobordism& n) {
  TaggedUnion r = disjoint_union(m.regions, n.regions);
  ObjectUnion s = disjoint_union(m.source, n.source);
  ObjectUnion t = disjoint_union(m.target, n.target);
  return Cobordism(s.object, t.object, r.carrier,
                   copair(as_tagged(s), compose(r.inl, m.in_src), compose(r.inr, n.in_src)),
                   copair(as_tagged(t), compose(r.inl, m.in_tgt), compose(r.inr, n.in_tgt)));
}

BodyDiffeo CobDiffeo::body() const {
  ObjectUnion u = disjoint_union(reverse(from.source), from.target);
  ObjectUnion v = disjoint_union(reverse(to.source), to.target);
  FinMap b = copair(as_tagged(u), compose(v.inl, source_map), compose(v.inr, target_map));
  return {from.body(), to.body(), region_map, b};
}

ValidationReport validate_diffeo(const CobDiffeo& d, const std::string& instance) {
  if (!(d.source_map.dom() == d.from.source.components) ||
      !(d.source_map.cod() == d.to.source.components) ||
      !(d.target_map.dom() == d.from.target.components) ||
      !(d.target_map.cod() == d.to.target.components) ||
      !(d.region_map.dom() == d.from.regions) || !(d.region_map.cod() == d.to.regions)) {
    throw InputError("diffeomorphism maps do not match the cobordisms");
  }
  ValidationReport rep("cobordism diffeomorphism");
  if (is_bijective(d.source_map) && is_bijective(d.region_map) && is_bijective(d.target_map)) {
    rep.pass("bijective", instance);
  } else {
    rep.fail("bijective", instance, "", "a component or region map is not a bijection");
  }
  auto orient = [&](const FinMap& f, const CobObject& a, const CobObject& b) -> std::string {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.orientation(i) != b.orientation(f(i))) return a.components[i];
    }
    return {};
  };
  std::string w = orient(d.source_map, d.from.source, d.to.source);
  if (w.empty()) w = orient(d.target_map, d.from.target, d.to.target);
  if (w.empty()) rep.pass("orientation", instance);
  else rep.fail("orientation", instance, w, "orientation is not preserved");

  auto s = commutes(compose(d.to.in_src, d.source_map), compose(d.region_map, d.from.in_src));
  auto t = commutes(compose(d.to.in_tgt, d.target_map), compose(d.region_map, d.from.in_tgt));
  if (!s.pass) rep.fail("incidence", instance, s.witness, "source incidence square");
  else if (!t.pass) rep.fail("incidence", instance, t.witness, "target incidence square");
  else rep.pass("incidence", instance);
  return rep;
}

CobDiffeo identity_diffeo(const Cobordism& m) {
  return {m, m, FinMap::identity(m.source.components), FinMap::identity(m.regions),
          FinMap::identity(m.target.components)};
}

CobDiffeo compose(const CobDiffeo& g, const CobDiffeo& f) {
  if (!(f.to == g.from)) throw InputError("compose: diffeomorphisms are not composable");
  return {f.from, g.to, compose(g.source_map, f.source_map), compose(g.region_map, f.region_map),
          compose(g.target_map, f.target_map)};
}

CobDiffeo inverse(const CobDiffeo& d) {
  return {d.to, d.from, inverse(d.source_map), inverse(d.region_map), inverse(d.target_map)};
}

CobDiffeo cylinder_diffeo(const ObjectDiffeo& phi) {
  return {cylinder(phi.from), cylinder(phi.to), phi.map, phi.map, phi.map};
}

CobDiffeo symmetry_diffeo(const Cobordism& m, const Cobordism& n) {
  Cobordism mn = disjoint_union(m, n);
  Cobordism nm = disjoint_union(n, m);
  auto swap = [](const FinSet& a, const FinSet& b) {
    TaggedUnion u = disjoint_union(a, b);
    TaggedUnion v = disjoint_union(b, a);
    return copair(u, v.inr, v.inl);
  };
  return {mn, nm, swap(m.source.components, n.source.components), swap(m.regions, n.regions),
          swap(m.target.components, n.target.components)};
}

CobDiffeo glue_diffeo(const CobDiffeo& phi, const CobDiffeo& psi) {
  if (!(phi.target() == psi.source())) {
    throw InputError("glue_diffeo: middle diffeomorphisms differ");
  }
  GlueResult a = glue(phi.from, psi.from);
  GlueResult b = glue(phi.to, psi.to);
  std::vector<std::size_t> t(a.composite.regions.size(), 0);
  for (std::size_t r = 0; r < phi.from.regions.size(); ++r) {
    t[a.from_left(r)] = b.from_left(phi.region_map(r));
  }
  for (std::size_t r = 0; r < psi.from.regions.size(); ++r) {
    t[a.from_right(r)] = b.from_right(psi.region_map(r));
  }
  return {a.composite, b.composite, phi.source_map,
          FinMap(a.composite.regions, b.composite.regions, std::move(t)), psi.target_map};
}

CobDiffeo associativity_diffeo(const Cobordism& m, const Cobordism& n, const Cobordism& p) {
  GlueResult mn = glue(m, n);
  GlueResult l = glue(mn.composite, p);
  GlueResult np = glue(n, p);
  GlueResult r = glue(m, np.composite);
  return associativity_diffeo(mn, l, np, r);
}

CobDiffeo associativity_diffeo(const GlueResult& mn, const GlueResult& l, const GlueResult& np,
                               const GlueResult& r) {
  std::vector<std::size_t> t(l.composite.regions.size(), 0);
  for (std::size_t i = 0; i < mn.from_left.dom().size(); ++i) {
    t[l.from_left(mn.from_left(i))] = r.from_left(i);
  }
  for (std::size_t i = 0; i < mn.from_right.dom().size(); ++i) {
    t[l.from_left(mn.from_right(i))] = r.from_right(np.from_left(i));
  }
  for (std::size_t i = 0; i < np.from_right.dom().size(); ++i) {
    t[l.from_right(i)] = r.from_right(np.from_right(i));
  }
  return {l.composite, r.composite, FinMap::identity(l.composite.source.components),
          FinMap(l.composite.regions, r.composite.regions, std::move(t)),
          FinMap::identity(l.composite.target.components)};
}

CanonicalForm canonical_form(const Cobordism& m) {
  const std::size_t n = m.regions.size();
  const std::size_t none = SIZE_MAX;
  std::vector<std::size_t> key(n, none);
  for (std::size_t i = 0; i < m.source.size(); ++i) {
    key[m.in_src(i)] = std::min(key[m.in_src(i)], i);
  }
  for (std::size_t j = 0; j < m.target.size(); ++j) {
    key[m.in_tgt(j)] = std::min(key[m.in_tgt(j)], m.source.size() + j);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  std::vector<std::string> names(n);
  std::map<std::string, std::string> table;
  for (std::size_t k = 0; k < n; ++k) {
    names[k] = "r" + std::to_string(k);
    table[m.regions[order[k]]] = names[k];
  }
  FinSet regs = FinSet::from_tokens(names);
  FinMap relabel = FinMap::from_table(m.regions, regs, table);
  Cobordism form(m.source, m.target, regs, compose(relabel, m.in_src), compose(relabel, m.in_tgt));
  return {std::move(form), std::move(relabel)};
}

// ---------------------------------------------------------------------------

ValidationReport validate_triple(const GluingTriple& t, const std::string& instance) {
  ValidationReport rep("gluing triple");
  const FinSet& all = t.body.boundary.components;
  std::string bad;
  for (const FinSet* part : {&t.lambda, &t.sigma, &t.sigma_neg}) {
    for (const auto& x : *part) {
      if (!all.contains(x) && bad.empty()) bad = x;
    }
  }
  if (bad.empty()) {
    std::size_t total = t.lambda.size() + t.sigma.size() + t.sigma_neg.size();
    std::vector<std::string> v;
    for (const FinSet* part : {&t.lambda, &t.sigma, &t.sigma_neg}) v.insert(v.end(), part->begin(), part->end());
    std::sort(v.begin(), v.end());
    auto dup = std::adjacent_find(v.begin(), v.end());
    if (dup != v.end()) bad = *dup;
    else if (total != all.size()) {
      for (const auto& x : all) {
        if (!std::binary_search(v.begin(), v.end(), x)) {
          bad = x;
          break;
        }
      }
    }
  }
  if (bad.empty()) rep.pass("partition", instance);
  else rep.fail("partition", instance, bad, "boundary is not lambda + sigma + -sigma");

  std::string pw;
  if (!(t.pairing.dom() == t.sigma) || !(t.pairing.cod() == t.sigma_neg) ||
      !is_bijective(t.pairing)) {
    pw = "pairing is not a bijection sigma -> -sigma";
  } else if (bad.empty()) {
    for (std::size_t i = 0; i < t.sigma.size(); ++i) {
      std::size_t a = all.index_of(t.sigma[i]);
      std::size_t b = all.index_of(t.sigma_neg[t.pairing(i)]);
      if (t.body.boundary.orientation(a) == t.body.boundary.orientation(b)) {
        pw = t.sigma[i];
        break;
      }
    }
  }
  if (pw.empty()) rep.pass("pairing", instance);
  else rep.fail("pairing", instance, pw, "pairing must reverse orientation");

  if (t.corners) {
    const Corners& c = *t.corners;
    std::string cw;
    for (const auto& x : c.lambda) {
      if (!c.sigma.contains(x) && !c.sigma_neg.contains(x)) {
        cw = x;
        break;
      }
    }
    if (cw.empty() && c.sigma.size() != c.sigma_neg.size()) cw = "corner counts differ";
    if (cw.empty()) rep.pass("corners", instance);
    else rep.fail("corners", instance, cw, "corners of lambda must lie on the glued parts");
  }
  return rep;
}

void require_valid(const GluingTriple& t) {
  ValidationReport r = validate_triple(t);
  for (const auto& rec : r.records()) {
    if (!rec.pass) {
      throw InputError("gluing triple: " + rec.check + " check failed at '" + rec.witness +
                       "': " + rec.detail);
    }
  }
}

CobObject lambda_part(const GluingTriple& t) { return sub_object(t.body.boundary, t.lambda); }
CobObject sigma_part(const GluingTriple& t) { return sub_object(t.body.boundary, t.sigma); }
CobObject sigma_neg_part(const GluingTriple& t) {
  return sub_object(t.body.boundary, t.sigma_neg);
}

ObjectDiffeo pairing_diffeo(const GluingTriple& t) {
  return {reverse(sigma_part(t)), sigma_neg_part(t), t.pairing};
}

GluedBody glue_triple(const GluingTriple& t) {
  require_valid(t);
  const Body& x = t.body;
  FinMap inc_sigma = restrict(x.incidence, t.sigma);
  FinMap inc_neg = compose(restrict(x.incidence, t.sigma_neg), t.pairing);
  FinMap q = coequalizer(inc_sigma, inc_neg);
  CobObject bdry = lambda_part(t);
  FinMap inc = compose(q, restrict(x.incidence, t.lambda));
  return {Body(q.cod(), bdry, inc), q};
}

GluingTriple composable_triple(const Cobordism& m, const Cobordism& n) {
  if (!(m.target == n.source)) throw InputError("composable_triple: target and source differ");
  BodyUnion u = disjoint_union(m.body(), n.body());
  GluingTriple t;
  t.body = u.body;
  FinSet a = tagged_set(0, 0, m.source.components);
  FinSet d = tagged_set(1, 1, n.target.components);
  t.lambda = union_of({&a, &d});
  t.sigma = tagged_set(0, 1, m.target.components);
  t.sigma_neg = tagged_set(1, 0, n.source.components);
  t.pairing = FinMap::tabulate(t.sigma, t.sigma_neg, [](std::size_t i) { return i; });
  return t;
}

BodyDiffeo glued_to_composite(const Cobordism& m, const Cobordism& n) {
  return glued_to_composite(composable_triple(m, n), glue(m, n).composite);
}

BodyDiffeo glued_to_composite(const GluingTriple& t, const Cobordism& composite) {
  GluedBody g = glue_triple(t);
  Body c = composite.body();
  FinMap regs = FinMap::tabulate(g.body.regions, c.regions, [&](std::size_t i) {
    return c.regions.index_of(g.body.regions[i]);
  });
  FinMap bdry = FinMap::tabulate(g.body.boundary.components, c.boundary.components,
                                 [&](std::size_t i) {
                                   return c.boundary.components.index_of(
                                       drop_inner_tag(g.body.boundary.components[i]));
                                 });
  return {g.body, c, std::move(regs), std::move(bdry)};
}

namespace {

// Collar of `m` on one side: the cylinder goes first for the left collar.
GluingTriple collar_triple(const Cobordism& m, bool left) {
  Cobordism cyl = cylinder(left ? m.source : m.target);
  BodyUnion u = left ? disjoint_union(cyl.body(), m.body()) : disjoint_union(m.body(), cyl.body());
  const Cobordism& first = left ? cyl : m;
  const Cobordism& second = left ? m : cyl;
  GluingTriple t;
  t.body = u.body;
  FinSet a = tagged_set(0, 0, first.source.components);
  FinSet d = tagged_set(1, 1, second.target.components);
  t.lambda = union_of({&a, &d});
  t.sigma = tagged_set(0, 1, first.target.components);
  t.sigma_neg = tagged_set(1, 0, second.source.components);
  t.pairing = FinMap::tabulate(t.sigma, t.sigma_neg, [](std::size_t i) { return i; });
  return t;
}

BodyDiffeo collapse(const Cobordism& m, bool left) {
  GluingTriple t = collar_triple(m, left);
  GluedBody g = glue_triple(t);
  Body to = m.body();
  const std::size_t tag = left ? 1 : 0;
  std::vector<std::size_t> regs(g.body.regions.size(), SIZE_MAX);
  for (std::size_t r = 0; r < m.regions.size(); ++r) {
    std::size_t x = t.body.regions.index_of(token::tagged(tag, m.regions[r]));
    regs[g.quotient(x)] = r;
  }
  for (std::size_t v : regs) {
    if (v == SIZE_MAX) throw InputError("collapse: a collar region bounds nothing in M");
  }
  FinMap bdry = FinMap::tabulate(g.body.boundary.components, to.boundary.components,
                                 [&](std::size_t i) {
                                   return to.boundary.components.index_of(
                                       drop_inner_tag(g.body.boundary.components[i]));
                                 });
  return {g.body, to, FinMap(g.body.regions, to.regions, std::move(regs)), std::move(bdry)};
}

}  // namespace

GluingTriple left_collar_triple(const Cobordism& m) { return collar_triple(m, true); }
GluingTriple right_collar_triple(const Cobordism& m) { return collar_triple(m, false); }
BodyDiffeo left_collapse(const Cobordism& m) { return collapse(m, true); }
BodyDiffeo right_collapse(const Cobordism& m) { return collapse(m, false); }

std::pair<GluingTriple, GluingTriple> split_triple(const GluingTriple& t, const FinSet& first) {
  require_subset(first, t.sigma, "split_triple");
  FinSet rest = difference(t.sigma, first);
  FinMap to_neg = t.pairing;
  FinSet first_neg = image_set(to_neg, first);
  FinSet rest_neg = image_set(to_neg, rest);

  GluingTriple a;
  a.body = t.body;
  a.lambda = union_of({&t.lambda, &rest, &rest_neg});
  a.sigma = first;
  a.sigma_neg = first_neg;
  a.pairing = FinMap::tabulate(first, first_neg, [&](std::size_t i) {
    return first_neg.index_of(to_neg(first[i]));
  });

  GluingTriple b;
  b.body = glue_triple(a).body;
  b.lambda = t.lambda;
  b.sigma = rest;
  b.sigma_neg = rest_neg;
  b.pairing = FinMap::tabulate(rest, rest_neg, [&](std::size_t i) {
    return rest_neg.index_of(to_neg(rest[i]));
  });
  return {std::move(a), std::move(b)};
}

std::optional<BodyDiffeo> induced_glued_diffeo(const GluingTriple& t, const BodyDiffeo& d) {
  if (!(d.from == t.body) || !(d.to == t.body)) return std::nullopt;
  const FinSet& all = t.body.boundary.components;
  auto keeps = [&](const FinSet& part) {
    for (const auto& x : part) {
      if (!part.contains(all[d.boundary(all.index_of(x))])) return false;
    }
    return true;
  };
  if (!keeps(t.lambda) || !keeps(t.sigma) || !keeps(t.sigma_neg)) return std::nullopt;
  for (const auto& s : t.sigma) {
    const std::string& ds = all[d.boundary(all.index_of(s))];
    const std::string& dn = all[d.boundary(all.index_of(t.pairing(s)))];
    if (t.pairing(ds) != dn) return std::nullopt;
  }
  GluedBody g = glue_triple(t);
  std::vector<std::size_t> regs(g.body.regions.size(), 0);
  for (std::size_t r = 0; r < t.body.regions.size(); ++r) {
    regs[g.quotient(r)] = g.quotient(d.regions(r));
  }
  const FinSet& lam = g.body.boundary.components;
  FinMap bdry = FinMap::tabulate(lam, lam, [&](std::size_t i) {
    return lam.index_of(all[d.boundary(all.index_of(lam[i]))]);
  });
  return BodyDiffeo{g.body, g.body, FinMap(g.body.regions, g.body.regions, std::move(regs)),
                    std::move(bdry)};
}

std::vector<GluingTriple> all_triples(const Body& x) {
  const CobObject& b = x.boundary;
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < b.size(); ++i) (b.positive(i) ? pos : neg).push_back(i);
  std::vector<GluingTriple> out;
  std::vector<std::size_t> match(pos.size(), SIZE_MAX);
  std::vector<char> used(neg.size(), 0);

  auto emit = [&]() {
    std::vector<std::string> sig, sneg, lam;
    std::map<std::string, std::string> pairs;
    std::vector<char> matched(b.size(), 0);
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (match[k] == SIZE_MAX) continue;
      std::size_t p = pos[k], n = neg[match[k]];
      matched[p] = matched[n] = 1;
      std::size_t lo = std::min(p, n), hi = std::max(p, n);
      sig.push_back(b.components[lo]);
      sneg.push_back(b.components[hi]);
      pairs[b.components[lo]] = b.components[hi];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!matched[i]) lam.push_back(b.components[i]);
    }
    GluingTriple t;
    t.body = x;
    t.lambda = FinSet::from_tokens(lam);
    t.sigma = FinSet::from_tokens(sig);
    t.sigma_neg = FinSet::from_tokens(sneg);
    t.pairing = FinMap::from_table(t.sigma, t.sigma_neg, pairs);
    out.push_back(std::move(t));
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == pos.size()) {
      emit();
      return;
    }
    match[k] = SIZE_MAX;
    self(self, k + 1);
    for (std::size_t j = 0; j < neg.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      match[k] = j;
      self(self, k + 1);
      used[j] = 0;
    }
    match[k] = SIZE_MAX;
  };
  rec(rec, 0);
  return out;
}

}  // namespace cyltqft
