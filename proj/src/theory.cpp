#include "cyltqft/theory.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

namespace cyltqft {

namespace {

// Function spaces dom -> S as tuple tokens listing values in dom order.
// Each space is built once; elements are also addressed by their mixed-radix
// code sum_j value_j |S|^j so that precomposition is arithmetic.
class Functions {
 public:
  explicit Functions(FinSet s) : s_(std::move(s)) {}

  const FinSet& values() const { return s_; }

  FinSet over(const FinSet& dom) const { return space(dom).carrier; }

  // g |-> g o f : maps(f.cod) -> maps(f.dom).
  FinMap precompose(const FinMap& f) const {
    const Space& from = space(f.cod());
    const Space& to = space(f.dom());
    const std::size_t base = s_.size();
    std::vector<std::size_t> table(from.code.size());
    std::vector<std::size_t> digit(f.cod().size());
    for (std::size_t i = 0; i < from.code.size(); ++i) {
      std::size_t c = from.code[i];
      for (auto& d : digit) {
        d = c % base;
        c /= base;
      }
      std::size_t code = 0;
      for (std::size_t j = f.dom().size(); j-- > 0;) code = code * base + digit[f(j)];
      table[i] = to.index[code];
    }
    return FinMap(from.carrier, to.carrier, std::move(table));
  }

  // Index in maps(dom) of the function with the given value indices.
  std::size_t index(const FinSet& dom, const std::vector<std::size_t>& values) const {
    std::size_t code = 0;
    for (std::size_t j = values.size(); j-- > 0;) code = code * s_.size() + values[j];
    return space(dom).index[code];
  }

  // Value indices of element i of maps(dom).
  std::vector<std::size_t> digits(const FinSet& dom, std::size_t i) const {
    std::size_t c = space(dom).code[i];
    std::vector<std::size_t> out(dom.size());
    for (auto& d : out) {
      d = c % s_.size();
      c /= s_.size();
    }
    return out;
  }

 private:
  struct Space {
    FinSet carrier;
    std::vector<std::size_t> code;   // element index -> code
    std::vector<std::size_t> index;  // code -> element index
  };

  const Space& space(const FinSet& dom) const {
    std::string key;
    for (const auto& x : dom) key += x + '\n';
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dom.size(); ++i) total *= s_.size();
    std::vector<std::string> tokens(total);
    std::vector<std::string> parts(dom.size());
    for (std::size_t c = 0; c < total; ++c) {
      std::size_t r = c;
      for (auto& p : parts) {
        p = s_[r % s_.size()];
        r /= s_.size();
      }
      tokens[c] = token::tuple(parts);
    }
    Space sp;
    sp.carrier = FinSet::from_tokens(tokens);
    sp.code.resize(total);
    sp.index.resize(total);
    for (std::size_t c = 0; c < total; ++c) {
      std::size_t i = sp.carrier.index_of(tokens[c]);
      sp.code[i] = c;
      sp.index[c] = i;
    }
    return cache_.emplace(std::move(key), std::move(sp)).first->second;
  }

  FinSet s_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Space> cache_;
};

FinMap inclusion(const FinSet& part, const FinSet& whole) {
  return FinMap::tabulate(part, whole, [&](std::size_t i) { return whole.index_of(part[i]); });
}

FinSet image_set(const FinMap& f) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < f.dom().size(); ++i) v.push_back(f.cod()[f(i)]);
  return FinSet::from_tokens(std::move(v));
}

std::string describe_set(const FinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "}";
}

class ConstantSheaf final : public LocalTheory {
 public:
  explicit ConstantSheaf(FinSet s) : f_(std::move(s)) {}

  std::string name() const override { return "constant(S=" + describe_set(f_.values()) + ")"; }
  FinSet germ_space(const CobObject& s) const override { return f_.over(s.components); }
  FinSet solution_space(const Body& x) const override { return f_.over(x.regions); }
  FinMap restriction(const Body& x) const override { return f_.precompose(x.incidence); }
  FinMap germ_restrict(const CobObject& s, const FinSet& part) const override {
    return f_.precompose(inclusion(sub_object(s, part).components, s.components));
  }
  FinMap region_restrict(const Body& x, const FinSet& regions) const override {
    return f_.precompose(inclusion(sub_body(x, regions).regions, x.regions));
  }
  FinMap gluing(const GluingTriple& t) const override {
    return f_.precompose(glue_triple(t).quotient);
  }
  FinMap on_object_diffeo(const ObjectDiffeo& phi) const override {
    return f_.precompose(inverse(phi.map));
  }
  FinMap on_body_diffeo(const BodyDiffeo& phi) const override {
    return f_.precompose(inverse(phi.regions));
  }

 private:
  Functions f_;
};

class FreeBoundary final : public LocalTheory {
 public:
  FreeBoundary(FinSet s, std::string fill) : f_(std::move(s)), fill_(std::move(fill)) {}

  std::string name() const override {
    return "free_boundary(S=" + describe_set(f_.values()) + ", fill=" + fill_ + ")";
  }
  FinSet germ_space(const CobObject& s) const override { return f_.over(s.components); }
  FinSet solution_space(const Body& x) const override {
    return f_.over(x.boundary.components);
  }
  FinMap restriction(const Body& x) const override {
    return FinMap::identity(f_.over(x.boundary.components));
  }
  FinMap germ_restrict(const CobObject& s, const FinSet& part) const override {
    return f_.precompose(inclusion(sub_object(s, part).components, s.components));
  }
  FinMap region_restrict(const Body& x, const FinSet& regions) const override {
    return f_.precompose(inclusion(sub_body(x, regions).boundary.components,
                                   x.boundary.components));
  }
  FinMap gluing(const GluingTriple& t) const override {
    require_valid(t);
    const FinSet& all = t.body.boundary.components;
    FinSet from = f_.over(t.lambda), to = f_.over(all);
    std::size_t fill = f_.values().index_of(fill_);
    return FinMap::tabulate(from, to, [&](std::size_t i) {
      std::vector<std::size_t> g = f_.digits(t.lambda, i);
      std::vector<std::size_t> h(all.size(), fill);
      for (std::size_t j = 0; j < t.lambda.size(); ++j) h[all.index_of(t.lambda[j])] = g[j];
      return f_.index(all, h);
    });
  }
  FinMap on_object_diffeo(const ObjectDiffeo& phi) const override {
    return f_.precompose(inverse(phi.map));
  }
  FinMap on_body_diffeo(const BodyDiffeo& phi) const override {
    return f_.precompose(inverse(phi.boundary));
  }

 private:
  Functions f_;
  std::string fill_;
};

// Restriction to the summand `tag` of a tagged union object, read in `to`.
FinMap summand_germ(const LocalTheory& t, const CobObject& u, const FinMap& inj, std::size_t tag,
                    const CobObject& to) {
  FinSet part = image_set(inj);
  CobObject sub = sub_object(u, part);
  return compose(t.on_object_diffeo(untag(sub, tag, to)), t.germ_restrict(u, part));
}

FinMap summand_solution(const LocalTheory& t, const Body& u, const FinMap& inj, std::size_t tag,
                        const Body& to) {
  FinSet part = image_set(inj);
  Body sub = sub_body(u, part);
  return compose(t.on_body_diffeo(untag(sub, tag, to)), t.region_restrict(u, part));
}

FinMap boundary_germ(const LocalTheory& t, const Cobordism& m, bool source) {
  Body b = m.body();
  ObjectUnion u = disjoint_union(reverse(m.source), m.target);
  const CobObject& side = source ? m.source : m.target;
  CobObject read = source ? reverse(m.source) : m.target;
  FinMap g = compose(summand_germ(t, b.boundary, source ? u.inl : u.inr, source ? 0 : 1, read),
                     t.restriction(b));
  if (source) {
    FinSet target = t.germ_space(side);
    if (!(g.cod() == target)) {
      throw TheoryViolation("orientation sensitivity: germs on " + print(side) +
                            " differ from germs on its reverse");
    }
  }
  return g;
}

}  // namespace

TheoryPtr constant_sheaf_theory(const FinSet& s) {
  if (s.empty()) throw InputError("constant sheaf theory needs a nonempty value set");
  return std::make_shared<ConstantSheaf>(s);
}

TheoryPtr free_boundary_theory(const FinSet& s, const std::string& fill) {
  if (!s.contains(fill)) throw InputError("fill value '" + fill + "' is not in S");
  return std::make_shared<FreeBoundary>(s, fill);
}

FinMap split_germ(const LocalTheory& t, const CobObject& a, const CobObject& b) {
  ObjectUnion u = disjoint_union(a, b);
  FinMap fa = summand_germ(t, u.object, u.inl, 0, a);
  FinMap fb = summand_germ(t, u.object, u.inr, 1, b);
  PairSet target = product(fa.cod(), fb.cod());
  return *pair_into(target, fa, fb);
}

std::pair<FinMap, FinMap> solution_summands(const LocalTheory& t, const Body& x, const Body& y) {
  BodyUnion u = disjoint_union(x, y);
  return {summand_solution(t, u.body, u.region_inl, 0, x),
          summand_solution(t, u.body, u.region_inr, 1, y)};
}

FinMap split_solution(const LocalTheory& t, const Body& x, const Body& y) {
  auto [fx, fy] = solution_summands(t, x, y);
  PairSet target = product(fx.cod(), fy.cod());
  return *pair_into(target, fx, fy);
}

FinMap source_germ(const LocalTheory& t, const Cobordism& m) { return boundary_germ(t, m, true); }
FinMap target_germ(const LocalTheory& t, const Cobordism& m) { return boundary_germ(t, m, false); }

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> kNames{
      "orientation sensitivity",      "hypersurface decomposition", "diagonal",
      "region decomposition",         "gluing",                     "naturality",
      "extended symmetry",            "reparametrization invariance",
      "gluing associativity"};
  return kNames;
}

namespace {

const std::string kOrientation = axiom_names()[0];
const std::string kHypersurface = axiom_names()[1];
const std::string kDiagonal = axiom_names()[2];
const std::string kRegions = axiom_names()[3];
const std::string kGluing = axiom_names()[4];
const std::string kNaturality = axiom_names()[5];
const std::string kSymmetry = axiom_names()[6];
const std::string kReparam = axiom_names()[7];
const std::string kAssociativity = axiom_names()[8];

std::string describe(const Body& x) {
  std::string out = describe_set(x.regions) + " bounding " + print(x.boundary);
  return out;
}

std::string describe(const GluingTriple& t) {
  std::string out = describe(t.body) + " glue";
  for (std::size_t i = 0; i < t.sigma.size(); ++i) {
    out += ' ' + t.sigma[i] + "~" + t.pairing(t.sigma[i]);
  }
  return out;
}

// First element where the maps disagree, or "".
std::string disagreement(const FinMap& a, const FinMap& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) return "shape";
  CommutationReport c = commutes(a, b);
  return c.pass ? std::string() : c.witness;
}

// Witness that f is not a bijection: a repeated image or a missed element.
std::string non_bijection(const FinMap& f) {
  std::vector<std::size_t> first(f.cod().size(), SIZE_MAX);
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (first[f(i)] != SIZE_MAX) return f.cod()[f(i)];
    first[f(i)] = i;
  }
  for (std::size_t j = 0; j < f.cod().size(); ++j) {
    if (first[j] == SIZE_MAX) return f.cod()[j];
  }
  return {};
}

class Auditor {
 public:
  Auditor(const LocalTheory& t, const TheoryUniverse& u) : t_(t), u_(u), rep_("axiom audit") {
    for (const auto& n : axiom_names()) rep_.declare(n);
    rep_.add_note("theory: " + t.name());
    rep_.add_note(
        "extended symmetry is read as: germs on the boundary of a glued body are the germs "
        "of the unglued boundary part it keeps");
  }

  AxiomReport run() {
    for (const auto& m : u_.cobordisms) bodies_.push_back(m.body());
    for (const auto& x : bodies_) {
      for (auto& tr : all_triples(x)) triples_.push_back(std::move(tr));
    }
    guarded(kOrientation, "", [&] { orientation(); });
    guarded(kHypersurface, "", [&] { hypersurface(); });
    guarded(kDiagonal, "", [&] { diagonal(); });
    guarded(kRegions, "", [&] { regions(); });
    guarded(kGluing, "", [&] { gluing(); });
    guarded(kNaturality, "", [&] { naturality(); });
    guarded(kSymmetry, "", [&] { symmetry(); });
    guarded(kReparam, "", [&] { reparametrization(); });
    guarded(kAssociativity, "", [&] { associativity(); });
    return std::move(rep_);
  }

 private:
  // Runs `f`, turning an exception into a failed record for `check`.
  void guarded(const std::string& check, const std::string& instance,
               const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      rep_.fail(check, instance.empty() ? "(evaluation)" : instance, "exception", e.what());
    }
  }

  void record(const std::string& check, const std::string& instance, const std::string& witness,
              const std::string& detail) {
    if (witness.empty()) rep_.pass(check, instance);
    else rep_.fail(check, instance, witness, detail);
  }

  void orientation() {
    for (const auto& s : u_.objects) {
      guarded(kOrientation, print(s), [&] {
        FinSet a = t_.germ_space(s), b = t_.germ_space(reverse(s));
        record(kOrientation, print(s), a == b ? "" : print(s), "L_{-S} differs from L_S");
      });
    }
  }

  void hypersurface() {
    guarded(kHypersurface, "{}", [&] {
      std::size_t n = t_.germ_space(CobObject()).size();
      record(kHypersurface, "{}", n == 1 ? "" : "{}",
             "germs on the empty object: " + std::to_string(n) + " elements");
    });
    for (const auto& a : u_.objects) {
      for (const auto& b : u_.objects) {
        std::string inst = print(a) + " + " + print(b);
        guarded(kHypersurface, inst, [&] {
          FinMap s = split_germ(t_, a, b);
          record(kHypersurface, inst, non_bijection(s), "L_{A+B} -> L_A x L_B is not a bijection");
        });
      }
    }
  }

  void diagonal() {
    for (const auto& s : u_.objects) {
      std::string inst = "cylinder " + print(s);
      guarded(kDiagonal, inst, [&] {
        Cobordism c = cylinder(s);
        FinMap a = source_germ(t_, c), b = target_germ(t_, c);
        std::vector<char> hit(a.cod().size(), 0);
        std::string witness;
        for (std::size_t i = 0; i < a.dom().size(); ++i) {
          if (a(i) != b(i)) {
            if (witness.empty()) witness = token::pair(a.cod()[a(i)], b.cod()[b(i)]);
          } else {
            hit[a(i)] = 1;
          }
        }
        for (std::size_t v = 0; v < hit.size() && witness.empty(); ++v) {
          if (!hit[v]) witness = token::pair(a.cod()[v], a.cod()[v]);
        }
        record(kDiagonal, inst, witness, "restriction image differs from the diagonal");
      });
    }
  }

  // Pairs used for region decomposition and the monoidality of r.
  std::vector<std::pair<Body, Body>> region_pairs() const {
    std::vector<Body> small;
    for (const auto& s : u_.objects) {
      if (s.size() <= 1) small.push_back(cylinder(s).body());
    }
    std::vector<std::pair<Body, Body>> out;
    for (const auto& x : bodies_) {
      for (const auto& y : small) out.emplace_back(x, y);
    }
    for (const auto& x : small) {
      for (const auto& y : small) out.emplace_back(x, y);
    }
    return out;
  }

  void regions() {
    for (const auto& [x, y] : region_pairs()) {
      std::string inst = describe(x) + " + " + describe(y);
      guarded(kRegions, inst, [&] {
        record(kRegions, inst, non_bijection(split_solution(t_, x, y)),
               "L_{X+Y} -> L_X x L_Y is not a bijection");
      });
    }
  }

  void gluing() {
    for (const auto& tr : triples_) {
      std::string inst = describe(tr);
      guarded(kGluing, inst, [&] { gluing_one(tr, inst); });
    }
  }

  void gluing_one(const GluingTriple& tr, const std::string& inst) {
    FinMap g = t_.gluing(tr);
    GluedBody gb = glue_triple(tr);
    const CobObject& bd = tr.body.boundary;
    FinMap r = t_.restriction(tr.body);
    if (!is_injective(g)) {
      rep_.fail(kGluing, inst, non_bijection(g), "gluing map is not injective");
      return;
    }
    // Equalizer by pointwise filtering of L_X.
    FinMap ps = t_.germ_restrict(bd, tr.sigma);
    FinMap pn = t_.germ_restrict(bd, tr.sigma_neg);
    FinMap flip = t_.on_object_diffeo(pairing_diffeo(tr));
    std::vector<char> in_eq(g.cod().size(), 0), in_im(g.cod().size(), 0);
    std::size_t eq = 0;
    for (std::size_t x = 0; x < g.cod().size(); ++x) {
      std::size_t b = r(x);
      const std::string& lhs = flip.cod()[flip(flip.dom().index_of(ps.cod()[ps(b)]))];
      const std::string& rhs = pn.cod()[pn(b)];
      if (lhs == rhs) {
        in_eq[x] = 1;
        ++eq;
      }
    }
    for (std::size_t y = 0; y < g.dom().size(); ++y) in_im[g(y)] = 1;
    std::string witness;
    for (std::size_t x = 0; x < in_eq.size() && witness.empty(); ++x) {
      if (in_eq[x] != in_im[x]) witness = g.cod()[x];
    }
    if (!witness.empty()) {
      rep_.fail(kGluing, inst, witness,
                "image size " + std::to_string(g.dom().size()) + ", equalizer size " +
                    std::to_string(eq));
      return;
    }
    FinMap lhs = t_.restriction(gb.body);
    FinMap rhs = compose(t_.germ_restrict(bd, tr.lambda), compose(r, g));
    record(kGluing, inst, disagreement(lhs, rhs), "r_{X_gl} differs from pi_Lambda r_X glue");
  }

  void naturality() {
    for (const auto& d : u_.diffeos) {
      std::string inst = print(d.from) + " => " + print(d.to);
      guarded(kNaturality, inst, [&] {
        BodyDiffeo b = d.body();
        FinMap lhs = compose(t_.restriction(b.to), t_.on_body_diffeo(b));
        FinMap rhs = compose(t_.on_object_diffeo(boundary_diffeo(b)), t_.restriction(b.from));
        record(kNaturality, "r " + inst, disagreement(lhs, rhs), "r is not natural");
      });
    }
    // Gluing against automorphisms that preserve a triple.
    std::map<std::string, std::vector<BodyDiffeo>> autos;
    for (const auto& d : u_.diffeos) {
      if (d.from == d.to) autos[print(d.from)].push_back(d.body());
    }
    for (std::size_t i = 0; i < u_.cobordisms.size(); ++i) {
      auto it = autos.find(print(u_.cobordisms[i]));
      if (it == autos.end()) continue;
      for (const auto& tr : all_triples(bodies_[i])) {
        for (const auto& d : it->second) {
          std::string inst = "glue " + describe(tr);
          guarded(kNaturality, inst, [&] {
            std::optional<BodyDiffeo> dg = induced_glued_diffeo(tr, d);
            if (!dg) return;
            FinMap g = t_.gluing(tr);
            FinMap lhs = compose(g, t_.on_body_diffeo(*dg));
            FinMap rhs = compose(t_.on_body_diffeo(d), g);
            record(kNaturality, inst, disagreement(lhs, rhs), "gluing is not natural");
          });
        }
      }
    }
    for (const auto& [x, y] : region_pairs()) {
      std::string inst = "r on " + describe(x) + " + " + describe(y);
      guarded(kNaturality, inst, [&] {
        BodyUnion u = disjoint_union(x, y);
        FinMap rx = t_.restriction(x), ry = t_.restriction(y);
        FinMap lhs = compose(split_germ(t_, x.boundary, y.boundary), t_.restriction(u.body));
        FinMap rhs = compose(product_map(product(rx.dom(), ry.dom()), product(rx.cod(), ry.cod()),
                                         rx, ry),
                             split_solution(t_, x, y));
        record(kNaturality, inst, disagreement(lhs, rhs), "r is not monoidal");
      });
    }
  }

  void symmetry() {
    for (const auto& tr : triples_) {
      std::string inst = describe(tr);
      guarded(kSymmetry, inst, [&] {
        GluedBody gb = glue_triple(tr);
        FinSet a = t_.germ_space(gb.body.boundary);
        FinSet b = t_.germ_space(lambda_part(tr));
        FinSet c = t_.restriction(gb.body).cod();
        record(kSymmetry, inst, a == b && b == c ? "" : print(gb.body.boundary),
               "germs on the glued boundary differ from germs on Lambda");
      });
    }
  }

  void reparametrization() {
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
      const Body& x = bodies_[i];
      std::string inst = "identity " + describe(x);
      guarded(kReparam, inst, [&] {
        FinMap id = t_.on_body_diffeo(identity_diffeo(x));
        record(kReparam, inst, disagreement(id, FinMap::identity(t_.solution_space(x))),
               "L of the identity is not the identity");
      });
    }
    for (const auto& s : u_.objects) {
      std::string inst = "identity " + print(s);
      guarded(kReparam, inst, [&] {
        FinMap id = t_.on_object_diffeo(identity_diffeo(s));
        record(kReparam, inst, disagreement(id, FinMap::identity(t_.germ_space(s))),
               "L of the identity is not the identity");
      });
    }
    for (const auto& f : u_.diffeos) {
      BodyDiffeo bf = f.body();
      std::string inst = "recompute " + print(f.from);
      guarded(kReparam, inst, [&] {
        BodyDiffeo again = CobDiffeo{f}.body();
        record(kReparam, inst, disagreement(t_.on_body_diffeo(bf), t_.on_body_diffeo(again)),
               "equal diffeomorphisms act differently");
      });
      for (const auto& g : u_.diffeos) {
        if (!(g.from == f.to)) continue;
        std::string ginst = "compose " + print(f.from);
        guarded(kReparam, ginst, [&] {
          BodyDiffeo bg = g.body();
          FinMap lhs = t_.on_body_diffeo(compose(bg, bf));
          FinMap rhs = compose(t_.on_body_diffeo(bg), t_.on_body_diffeo(bf));
          record(kReparam, ginst, disagreement(lhs, rhs), "L is not functorial on bodies");
        });
      }
    }
    for (const auto& f : u_.object_diffeos) {
      for (const auto& g : u_.object_diffeos) {
        if (!(g.from == f.to)) continue;
        std::string inst = "compose " + print(f.from);
        guarded(kReparam, inst, [&] {
          FinMap lhs = t_.on_object_diffeo(compose(g, f));
          FinMap rhs = compose(t_.on_object_diffeo(g), t_.on_object_diffeo(f));
          record(kReparam, inst, disagreement(lhs, rhs), "L is not functorial on objects");
        });
      }
    }
  }

  void associativity() {
    for (const auto& tr : triples_) {
      if (tr.sigma.size() < 2) continue;
      std::size_t n = std::min(u_.max_splits_per_triple, tr.sigma.size());
      for (std::size_t k = 0; k < n; ++k) {
        std::string inst = describe(tr) + " first " + tr.sigma[k];
        guarded(kAssociativity, inst, [&] {
          auto [t1, t2] = split_triple(tr, FinSet{tr.sigma[k]});
          GluedBody direct = glue_triple(tr), stepped = glue_triple(t2);
          if (!(direct.body == stepped.body)) {
            rep_.fail(kAssociativity, inst, describe(stepped.body),
                      "stepwise gluing gives a different body");
            return;
          }
          FinMap lhs = t_.gluing(tr);
          FinMap rhs = compose(t_.gluing(t1), t_.gluing(t2));
          record(kAssociativity, inst, disagreement(lhs, rhs),
                 "gluing at once differs from gluing in two steps");
        });
      }
    }
  }

  const LocalTheory& t_;
  const TheoryUniverse& u_;
  AxiomReport rep_;
  std::vector<Body> bodies_;
  std::vector<GluingTriple> triples_;
};

}  // namespace

AxiomReport check_axioms(const LocalTheory& t, const TheoryUniverse& u) {
  return Auditor(t, u).run();
}

}  // namespace cyltqft
