// Component-level model of oriented cobordisms.
//
// A closed oriented hypersurface is a finite set of components with a sign
// each. A body is a finite set of regions with its boundary components and
// the region each one bounds. A cobordism is a body whose boundary is split
// into a reversed source and a target. Diffeomorphisms are bijections of
// components and regions compatible with all of that; two of them are the
// same isotopy class exactly when their tables agree.

#ifndef CYLTQFT_CCOB_HPP_
#define CYLTQFT_CCOB_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cyltqft/finset.hpp"
#include "cyltqft/report.hpp"

namespace cyltqft {

/// {"+", "-"}.
const FinSet& signs();

struct CobObject {
  FinSet components;
  FinMap orientation;  // components -> signs()

  /// The empty object.
  CobObject();
  /// Throws InputError unless orientation is a map components -> signs().
  CobObject(FinSet components, FinMap orientation);

  bool positive(std::size_t i) const { return orientation(i) == 0; }
  std::size_t size() const { return components.size(); }

  friend bool operator==(const CobObject&, const CobObject&) = default;
};

/// Components "c0".."c{p+m-1}", the first p positive.
CobObject canonical_object(std::size_t plus, std::size_t minus);

CobObject reverse(const CobObject& s);

struct ObjectUnion {
  CobObject object;  // components "0:c" and "1:c"
  FinMap inl;
  FinMap inr;
};
ObjectUnion disjoint_union(const CobObject& a, const CobObject& b);

/// The components in `part`. Throws InputError if part is not a subset.
CobObject sub_object(const CobObject& s, const FinSet& part);

/// Orientation-preserving bijection of components.
struct ObjectDiffeo {
  CobObject from;
  CobObject to;
  FinMap map;

  friend bool operator==(const ObjectDiffeo&, const ObjectDiffeo&) = default;
};

bool is_valid(const ObjectDiffeo& d);
ObjectDiffeo identity_diffeo(const CobObject& s);
ObjectDiffeo compose(const ObjectDiffeo& g, const ObjectDiffeo& f);
ObjectDiffeo inverse(const ObjectDiffeo& d);
/// The same bijection between the reversed objects.
ObjectDiffeo reverse(const ObjectDiffeo& d);
/// "tag:c" |-> "c" from a tagged copy of `to` (as produced by disjoint
/// unions and sub-objects of them).
ObjectDiffeo untag(const CobObject& tagged, std::size_t tag, const CobObject& to);

struct Body {
  FinSet regions;
  CobObject boundary;
  FinMap incidence;  // boundary components -> regions

  Body();
  /// Throws InputError unless incidence is boundary.components -> regions.
  Body(FinSet regions, CobObject boundary, FinMap incidence);

  friend bool operator==(const Body&, const Body&) = default;
};

struct BodyUnion {
  Body body;  // regions and boundary components tagged "0:" and "1:"
  FinMap region_inl;
  FinMap region_inr;
};
BodyUnion disjoint_union(const Body& a, const Body& b);

/// The given regions together with exactly the boundary components they
/// bound. Throws InputError if `regions` is not a subset.
Body sub_body(const Body& x, const FinSet& regions);

struct BodyDiffeo {
  Body from;
  Body to;
  FinMap regions;
  FinMap boundary;

  friend bool operator==(const BodyDiffeo&, const BodyDiffeo&) = default;
};

/// Both maps bijective, boundary orientation-preserving, incidence square
/// commutes.
bool is_valid(const BodyDiffeo& d);
BodyDiffeo identity_diffeo(const Body& x);
BodyDiffeo compose(const BodyDiffeo& g, const BodyDiffeo& f);
BodyDiffeo inverse(const BodyDiffeo& d);
ObjectDiffeo boundary_diffeo(const BodyDiffeo& d);
/// Regions and boundary "tag:x" |-> "x" from a tagged copy of `to`.
BodyDiffeo untag(const Body& tagged, std::size_t tag, const Body& to);

struct Cobordism {
  CobObject source;
  CobObject target;
  FinSet regions;
  FinMap in_src;  // source components -> regions
  FinMap in_tgt;  // target components -> regions

  Cobordism();
  /// Throws InputError unless the incidence maps have the right shapes.
  Cobordism(CobObject source, CobObject target, FinSet regions, FinMap in_src, FinMap in_tgt);

  /// Boundary reverse(source) + target, as components "0:c" and "1:c".
  Body body() const;

  friend bool operator==(const Cobordism&, const Cobordism&) = default;
};

/// Deterministic one-line printed form.
std::string print(const CobObject& s);
std::string print(const Cobordism& m);

/// Regions = components, both incidences the identity.
Cobordism cylinder(const CobObject& s);

struct GlueResult {
  Cobordism composite;
  FinMap from_left;   // regions(M) -> regions(composite)
  FinMap from_right;  // regions(N) -> regions(composite)
};

/// M then N along M.target = N.source. Regions are the classes of
/// regions(M) + regions(N) (tokens "0:r", "1:r") under in_tgt^M(c) ~ in_src^N(c),
/// each named by its least member. Throws InputError on boundary mismatch.
GlueResult glue(const Cobordism& m, const Cobordism& n);

Cobordism disjoint_union(const Cobordism& m, const Cobordism& n);

struct CobDiffeo {
  Cobordism from;
  Cobordism to;
  FinMap source_map;
  FinMap region_map;
  FinMap target_map;

  ObjectDiffeo source() const { return {from.source, to.source, source_map}; }
  ObjectDiffeo target() const { return {from.target, to.target, target_map}; }
  /// The induced diffeomorphism of bodies.
  BodyDiffeo body() const;

  friend bool operator==(const CobDiffeo&, const CobDiffeo&) = default;
};

/// Reports "bijective", "orientation" and "incidence" checks.
ValidationReport validate_diffeo(const CobDiffeo& d, const std::string& instance = "diffeo");
CobDiffeo identity_diffeo(const Cobordism& m);
CobDiffeo compose(const CobDiffeo& g, const CobDiffeo& f);
CobDiffeo inverse(const CobDiffeo& d);

/// phi x [0,1]: cylinder(phi.from) -> cylinder(phi.to).
CobDiffeo cylinder_diffeo(const ObjectDiffeo& phi);
/// M + N -> N + M.
CobDiffeo symmetry_diffeo(const Cobordism& m, const Cobordism& n);
/// Phi (*) Psi: glue(M, N) -> glue(M', N'). Throws InputError unless
/// Phi.target == Psi.source.
CobDiffeo glue_diffeo(const CobDiffeo& phi, const CobDiffeo& psi);
/// The unique diffeomorphism glue(glue(M, N), P) -> glue(M, glue(N, P))
/// that is the identity on source and target and matches regions through
/// the regions of M, N and P.
CobDiffeo associativity_diffeo(const Cobordism& m, const Cobordism& n, const Cobordism& p);
/// The same from the four gluings mn = glue(M, N), l = glue(MN, P),
/// np = glue(N, P) and r = glue(M, NP).
CobDiffeo associativity_diffeo(const GlueResult& mn, const GlueResult& l, const GlueResult& np,
                               const GlueResult& r);

struct CanonicalForm {
  Cobordism form;
  FinMap relabel;  // regions(M) -> regions(form)
};
/// Relabels regions "r0", "r1", ... ordered by their least incident source
/// component, then target component; closed regions come last.
CanonicalForm canonical_form(const Cobordism& m);

/// Optional corner data of a gluing triple: codimension-two strata of each
/// part, as opaque tokens.
struct Corners {
  FinSet lambda;
  FinSet sigma;
  FinSet sigma_neg;
};

struct GluingTriple {
  Body body;
  FinSet lambda;     // boundary components kept
  FinSet sigma;      // glued to sigma_neg
  FinSet sigma_neg;
  FinMap pairing;    // sigma -> sigma_neg, orientation-reversing
  std::optional<Corners> corners;
};

/// Checks "partition" (the parts are disjoint and exhaust the boundary),
/// "pairing" (a bijection that reverses every orientation) and, with
/// corners, "corners" (corners of lambda lie on corners of sigma or
/// sigma_neg, and the two glued parts have as many corners).
ValidationReport validate_triple(const GluingTriple& t, const std::string& instance = "triple");
/// Throws InputError naming the first failed check.
void require_valid(const GluingTriple& t);

struct GluedBody {
  Body body;       // boundary = sub_object(boundary, lambda)
  FinMap quotient; // regions(X) -> regions(X_gl)
};
GluedBody glue_triple(const GluingTriple& t);

/// The pieces of a triple on the boundary.
CobObject lambda_part(const GluingTriple& t);
CobObject sigma_part(const GluingTriple& t);
CobObject sigma_neg_part(const GluingTriple& t);
/// reverse(sigma part) -> sigma_neg part, induced by the pairing.
ObjectDiffeo pairing_diffeo(const GluingTriple& t);

/// body(M) + body(N) glued along M.target = N.source.
GluingTriple composable_triple(const Cobordism& m, const Cobordism& n);
/// The glued body of composable_triple(M, N) -> body(glue(M, N)).
BodyDiffeo glued_to_composite(const Cobordism& m, const Cobordism& n);
/// The same for t = composable_triple(M, N) and c = glue(M, N).composite.
BodyDiffeo glued_to_composite(const GluingTriple& t, const Cobordism& c);

/// cylinder(M.source) + M glued along the cylinder target.
GluingTriple left_collar_triple(const Cobordism& m);
/// M + cylinder(M.target) glued along the cylinder source.
GluingTriple right_collar_triple(const Cobordism& m);
/// The collapse of the glued collar onto body(M).
BodyDiffeo left_collapse(const Cobordism& m);
BodyDiffeo right_collapse(const Cobordism& m);

/// Splits the gluing of `t` into gluing `first` (a subset of t.sigma) and
/// then the rest on the glued body. Throws InputError if `first` is not a
/// subset of t.sigma.
std::pair<GluingTriple, GluingTriple> split_triple(const GluingTriple& t, const FinSet& first);

/// If `d` is an automorphism of t.body preserving lambda, sigma, sigma_neg
/// and the pairing, the diffeomorphism it induces on the glued body.
std::optional<BodyDiffeo> induced_glued_diffeo(const GluingTriple& t, const BodyDiffeo& d);

/// Every gluing triple on `x`: each orientation-reversing partial matching
/// of the boundary, with the glued side of each matched pair taken to be
/// its least component.
std::vector<GluingTriple> all_triples(const Body& x);

}  // namespace cyltqft

#endif  // CYLTQFT_CCOB_HPP_
