// Finite local field theories and the axiom auditor.
//
// A theory assigns a finite set of germs L_S to every closed hypersurface S,
// a finite set of solutions L_X to every body X, restriction maps
// r_X : L_X -> L_dX and gluing maps L_{X_gl} -> L_X, and acts on
// diffeomorphisms. Symplectic data is not modelled: germ spaces are plain
// sets and the diagonal condition is set equality with the diagonal.

#ifndef CYLTQFT_THEORY_HPP_
#define CYLTQFT_THEORY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "cyltqft/ccob.hpp"
#include "cyltqft/finset.hpp"
#include "cyltqft/report.hpp"

namespace cyltqft {

class LocalTheory {
 public:
  virtual ~LocalTheory() = default;

  /// Short descriptive name, e.g. "constant(S={0,1})".
  virtual std::string name() const = 0;

  virtual FinSet germ_space(const CobObject& s) const = 0;
  virtual FinSet solution_space(const Body& x) const = 0;
  /// r_X : L_X -> L_{boundary(X)}.
  virtual FinMap restriction(const Body& x) const = 0;
  /// L_S -> L_{sub_object(S, part)}.
  virtual FinMap germ_restrict(const CobObject& s, const FinSet& part) const = 0;
  /// L_X -> L_{sub_body(X, regions)}.
  virtual FinMap region_restrict(const Body& x, const FinSet& regions) const = 0;
  /// The gluing map L_{X_gl} -> L_X of a valid triple.
  virtual FinMap gluing(const GluingTriple& t) const = 0;
  /// L_S -> L_S' for phi : S -> S'.
  virtual FinMap on_object_diffeo(const ObjectDiffeo& phi) const = 0;
  /// L_X -> L_Y for Phi : X -> Y.
  virtual FinMap on_body_diffeo(const BodyDiffeo& phi) const = 0;
};

using TheoryPtr = std::shared_ptr<const LocalTheory>;

/// Solutions are locally constant S-valued functions: one value per region,
/// germs one value per component. Throws InputError if S is empty.
TheoryPtr constant_sheaf_theory(const FinSet& s);

/// Solutions are arbitrary S-valued functions on the boundary components,
/// and gluing extends by `fill` on the glued parts. Throws InputError unless
/// fill is an element of S.
TheoryPtr free_boundary_theory(const FinSet& s, const std::string& fill);

// Derived maps. All of them go through the theory's own restriction and
// diffeomorphism actions.

/// L_{A+B} -> L_A x L_B (pair tokens), for the union built by
/// disjoint_union(a, b).
FinMap split_germ(const LocalTheory& t, const CobObject& a, const CobObject& b);
/// L_{X+Y} -> L_X x L_Y, for the union built by disjoint_union(x, y).
FinMap split_solution(const LocalTheory& t, const Body& x, const Body& y);
/// The two factors of split_solution: L_{X+Y} -> L_X and L_{X+Y} -> L_Y.
std::pair<FinMap, FinMap> solution_summands(const LocalTheory& t, const Body& x, const Body& y);

/// L_M -> L_{M.source}: restriction to the reversed source, read in L_source.
/// Throws TheoryViolation if L_{-S} and L_S differ.
FinMap source_germ(const LocalTheory& t, const Cobordism& m);
/// L_M -> L_{M.target}.
FinMap target_germ(const LocalTheory& t, const Cobordism& m);

/// Everything the auditor quantifies over.
struct TheoryUniverse {
  std::vector<CobObject> objects;
  std::vector<Cobordism> cobordisms;
  /// Diffeomorphisms between universe cobordisms (typically automorphisms).
  std::vector<CobDiffeo> diffeos;
  std::vector<ObjectDiffeo> object_diffeos;
  /// Split orders tried per triple in the associativity check.
  std::size_t max_splits_per_triple = 3;
};

/// The nine axiom names, in report order.
const std::vector<std::string>& axiom_names();

/// Evaluates every axiom pointwise over the universe. Never throws on a
/// violated axiom; violations become failed records.
AxiomReport check_axioms(const LocalTheory& t, const TheoryUniverse& u);

}  // namespace cyltqft

#endif  // CYLTQFT_THEORY_HPP_
