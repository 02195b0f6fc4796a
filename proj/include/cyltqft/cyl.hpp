// The cylinder construction.
//
// For a local field theory L: the cylinder semi-group E_S of germs over
// solutions on S x [0,1], multiplied by gluing two cylinders and collapsing
// the collar; the cylinder bimodule Omega_M of solutions on a cobordism,
// acted on by the cylinder semi-groups of its ends; and the associator
// Omega_{M N} -> Omega_M (*) Omega_N given by gluing.

#ifndef CYLTQFT_CYL_HPP_
#define CYLTQFT_CYL_HPP_

#include <map>
#include <string>
#include <vector>

#include "cyltqft/bimod.hpp"
#include "cyltqft/ccob.hpp"
#include "cyltqft/fsgrp.hpp"
#include "cyltqft/report.hpp"
#include "cyltqft/theory.hpp"

namespace cyltqft {

/// E_S. Throws TheoryViolation if the gluing map of the collar triple is not
/// a bijection onto a set containing every fibered pair.
FiberedSemiGroup cylinder_semigroup(const LocalTheory& t, const CobObject& s);
/// The same table built from the right collar instead of the left one.
FiberedSemiGroup cylinder_semigroup_right(const LocalTheory& t, const CobObject& s);

/// E_phi = (L on phi x [0,1], L on phi).
FsgMorphism cylinder_fsg_morphism(const LocalTheory& t, const ObjectDiffeo& phi);

/// Omega_M over E_source and E_target.
FiberedBimodule cylinder_bimodule(const LocalTheory& t, const Cobordism& m);

/// (E_phi, L_Phi, E_psi) for Phi with ends phi and psi.
EquivariantMorphism cylinder_bimodule_morphism(const LocalTheory& t, const CobDiffeo& d);

/// A_{M,N}: Omega_{glue(M,N)} -> Omega_M (*) Omega_N.
EquivariantMorphism associator(const LocalTheory& t, const Cobordism& m, const Cobordism& n);

/// Memoizes the constructions above by printed object or cobordism.
class CylinderFunctor {
 public:
  explicit CylinderFunctor(TheoryPtr t) : theory_(std::move(t)) {}

  const LocalTheory& theory() const { return *theory_; }

  const FiberedSemiGroup& semigroup(const CobObject& s);
  const FiberedBimodule& bimodule(const Cobordism& m);
  FsgMorphism semigroup_morphism(const ObjectDiffeo& phi);
  EquivariantMorphism bimodule_morphism(const CobDiffeo& d);
  const EquivariantMorphism& associator(const Cobordism& m, const Cobordism& n);

 private:
  TheoryPtr theory_;
  std::map<std::string, FiberedSemiGroup> sgrps_;
  std::map<std::string, FiberedBimodule> bimods_;
  std::map<std::string, EquivariantMorphism> assocs_;
};

struct FunctorUniverse {
  std::vector<CobObject> objects;
  std::vector<Cobordism> cobordisms;
  std::vector<ObjectDiffeo> object_diffeos;
  /// Diffeomorphisms between universe cobordisms.
  std::vector<CobDiffeo> diffeos;
  /// Composable triples checked for the hexagon, per cobordism; 0 = all.
  std::size_t max_triples_per_cobordism = 0;
};

/// The double functor laws. Checks: "source/target", "identity",
/// "identity morphisms", "functoriality", "associator",
/// "associator naturality", "hexagon", "monoidality", "involution",
/// "rigidity", "well-definedness". A construction refused by the theory is
/// a failed record naming the violated guard.
FunctorLawReport verify_double_functor(CylinderFunctor& f, const FunctorUniverse& u);

}  // namespace cyltqft

#endif  // CYLTQFT_CYL_HPP_
