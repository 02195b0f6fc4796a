// Fibered bimodules, equivariant morphisms, horizontal composition and the
// double-category law suite over them.
//
// Horizontal composites use chain tokens "[w|v]", and chains splice, so
// (A (*) B) (*) C and A (*) (B (*) C) are literally the same object.

#ifndef CYLTQFT_BIMOD_HPP_
#define CYLTQFT_BIMOD_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cyltqft/finset.hpp"
#include "cyltqft/fsgrp.hpp"
#include "cyltqft/report.hpp"

namespace cyltqft {

class FiberedBimodule {
 public:
  FiberedBimodule() : FiberedBimodule(FiberedSemiGroup(), FiberedSemiGroup(),
                                      FinMap::identity(FinSet{"*"}),
                                      FinMap::identity(FinSet{"*"}),
                                      FinMap(FinSet{"(*,*)"}, FinSet{"*"}, {0}),
                                      FinMap(FinSet{"(*,*)"}, FinSet{"*"}, {0})) {}

  /// Throws InputError unless every map has the shape the seven diagrams
  /// need: lact on E x_{pi,s} Omega and ract on Omega x_{t,pi'} E'.
  FiberedBimodule(FiberedSemiGroup left, FiberedSemiGroup right, FinMap src,
                  FinMap tgt, FinMap lact, FinMap ract);

  /// Builds both actions from index functions on (e, w) and (w, e').
  template <typename L, typename R>
  static FiberedBimodule tabulate(FiberedSemiGroup left, FiberedSemiGroup right,
                                  FinMap src, FinMap tgt, L&& l, R&& r) {
    PairSet lp = fiber_product(left.proj(), src);
    PairSet rp = fiber_product(tgt, right.proj());
    const FinSet& omega = src.dom();
    FinMap lact = FinMap::tabulate(lp.carrier(), omega, [&](std::size_t k) {
      return l(lp.left()(k), lp.right()(k));
    });
    FinMap ract = FinMap::tabulate(rp.carrier(), omega, [&](std::size_t k) {
      return r(rp.left()(k), rp.right()(k));
    });
    return FiberedBimodule(std::move(left), std::move(right), std::move(src),
                           std::move(tgt), std::move(lact), std::move(ract));
  }

  const FiberedSemiGroup& left() const { return impl_->left; }
  const FiberedSemiGroup& right() const { return impl_->right; }
  const FinSet& carrier() const { return impl_->src.dom(); }
  const FinMap& src() const { return impl_->src; }
  const FinMap& tgt() const { return impl_->tgt; }
  const FinMap& lact() const { return impl_->lact; }
  const FinMap& ract() const { return impl_->ract; }
  const PairSet& lpairs() const { return impl_->lpairs; }
  const PairSet& rpairs() const { return impl_->rpairs; }

  /// lambda(e, w) and rho(w, e') on indices; the pair must be composable.
  std::size_t act_left(std::size_t e, std::size_t w) const {
    return impl_->lact(impl_->lpairs.at(e, w));
  }
  std::size_t act_right(std::size_t w, std::size_t e) const {
    return impl_->ract(impl_->rpairs.at(w, e));
  }

  /// All seven diagrams commute and both semi-groups validate.
  bool valid() const;

  friend bool operator==(const FiberedBimodule& a, const FiberedBimodule& b);

 private:
  struct Impl {
    FiberedSemiGroup left;
    FiberedSemiGroup right;
    FinMap src;
    FinMap tgt;
    FinMap lact;
    FinMap ract;
    PairSet lpairs;
    PairSet rpairs;
    mutable int valid = -1;
  };
  std::shared_ptr<const Impl> impl_;
};

struct EquivariantMorphism {
  FiberedBimodule from;
  FiberedBimodule to;
  FsgMorphism left;   // phi
  FsgMorphism right;  // psi
  FinMap mid;         // Phi: Omega -> Omega'

  friend bool operator==(const EquivariantMorphism&, const EquivariantMorphism&) = default;
};

/// The seven diagrams: "left associativity", "right associativity",
/// "left source", "left target", "right target", "right source" and
/// "actions commute".
ValidationReport validate_bimodule(const FiberedBimodule& b,
                                   const std::string& instance = "bimodule");

/// Both actions are bijections.
bool is_rigid(const FiberedBimodule& b);

/// Checks "source", "target", "left action" and "right action" squares plus
/// both boundary morphisms. Throws InputError on shape mismatch.
ValidationReport validate_equivariant(const EquivariantMorphism& m,
                                      const std::string& instance = "morphism");

/// i_E: carrier E, s = t = pi, lambda = rho = mu.
FiberedBimodule identity_bimodule(const FiberedSemiGroup& e);

/// Fiber product of t_A and s_B with flattened tokens and the induced outer
/// actions. Throws InputError if A.right != B.left or either input fails
/// validation.
FiberedBimodule hcompose(const FiberedBimodule& a, const FiberedBimodule& b);

/// (phi, Phi (*) Psi, chi). Throws InputError unless m1.right == m2.left.
EquivariantMorphism hcompose_mor(const EquivariantMorphism& m1,
                                 const EquivariantMorphism& m2);

EquivariantMorphism identity_equivariant(const FiberedBimodule& b);

/// i_phi: the morphism i_E -> i_E' induced by phi.
EquivariantMorphism identity_bimodule_mor(const FsgMorphism& phi);

/// n after m. Throws InputError unless m.to == n.from.
EquivariantMorphism vcompose(const EquivariantMorphism& n, const EquivariantMorphism& m);

/// L^A: i_E (*) A -> A with mid map lambda.
EquivariantMorphism left_unitor(const FiberedBimodule& a);
/// R^A: A (*) i_E' -> A with mid map rho.
EquivariantMorphism right_unitor(const FiberedBimodule& a);

/// Componentwise product over product_fsgrp of the boundary semi-groups.
FiberedBimodule product_bimodule(const FiberedBimodule& a, const FiberedBimodule& b);

/// (A (*) B) x (C (*) D) -> (A x C) (*) (B x D), ([a|b], [c|d]) |-> [(a,c)|(b,d)].
EquivariantMorphism interchange(const FiberedBimodule& a, const FiberedBimodule& b,
                                const FiberedBimodule& c, const FiberedBimodule& d);

struct LawUniverse {
  std::vector<FiberedSemiGroup> sgrps;   // identity bimodules are added
  std::vector<FiberedBimodule> bimodules;
  std::vector<EquivariantMorphism> morphisms;  // identities are added
  /// Product checks only pair semi-groups with at most this many elements.
  std::size_t monoidal_max_total = 2;
  /// Composable triples per bimodule are capped to keep runs bounded.
  std::size_t max_triples_per_bimodule = 64;
};

/// Runs the law suite. Laws: "bimodule axioms", "strict associativity",
/// "unitor naturality", "triangle", "middle triangle (rigid)",
/// "monoidality", "rigid closure". Audits: "middle triangle (lax)",
/// "unitor iso".
LawReport check_double_category_laws(const LawUniverse& u);

/// Short description of a bimodule's size, for report instances.
std::string describe(const FiberedBimodule& b);

}  // namespace cyltqft

#endif  // CYLTQFT_BIMOD_HPP_
