// Fibered semi-groups (E, X, pi, mu) over finite sets and their morphisms.
//
// mu is stored as a total map on the canonical fiber-product carrier
// E x_pi E, so the multiplication is defined exactly on pairs with equal
// projection. Construction only checks shapes; the two diagrams are checked
// by validate_fsgrp.

#ifndef CYLTQFT_FSGRP_HPP_
#define CYLTQFT_FSGRP_HPP_

#include <memory>
#include <string>
#include <vector>

#include "cyltqft/finset.hpp"
#include "cyltqft/report.hpp"

namespace cyltqft {

class FiberedSemiGroup {
 public:
  /// A one-point fibered semi-group over a point.
  FiberedSemiGroup();

  /// Throws InputError unless proj.dom == mul.cod and mul.dom is the
  /// fiber-product carrier of proj with itself.
  FiberedSemiGroup(FinMap proj, FinMap mul);

  /// Builds mu from a product on indices; `f(a, b)` is only called for
  /// pairs with equal projection.
  template <typename F>
  static FiberedSemiGroup tabulate(FinMap proj, F&& f) {
    PairSet p = fiber_product(proj, proj);
    FinMap mul = FinMap::tabulate(p.carrier(), proj.dom(), [&](std::size_t k) {
      return f(p.left()(k), p.right()(k));
    });
    return FiberedSemiGroup(std::move(proj), std::move(mul));
  }

  const FinSet& total() const { return impl_->proj.dom(); }
  const FinSet& base() const { return impl_->proj.cod(); }
  const FinMap& proj() const { return impl_->proj; }
  const FinMap& mul() const { return impl_->mul; }
  const PairSet& pairs() const { return impl_->pairs; }

  /// Product of total-space indices a and b; they must share a fiber.
  std::size_t operator()(std::size_t a, std::size_t b) const {
    return impl_->mul(impl_->pairs.at(a, b));
  }

  /// Both diagrams commute. Computed once per instance.
  bool valid() const;

  friend bool operator==(const FiberedSemiGroup& a, const FiberedSemiGroup& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  struct Impl {
    FinMap proj;
    FinMap mul;
    PairSet pairs;
    mutable int valid = -1;
  };
};

struct FsgMorphism {
  FiberedSemiGroup from;
  FiberedSemiGroup to;
  FinMap total_map;  // phi: E -> E'
  FinMap base_map;   // psi: X -> X'

  friend bool operator==(const FsgMorphism&, const FsgMorphism&) = default;
};

/// Checks "compatibility" (pi mu = pi p for both projections p) and
/// "associativity" (mu (mu x id) = mu (id x mu) on triples).
ValidationReport validate_fsgrp(const FiberedSemiGroup& f,
                                const std::string& instance = "fsgrp");

struct AssociativityWitness {
  std::string triple;  // "(a,b,c)"
  std::string detail;
};

/// Every triple in one fiber where (ab)c and a(bc) disagree or are undefined.
std::vector<AssociativityWitness> associativity_witnesses(const FiberedSemiGroup& f);

/// Throws InputError naming `what` unless f validates.
void require_valid(const FiberedSemiGroup& f, const char* what);

/// mu is a bijection from E x_pi E onto E.
bool is_rigid(const FiberedSemiGroup& f);

/// Same E, X, pi with mu_op(a, b) = mu(b, a).
FiberedSemiGroup opposite(const FiberedSemiGroup& f);

/// Componentwise product with pair tokens on total space and base.
FiberedSemiGroup product_fsgrp(const FiberedSemiGroup& f, const FiberedSemiGroup& g);

/// The trivial fibered semi-group on S: pi = id, mu the diagonal projection.
FiberedSemiGroup trivial_fsgrp(const FinSet& s);

/// Checks "projection" (pi' phi = psi pi) and "multiplication"
/// (phi mu = mu' (phi x phi)). Throws InputError on shape mismatch.
ValidationReport validate_morphism(const FsgMorphism& m,
                                   const std::string& instance = "morphism");

FsgMorphism identity_morphism(const FiberedSemiGroup& f);

/// g after f. Throws InputError unless f.to == g.from.
FsgMorphism compose(const FsgMorphism& g, const FsgMorphism& f);

/// The symmetry F x G -> G x F, (a, b) |-> (b, a).
FsgMorphism swap_morphism(const FiberedSemiGroup& f, const FiberedSemiGroup& g);

/// Short structural summary, equal for equal fibered semi-groups; used to
/// bucket instances by shape.
std::string fingerprint(const FiberedSemiGroup& f);

}  // namespace cyltqft

#endif  // CYLTQFT_FSGRP_HPP_
