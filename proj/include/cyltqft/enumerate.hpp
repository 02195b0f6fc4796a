// Exhaustive generators for the finite universes the law suites run over.

#ifndef CYLTQFT_ENUMERATE_HPP_
#define CYLTQFT_ENUMERATE_HPP_

#include <cstddef>
#include <vector>

#include "cyltqft/ccob.hpp"
#include "cyltqft/cyl.hpp"
#include "cyltqft/fsgrp.hpp"
#include "cyltqft/theory.hpp"

namespace cyltqft {

/// Row-major tables t[a * n + b] of every associative operation on
/// {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> semigroup_tables(std::size_t n);

/// Left-zero, right-zero, null, cyclic, max and min operations on {0..n-1}.
std::vector<std::vector<std::size_t>> semigroup_families(std::size_t n);

/// A fibered semi-group over {"x0", ...} with the given fiber sizes and one
/// table per fiber. Total elements are numbered fiber by fiber.
FiberedSemiGroup fibered_from_tables(const std::vector<std::size_t>& fibers,
                                     const std::vector<const std::vector<std::size_t>*>& tables);

/// Every fibered semi-group with |X| <= max_base and |E| <= max_total, up to
/// relabelling the base: fiber sizes are listed in nonincreasing order, and
/// each fiber carries any associative operation. Fibers larger than
/// `exhaustive_fiber` only carry the operations of semigroup_families.
std::vector<FiberedSemiGroup> enumerate_fsgrps(std::size_t max_total, std::size_t max_base,
                                               std::size_t exhaustive_fiber = 4);

/// canonical_object(p, m) for every p + m <= max_components.
std::vector<CobObject> enumerate_objects(std::size_t max_components);

/// Every cobordism between objects of enumerate_objects(max_components)
/// with at most max_regions regions, one per orbit of the permutations of
/// like-signed boundary components. Regions are "r0", "r1", ...
std::vector<Cobordism> enumerate_cobordisms(std::size_t max_components, std::size_t max_regions);

/// Orientation-preserving permutations of the components.
std::vector<ObjectDiffeo> automorphisms(const CobObject& s);
/// Every diffeomorphism M -> M.
std::vector<CobDiffeo> automorphisms(const Cobordism& m);

/// Objects, cobordisms and all their automorphisms at the given bounds.
TheoryUniverse theory_universe(std::size_t max_components, std::size_t max_regions);
FunctorUniverse functor_universe(std::size_t max_components, std::size_t max_regions);

}  // namespace cyltqft

#endif  // CYLTQFT_ENUMERATE_HPP_
