// Small hand-built instances shared by the test binaries.

#ifndef CYLTQFT_TESTS_BUILDERS_HPP_
#define CYLTQFT_TESTS_BUILDERS_HPP_

#include <functional>
#include <string>

#include "cyltqft/bimod.hpp"
#include "cyltqft/finset.hpp"
#include "cyltqft/fsgrp.hpp"

namespace testing_builders {

using namespace cyltqft;

// {0..n-1} over a point with the given operation on indices.
inline FiberedSemiGroup over_point(std::size_t n,
                                   std::function<std::size_t(std::size_t, std::size_t)> op) {
  FinSet e = FinSet::range(n);
  FinMap pi(e, FinSet{"*"}, std::vector<std::size_t>(n, 0));
  return FiberedSemiGroup::tabulate(pi, op);
}

inline FiberedSemiGroup cyclic(std::size_t n) {
  return over_point(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

inline FiberedSemiGroup subtraction(std::size_t n) {
  return over_point(n, [n](std::size_t a, std::size_t b) { return (a + n - b) % n; });
}

inline FiberedSemiGroup singleton() { return over_point(1, [](auto, auto) { return 0; }); }

// A carrier over a point base, acted on from the left by `e` through
// `act(e_index, w_index)` and trivially on the right by a singleton.
inline FiberedBimodule left_module_over_point(
    const FiberedSemiGroup& e, std::size_t omega,
    std::function<std::size_t(std::size_t, std::size_t)> act) {
  FinSet om = FinSet::range(omega);
  FinMap s(om, e.base(), std::vector<std::size_t>(omega, 0));
  FiberedSemiGroup one = singleton();
  FinMap t(om, one.base(), std::vector<std::size_t>(omega, 0));
  return FiberedBimodule::tabulate(e, one, s, t, act,
                                   [](std::size_t w, std::size_t) { return w; });
}

}  // namespace testing_builders

#endif  // CYLTQFT_TESTS_BUILDERS_HPP_
