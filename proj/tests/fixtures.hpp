#ifndef STABKIT_TESTS_FIXTURES_HPP
#define STABKIT_TESTS_FIXTURES_HPP

#include "stabkit/qp.hpp"

namespace fixtures {

using namespace stabkit;
using qp::Arrow;
using qp::CycleTerm;
using qp::Potential;
using qp::Quiver;
using qp::QuiverWithPotential;

inline QuiverWithPotential a1() { return {Quiver({1}, {}), Potential()}; }

inline QuiverWithPotential a2() {
  return {Quiver({1, 2}, {{"a", 1, 2}}), Potential()};
}

inline QuiverWithPotential a3() {
  return {Quiver({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}}), Potential()};
}

// 3-cycle with the full cycle as potential: alpha: 1->2, beta: 2->3,
// gamma: 3->1, W = alpha.beta.gamma.
inline QuiverWithPotential three_cycle(stabkit::Rat coeff = stabkit::Rat(1)) {
  return {Quiver({1, 2, 3}, {{"alpha", 1, 2}, {"beta", 2, 3}, {"gamma", 3, 1}}),
          Potential({{coeff, {"alpha", "beta", "gamma"}}})};
}

inline QuiverWithPotential three_cycle_no_potential() {
  return {Quiver({1, 2, 3}, {{"alpha", 1, 2}, {"beta", 2, 3}, {"gamma", 3, 1}}), Potential()};
}

}  // namespace fixtures

#endif
