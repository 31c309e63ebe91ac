#pragma once

// Z/2-gradings up to isomorphism over small prime fields, counted two ways.

#include <cstdint>
#include <set>
#include <vector>

#include "kac/gradings.hpp"

namespace kac {

struct CensusResult {
  std::size_t group_order = 0;  // 2 |SL2(F_q)|^2
  std::size_t involutions = 0;  // elements with x^2 = 1, identity included
  std::size_t classes = 0;
  std::vector<GradingLabel> class_labels;  // classify() of one representative each
  std::vector<std::size_t> class_sizes;
};

// Enumerates {Φ(f,g), Φ(f,g)τ} (k10) or {Ψ(f,g), Ψ(f,g)∘swap} (k3xk3,
// jwxjw) over F_q, takes the ±1 eigenspace grading of every involution and
// counts orbits of these gradings under the whole group.
CensusResult z2_census(const SuperAlgebra& a, std::uint64_t budget = 200'000);

// Canonical labels of all Γ¹/Γ² gradings by a finite group.
std::set<GradingLabel> enumerate_labels(const AbelianGroup& g);

}  // namespace kac
