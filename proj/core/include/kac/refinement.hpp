#pragma once

// Fine gradings and a refinement search.

#include <optional>
#include <string>
#include <vector>

#include "kac/gradings.hpp"

namespace kac {

// Γ¹(Z^2; (1,0), (0,1)) and Γ²(Z x Z/2; (1,0̄), (0,1̄)) on k3xk3, jwxjw or k10.
std::vector<Grading> fine_gradings(const SuperAlgebra& a);

// Whether the decomposition A = ⊕ pieces is the set of components of some
// group grading: every nonzero product of pieces lies in a single piece, and
// the pieces get pairwise distinct degrees in the universal group
// Z^m / <e_i + e_j - e_k : P_i P_j ⊆ P_k, P_i P_j != 0>.
bool realizable_as_grading(const SuperAlgebra& a, const std::vector<Subspace>& pieces);

struct Refinement {
  std::vector<Subspace> pieces;
  std::string description;
};

// Splits one component along a bipartition of its homogeneous echelon basis
// and returns the first split realizable as a grading, if any.
std::optional<Refinement> find_refinement(const Grading& g);

}  // namespace kac
