#pragma once

// Group gradings on superalgebras: construction, verification,
// classification up to isomorphism on k3xk3, jwxjw and k10.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kac/abelian_group.hpp"
#include "kac/morphisms.hpp"
#include "kac/superalgebra.hpp"

namespace kac {

class Grading {
 public:
  Grading(SuperAlgebra algebra, AbelianGroup group);

  const SuperAlgebra& algebra() const { return algebra_; }
  const AbelianGroup& group() const { return group_; }
  const std::map<GroupElement, Subspace>& components() const { return comps_; }
  std::vector<GroupElement> support() const;

  // Adds v to the component of degree g.
  void add(const GroupElement& g, std::span<const Scalar> v);
  void set_component(const GroupElement& g, Subspace s);
  // Zero subspace when g is outside the support.
  Subspace component(const GroupElement& g) const;
  // Degree of a nonzero homogeneous vector.
  std::optional<GroupElement> degree_of(std::span<const Scalar> v) const;

  bool operator==(const Grading& o) const;
  bool operator!=(const Grading& o) const { return !(*this == o); }

 private:
  SuperAlgebra algebra_;
  AbelianGroup group_;
  std::map<GroupElement, Subspace> comps_;
};

// Direct sum, A_g A_h ⊆ A_{g+h}, and A_g = (A_g ∩ A_0) ⊕ (A_g ∩ A_1).
Check verify_grading(const Grading& g);

// Γ¹(G; g1, g2) and Γ²(G; g, h) on k3xk3 or jwxjw.
Grading gamma1_k3k3(const SuperAlgebra& product, const GroupElement& g1,
                    const GroupElement& g2);
Grading gamma2_k3k3(const SuperAlgebra& product, const GroupElement& g, const GroupElement& h);
// family 1: (a, b) = (g1, g2); family 2: (a, b) = (g, h).
Grading gamma_k10(const SuperAlgebra& k10, int family, const GroupElement& a,
                  const GroupElement& b);
// Dispatches on the algebra (k3xk3, jwxjw or k10).
Grading gamma(const SuperAlgebra& a, int family, const GroupElement& x, const GroupElement& y);

using OddAssignment = std::vector<std::pair<Vector, GroupElement>>;

// The grading generated by degrees on a homogeneous basis of A_1 (and the
// unity, which always has degree e). Products are taken until nothing new
// appears. Throws Error naming the two products whose degrees collide, or
// when the generated components do not span A.
Grading propagate_from_odd(const SuperAlgebra& a, const AbelianGroup& group,
                           const OddAssignment& odd);

Grading coarsen(const Grading& g, const GroupHom& hom);
// The grading φ(A_g).
Grading transport(const Grading& g, const LinearMap& phi);

struct GradingLabel {
  int family = 1;
  // family 1: the two classes {g, -g} by their least element, sorted;
  // family 2: (least of {g, g+h, -g, -g+h}, h).
  std::vector<GroupElement> params;

  bool operator==(const GradingLabel& o) const {
    return family == o.family && params == o.params;
  }
  bool operator<(const GradingLabel& o) const {
    return family != o.family ? family < o.family : params < o.params;
  }
  std::string to_string() const;
};

GradingLabel canonical_label(int family, const GroupElement& a, const GroupElement& b);

struct Classification {
  GradingLabel label;
  // Parameters read off the grading, and a map sending gamma(family, a, b)
  // onto the grading.
  GroupElement a, b;
  LinearMap normalizer;
};

// Throws Error for unsupported algebras or invalid gradings, Falsification
// when the procedure cannot bring a valid grading to normal form.
Classification classify(const Grading& g);

struct IsomorphismResult {
  bool isomorphic = false;
  std::string reason;
  std::optional<LinearMap> witness;
};

// Decides by canonical labels; on success the witness is an automorphism
// mapping each component of g onto the component of h of the same degree.
IsomorphismResult gradings_isomorphic(const Grading& g, const Grading& h);

}  // namespace kac
