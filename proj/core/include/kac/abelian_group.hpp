#pragma once

// Finitely generated abelian groups Z^r x Z/n_1 x ... x Z/n_s, written
// additively; the neutral element is the zero tuple.

#include <cstdint>
#include <string>
#include <vector>

#include "kac/error.hpp"

namespace kac {

class GroupElement;

class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion);
  static AbelianGroup integers(std::size_t rank) { return AbelianGroup(rank, {}); }
  static AbelianGroup cyclic(std::int64_t n) { return AbelianGroup(0, {n}); }

  std::size_t free_rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t arity() const { return rank_ + torsion_.size(); }

  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement zero() const;
  // i-th standard generator
  GroupElement generator(std::size_t i) const;

  std::string to_string() const;  // "Z^2 x Z/2"
  bool operator==(const AbelianGroup& o) const {
    return rank_ == o.rank_ && torsion_ == o.torsion_;
  }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

class GroupElement {
 public:
  const AbelianGroup& group() const { return group_; }
  const std::vector<std::int64_t>& coords() const { return c_; }
  bool is_zero() const;
  // 0 for elements of infinite order.
  std::int64_t order() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement times(std::int64_t k) const;

  bool operator==(const GroupElement& o) const { return c_ == o.c_ && group_ == o.group_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  // Lexicographic on canonical coordinates.
  bool operator<(const GroupElement& o) const { return c_ < o.c_; }
  std::string to_string() const;  // "(1,0̄)"

 private:
  friend class AbelianGroup;
  GroupElement(AbelianGroup g, std::vector<std::int64_t> c) : group_(std::move(g)), c_(std::move(c)) {}
  AbelianGroup group_;
  std::vector<std::int64_t> c_;
};

// A homomorphism given by the images of the standard generators. Throws
// unless n_i * image_i = 0 for each torsion generator of order n_i.
class GroupHom {
 public:
  GroupHom(AbelianGroup source, AbelianGroup target, std::vector<GroupElement> images);
  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  GroupElement operator()(const GroupElement& x) const;

 private:
  AbelianGroup source_, target_;
  std::vector<GroupElement> images_;
};

}  // namespace kac
