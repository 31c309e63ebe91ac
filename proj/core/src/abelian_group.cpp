#include "kac/abelian_group.hpp"

#include <numeric>

namespace kac {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<std::int64_t> torsion)
    : rank_(free_rank), torsion_(std::move(torsion)) {
  for (auto n : torsion_) {
    if (n < 2) throw Error("torsion orders must be at least 2");
  }
}

GroupElement AbelianGroup::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != arity()) {
    throw Error("group element needs " + std::to_string(arity()) + " coordinates, got " +
                std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    coords[rank_ + i] = mod(coords[rank_ + i], torsion_[i]);
  }
  return GroupElement(*this, std::move(coords));
}

GroupElement AbelianGroup::zero() const {
  return GroupElement(*this, std::vector<std::int64_t>(arity(), 0));
}

GroupElement AbelianGroup::generator(std::size_t i) const {
  std::vector<std::int64_t> c(arity(), 0);
  c.at(i) = 1;
  return element(std::move(c));
}

std::string AbelianGroup::to_string() const {
  std::string s;
  if (rank_ > 0) s = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  for (auto n : torsion_) s += (s.empty() ? "" : " x ") + ("Z/" + std::to_string(n));
  return s.empty() ? "0" : s;
}

bool GroupElement::is_zero() const {
  for (auto x : c_) {
    if (x != 0) return false;
  }
  return true;
}

std::int64_t GroupElement::order() const {
  for (std::size_t i = 0; i < group_.free_rank(); ++i) {
    if (c_[i] != 0) return 0;
  }
  std::int64_t o = 1;
  for (std::size_t i = 0; i < group_.torsion().size(); ++i) {
    std::int64_t n = group_.torsion()[i];
    o = std::lcm(o, n / std::gcd(n, c_[group_.free_rank() + i]));
  }
  return o;
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  if (group_ != o.group_) throw Error("group elements from different groups");
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + o.c_[i];
  return group_.element(std::move(c));
}

GroupElement GroupElement::operator-() const { return times(-1); }
GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + (-o); }

GroupElement GroupElement::times(std::int64_t k) const {
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * c_[i];
  return group_.element(std::move(c));
}

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
    if (i >= group_.free_rank()) s += "̄";
  }
  return s + ")";
}

GroupHom::GroupHom(AbelianGroup source, AbelianGroup target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.arity()) throw Error("need one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].group() != target_) throw Error("image outside the target group");
    if (i >= source_.free_rank()) {
      std::int64_t n = source_.torsion()[i - source_.free_rank()];
      if (!images_[i].times(n).is_zero()) {
        throw Error("generator of order " + std::to_string(n) + " maps to " +
                    images_[i].to_string() + "; the map is not well defined");
      }
    }
  }
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (x.group() != source_) throw Error("element outside the source group");
  GroupElement r = target_.zero();
  for (std::size_t i = 0; i < images_.size(); ++i) r = r + images_[i].times(x.coords()[i]);
  return r;
}

}  // namespace kac
