#include "kac/catalog.hpp"

#include <array>
#include <map>
#include <mutex>

namespace kac {

namespace {

void require_odd_characteristic(const ScalarDomain& dom) {
  if (dom.characteristic() == 2) throw Error("characteristic 2 is not supported");
}

template <typename Build>
SuperAlgebra memoized(const char* key, const ScalarDomain& dom, Build build) {
  static std::mutex mu;
  static std::map<std::pair<std::string, const detail::DomainData*>, SuperAlgebra> cache;
  std::lock_guard lock(mu);
  auto k = std::make_pair(std::string(key), dom.data());
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  SuperAlgebra a = build();
  cache.emplace(k, a);
  return a;
}

// Shared skeleton of K3 and J(W): basis (e, u, v) with e*e = e,
// e*x = x*e = c*x on W, and u*v = -(v*u) = e.
SuperAlgebra three_dim(const ScalarDomain& dom, const Scalar& c, bool unital,
                       std::vector<std::string> labels) {
  StructureBuilder sb(dom, 3);
  sb.add(0, 0, 0, Scalar(dom, 1));
  for (std::size_t x : {1, 2}) {
    sb.add(0, x, x, c);
    sb.add(x, 0, x, c);
  }
  sb.add(1, 2, 0, Scalar(dom, 1));
  sb.add(2, 1, 0, Scalar(dom, -1));
  std::optional<Vector> unity;
  if (unital) unity = unit_vector(dom, 3, 0);
  return sb.build({0, 1, 1}, std::move(unity), std::move(labels));
}

const char* k3_name[3] = {"a", "u", "v"};

}  // namespace

K3Form::K3Form(const ScalarDomain& dom) : m_(dom, 3, 3) {
  m_(0, 0) = Scalar::fraction(dom, 1, 2);
  m_(1, 2) = Scalar(dom, 1);
  m_(2, 1) = Scalar(dom, -1);
}

Scalar K3Form::evaluate(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Scalar s(m_.domain());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!m_(i, j).is_zero()) s += x[i] * m_(i, j) * y[j];
    }
  }
  return s;
}

SuperAlgebra kaplansky_k3(const ScalarDomain& dom) {
  require_odd_characteristic(dom);
  return memoized("k3", dom, [&] {
    return three_dim(dom, Scalar::fraction(dom, 1, 2), false, {"a", "u", "v"});
  });
}

SuperAlgebra superform_jw(const ScalarDomain& dom) {
  require_odd_characteristic(dom);
  return memoized("jw", dom,
                  [&] { return three_dim(dom, Scalar(dom, 1), true, {"1", "u", "v"}); });
}

std::size_t k10::tensor_index(std::size_t x, std::size_t y) {
  static constexpr std::array<std::array<std::size_t, 3>, 3> idx{{
      {aa, au, av},
      {ua, uu, uv},
      {va, vu, vv},
  }};
  return idx.at(x).at(y);
}

SuperAlgebra kac_k10(const ScalarDomain& dom) {
  require_odd_characteristic(dom);
  return memoized("k10", dom, [&] {
    const SuperAlgebra k3 = kaplansky_k3(dom);
    const K3Form form(dom);
    const Scalar three_quarters = Scalar::fraction(dom, 3, 4);
    StructureBuilder sb(dom, 10);
    std::vector<std::string> labels(10);
    labels[0] = "1";
    std::vector<int> parity(10, 0);
    sb.add(0, 0, 0, Scalar(dom, 1));
    for (std::size_t i = 1; i < 10; ++i) {
      sb.add(0, i, i, Scalar(dom, 1));
      sb.add(i, 0, i, Scalar(dom, 1));
    }
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 3; ++y) {
        const std::size_t l = k10::tensor_index(x, y);
        labels[l] = std::string(k3_name[x]) + "⊗" + k3_name[y];
        parity[l] = (k3.parity(x) + k3.parity(y)) & 1;
        for (std::size_t z = 0; z < 3; ++z) {
          for (std::size_t t = 0; t < 3; ++t) {
            const std::size_t r = k10::tensor_index(z, t);
            // (x⊗y)(z⊗t) = (-1)^{|y||z|} (xz⊗yt - 3/4 (x|z)(y|t) 1)
            Scalar sign(dom, (k3.parity(y) & k3.parity(z)) ? -1 : 1);
            for (const auto& p : k3.product_terms(x, z)) {
              for (const auto& q : k3.product_terms(y, t)) {
                sb.add(l, r, k10::tensor_index(p.index, q.index), sign * p.coeff * q.coeff);
              }
            }
            Scalar correction = form(x, z) * form(y, t);
            if (!correction.is_zero()) sb.add(l, r, 0, -(sign * three_quarters * correction));
          }
        }
      }
    }
    return sb.build(std::move(parity), unit_vector(dom, 10, 0), std::move(labels));
  });
}

SuperAlgebra kac_k9(const ScalarDomain& dom) {
  if (dom.characteristic() != 3) {
    throw Error("K9 is defined only in characteristic 3, not over " + dom.descriptor());
  }
  return memoized("k9", dom, [&] {
    const std::array<std::size_t, 9> idx{1, 2, 3, 4, 5, 6, 7, 8, 9};
    return basis_subalgebra(kac_k10(dom), idx);
  });
}

SuperAlgebra k3xk3(const ScalarDomain& dom) {
  return memoized("k3xk3", dom,
                  [&] { return direct_product(kaplansky_k3(dom), kaplansky_k3(dom)); });
}

SuperAlgebra jwxjw(const ScalarDomain& dom) {
  return memoized("jwxjw", dom,
                  [&] { return direct_product(superform_jw(dom), superform_jw(dom)); });
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"k3", "jw", "k10", "k9", "k3xk3", "jwxjw"};
  return names;
}

SuperAlgebra catalog_algebra(std::string_view name, const ScalarDomain& dom) {
  if (name == "k3") return kaplansky_k3(dom);
  if (name == "jw") return superform_jw(dom);
  if (name == "k10") return kac_k10(dom);
  if (name == "k9") return kac_k9(dom);
  if (name == "k3xk3") return k3xk3(dom);
  if (name == "jwxjw") return jwxjw(dom);
  throw Error("unknown algebra '" + std::string(name) + "'");
}

}  // namespace kac
