#include "kac/gradings.hpp"

#include <algorithm>
#include <array>

#include "kac/catalog.hpp"

namespace kac {

namespace {

enum class Kind { Product, K10 };

Kind kind_of(const SuperAlgebra& a) {
  const ScalarDomain& dom = a.domain();
  if (a.dim() == 6 && (a == k3xk3(dom) || a == jwxjw(dom))) return Kind::Product;
  if (a.dim() == 10 && a == kac_k10(dom)) return Kind::K10;
  throw Error("gradings are classified on k3xk3, jwxjw and k10 only");
}

void require_order_two(const GroupElement& h) {
  if (h.is_zero() || !h.times(2).is_zero()) {
    throw Error("h = " + h.to_string() + " must satisfy 2h = 0 and h != 0");
  }
}

// Basis coordinates for (x, y) in k3xk3 / jwxjw with x, y in span(u, v).
Vector product_odd(const ScalarDomain& dom, std::array<long, 2> x, std::array<long, 2> y) {
  Vector v = zero_vector(dom, 6);
  v[1] = Scalar(dom, x[0]), v[2] = Scalar(dom, x[1]);
  v[4] = Scalar(dom, y[0]), v[5] = Scalar(dom, y[1]);
  return v;
}

// K10 odd coordinates 6,7 / 8,9 correspond to k3xk3 coordinates 1,2 / 4,5.
constexpr std::array<std::size_t, 4> k10_odd{k10::ua, k10::va, k10::au, k10::av};
constexpr std::array<std::size_t, 4> product_odd_idx{1, 2, 4, 5};

Vector k10_to_product(std::span<const Scalar> v) {
  Vector r = zero_vector(v[0].domain(), 6);
  for (std::size_t i = 0; i < 4; ++i) r[product_odd_idx[i]] = v[k10_odd[i]];
  return r;
}

Matrix sl2_from_columns(const ScalarDomain& dom, std::span<const Scalar> x,
                        std::span<const Scalar> y) {
  Matrix m(dom, 2, 2);
  m(0, 0) = x[0], m(1, 0) = x[1], m(0, 1) = y[0], m(1, 1) = y[1];
  return m;
}

}  // namespace

// ------------------------------------------------------------------ Grading --

Grading::Grading(SuperAlgebra algebra, AbelianGroup group)
    : algebra_(std::move(algebra)), group_(std::move(group)) {}

std::vector<GroupElement> Grading::support() const {
  std::vector<GroupElement> s;
  for (const auto& [g, c] : comps_) {
    if (!c.empty()) s.push_back(g);
  }
  return s;
}

void Grading::add(const GroupElement& g, std::span<const Scalar> v) {
  if (g.group() != group_) throw Error("degree outside the grading group");
  auto it = comps_.find(g);
  if (it == comps_.end()) {
    it = comps_.emplace(g, Subspace(algebra_.domain(), algebra_.dim())).first;
  }
  it->second.insert(v);
}

void Grading::set_component(const GroupElement& g, Subspace s) {
  if (g.group() != group_) throw Error("degree outside the grading group");
  if (s.ambient() != algebra_.dim()) throw Error("component has the wrong ambient dimension");
  if (s.empty()) {
    comps_.erase(g);
  } else {
    comps_.insert_or_assign(g, std::move(s));
  }
}

Subspace Grading::component(const GroupElement& g) const {
  auto it = comps_.find(g);
  return it == comps_.end() ? Subspace(algebra_.domain(), algebra_.dim()) : it->second;
}

std::optional<GroupElement> Grading::degree_of(std::span<const Scalar> v) const {
  if (is_zero(v)) return std::nullopt;
  for (const auto& [g, c] : comps_) {
    if (c.contains(v)) return g;
  }
  return std::nullopt;
}

bool Grading::operator==(const Grading& o) const {
  if (group_ != o.group_ || algebra_.dim() != o.algebra_.dim()) return false;
  auto s = support(), t = o.support();
  if (s != t) return false;
  for (const auto& g : s) {
    if (comps_.at(g) != o.comps_.at(g)) return false;
  }
  return true;
}

Check verify_grading(const Grading& gr) {
  const SuperAlgebra& a = gr.algebra();
  Subspace total(a.domain(), a.dim());
  std::size_t sum = 0;
  for (const auto& [g, c] : gr.components()) {
    sum += c.dim();
    total = total + c;
    if (total.dim() != sum) {
      return Check::fail("components are not independent (at degree " + g.to_string() + ")");
    }
    if (!is_graded(a, c)) {
      return Check::fail("component of degree " + g.to_string() +
                         " is not a sum of even and odd parts");
    }
  }
  if (total.dim() != a.dim()) {
    return Check::fail("components span " + std::to_string(total.dim()) + " of " +
                       std::to_string(a.dim()) + " dimensions");
  }
  for (const auto& [g, c] : gr.components()) {
    for (const auto& [h, d] : gr.components()) {
      Subspace target = gr.component(g + h);
      for (const auto& x : c.basis()) {
        for (const auto& y : d.basis()) {
          Vector p = a.multiply(x, y);
          if (!target.contains(p)) {
            return Check::fail("product of degrees " + g.to_string() + " and " + h.to_string() +
                               " leaves degree " + (g + h).to_string() + ": (" +
                               format_vector(a, x) + ")(" + format_vector(a, y) + ") = " +
                               format_vector(a, p));
          }
        }
      }
    }
  }
  return Check::pass();
}

// ------------------------------------------------------------- constructors --

Grading gamma1_k3k3(const SuperAlgebra& product, const GroupElement& g1,
                    const GroupElement& g2) {
  if (kind_of(product) != Kind::Product) throw Error("gamma1_k3k3 needs k3xk3 or jwxjw");
  if (g1.group() != g2.group()) throw Error("parameters from different groups");
  const ScalarDomain& dom = product.domain();
  Grading gr(product, g1.group());
  const GroupElement e = g1.group().zero();
  gr.add(e, product.basis(0));
  gr.add(e, product.basis(3));
  gr.add(g1, product_odd(dom, {1, 0}, {0, 0}));
  gr.add(-g1, product_odd(dom, {0, 1}, {0, 0}));
  gr.add(g2, product_odd(dom, {0, 0}, {1, 0}));
  gr.add(-g2, product_odd(dom, {0, 0}, {0, 1}));
  if (auto c = verify_grading(gr); !c) throw Falsification("Γ¹ is not a grading: " + c.detail);
  return gr;
}

Grading gamma2_k3k3(const SuperAlgebra& product, const GroupElement& g, const GroupElement& h) {
  if (kind_of(product) != Kind::Product) throw Error("gamma2_k3k3 needs k3xk3 or jwxjw");
  if (g.group() != h.group()) throw Error("parameters from different groups");
  require_order_two(h);
  const ScalarDomain& dom = product.domain();
  Grading gr(product, g.group());
  Vector plus = add(product.basis(0), product.basis(3));
  Vector minus = sub(product.basis(0), product.basis(3));
  gr.add(g.group().zero(), plus);
  gr.add(h, minus);
  gr.add(g, product_odd(dom, {1, 0}, {1, 0}));
  gr.add(-g, product_odd(dom, {0, 1}, {0, 1}));
  gr.add(g + h, product_odd(dom, {1, 0}, {-1, 0}));
  gr.add(-(g + h), product_odd(dom, {0, 1}, {0, -1}));
  if (auto c = verify_grading(gr); !c) throw Falsification("Γ² is not a grading: " + c.detail);
  return gr;
}

Grading gamma_k10(const SuperAlgebra& k10a, int family, const GroupElement& x,
                  const GroupElement& y) {
  if (kind_of(k10a) != Kind::K10) throw Error("gamma_k10 needs k10");
  if (x.group() != y.group()) throw Error("parameters from different groups");
  const ScalarDomain& dom = k10a.domain();
  auto vec = [&](std::initializer_list<std::pair<std::size_t, long>> terms) {
    Vector v = k10a.zero();
    for (auto [i, c] : terms) v[i] = Scalar(dom, c);
    return v;
  };
  OddAssignment odd;
  if (family == 1) {
    odd = {{vec({{k10::ua, 1}}), x},
           {vec({{k10::va, 1}}), -x},
           {vec({{k10::au, 1}}), y},
           {vec({{k10::av, 1}}), -y}};
  } else if (family == 2) {
    require_order_two(y);
    odd = {{vec({{k10::ua, 1}, {k10::au, 1}}), x},
           {vec({{k10::va, 1}, {k10::av, 1}}), -x},
           {vec({{k10::ua, 1}, {k10::au, -1}}), x + y},
           {vec({{k10::va, 1}, {k10::av, -1}}), -(x + y)}};
  } else {
    throw Error("family must be 1 or 2");
  }
  Grading gr = [&] {
    try {
      return propagate_from_odd(k10a, x.group(), odd);
    } catch (const Error& e) {
      throw Falsification(std::string("odd data of the K10 grading is inconsistent: ") +
                          e.what());
    }
  }();
  if (auto c = verify_grading(gr); !c) throw Falsification("K10 grading fails: " + c.detail);
  return gr;
}

Grading gamma(const SuperAlgebra& a, int family, const GroupElement& x, const GroupElement& y) {
  if (kind_of(a) == Kind::K10) return gamma_k10(a, family, x, y);
  if (family == 1) return gamma1_k3k3(a, x, y);
  if (family == 2) return gamma2_k3k3(a, x, y);
  throw Error("family must be 1 or 2");
}

// -------------------------------------------------------------- propagation --

Grading propagate_from_odd(const SuperAlgebra& a, const AbelianGroup& group,
                           const OddAssignment& odd) {
  struct Gen {
    Vector v;
    GroupElement deg;
  };
  std::vector<Gen> gens;
  std::map<GroupElement, Subspace> comps;
  std::map<GroupElement, std::string> origin;
  Subspace total(a.domain(), a.dim());
  std::size_t sum = 0;

  auto insert = [&](const Vector& v, const GroupElement& d, const std::string& why) {
    if (is_zero(v)) return;
    auto it = comps.find(d);
    if (it == comps.end()) it = comps.emplace(d, Subspace(a.domain(), a.dim())).first;
    if (!it->second.insert(v)) return;
    ++sum;
    total.insert(v);
    if (total.dim() != sum) {
      // find the degree this vector collides with
      for (const auto& [g, c] : comps) {
        if (g == d) continue;
        Subspace both = c + it->second;
        if (both.dim() < c.dim() + it->second.dim()) {
          throw Error("conflicting degrees: " + why + " has degree " + d.to_string() +
                      " but meets degree " + g.to_string() + " from " + origin.at(g));
        }
      }
      throw Error("conflicting degrees: " + why + " of degree " + d.to_string() +
                  " is dependent on the other components");
    }
    origin.emplace(d, why);
    gens.push_back({v, d});
  };

  for (const auto& [v, d] : odd) {
    if (d.group() != group) throw Error("degree outside the grading group");
    if (homogeneous_parity(a, v) != 1 || is_zero(v)) {
      throw Error("assigned vector " + format_vector(a, v) + " is not odd");
    }
    insert(v, d, format_vector(a, v));
  }
  if (a.unity()) insert(*a.unity(), group.zero(), "the unity");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Gen x = gens[i], y = gens[j];
      auto name = [&](const Gen& p, const Gen& q) {
        return "(" + format_vector(a, p.v) + ")(" + format_vector(a, q.v) + ")";
      };
      insert(a.multiply(x.v, y.v), x.deg + y.deg, name(x, y));
      insert(a.multiply(y.v, x.v), x.deg + y.deg, name(y, x));
    }
  }
  if (total.dim() != a.dim()) {
    throw Error("the assigned vectors generate only " + std::to_string(total.dim()) + " of " +
                std::to_string(a.dim()) + " dimensions");
  }
  Grading gr(a, group);
  for (auto& [g, c] : comps) gr.set_component(g, std::move(c));
  return gr;
}

Grading coarsen(const Grading& g, const GroupHom& hom) {
  if (hom.source() != g.group()) throw Error("homomorphism source is not the grading group");
  Grading out(g.algebra(), hom.target());
  for (const auto& [d, c] : g.components()) {
    GroupElement img = hom(d);
    out.set_component(img, out.component(img) + c);
  }
  return out;
}

Grading transport(const Grading& g, const LinearMap& phi) {
  if (phi.source().dim() != g.algebra().dim()) throw Error("map does not act on the algebra");
  Grading out(phi.target(), g.group());
  for (const auto& [d, c] : g.components()) {
    for (const auto& v : c.basis()) out.add(d, phi(v));
  }
  return out;
}

// ------------------------------------------------------------------- labels --

std::string GradingLabel::to_string() const {
  std::string s = "family " + std::to_string(family) + " [";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? ", " : "") + params[i].to_string();
  return s + "]";
}

GradingLabel canonical_label(int family, const GroupElement& a, const GroupElement& b) {
  if (family == 1) {
    GroupElement x = std::min(a, -a), y = std::min(b, -b);
    if (y < x) std::swap(x, y);
    return {1, {x, y}};
  }
  if (family == 2) {
    require_order_two(b);
    GroupElement g = std::min({a, a + b, -a, -a + b});
    return {2, {g, b}};
  }
  throw Error("family must be 1 or 2");
}

// ------------------------------------------------------------ classification --

namespace {

struct ProductNormalForm {
  int family;
  GroupElement a, b;
  SL2Element f1, f2;
};

// The case analysis on a grading of k3xk3 / jwxjw.
ProductNormalForm normal_form_product(const Grading& gr) {
  const SuperAlgebra& p = gr.algebra();
  const ScalarDomain& dom = p.domain();
  const GroupElement e = gr.group().zero();
  const Subspace even = parity_subspace(p, 0);
  auto deg = [&](const Vector& v, const char* what) {
    auto d = gr.degree_of(v);
    if (!d) throw Falsification(std::string(what) + " " + format_vector(p, v) + " is not homogeneous");
    return *d;
  };
  // the coefficient c with x * y = c * (unit of the relevant factor(s))
  auto pairing = [&](const Vector& x, const Vector& y, std::size_t idx) {
    return p.multiply(x, y)[idx];
  };

  if (gr.component(e).contains(even)) {
    std::vector<std::pair<Vector, GroupElement>> u, v;
    for (int factor = 0; factor < 2; ++factor) {
      const std::size_t off = factor * 3;
      std::vector<Vector> w_factor{p.basis(off + 1), p.basis(off + 2)};
      Subspace wf = Subspace::span(dom, 6, w_factor);
      std::vector<std::pair<Vector, GroupElement>> hom;
      for (const auto& [g, c] : gr.components()) {
        for (const auto& x : c.intersect(wf).basis()) hom.emplace_back(x, g);
      }
      if (hom.size() != 2) {
        throw Falsification("factor " + std::to_string(factor + 1) +
                            " odd part is not a graded subspace");
      }
      Scalar lambda = pairing(hom[0].first, hom[1].first, off);
      if (lambda.is_zero()) throw Falsification("homogeneous odd basis is isotropic");
      u.push_back(hom[0]);
      v.emplace_back(scale(lambda.inverse(), hom[1].first), hom[1].second);
    }
    SL2Element f1(sl2_from_columns(dom, std::span(u[0].first).subspan(1, 2),
                                   std::span(v[0].first).subspan(1, 2)));
    SL2Element f2(sl2_from_columns(dom, std::span(u[1].first).subspan(4, 2),
                                   std::span(v[1].first).subspan(4, 2)));
    return {1, u[0].second, u[1].second, f1, f2};
  }

  const Vector diff = sub(p.basis(0), p.basis(3));
  const GroupElement h = deg(diff, "even element");
  const Subspace odd = parity_subspace(p, 1);
  for (const auto& [g, c] : gr.components()) {
    Subspace cg = c.intersect(odd);
    Subspace cm = gr.component(-g).intersect(odd);
    for (const auto& x : cg.basis()) {
      for (const auto& y : cm.basis()) {
        Vector prod = p.multiply(x, y);
        if (is_zero(prod)) continue;
        Scalar mu = prod[0];
        if (mu.is_zero() || prod[3] != mu) {
          throw Falsification("odd product of degree e is not a multiple of the even unit");
        }
        Vector yn = scale(mu.inverse(), y);
        SL2Element f1(sl2_from_columns(dom, std::span(x).subspan(1, 2), std::span(yn).subspan(1, 2)));
        SL2Element f2(sl2_from_columns(dom, std::span(x).subspan(4, 2), std::span(yn).subspan(4, 2)));
        return {2, g, h, f1, f2};
      }
    }
  }
  throw Falsification("no homogeneous odd pair multiplies to the even unit");
}

LinearMap family_map(const SuperAlgebra& a, const SL2Element& f, const SL2Element& g, bool swap) {
  if (kind_of(a) == Kind::K10) {
    LinearMap m = phi_auto(a, f, g);
    return swap ? m * tau_auto(a) : m;
  }
  return psi_auto(a, f, g, swap);
}

}  // namespace

Classification classify(const Grading& gr) {
  if (auto c = verify_grading(gr); !c) throw Error("not a grading: " + c.detail);
  const SuperAlgebra& a = gr.algebra();
  const Kind kind = kind_of(a);
  Grading on_product = gr;
  if (kind == Kind::K10) {
    OddAssignment odd;
    const Subspace odd_space = parity_subspace(a, 1);
    for (const auto& [g, c] : gr.components()) {
      for (const auto& v : c.intersect(odd_space).basis()) odd.emplace_back(k10_to_product(v), g);
    }
    on_product = propagate_from_odd(k3xk3(a.domain()), gr.group(), odd);
  }
  ProductNormalForm nf = normal_form_product(on_product);
  LinearMap normalizer = family_map(a, nf.f1, nf.f2, false);
  if (transport(gamma(a, nf.family, nf.a, nf.b), normalizer) != gr) {
    throw Falsification("normal form of the grading does not match: family " +
                        std::to_string(nf.family) + " with " + nf.a.to_string() + ", " +
                        nf.b.to_string());
  }
  return {canonical_label(nf.family, nf.a, nf.b), nf.a, nf.b, normalizer};
}

IsomorphismResult gradings_isomorphic(const Grading& g, const Grading& h) {
  if (g.algebra() != h.algebra()) throw Error("gradings live on different algebras");
  if (g.group() != h.group()) throw Error("gradings use different groups");
  Classification cg = classify(g), ch = classify(h);
  IsomorphismResult r;
  if (cg.label.family != ch.label.family) {
    r.reason = "different families (" + std::to_string(cg.label.family) + " and " +
               std::to_string(ch.label.family) + ")";
    return r;
  }
  if (!(cg.label == ch.label)) {
    r.reason = "labels differ: " + cg.label.to_string() + " vs " + ch.label.to_string();
    return r;
  }
  const SuperAlgebra& a = g.algebra();
  const ScalarDomain& dom = a.domain();
  const Grading from = gamma(a, cg.label.family, cg.a, cg.b);
  const Grading to = gamma(a, ch.label.family, ch.a, ch.b);
  const SL2Element j = SL2Element::symplectic_j(dom);
  for (unsigned s = 0; s < 2; ++s) {
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned k = 0; k < 4; ++k) {
        LinearMap sw = family_map(a, j.pow(i), j.pow(k), s == 1);
        if (transport(from, sw) != to) continue;
        LinearMap w = ch.normalizer * sw * cg.normalizer.inverse();
        if (!is_automorphism(w) || transport(g, w) != h) {
          throw Falsification("witness for " + cg.label.to_string() + " fails verification");
        }
        r.isomorphic = true;
        r.reason = "same label " + cg.label.to_string();
        r.witness = std::move(w);
        return r;
      }
    }
  }
  throw Falsification("no witness in the search set for equal labels " + cg.label.to_string());
}

}  // namespace kac
