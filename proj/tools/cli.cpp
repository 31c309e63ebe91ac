#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "kac/catalog.hpp"
#include "kac/census.hpp"
#include "kac/descent.hpp"
#include "kac/gradings.hpp"
#include "kac/io.hpp"
#include "kac/morphisms.hpp"
#include "kac/refinement.hpp"

namespace kac::cli {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string field;  // empty: not given
  std::uint64_t seed = 1;
  std::string output;

  ScalarDomain domain() const {
    return ScalarDomain::parse(field.empty() ? "rational" : field);
  }

  void emit(const json& j) const {
    if (output.empty()) {
      out << j.dump(2) << '\n';
      return;
    }
    std::ofstream f(output);
    if (!f) throw Error("cannot write " + output);
    f << j.dump(2) << '\n';
  }
};

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

bool is_catalog_name(const std::string& s) {
  const auto& names = catalog_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

// A catalog name or a structure-constant JSON file (also accepted: the
// output of twist, which wraps one).
SuperAlgebra load_algebra(const Context& ctx, const std::string& spec) {
  if (is_catalog_name(spec)) return catalog_algebra(spec, ctx.domain());
  json j = read_json(spec);
  if (j.contains("algebra") && j["algebra"].is_object()) return algebra_from_json(j["algebra"]);
  return algebra_from_json(j);
}

std::string describe(const SuperAlgebra& a) {
  std::ostringstream s;
  s << a.dim() << "-dim over " << a.domain().descriptor();
  return s.str();
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error("not an integer list: '" + text + "'");
    }
  }
  return v;
}

json check_json(const Check& c) { return to_json(c); }

json vectors_json(const SuperAlgebra& a, const std::vector<Vector>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back(format_vector(a, v));
  return j;
}

json sl2_json(const SL2Element& f) { return to_json(f.matrix()); }

json grading_json(const Grading& g, const std::string& algebra_name) {
  json j = to_json(g);
  if (!algebra_name.empty()) j["algebra"] = algebra_name;
  json support = json::array();
  for (const auto& [d, c] : g.components()) {
    support.push_back({{"degree", to_json(d)}, {"dim", c.dim()}});
  }
  j["support"] = std::move(support);
  return j;
}

// ---- table / verify / simple / census ----

int cmd_table(const Context& ctx, const std::string& name) {
  SuperAlgebra a = load_algebra(ctx, name);
  json j = to_json(a);
  ctx.emit(j);
  ctx.err << name << ": " << describe(a) << ", " << j["constants"].size()
          << " nonzero structure constants\n";
  return 0;
}

int cmd_verify(const Context& ctx, const std::string& name) {
  SuperAlgebra a = load_algebra(ctx, name);
  Check sc = is_supercommutative(a);
  Check jo = sc ? is_jordan_super(a) : Check::fail("not supercommutative");
  SuperAlgebra ev = even_part(a);
  Check cl = is_jordan_classical(ev);
  json j{{"algebra", name},
         {"domain", a.domain().descriptor()},
         {"dim", a.dim()},
         {"supercommutative", check_json(sc)},
         {"jordan_super", check_json(jo)},
         {"even_part_jordan", check_json(cl)}};
  ctx.emit(j);
  const bool ok = sc.ok && jo.ok && cl.ok;
  ctx.err << name << " (" << describe(a) << "): " << (ok ? "Jordan superalgebra" : "FAILED")
          << '\n';
  if (!ok) {
    for (const Check* c : {&sc, &jo, &cl}) {
      if (!c->ok) ctx.err << "  " << c->detail << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_simple(const Context& ctx, const std::string& name, std::int64_t modulus,
               std::uint64_t budget, const std::string& expect) {
  SuperAlgebra a = load_algebra(ctx, name);
  SimplicityResult r = is_simple(a, {modulus, budget});
  const char* verdict = r.verdict == SimplicityResult::Verdict::Simple      ? "simple"
                        : r.verdict == SimplicityResult::Verdict::NotSimple ? "not-simple"
                                                                             : "inconclusive";
  json j{{"algebra", name},
         {"domain", a.domain().descriptor()},
         {"verdict", verdict},
         {"certificate", r.certificate},
         {"points_checked", r.points_checked}};
  if (r.proper_ideal) {
    j["ideal"] = {{"dim", r.proper_ideal->dim()},
                  {"basis", vectors_json(a, r.proper_ideal->basis())}};
  }
  ctx.emit(j);
  ctx.err << name << ": " << verdict << " (" << r.certificate << ")\n";
  if (r.verdict == SimplicityResult::Verdict::Inconclusive) return 1;
  if (!expect.empty() && expect != verdict) {
    ctx.err << "expected " << expect << '\n';
    return 1;
  }
  return 0;
}

int cmd_census(const Context& ctx, const std::string& name, bool even) {
  SuperAlgebra a = load_algebra(ctx, name);
  if (!a.domain().is_finite()) throw Error("census needs a finite field");
  const std::uint64_t n = idempotent_census(a, even);
  ctx.emit({{"algebra", name},
            {"domain", a.domain().descriptor()},
            {"scanned", even ? "even" : "all"},
            {"idempotents", n}});
  ctx.err << name << ": " << n << " idempotents in the " << (even ? "even part" : "algebra")
          << '\n';
  return 0;
}

// ---- derivations / check-auto ----

int cmd_derivations(const Context& ctx, const std::string& name, const std::string& parity) {
  SuperAlgebra a = load_algebra(ctx, name);
  if (parity != "even" && parity != "odd") throw Error("--parity must be even or odd");
  const MapParity p = parity == "even" ? MapParity::Even : MapParity::Odd;
  std::vector<LinearMap> basis = derivations(a, p);

  json mats = json::array();
  for (const auto& d : basis) mats.push_back(to_json(d.matrix()));

  // Closure under the supercommutator, tested on basis pairs.
  auto flatten = [](const Matrix& m) {
    Vector v;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    }
    return v;
  };
  std::vector<Vector> flat;
  for (const auto& d : basis) flat.push_back(flatten(d.matrix()));
  Subspace span = Subspace::span(a.domain(), a.dim() * a.dim(), flat);
  bool closed = true;
  if (p == MapParity::Even) {
    for (std::size_t i = 0; i < basis.size() && closed; ++i) {
      for (std::size_t k = i + 1; k < basis.size() && closed; ++k) {
        closed = span.contains(flatten(supercommutator(basis[i], basis[k]).matrix()));
      }
    }
  }
  json j{{"algebra", name},
         {"domain", a.domain().descriptor()},
         {"parity", parity},
         {"dimension", basis.size()},
         {"basis", std::move(mats)}};
  if (p == MapParity::Even) j["closed_under_bracket"] = closed;
  ctx.emit(j);
  ctx.err << name << ": " << basis.size() << "-dim space of " << parity << " derivations\n";
  return closed ? 0 : 1;
}

json decomposition_json(const Decomposition& d) {
  return {{"f", sl2_json(d.f)}, {"g", sl2_json(d.g)}, {"swap", d.swap}};
}

int cmd_check_auto_file(const Context& ctx, const std::string& name, const std::string& path) {
  SuperAlgebra a = load_algebra(ctx, name);
  LinearMap m = map_from_json(read_json(path), a, a);
  Check mor = is_morphism(m);
  Check aut = mor ? is_automorphism(m) : Check::fail("not a morphism");
  json j{{"algebra", name}, {"morphism", check_json(mor)}, {"automorphism", check_json(aut)}};
  if (aut && name == "k10") j["decomposition"] = decomposition_json(decompose_automorphism(m));
  ctx.emit(j);
  ctx.err << path << ": " << (aut ? "automorphism" : mor ? "morphism, not invertible" : "not a morphism")
          << '\n';
  if (!mor) ctx.err << "  " << mor.detail << '\n';
  return aut ? 0 : 1;
}

int cmd_check_auto_random(const Context& ctx, const std::string& name, int count) {
  SuperAlgebra a = load_algebra(ctx, name);
  const ScalarDomain dom = a.domain();
  std::mt19937_64 rng(ctx.seed);
  std::size_t passed = 0;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    return ok;
  };

  if (name == "k10") {
    LinearMap tau = tau_auto(a);
    expect(is_automorphism(tau).ok, "tau is not an automorphism");
    expect(tau * tau == LinearMap::identity(a), "tau^2 != id");
    for (int i = 0; i < count; ++i) {
      SL2Element f = random_sl2(dom, rng), g = random_sl2(dom, rng);
      LinearMap phi = phi_auto(a, f, g);
      bool ok = expect(is_automorphism(phi).ok, "phi(f,g) is not an automorphism");
      ok &= expect(tau * phi * tau == phi_auto(a, g, f), "tau phi(f,g) tau != phi(g,f)");
      Decomposition d = decompose_automorphism(phi);
      ok &= expect(d.f == f && d.g == g && !d.swap, "decompose(phi(f,g)) mismatch");
      Decomposition e = decompose_automorphism(phi * tau);
      ok &= expect(e.f == f && e.g == g && e.swap, "decompose(phi(f,g) tau) mismatch");
      if (ok) ++passed;
    }
  } else if (name == "k3xk3" || name == "jwxjw") {
    LinearMap sw = swap_auto(a);
    for (int i = 0; i < count; ++i) {
      SL2Element f = random_sl2(dom, rng), g = random_sl2(dom, rng);
      LinearMap psi = psi_auto(a, f, g, false);
      bool ok = expect(is_automorphism(psi).ok, "psi(f,g) is not an automorphism");
      ok &= expect(is_automorphism(psi_auto(a, f, g, true)).ok,
                   "psi(f,g) swap is not an automorphism");
      ok &= expect(sw * psi * sw == psi_auto(a, g, f, false), "swap psi(f,g) swap != psi(g,f)");
      if (ok) ++passed;
    }
  } else {
    throw Error("--random is available for k10, k3xk3 and jwxjw");
  }
  json j{{"algebra", name},
         {"domain", dom.descriptor()},
         {"seed", ctx.seed},
         {"samples", count},
         {"passed", passed},
         {"failures", failures}};
  ctx.emit(j);
  ctx.err << name << ": " << passed << "/" << count << " random automorphism samples passed\n";
  return failures.empty() ? 0 : 1;
}

// ---- grading ----

struct GradingArgs {
  std::string algebra;  // empty: k10, or the one named in the file
  int family = 1;
  std::size_t rank = 1;
  std::string torsion;
  std::string g1, g2, g, h;
  std::vector<std::string> files;
  std::int64_t q = 3;
};

AbelianGroup group_of(const GradingArgs& ga) {
  return AbelianGroup(ga.rank, ga.torsion.empty() ? std::vector<std::int64_t>{}
                                                  : parse_ints(ga.torsion));
}

struct LoadedGrading {
  std::string algebra_name;
  Grading grading;
};

LoadedGrading load_grading(const Context& ctx, const std::string& path,
                           const std::string& algebra_flag) {
  json j = read_json(path);
  Context local{ctx.out, ctx.err, ctx.field, ctx.seed, ctx.output};
  if (local.field.empty() && j.contains("domain")) local.field = j["domain"].get<std::string>();
  std::string name = algebra_flag;
  SuperAlgebra a = [&] {
    if (!name.empty()) return load_algebra(local, name);
    if (!j.contains("algebra")) throw Error(path + ": no algebra given (use --algebra)");
    if (j["algebra"].is_string()) {
      name = j["algebra"].get<std::string>();
      return load_algebra(local, name);
    }
    return algebra_from_json(j["algebra"]);
  }();
  return {name, grading_from_json(j, a)};
}

std::string algebra_or_k10(const GradingArgs& ga) {
  return ga.algebra.empty() ? "k10" : ga.algebra;
}

int cmd_grading_make(const Context& ctx, const GradingArgs& ga) {
  const std::string name = algebra_or_k10(ga);
  SuperAlgebra a = load_algebra(ctx, name);
  AbelianGroup G = group_of(ga);
  const std::string& x = ga.family == 1 ? ga.g1 : ga.g;
  const std::string& y = ga.family == 1 ? ga.g2 : ga.h;
  if (x.empty() || y.empty()) {
    throw Error(ga.family == 1 ? "family 1 needs --g1 and --g2" : "family 2 needs --g and --h");
  }
  Grading gr = gamma(a, ga.family, G.element(parse_ints(x)), G.element(parse_ints(y)));
  Check ok = verify_grading(gr);
  json j = grading_json(gr, name);
  j["verified"] = check_json(ok);
  ctx.emit(j);
  ctx.err << name << ": family " << ga.family << " grading by " << G.to_string() << ", "
          << gr.components().size() << " components\n";
  return ok ? 0 : 1;
}

int cmd_grading_verify(const Context& ctx, const GradingArgs& ga) {
  if (ga.files.size() != 1) throw Error("grading verify takes one file");
  LoadedGrading lg = load_grading(ctx, ga.files[0], ga.algebra);
  Check ok = verify_grading(lg.grading);
  ctx.emit({{"file", ga.files[0]}, {"verified", check_json(ok)}});
  ctx.err << ga.files[0] << ": " << (ok ? "valid grading" : "not a grading: " + ok.detail)
          << '\n';
  return ok ? 0 : 1;
}

int cmd_grading_classify(const Context& ctx, const GradingArgs& ga) {
  if (ga.files.size() != 1) throw Error("grading classify takes one file");
  LoadedGrading lg = load_grading(ctx, ga.files[0], ga.algebra);
  Check ok = verify_grading(lg.grading);
  if (!ok) throw Error("not a grading: " + ok.detail);
  Classification c = classify(lg.grading);
  ctx.emit({{"file", ga.files[0]},
            {"label", to_json(c.label)},
            {"parameters", {to_json(c.a), to_json(c.b)}},
            {"normalizer", to_json(c.normalizer)}});
  ctx.err << ga.files[0] << ": " << c.label.to_string() << '\n';
  return 0;
}

int cmd_grading_compare(const Context& ctx, const GradingArgs& ga) {
  if (ga.files.size() != 2) throw Error("grading compare takes two files");
  const std::string flag = ga.algebra;
  LoadedGrading x = load_grading(ctx, ga.files[0], flag);
  LoadedGrading y = load_grading(ctx, ga.files[1], flag);
  IsomorphismResult r = gradings_isomorphic(x.grading, y.grading);
  json j{{"isomorphic", r.isomorphic}, {"reason", r.reason}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  ctx.emit(j);
  ctx.err << (r.isomorphic ? "isomorphic" : "not isomorphic") << ": " << r.reason << '\n';
  return 0;
}

int cmd_grading_census(const Context& ctx, const GradingArgs& ga) {
  if (ga.q != 3 && ga.q != 5) throw Error("--q must be 3 or 5");
  const std::string name = algebra_or_k10(ga);
  SuperAlgebra a = catalog_algebra(name, ScalarDomain::prime_field(ga.q));
  CensusResult r = z2_census(a);
  const std::size_t predicted = enumerate_labels(AbelianGroup::cyclic(2)).size();
  json labels = json::array();
  for (std::size_t i = 0; i < r.class_labels.size(); ++i) {
    labels.push_back({{"label", r.class_labels[i].to_string()}, {"size", r.class_sizes[i]}});
  }
  ctx.emit({{"algebra", name},
            {"q", ga.q},
            {"classes", r.classes},
            {"predicted_classes", predicted},
            {"agree", r.classes == predicted},
            {"group_order", r.group_order},
            {"involutions", r.involutions},
            {"orbits", std::move(labels)}});
  ctx.err << name << " over F" << ga.q << ": " << r.classes
          << " classes of Z/2-gradings (label count " << predicted << ")\n";
  return r.classes == predicted ? 0 : 1;
}

int cmd_grading_fine(const Context& ctx, const GradingArgs& ga) {
  const std::string name = algebra_or_k10(ga);
  SuperAlgebra a = load_algebra(ctx, name);
  std::vector<Grading> fine = fine_gradings(a);
  json list = json::array();
  bool ok = true;
  for (const Grading& g : fine) {
    Check v = verify_grading(g);
    std::optional<Refinement> r = find_refinement(g);
    ok &= v.ok && !r;
    json j = grading_json(g, name);
    j["verified"] = check_json(v);
    j["refinable"] = r.has_value();
    if (r) j["refinement"] = r->description;
    list.push_back(std::move(j));
  }
  // Gradings of different families are never equivalent.
  const int f0 = classify(fine.at(0)).label.family, f1 = classify(fine.at(1)).label.family;
  ok &= f0 != f1;
  ctx.emit({{"algebra", name}, {"fine_gradings", std::move(list)}, {"families", {f0, f1}}});
  ctx.err << name << ": " << (ok ? "two inequivalent fine gradings" : "FAILED") << '\n';
  return ok ? 0 : 1;
}

// ---- twist / separate ----

struct TwistArgs {
  std::string algebra = "k10";
  std::string d;
  std::string against;
  std::string involution = "odd-sign";
};

LinearMap involution_for(const SuperAlgebra& a, const std::string& name,
                         const std::string& which) {
  if (name == "k10") return tau_auto(a);
  if (name == "k3xk3" || name == "jwxjw") return swap_auto(a);
  if (name == "k3" || name == "jw") {
    Matrix m = Matrix::identity(a.domain(), a.dim());
    if (which == "odd-sign") {
      for (std::size_t i : a.indices_of_parity(1)) m(i, i) = Scalar(a.domain(), -1);
    } else if (which != "id") {
      throw Error("--involution must be id or odd-sign");
    }
    return LinearMap(a, a, m);
  }
  throw Error("twist supports k10, k3xk3, jwxjw, k3 and jw");
}

int cmd_twist(const Context& ctx, const TwistArgs& ta) {
  if (ta.d.empty()) throw Error("twist needs --d");
  SuperAlgebra a = load_algebra(ctx, ta.algebra);
  const ScalarDomain base = a.domain();
  const Scalar d = Scalar::parse(base, ta.d);
  LinearMap t = involution_for(a, ta.algebra, ta.involution);

  if (!ta.against.empty()) {
    EquivalenceResult r = forms_equivalent(t, d, Scalar::parse(base, ta.against));
    json j{{"algebra", ta.algebra},
           {"d", d.to_string()},
           {"d2", ta.against},
           {"equivalent", r.equivalent},
           {"reason", r.reason}};
    if (r.s) j["s"] = r.s->to_string();
    if (r.witness) j["witness"] = to_json(*r.witness);
    ctx.emit(j);
    ctx.err << "twists by " << d.to_string() << " and " << ta.against << ": "
            << (r.equivalent ? "isomorphic" : "not isomorphic") << " (" << r.reason << ")\n";
    return 0;
  }

  QuadraticEtale ext(base, d);
  TwistedForm form = twist(DescentDatum(t, ext));
  Check sc = is_supercommutative(form.algebra);
  Check jo = is_jordan_super(form.algebra);
  SplitResult sp = split_check(form, ext, a);
  json report{{"dim", form.algebra.dim()},
              {"even_dim", form.algebra.indices_of_parity(0).size()},
              {"supercommutative", check_json(sc)},
              {"jordan_super", check_json(jo)},
              {"splits", check_json(sp.check)},
              {"fixed_basis", vectors_json(form.ambient, form.fixed_basis)}};
  bool ok = sc.ok && jo.ok && sp.check.ok;

  if (ta.algebra == "k10" && !ext.split()) {
    TwistedBasisReport r = k10_twisted_basis(ext);
    report["basis_comparison"] = {{"expected_even_matches", r.even_matches},
                                  {"odd_fixed_space_matches", r.odd_matches_fixed_equations},
                                  {"listed_odd_is_fixed", r.reference_odd_fixed},
                                  {"expected_odd", vectors_json(form.ambient, r.expected_odd)},
                                  {"listed_odd", vectors_json(form.ambient, r.reference_odd)},
                                  {"discrepancies", r.discrepancies}};
    ok &= r.even_matches && r.odd_matches_fixed_equations;
  }
  if (ta.algebra == "k3" || ta.algebra == "jw") {
    std::optional<LinearMap> w = rigid_witness(a, form.algebra);
    report["isomorphic_to_original"] = w.has_value();
    if (w) report["rigidity_witness"] = to_json(*w);
    ok &= w.has_value();
  }
  if ((ta.algebra == "k3xk3" || ta.algebra == "jwxjw") && !ext.split()) {
    SuperAlgebra factor = catalog_algebra(ta.algebra == "k3xk3" ? "k3" : "jw", base);
    report["restriction_witness"] = to_json(product_twist_witness(form, factor, ext));
  }
  if (sp.witness) report["split_witness"] = to_json(*sp.witness);

  ctx.emit({{"algebra", to_json(form.algebra)},
            {"source", ta.algebra},
            {"d", d.to_string()},
            {"split_extension", ext.split()},
            {"report", std::move(report)}});
  ctx.err << "twist of " << ta.algebra << " by d=" << d.to_string() << " over "
          << base.descriptor() << ": " << describe(form.algebra) << ", "
          << (ok ? "verified" : "FAILED") << '\n';
  return ok ? 0 : 1;
}

int cmd_separate(const Context& ctx, const std::string& x, const std::string& y) {
  SuperAlgebra a = load_algebra(ctx, x), b = load_algebra(ctx, y);
  SeparationReport r = separate_forms(a, b);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"invariant", row.name}, {"a", row.a}, {"b", row.b}, {"differs", row.differs}});
  }
  ctx.emit({{"a", x}, {"b", y}, {"invariants", std::move(rows)},
            {"verdict", r.distinct ? "distinct" : "inconclusive"}});
  for (const auto& row : r.rows) {
    if (row.differs) ctx.err << row.name << ": " << row.a << " vs " << row.b << '\n';
  }
  ctx.err << (r.distinct ? "not isomorphic" : "inconclusive: all invariants agree") << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Jordan superalgebras", "kacsuper"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err, "", 1, ""};
  app.add_option("--field", ctx.field, "rational | fp:<p> | quad:<base>:<d>");
  app.add_option("--seed", ctx.seed, "seed for randomized checks");
  app.add_option("-o,--output", ctx.output, "write JSON here instead of stdout");

  std::function<int()> action;
  std::string name, second;

  auto* table = app.add_subcommand("table", "dump structure constants");
  table->add_option("algebra", name)->required();
  table->callback([&] { action = [&] { return cmd_table(ctx, name); }; });

  auto* verify = app.add_subcommand("verify", "supercommutativity and the Jordan identity");
  verify->add_option("algebra", name)->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx, name); }; });

  std::int64_t modulus = 5;
  std::uint64_t budget = 5'000'000;
  std::string expect;
  auto* simple = app.add_subcommand("simple", "graded simplicity with certificate");
  simple->add_option("algebra", name)->required();
  simple->add_option("--modulus", modulus, "prime for the reduction certificate over Q");
  simple->add_option("--budget", budget, "cap on projective points");
  simple->add_option("--expect", expect)->check(CLI::IsMember({"simple", "not-simple"}));
  simple->callback([&] { action = [&] { return cmd_simple(ctx, name, modulus, budget, expect); }; });

  std::string parity = "even";
  auto* der = app.add_subcommand("derivations", "basis of the derivation space");
  der->add_option("algebra", name)->required();
  der->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));
  der->callback([&] { action = [&] { return cmd_derivations(ctx, name, parity); }; });

  int random_count = 0;
  auto* chk = app.add_subcommand("check-auto", "automorphism checks");
  chk->add_option("algebra", name)->required();
  chk->add_option("matrix", second, "JSON map file");
  chk->add_option("--random", random_count, "number of random samples instead of a file");
  chk->callback([&] {
    action = [&] {
      if (random_count > 0) return cmd_check_auto_random(ctx, name, random_count);
      if (second.empty()) throw Error("check-auto needs a matrix file or --random N");
      return cmd_check_auto_file(ctx, name, second);
    };
  });

  GradingArgs ga;
  auto* grading = app.add_subcommand("grading", "group gradings");
  grading->require_subcommand(1);
  auto add_algebra = [&](CLI::App* c) { c->add_option("--algebra", ga.algebra); };
  auto* make = grading->add_subcommand("make", "build a family 1 or 2 grading");
  add_algebra(make);
  make->set_help_flag("--help", "Print this help message and exit");
  make->add_option("--family", ga.family)->check(CLI::IsMember({1, 2}));
  make->add_option("--rank", ga.rank, "free rank of the group");
  make->add_option("--torsion", ga.torsion, "comma-separated torsion orders");
  make->add_option("--g1", ga.g1);
  make->add_option("--g2", ga.g2);
  make->add_option("--g", ga.g);
  make->add_option("--h", ga.h);
  make->callback([&] { action = [&] { return cmd_grading_make(ctx, ga); }; });
  auto* gverify = grading->add_subcommand("verify", "check a grading file");
  add_algebra(gverify);
  gverify->add_option("file", ga.files)->required();
  gverify->callback([&] { action = [&] { return cmd_grading_verify(ctx, ga); }; });
  auto* classify = grading->add_subcommand("classify", "canonical label of a grading");
  add_algebra(classify);
  classify->add_option("file", ga.files)->required();
  classify->callback([&] { action = [&] { return cmd_grading_classify(ctx, ga); }; });
  auto* compare = grading->add_subcommand("compare", "isomorphism test with witness");
  add_algebra(compare);
  compare->add_option("files", ga.files)->required()->expected(2);
  compare->callback([&] { action = [&] { return cmd_grading_compare(ctx, ga); }; });
  auto* census = grading->add_subcommand("census", "Z/2-gradings over F_q, two ways");
  add_algebra(census);
  census->add_option("--q", ga.q);
  census->callback([&] { action = [&] { return cmd_grading_census(ctx, ga); }; });
  auto* fine = grading->add_subcommand("fine", "the fine gradings and a refinement search");
  add_algebra(fine);
  fine->callback([&] { action = [&] { return cmd_grading_fine(ctx, ga); }; });

  TwistArgs ta;
  auto* tw = app.add_subcommand("twist", "twisted form by Galois descent");
  tw->add_option("--algebra", ta.algebra);
  tw->add_option("--d", ta.d, "the square of the generator of the extension");
  tw->add_option("--against", ta.against, "compare with the twist by this d instead");
  tw->add_option("--involution", ta.involution, "for k3 and jw: id | odd-sign");
  tw->callback([&] { action = [&] { return cmd_twist(ctx, ta); }; });

  auto* sep = app.add_subcommand("separate", "invariant table for two algebras");
  sep->add_option("a", name)->required();
  sep->add_option("b", second)->required();
  sep->callback([&] { action = [&] { return cmd_separate(ctx, name, second); }; });

  bool even_only = false;
  auto* idem = app.add_subcommand("census", "count idempotents over a finite field");
  idem->add_option("algebra", name)->required();
  idem->add_flag("--even", even_only, "scan the even part only");
  idem->callback([&] { action = [&] { return cmd_census(ctx, name, even_only); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const Falsification& e) {
    err << "FALSIFIED: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "kacsuper: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "kacsuper: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "kacsuper: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace kac::cli
