#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "../oracle/graded_oracle.hpp"
#include "../support/random_instances.hpp"
#include "flatcheck/errors.hpp"
#include "flatcheck/flatness.hpp"
#include "flatcheck/operations.hpp"
#include "flatcheck/parser.hpp"

using namespace flatcheck;
using testing_support::uniform;

namespace {

ProblemFile load(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

FlatnessVerdict run(const std::string& name, FlatOptions options = {}) {
  auto problem = load(name);
  options.assume_domain = options.assume_domain || problem.has_flag("assume-domain");
  options.assume_embedding = options.assume_embedding || problem.has_flag("assume-embedding");
  return flat_test(problem.module_presentation(), options);
}

bool verified(const FlatnessVerdict& v) {
  return v.witness && v.multiplier && v.module && witness_check(*v.witness, *v.module, *v.multiplier);
}

// --- n = 1 oracle -----------------------------------------------------------
// With x_i^(a_i) in M for every i and every component, F is a finite
// k[y1]-module whose k[y1]-basis is the box of monomials x^b e_c, b < a.
// Its localization at (y1) is free iff the relation matrix A(y1) keeps its
// generic rank at y1 = 0.

struct BoxInstance {
  UniversePtr universe;
  std::size_t q = 1;
  std::vector<unsigned> box;  // a_i
  std::vector<FreeModuleElement> relations;  // extra generators
};

Submodule full_module(const BoxInstance& inst) {
  std::vector<FreeModuleElement> gens = inst.relations;
  const std::size_t nv = inst.universe->size();
  for (std::size_t i = 0; i < inst.box.size(); ++i) {
    auto power = Polynomial::monomial(inst.universe, Monomial::variable(nv, i + 1, inst.box[i]));
    for (std::size_t c = 0; c < inst.q; ++c)
      gens.push_back(power * FreeModuleElement::basis_vector(inst.universe, inst.q, c));
  }
  return Submodule(inst.universe, inst.q, gens);
}

bool oracle_flat(const BoxInstance& inst) {
  const std::size_t m = inst.box.size();
  const std::size_t nv = inst.universe->size();
  std::vector<std::vector<Monomial::Exponent>> cells;  // box exponents
  std::vector<Monomial::Exponent> b(m, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      cells.push_back(b);
      return;
    }
    for (unsigned k = 0; k < inst.box[i]; ++k) {
      b[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  auto column = [&](std::size_t comp, const std::vector<Monomial::Exponent>& xb) -> long {
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k] == xb) return static_cast<long>(comp * cells.size() + k);
    return -1;
  };
  const std::size_t width = inst.q * cells.size();
  // Rows: x^c * g for c in the box; entries are polynomials in y1 (as maps degree -> coefficient).
  std::vector<std::vector<std::map<unsigned, Rational>>> rows;
  for (const auto& g : inst.relations)
    for (const auto& c : cells) {
      std::vector<std::map<unsigned, Rational>> row(width);
      for (std::size_t comp = 0; comp < inst.q; ++comp)
        for (const auto& [mon, coef] : g[comp].terms()) {
          std::vector<Monomial::Exponent> xb(m);
          bool inside = true;
          for (std::size_t i = 0; i < m; ++i) {
            xb[i] = mon[i + 1] + c[i];
            if (xb[i] >= inst.box[i]) inside = false;
          }
          if (!inside) continue;
          row[static_cast<std::size_t>(column(comp, xb))][mon[0]] += coef;
        }
      rows.push_back(std::move(row));
    }
  (void)nv;
  auto rank_at = [&](const Rational& t) {
    std::vector<oracle::Row> numeric;
    for (const auto& row : rows) {
      oracle::Row r(width, 0);
      for (std::size_t k = 0; k < width; ++k)
        for (const auto& [deg, coef] : row[k]) {
          Rational p = 1;
          for (unsigned e = 0; e < deg; ++e) p *= t;
          r[k] += coef * p;
        }
      numeric.push_back(std::move(r));
    }
    return oracle::rank(std::move(numeric));
  };
  std::size_t generic = 0;
  for (int s : {3, 7, -5, 11, 29, -13}) generic = std::max(generic, rank_at(Rational(s, 2)));
  return rank_at(0) == generic;
}

BoxInstance random_box(std::mt19937& rng) {
  BoxInstance inst;
  const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 2));
  inst.universe = testing_support::presentation_universe(1, m);
  inst.q = static_cast<std::size_t>(uniform(rng, 1, 2));
  for (std::size_t i = 0; i < m; ++i) inst.box.push_back(static_cast<unsigned>(uniform(rng, 1, 3)));
  const auto& u = inst.universe;
  const std::size_t nv = u->size();
  const int count = uniform(rng, 1, 2);
  for (int k = 0; k < count; ++k) {
    std::vector<Polynomial> comps;
    for (std::size_t c = 0; c < inst.q; ++c) {
      Polynomial p(u);
      for (int t = uniform(rng, 0, 2); t > 0; --t) {
        std::vector<Monomial::Exponent> e(nv, 0);
        e[0] = static_cast<Monomial::Exponent>(uniform(rng, 0, 2));
        for (std::size_t i = 1; i < nv; ++i) e[i] = static_cast<Monomial::Exponent>(uniform(rng, 0, 1));
        p += Polynomial::monomial(u, Monomial(e), uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1));
      }
      comps.push_back(p);
    }
    inst.relations.emplace_back(std::move(comps));
  }
  return inst;
}

}  // namespace

TEST_CASE("regular base examples") {
  auto free_v = run("free.prob");
  CHECK(free_v.status == FlatStatus::Flat);
  CHECK(!free_v.witness);

  auto chart_v = run("chart.prob");
  REQUIRE(chart_v.status == FlatStatus::NotFlat);
  CHECK(verified(chart_v));
  CHECK(to_string(*chart_v.witness) == "y1*x1 - 1");

  auto sky = run("skyscraper.prob");
  REQUIRE(sky.status == FlatStatus::NotFlat);
  CHECK(verified(sky));
  CHECK(to_string(*sky.witness) == "y1");

  CHECK(run("rank2.prob").status == FlatStatus::Flat);
}

TEST_CASE("modules without fiber variables are embedded") {
  auto u = VarUniverse::make({{"y1", VarRole::Base}, {"y2", VarRole::Base}});
  auto p = ModulePresentation::make(Ideal::ideal(u, {parse_polynomial("y1", u)}));
  CHECK(p.universe->indices(VarRole::Fiber).size() == 1);
  CHECK(flat_test(p).status == FlatStatus::NotFlat);
  auto zero = ModulePresentation::make(Submodule(u, 1, {}));
  CHECK(flat_test(zero).status == FlatStatus::Flat);
}

TEST_CASE("witness check") {
  auto u = VarUniverse::make({{"y1", VarRole::Base}, {"y2", VarRole::Base}, {"x1", VarRole::Fiber}});
  auto g = parse_polynomial("y1*x1 - 1", u);
  auto m = Ideal::ideal(u, {parse_polynomial("y2*(y1*x1 - 1)", u)});
  CHECK(witness_check(g, m, parse_polynomial("y2", u)));
  CHECK(!witness_check(g, m, Polynomial::constant(u, 1)));
  CHECK(!witness_check(parse_polynomial("y2*(y1*x1 - 1)", u), m, parse_polynomial("y2", u)));
}

TEST_CASE("worked non-flat example with nine fiber variables") {
  auto problem = load("union_graph.prob");
  auto p = problem.module_presentation();
  auto v = flat_test(p);
  REQUIRE(v.status == FlatStatus::NotFlat);
  CHECK(verified(v));
  const auto& u = v.module->universe();
  auto expected = parse_polynomial("x6*y2 - x5", u);
  auto y3 = parse_polynomial("y3", u);
  CHECK(witness_check(expected, *v.module, y3));
  CHECK(!member(expected, *v.module));
  CHECK(member(y3 * expected, *v.module));
}

TEST_CASE("singular base: cusp") {
  auto flat = run("cusp.prob");
  CHECK(flat.status == FlatStatus::Flat);
  REQUIRE(flat.strict_transform);
  const auto& cu = flat.strict_transform->universe();
  CHECK(submodule_equal(*flat.strict_transform, Ideal::ideal(cu, {parse_polynomial("z1^2 - z2", cu)})));

  auto weak = run("cusp_point_noflags.prob");
  REQUIRE(weak.status == FlatStatus::ZeroDivisorFound);
  CHECK(verified(weak));

  auto strong = run("cusp_point.prob");
  REQUIRE(strong.status == FlatStatus::NotFlat);
  CHECK(verified(strong));

  FlatOptions one_flag;
  one_flag.assume_domain = true;
  CHECK(run("cusp_point_noflags.prob", one_flag).status == FlatStatus::ZeroDivisorFound);
}

TEST_CASE("singular base: chart search") {
  FlatOptions fixed;
  fixed.exceptional = 1;
  CHECK(run("line_swap.prob", fixed).status == FlatStatus::Improper);
  auto searched = run("line_swap.prob");
  CHECK(searched.status == FlatStatus::Flat);
  CHECK(searched.chart.find("y1") != std::string::npos);
  CHECK(run("node.prob").status == FlatStatus::Flat);
  CHECK(run("node.prob", fixed).status == FlatStatus::Improper);
}

TEST_CASE("base ideal must live in the base variables") {
  auto u = VarUniverse::make({{"y1", VarRole::Base}, {"x1", VarRole::Fiber}});
  CHECK_THROWS_AS(ModulePresentation::make(Ideal::ideal(u, {parse_polynomial("x1", u)}),
                                           Ideal::ideal(u, {parse_polynomial("x1*y1", u)})),
                  InputError);
}

TEST_CASE("one base variable: verdict matches the rank oracle") {
  std::mt19937 rng(51);
  int flat = 0, not_flat = 0;
  for (int i = 0; i < 50; ++i) {
    auto inst = random_box(rng);
    auto module = full_module(inst);
    const bool expected = oracle_flat(inst);
    auto v = flat_test(ModulePresentation::make(module));
    INFO("instance " << i << ": " << to_string(module.generators()));
    CHECK((v.status == FlatStatus::Flat) == expected);
    if (v.status != FlatStatus::Flat) CHECK(verified(v));
    (expected ? flat : not_flat)++;
  }
  // Both outcomes must be exercised.
  CHECK(flat >= 5);
  CHECK(not_flat >= 5);
}

TEST_CASE("free and torsion families") {
  std::mt19937 rng(52);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto u = testing_support::presentation_universe(n, m);
    std::vector<std::size_t> xs(m);
    for (std::size_t k = 0; k < m; ++k) xs[k] = n + k;
    std::vector<Polynomial> gens;
    for (int k = uniform(rng, 1, 3); k > 0; --k)
      gens.push_back(Polynomial::monomial(u, testing_support::random_monomial(rng, u->size(), xs,
                                                                             static_cast<unsigned>(uniform(rng, 1, 3)))));
    auto free_part = Ideal::ideal(u, gens);
    CHECK(flat_test(ModulePresentation::make(free_part)).status == FlatStatus::Flat);
    std::vector<std::size_t> ys(n);
    for (std::size_t k = 0; k < n; ++k) ys[k] = k;
    auto torsion = Polynomial::monomial(u, testing_support::random_monomial(rng, u->size(), ys,
                                                                           static_cast<unsigned>(uniform(rng, 1, 2))));
    auto v = flat_test(ModulePresentation::make(free_part + Ideal::ideal(u, {torsion})));
    CHECK(v.status == FlatStatus::NotFlat);
    CHECK(verified(v));
  }
}

TEST_CASE("verdict does not depend on the engine order") {
  for (const char* name : {"free.prob", "chart.prob", "skyscraper.prob", "rank2.prob", "cusp.prob",
                           "cusp_point_noflags.prob"}) {
    FlatOptions lex;
    lex.order = MonomialOrder::lex();
    CHECK(run(name).status == run(name, lex).status);
  }
}
