#include <doctest.h>

#include <algorithm>
#include <random>

#include "../oracle/graded_oracle.hpp"
#include "../support/random_instances.hpp"
#include "flatcheck/context.hpp"
#include "flatcheck/errors.hpp"
#include "flatcheck/groebner.hpp"
#include "flatcheck/parser.hpp"

using namespace flatcheck;
using testing_support::uniform;

namespace {

UniversePtr xyz() { return testing_support::plain_universe(3, "x"); }

Ideal I(const UniversePtr& u, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, u));
  return Ideal::ideal(u, ps);
}

UniversePtr xy() { return VarUniverse::make({{"x", VarRole::Fiber}, {"y", VarRole::Fiber}}); }

std::vector<FreeModuleElement> basis_of(const Submodule& m, const MonomialOrder& order, engine::Exec exec) {
  return groebner_basis(Submodule(m.universe(), m.rank(), m.generators()), order, exec)->to_elements();
}

/// Reduced: monic, and no term of any element is divisible by another leading term.
bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (gb.elements[i].lead().coef != 1) return false;
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      const auto& lead = gb.elements[j].lead();
      for (const auto& t : gb.elements[i].terms)
        if (t.comp == lead.comp && lead.mon.divides(t.mon)) return false;
    }
  }
  for (std::size_t i = 1; i < gb.elements.size(); ++i) {
    const auto& a = gb.elements[i - 1].lead();
    const auto& b = gb.elements[i].lead();
    if (gb.order.compare(a.mon, a.comp, b.mon, b.comp) >= 0) return false;
  }
  return true;
}

bool s_pairs_vanish(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      if (gb.elements[i].lead().comp != gb.elements[j].lead().comp) continue;
      auto s = engine::s_vector(gb.elements[i], gb.elements[j], gb.order);
      if (!engine::reduce(std::move(s), gb.elements, gb.order).empty()) return false;
    }
  return true;
}

Submodule random_module(std::mt19937& rng, const UniversePtr& u, std::size_t q, int count, bool homogeneous) {
  std::vector<FreeModuleElement> gens;
  for (int i = 0; i < count; ++i) {
    if (homogeneous) {
      gens.push_back(testing_support::random_vector(rng, u, q, static_cast<unsigned>(uniform(rng, 1, 2))));
    } else {
      std::vector<Polynomial> comps;
      for (std::size_t c = 0; c < q; ++c)
        comps.push_back(testing_support::random_polynomial(rng, u, testing_support::all_positions(u), 0, 2, 3));
      gens.emplace_back(std::move(comps));
    }
  }
  return Submodule(u, q, gens);
}

}  // namespace

TEST_CASE("zero module has an empty basis") {
  auto u = xy();
  auto gb = groebner_basis(Ideal::ideal(u, {Polynomial(u)}));
  CHECK(gb->elements.empty());
  CHECK(!gb->is_unit());
  CHECK(groebner_basis(Ideal::ideal(u, {}))->elements.empty());
}

TEST_CASE("redundant generator drops out") {
  auto u = xy();
  auto gb = groebner_basis(I(u, {"x", "x^2"}))->to_elements();
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == FreeModuleElement(parse_polynomial("x", u)));
}

TEST_CASE("circle and line under lex") {
  auto u = xy();
  auto gb = groebner_basis(I(u, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex())->to_elements();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == FreeModuleElement(parse_polynomial("y^2 - 1/2", u)));
  CHECK(gb[1] == FreeModuleElement(parse_polynomial("x - y", u)));
}

TEST_CASE("normal form and membership") {
  auto u = xy();
  CHECK(normal_form(parse_polynomial("x^2", u), I(u, {"x^2 - y"})) == parse_polynomial("y", u));
  CHECK(member(parse_polynomial("x*y", u), I(u, {"x"})));
  CHECK(!member(parse_polynomial("y", u), I(u, {"x"})));
  CHECK(submodule_equal(I(u, {"x", "y"}), I(u, {"y", "x"})));
  CHECK(groebner_basis(I(u, {"x - 1", "x"}))->is_unit());
}

TEST_CASE("normal form is idempotent and lands in the coset") {
  auto u = xyz();
  std::mt19937 rng(21);
  for (int i = 0; i < 20; ++i) {
    auto m = random_module(rng, u, 1, 3, false);
    auto f = testing_support::random_polynomial(rng, u, testing_support::all_positions(u), 0, 3, 5);
    auto r = normal_form(f, m);
    CHECK(normal_form(r, m) == r);
    CHECK(member(f - r, m));
  }
}

TEST_CASE("module membership in R^2") {
  auto u = xy();
  auto x = parse_polynomial("x", u), y = parse_polynomial("y", u);
  Submodule m(u, 2, {FreeModuleElement({x, y}), FreeModuleElement({y, Polynomial(u)})});
  CHECK(member(FreeModuleElement({x * y + y * y, y * y}), m));
  CHECK(!member(FreeModuleElement({Polynomial(u), x}), m));
  CHECK_THROWS_AS(member(FreeModuleElement({x}), m), InputError);
}

TEST_CASE("random bases are reduced and closed under S-pairs") {
  std::mt19937 rng(22);
  auto u = xyz();
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()}) {
    for (auto pos : {Position::PositionOverTerm, Position::TermOverPosition}) {
      order.position = pos;
      for (int i = 0; i < 8; ++i) {
        const std::size_t q = static_cast<std::size_t>(uniform(rng, 1, 2));
        auto m = random_module(rng, u, q, uniform(rng, 2, 4), i % 2 == 0);
        auto gb = groebner_basis(m, order);
        CHECK(is_reduced(*gb));
        CHECK(s_pairs_vanish(*gb));
        for (const auto& g : m.generators()) CHECK(member(g, m, order));
        Submodule back(u, q, gb->to_elements());
        for (const auto& g : m.generators()) CHECK(member(g, back, order));
      }
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(23);
  auto u = testing_support::plain_universe(4, "x");
  for (int i = 0; i < 15; ++i) {
    auto m = random_module(rng, u, static_cast<std::size_t>(uniform(rng, 1, 2)), uniform(rng, 2, 5), i % 3 != 0);
    CHECK(basis_of(m, {}, engine::Exec::Serial) == basis_of(m, {}, engine::Exec::Parallel));
  }
}

TEST_CASE("basis does not depend on generator order") {
  std::mt19937 rng(24);
  auto u = xyz();
  for (int i = 0; i < 15; ++i) {
    auto m = random_module(rng, u, 1, 4, false);
    auto gens = m.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(basis_of(m, {}, engine::Exec::Parallel) == basis_of(Submodule(u, 1, gens), {}, engine::Exec::Parallel));
  }
}

TEST_CASE("graded pieces match the linear-algebra oracle") {
  std::mt19937 rng(25);
  auto u = xyz();
  for (int i = 0; i < 10; ++i) {
    const std::size_t q = static_cast<std::size_t>(uniform(rng, 1, 2));
    auto m = random_module(rng, u, q, 3, true);
    Submodule gb(u, q, groebner_basis(m)->to_elements());
    for (unsigned d = 0; d <= 4; ++d) CHECK(oracle::piece_dimension(m, 3, d) == oracle::piece_dimension(gb, 3, d));
  }
}

TEST_CASE("deadline aborts long computations") {
  auto u = testing_support::plain_universe(6, "x");
  std::mt19937 rng(26);
  auto m = random_module(rng, u, 1, 6, true);
  ScopedDeadline deadline(std::chrono::nanoseconds(0));
  CHECK_THROWS_AS(groebner_basis(m), TimeoutError);
}

TEST_CASE("stats scope records engine work") {
  auto u = xy();
  EngineStats stats;
  {
    StatsScope scope(stats);
    groebner_basis(I(u, {"x^2 + y^2 - 1", "x*y - 1"}));
  }
  CHECK(stats.groebner_calls == 1);
  CHECK(stats.pairs_created > 0);
  CHECK(stats.max_basis_size >= 2);
}
