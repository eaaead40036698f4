#include <doctest.h>

#include <random>

#include "../support/random_instances.hpp"
#include "flatcheck/errors.hpp"
#include "flatcheck/parser.hpp"
#include "flatcheck/polynomial.hpp"

using namespace flatcheck;
using testing_support::uniform;

namespace {

UniversePtr ys() {
  return VarUniverse::make({{"y1", VarRole::Base}, {"y2", VarRole::Base}, {"y3", VarRole::Base}});
}

Polynomial P(const char* text, const UniversePtr& u) { return parse_polynomial(text, u); }

}  // namespace

TEST_CASE("rationals stay normalized") {
  Rational a(6, 4);
  a.canonicalize();
  CHECK(is_normalized(a));
  CHECK(to_string(a) == "3/2");
  Rational b = Rational(2, 3) * Rational(3, 2);
  CHECK(is_one(b));
  CHECK(is_normalized(Rational(-1, 2) + Rational(1, 10)));
}

TEST_CASE("universe") {
  auto u = ys();
  CHECK(u->size() == 3);
  CHECK(u->index_of("y2") == 1);
  CHECK_THROWS_AS(u->index_of("q"), InputError);
  CHECK(u->indices(VarRole::Base).size() == 3);
  auto t = u->with_auxiliary("t");
  CHECK(t->size() == 4);
  CHECK(t->role(3) == VarRole::Auxiliary);
  CHECK_THROWS_AS(VarUniverse::make({{"a", VarRole::Base}, {"a", VarRole::Fiber}}), InputError);
}

TEST_CASE("arithmetic examples") {
  auto u = ys();
  CHECK((P("y1 + y2", u) * P("y1 - y2", u)) == P("y1^2 - y2^2", u));
  CHECK((P("y1*y2 + 7", u) * Polynomial(u)).is_zero());
  CHECK((P("(2/3)*y1", u) * P("(3/2)y1", u)) == P("y1^2", u));
  CHECK((P("y1", u) - P("y1", u)).term_count() == 0);
  auto other = VarUniverse::make({{"a", VarRole::Fiber}});
  CHECK_THROWS_AS(P("y1", u) + Polynomial::variable(other, 0), InputError);
}

TEST_CASE("ring axioms on random polynomials") {
  auto u = ys();
  std::mt19937 rng(11);
  const auto pos = testing_support::all_positions(u);
  for (int i = 0; i < 50; ++i) {
    auto a = testing_support::random_polynomial(rng, u, pos, 0, 3, 4);
    auto b = testing_support::random_polynomial(rng, u, pos, 0, 3, 4);
    auto c = testing_support::random_polynomial(rng, u, pos, 0, 2, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    const auto diff = a * b - c;
    for (const auto& [m, coef] : diff.terms()) CHECK(!is_zero(coef));
  }
}

TEST_CASE("substitution examples") {
  auto u = ys();
  auto f = P("y1*y2 + y3", u);
  std::map<std::size_t, Polynomial> m = {{0, P("y1*y3", u)}, {1, P("y2*y3", u)}};
  CHECK(substitute(f, m) == P("y1*y2*y3^2 + y3", u));
  CHECK(substitute(f, std::map<std::size_t, Polynomial>{}) == f);
  auto z = VarUniverse::make({{"z1", VarRole::Blowup}, {"z2", VarRole::Blowup}});
  auto y2v = VarUniverse::make({{"y1", VarRole::Base}, {"y2", VarRole::Base}});
  std::vector<std::optional<Polynomial>> images = {P("z1*z2", z), P("z2", z)};
  CHECK(substitute(P("y1^2 - y2^3", y2v), images, z) == P("z1^2*z2^2 - z2^3", z));
}

TEST_CASE("substitution is a ring homomorphism") {
  auto u = ys();
  std::mt19937 rng(12);
  const auto pos = testing_support::all_positions(u);
  for (int i = 0; i < 30; ++i) {
    std::map<std::size_t, Polynomial> m;
    for (std::size_t v = 0; v < 3; ++v) m.emplace(v, testing_support::random_polynomial(rng, u, pos, 0, 2, 2));
    auto a = testing_support::random_polynomial(rng, u, pos, 0, 2, 3);
    auto b = testing_support::random_polynomial(rng, u, pos, 0, 2, 3);
    CHECK(substitute(a * b, m) == substitute(a, m) * substitute(b, m));
    CHECK(substitute(a + b, m) == substitute(a, m) + substitute(b, m));
  }
}

TEST_CASE("leading terms") {
  auto u = VarUniverse::make({{"x1", VarRole::Fiber}, {"x2", VarRole::Fiber}});
  auto f = P("x1^2 + x1*x2^2", u);
  CHECK(f.leading_term(MonomialOrder::grevlex()).first == P("x1*x2^2", u).terms().begin()->first);
  CHECK(f.leading_term(MonomialOrder::lex()).first == P("x1^2", u).terms().begin()->first);
  auto c = Polynomial::constant(u, 5).leading_term({});
  CHECK(c.first.is_one());
  CHECK(c.second == 5);
  CHECK_THROWS_AS(Polynomial(u).leading_term({}), DomainError);
}

TEST_CASE("orders are multiplicative well-orders") {
  std::mt19937 rng(13);
  const std::size_t n = 4;
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(),
                     MonomialOrder::grevlex().eliminating({false, true, false, true})}) {
    for (int i = 0; i < 200; ++i) {
      auto mk = [&] {
        std::vector<Monomial::Exponent> e(n);
        for (auto& x : e) x = static_cast<Monomial::Exponent>(uniform(rng, 0, 3));
        return Monomial(e);
      };
      auto a = mk(), b = mk(), w = mk();
      const int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      const int shifted = order.compare(a * w, b * w);
      CHECK(((ab > 0) - (ab < 0)) == ((shifted > 0) - (shifted < 0)));
      CHECK(order.compare(Monomial(n), a) <= 0);
    }
  }
}

TEST_CASE("elimination order puts block variables first") {
  auto u = VarUniverse::make({{"t", VarRole::Auxiliary}, {"x", VarRole::Fiber}});
  auto order = MonomialOrder::grevlex().eliminating({true, false});
  // t outranks x^5 in every component.
  CHECK(order.compare(Monomial::variable(2, 0), 1, Monomial::variable(2, 1, 5), 0) > 0);
}

TEST_CASE("module position orders: lower component index ranks higher") {
  MonomialOrder pot;
  MonomialOrder top;
  top.position = Position::TermOverPosition;
  const Monomial one(1), x = Monomial::variable(1, 0);
  CHECK(pot.compare(one, 0, x, 1) > 0);
  CHECK(top.compare(one, 0, x, 1) < 0);
  CHECK(top.compare(x, 0, x, 1) > 0);
}

TEST_CASE("canonical printing") {
  auto u = VarUniverse::make({{"x6", VarRole::Fiber}, {"y2", VarRole::Base}, {"x5", VarRole::Fiber}});
  CHECK(to_string(P("y2*x6 - x5", u)) == "x6*y2 - x5");
  auto v = VarUniverse::make({{"x", VarRole::Fiber}});
  CHECK(to_string(P("-x/2", v)) == "-1/2*x");
  CHECK(to_string(Polynomial(v)) == "0");
  CHECK(to_string(P("3 - x^2", v)) == "-x^2 + 3");
}

TEST_CASE("printing round-trips through the parser") {
  auto u = ys();
  std::mt19937 rng(14);
  const auto pos = testing_support::all_positions(u);
  for (int i = 0; i < 50; ++i) {
    Rational scale(uniform(rng, 1, 5), uniform(rng, 1, 7));
    scale.canonicalize();
    auto f = testing_support::random_polynomial(rng, u, pos, 0, 4, 5, 9) * scale;
    INFO(to_string(f));
    CHECK(parse_polynomial(to_string(f), u) == f);
  }
}

TEST_CASE("evaluation and homogeneous parts") {
  auto u = ys();
  auto f = P("y1^2 - 3*y2*y3 + y1 + 2", u);
  CHECK(f.evaluate({1, 2, 3}) == Rational(1 - 18 + 1 + 2));
  CHECK(f.homogeneous_part(2) == P("y1^2 - 3*y2*y3", u));
  CHECK(f.low_degree() == 0);
  CHECK(!f.is_homogeneous());
  CHECK(f.free_of(2) == false);
}
