#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatcheck/monomial.hpp"
#include "flatcheck/order.hpp"
#include "flatcheck/rational.hpp"
#include "flatcheck/universe.hpp"

namespace flatcheck {

/// Exact multivariate polynomial over Q in a declared universe.
///
/// Terms live in an order-agnostic map; zero coefficients are never stored.
/// Values are immutable in practice: all arithmetic returns new polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(UniversePtr universe) : universe_(std::move(universe)) {}
  Polynomial(UniversePtr universe, TermMap terms);

  static Polynomial constant(UniversePtr universe, const Rational& c);
  static Polynomial variable(UniversePtr universe, std::size_t index);
  static Polynomial variable(UniversePtr universe, std::string_view name);
  static Polynomial monomial(UniversePtr universe, Monomial m, const Rational& c = 1);

  const UniversePtr& universe() const { return universe_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Maximum total degree; -1 for the zero polynomial.
  long degree() const;
  /// Lowest total degree among terms; -1 for zero.
  long low_degree() const;
  bool is_homogeneous() const;
  /// Sum of terms of total degree d.
  Polynomial homogeneous_part(long d) const;
  /// True iff no term involves variable i.
  bool free_of(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned e) const;
  /// Multiply by a monomial with coefficient.
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  /// Order-maximal term. Throws DomainError on the zero polynomial.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;

  /// Terms sorted decreasingly by the order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const;

  /// Evaluate every variable at the given rational point (size = universe size).
  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  UniversePtr universe_;
  TermMap terms_;
};

/// Ring homomorphism image: variable i of f's universe goes to images[i],
/// or to the same-named variable of `target` when images[i] is empty.
Polynomial substitute(const Polynomial& f, const std::vector<std::optional<Polynomial>>& images,
                      const UniversePtr& target);
/// Same-universe substitution keyed by variable index.
Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& images);

/// Move f into a universe that contains all its variables (matched by name).
Polynomial embed(const Polynomial& f, const UniversePtr& target);

/// Canonical text: terms in decreasing graded-reverse-lex, explicit '*',
/// coefficients as a/b.
std::string to_string(const Polynomial& f);

}  // namespace flatcheck
