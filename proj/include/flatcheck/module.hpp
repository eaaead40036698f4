#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "flatcheck/order.hpp"
#include "flatcheck/polynomial.hpp"
#include "flatcheck/universe.hpp"

namespace flatcheck {

/// Element of the free module R^q over the polynomial ring of a universe.
class FreeModuleElement {
 public:
  FreeModuleElement() = default;
  FreeModuleElement(UniversePtr universe, std::size_t rank);
  explicit FreeModuleElement(std::vector<Polynomial> components);
  /// Rank-1 element.
  FreeModuleElement(const Polynomial& p);  // NOLINT: implicit on purpose for ideals

  static FreeModuleElement basis_vector(UniversePtr universe, std::size_t rank, std::size_t i);

  const UniversePtr& universe() const { return universe_; }
  std::size_t rank() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }
  bool is_zero() const;

  FreeModuleElement operator-() const;
  FreeModuleElement& operator+=(const FreeModuleElement& other);
  FreeModuleElement& operator-=(const FreeModuleElement& other);
  friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) { return a += b; }
  friend FreeModuleElement operator-(FreeModuleElement a, const FreeModuleElement& b) { return a -= b; }
  friend FreeModuleElement operator*(const Polynomial& f, const FreeModuleElement& v);

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b);

 private:
  UniversePtr universe_;
  std::vector<Polynomial> components_;
};

/// Apply a per-component polynomial map.
template <class F>
FreeModuleElement map_components(const FreeModuleElement& v, F&& f) {
  std::vector<Polynomial> out;
  out.reserve(v.rank());
  for (const auto& p : v.components()) out.push_back(f(p));
  return FreeModuleElement(std::move(out));
}

FreeModuleElement embed(const FreeModuleElement& v, const UniversePtr& target);

/// "p" for rank 1, "[p1, p2, ...]" otherwise.
std::string to_string(const FreeModuleElement& v);

struct GroebnerBasis;

/// Finitely generated submodule of R^q. An ideal is the rank-1 case.
///
/// May carry a reduced Gröbner basis computed under a specific order; the
/// cache is immutable once attached and spans the same module.
class Submodule {
 public:
  Submodule() = default;
  Submodule(UniversePtr universe, std::size_t rank, std::vector<FreeModuleElement> generators = {});

  static Submodule ideal(UniversePtr universe, const std::vector<Polynomial>& generators);
  /// The whole free module R^q.
  static Submodule free(UniversePtr universe, std::size_t rank);

  const UniversePtr& universe() const { return universe_; }
  std::size_t rank() const { return rank_; }
  const std::vector<FreeModuleElement>& generators() const { return generators_; }
  /// True iff every generator is zero.
  bool is_zero() const;

  /// Cached basis for this exact order, or null.
  std::shared_ptr<const GroebnerBasis> cached_basis(const MonomialOrder& order) const;
  Submodule with_basis(std::shared_ptr<const GroebnerBasis> basis) const;

  /// Sum of submodules (generator concatenation).
  friend Submodule operator+(const Submodule& a, const Submodule& b);

 private:
  UniversePtr universe_;
  std::size_t rank_ = 0;
  std::vector<FreeModuleElement> generators_;
  std::shared_ptr<const GroebnerBasis> basis_;
};

using Ideal = Submodule;

/// Polynomials of a rank-1 submodule's generators.
std::vector<Polynomial> ideal_generators(const Ideal& ideal);

/// ideal * R^q: every generator times every basis vector.
Submodule ideal_times_free(const Ideal& ideal, std::size_t rank);

Submodule embed(const Submodule& m, const UniversePtr& target);

/// "(g1, g2, ...)" over the given elements.
std::string to_string(const std::vector<FreeModuleElement>& elements);

}  // namespace flatcheck
