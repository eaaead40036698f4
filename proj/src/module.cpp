#include "flatcheck/module.hpp"

#include <algorithm>

#include "flatcheck/errors.hpp"
#include "flatcheck/groebner.hpp"

namespace flatcheck {

FreeModuleElement::FreeModuleElement(UniversePtr universe, std::size_t rank)
    : universe_(std::move(universe)), components_(rank, Polynomial(universe_)) {}

FreeModuleElement::FreeModuleElement(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw InputError("free module element of rank 0");
  universe_ = components_.front().universe();
  for (auto& p : components_) {
    if (!p.universe()) p = Polynomial(universe_);
    require_same_universe(universe_, p.universe(), "module element");
  }
}

FreeModuleElement::FreeModuleElement(const Polynomial& p) : universe_(p.universe()), components_{p} {}

FreeModuleElement FreeModuleElement::basis_vector(UniversePtr universe, std::size_t rank, std::size_t i) {
  FreeModuleElement v(universe, rank);
  v.components_.at(i) = Polynomial::constant(universe, 1);
  return v;
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

FreeModuleElement FreeModuleElement::operator-() const {
  return map_components(*this, [](const Polynomial& p) { return -p; });
}

FreeModuleElement& FreeModuleElement::operator+=(const FreeModuleElement& other) {
  if (rank() != other.rank()) throw InputError("module addition: rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += other.components_[i];
  return *this;
}

FreeModuleElement& FreeModuleElement::operator-=(const FreeModuleElement& other) {
  if (rank() != other.rank()) throw InputError("module subtraction: rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= other.components_[i];
  return *this;
}

FreeModuleElement operator*(const Polynomial& f, const FreeModuleElement& v) {
  return map_components(v, [&f](const Polynomial& p) { return f * p; });
}

bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
  return a.rank() == b.rank() && a.components_ == b.components_;
}

FreeModuleElement embed(const FreeModuleElement& v, const UniversePtr& target) {
  return map_components(v, [&target](const Polynomial& p) { return embed(p, target); });
}

std::string to_string(const FreeModuleElement& v) {
  if (v.rank() == 1) return to_string(v[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

Submodule::Submodule(UniversePtr universe, std::size_t rank, std::vector<FreeModuleElement> generators)
    : universe_(std::move(universe)), rank_(rank), generators_(std::move(generators)) {
  if (rank_ == 0) throw InputError("submodule of rank 0");
  for (const auto& g : generators_) {
    if (g.rank() != rank_) throw InputError("generator rank differs from module rank");
    require_same_universe(universe_, g.universe(), "submodule generator");
  }
}

Submodule Submodule::ideal(UniversePtr universe, const std::vector<Polynomial>& generators) {
  std::vector<FreeModuleElement> gens;
  gens.reserve(generators.size());
  for (const auto& p : generators) gens.emplace_back(p);
  return Submodule(std::move(universe), 1, std::move(gens));
}

Submodule Submodule::free(UniversePtr universe, std::size_t rank) {
  std::vector<FreeModuleElement> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(FreeModuleElement::basis_vector(universe, rank, i));
  return Submodule(universe, rank, std::move(gens));
}

bool Submodule::is_zero() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_zero(); });
}

std::shared_ptr<const GroebnerBasis> Submodule::cached_basis(const MonomialOrder& order) const {
  if (basis_ && basis_->order == order) return basis_;
  return nullptr;
}

Submodule Submodule::with_basis(std::shared_ptr<const GroebnerBasis> basis) const {
  Submodule out = *this;
  out.basis_ = std::move(basis);
  return out;
}

Submodule operator+(const Submodule& a, const Submodule& b) {
  if (a.rank() != b.rank()) throw InputError("submodule sum: rank mismatch");
  require_same_universe(a.universe(), b.universe(), "submodule sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.universe(), a.rank(), std::move(gens));
}

std::vector<Polynomial> ideal_generators(const Ideal& ideal) {
  if (ideal.rank() != 1) throw InputError("expected an ideal (rank 1)");
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) out.push_back(g[0]);
  return out;
}

Submodule ideal_times_free(const Ideal& ideal, std::size_t rank) {
  std::vector<FreeModuleElement> gens;
  for (const auto& p : ideal_generators(ideal))
    for (std::size_t j = 0; j < rank; ++j)
      gens.push_back(p * FreeModuleElement::basis_vector(ideal.universe(), rank, j));
  return Submodule(ideal.universe(), rank, std::move(gens));
}

Submodule embed(const Submodule& m, const UniversePtr& target) {
  std::vector<FreeModuleElement> gens;
  for (const auto& g : m.generators()) gens.push_back(embed(g, target));
  return Submodule(target, m.rank(), std::move(gens));
}

std::string to_string(const std::vector<FreeModuleElement>& elements) {
  std::string s = "(";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) s += ", ";
    s += to_string(elements[i]);
  }
  return s + ")";
}

}  // namespace flatcheck
