#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "flatcheck/engine.hpp"
#include "flatcheck/module.hpp"
#include "flatcheck/order.hpp"

namespace flatcheck {

/// Reduced Gröbner basis of a submodule under one order. Elements are monic
/// and sorted ascending by leading module monomial.
struct GroebnerBasis {
  MonomialOrder order;
  UniversePtr universe;
  std::size_t rank = 0;
  std::vector<engine::Element> elements;
  engine::BuchbergerStats stats;

  std::vector<FreeModuleElement> to_elements() const;
  bool is_unit() const;  // contains an element with leading term 1 (rank 1) or e_i for all i
};

/// Engine conversion: sort terms under `order`.
engine::TermVec to_terms(const FreeModuleElement& v, const MonomialOrder& order);
FreeModuleElement from_terms(const engine::TermVec& terms, const UniversePtr& universe, std::size_t rank);

/// Reduced Gröbner basis of M (cached on M if already present for this order).
std::shared_ptr<const GroebnerBasis> groebner_basis(const Submodule& m, const MonomialOrder& order = {},
                                                    engine::Exec exec = engine::Exec::Parallel);

/// M with its reduced basis attached; generators are replaced by the basis.
Submodule buchberger(const Submodule& m, const MonomialOrder& order = {},
                     engine::Exec exec = engine::Exec::Parallel);

FreeModuleElement normal_form(const FreeModuleElement& f, const Submodule& m, const MonomialOrder& order = {});
Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order = {});

bool member(const FreeModuleElement& f, const Submodule& m, const MonomialOrder& order = {});
/// Every generator of `small` lies in `big`.
bool contains(const Submodule& big, const Submodule& small, const MonomialOrder& order = {});
bool submodule_equal(const Submodule& a, const Submodule& b, const MonomialOrder& order = {});

}  // namespace flatcheck
