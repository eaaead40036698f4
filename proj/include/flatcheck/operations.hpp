#pragma once

#include <cstddef>
#include <vector>

#include "flatcheck/groebner.hpp"
#include "flatcheck/module.hpp"

namespace flatcheck {

/// (M : f) = { g in R^q : f g in M }, computed as (M ∩ f R^q) / f.
/// Throws DomainError for f = 0.
Submodule colon_element(const Submodule& m, const Polynomial& f, const MonomialOrder& order = {});

struct Saturation {
  Submodule module;
  int exponent = 0;  // least k with (M : f^k) = (M : f^(k+1))
};

/// (M : f^∞) by iterated colon.
Saturation saturate_element(const Submodule& m, const Polynomial& f, const MonomialOrder& order = {});

/// (M : f^∞) in one elimination: (M + (1 - t f) R^q) ∩ R^q.
Submodule saturate_one_shot(const Submodule& m, const Polynomial& f, const MonomialOrder& order = {});

/// M1 ∩ M2 via t M1 + (1 - t) M2 with t eliminated.
Submodule intersect(const Submodule& a, const Submodule& b, const MonomialOrder& order = {});

/// M ∩ (free module over the subring without `vars`).
Submodule eliminate(const Submodule& m, const std::vector<std::size_t>& vars, const MonomialOrder& order = {});

/// { r : r g in M } for a single element g.
Ideal element_annihilator(const FreeModuleElement& g, const Submodule& m, const MonomialOrder& order = {});

/// { r : r N ⊆ M } for M ⊆ N. Throws InputError if M is not contained in N.
Ideal annihilator_quotient(const Submodule& n, const Submodule& m, const MonomialOrder& order = {});

/// Krull dimension of R / I from the leading-term ideal; -1 for I = (1).
int dimension(const Ideal& ideal, const MonomialOrder& order = {});

/// Largest set of variables containing no leading-monomial support.
std::vector<std::size_t> maximal_independent_set(const std::vector<Monomial>& leading, std::size_t nvars);

/// f in √I, decided by 1 ∈ I + (1 - t f).
bool radical_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order = {});

/// Exact quotient g / f; throws DomainError when f does not divide g.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

/// True iff every element of the reduced basis vanishes at the origin, i.e.
/// M lies in (all variables) R^q.
bool vanishes_at_origin(const Submodule& m, const MonomialOrder& order = {});

}  // namespace flatcheck
