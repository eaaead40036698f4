#include "flatcheck/operations.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "flatcheck/errors.hpp"

namespace flatcheck {

namespace {

std::vector<bool> block_mask(std::size_t nvars, const std::vector<std::size_t>& vars) {
  std::vector<bool> mask(nvars, false);
  for (auto v : vars) mask.at(v) = true;
  return mask;
}

// Basis elements free of the variables in `mask`, moved to `target` by
// dropping trailing variables (target must be a prefix of the source universe).
std::vector<FreeModuleElement> free_elements(const GroebnerBasis& gb, const std::vector<bool>& mask,
                                             const UniversePtr& target) {
  std::vector<FreeModuleElement> out;
  const std::size_t n = target->size();
  for (const auto& e : gb.elements) {
    const auto& lead = e.lead().mon;
    bool free = true;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i] && lead[i] != 0) free = false;
    if (!free) continue;
    std::vector<Polynomial::TermMap> maps(gb.rank);
    for (const auto& t : e.terms) {
      std::vector<Monomial::Exponent> exps(t.mon.exponents().begin(), t.mon.exponents().begin() + n);
      maps[t.comp].emplace(Monomial(std::move(exps)), t.coef);
    }
    std::vector<Polynomial> comps;
    for (auto& m : maps) comps.emplace_back(target, std::move(m));
    out.emplace_back(std::move(comps));
  }
  return out;
}

void require_nonzero(const Polynomial& f, const char* what) {
  if (f.is_zero()) throw DomainError(std::string(what) + " by the zero polynomial");
}

}  // namespace

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  require_nonzero(f, "division");
  require_same_universe(g.universe(), f.universe(), "division");
  const MonomialOrder order;
  engine::TermVec rest = to_terms(FreeModuleElement(g), order);
  const engine::TermVec div = to_terms(FreeModuleElement(f), order);
  const auto& lead = div.back();
  std::span<const engine::Term> tail(div.data(), div.size() - 1);
  Polynomial::TermMap quotient;
  while (!rest.empty()) {
    engine::Term top = std::move(rest.back());
    rest.pop_back();
    if (!lead.mon.divides(top.mon)) throw DomainError("exact division: divisor does not divide");
    const Monomial m = top.mon / lead.mon;
    const Rational c = top.coef / lead.coef;
    rest = engine::sub_mul(rest, c, m, tail, order);
    quotient.emplace(m, c);
  }
  return Polynomial(g.universe(), std::move(quotient));
}

Submodule intersect(const Submodule& a, const Submodule& b, const MonomialOrder& order) {
  if (a.rank() != b.rank()) throw InputError("intersection: rank mismatch");
  require_same_universe(a.universe(), b.universe(), "intersection");
  const auto& u = a.universe();
  const auto big = u->with_auxiliary("t");
  const std::size_t t = u->size();
  const auto tvar = Polynomial::variable(big, t);
  const auto one_minus_t = Polynomial::constant(big, 1) - tvar;
  std::vector<FreeModuleElement> gens;
  for (const auto& g : a.generators()) gens.push_back(tvar * embed(g, big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * embed(g, big));
  const auto mask = block_mask(big->size(), {t});
  const auto elim = order.without_block().eliminating(mask);
  auto gb = groebner_basis(Submodule(big, a.rank(), std::move(gens)), elim);
  Submodule out(u, a.rank(), free_elements(*gb, mask, u));
  if (order.block.empty()) {
    // The t-free part of a reduced elimination basis is the reduced basis of
    // the intersection under the restricted order.
    auto cached = std::make_shared<GroebnerBasis>();
    cached->order = order;
    cached->universe = u;
    cached->rank = a.rank();
    for (const auto& g : out.generators()) cached->elements.emplace_back(to_terms(g, order));
    out = out.with_basis(std::move(cached));
  }
  return out;
}

Submodule colon_element(const Submodule& m, const Polynomial& f, const MonomialOrder& order) {
  require_nonzero(f, "colon");
  require_same_universe(m.universe(), f.universe(), "colon");
  if (f.is_constant()) return buchberger(m, order);
  const Submodule meet = intersect(m, ideal_times_free(Ideal::ideal(m.universe(), {f}), m.rank()), order);
  std::vector<FreeModuleElement> gens;
  for (const auto& g : meet.generators())
    gens.push_back(map_components(g, [&f](const Polynomial& p) { return exact_divide(p, f); }));
  return buchberger(Submodule(m.universe(), m.rank(), std::move(gens)), order);
}

Saturation saturate_element(const Submodule& m, const Polynomial& f, const MonomialOrder& order) {
  require_nonzero(f, "saturation");
  Submodule current = buchberger(m, order);
  for (int k = 0;; ++k) {
    Submodule next = colon_element(current, f, order);
    if (contains(current, next, order)) return {current, k};
    current = std::move(next);
  }
}

Submodule saturate_one_shot(const Submodule& m, const Polynomial& f, const MonomialOrder& order) {
  require_nonzero(f, "saturation");
  require_same_universe(m.universe(), f.universe(), "saturation");
  const auto& u = m.universe();
  const auto big = u->with_auxiliary("t");
  const std::size_t t = u->size();
  const auto inverse = Polynomial::constant(big, 1) - Polynomial::variable(big, t) * embed(f, big);
  std::vector<FreeModuleElement> gens;
  for (const auto& g : m.generators()) gens.push_back(embed(g, big));
  for (std::size_t j = 0; j < m.rank(); ++j)
    gens.push_back(inverse * FreeModuleElement::basis_vector(big, m.rank(), j));
  const auto mask = block_mask(big->size(), {t});
  auto gb = groebner_basis(Submodule(big, m.rank(), std::move(gens)), order.without_block().eliminating(mask));
  return buchberger(Submodule(u, m.rank(), free_elements(*gb, mask, u)), order);
}

Submodule eliminate(const Submodule& m, const std::vector<std::size_t>& vars, const MonomialOrder& order) {
  if (vars.empty()) return buchberger(m, order);
  const auto mask = block_mask(m.universe()->size(), vars);
  auto gb = groebner_basis(m, order.without_block().eliminating(mask));
  return Submodule(m.universe(), m.rank(), free_elements(*gb, mask, m.universe()));
}

Ideal element_annihilator(const FreeModuleElement& g, const Submodule& m, const MonomialOrder& order) {
  if (g.rank() != m.rank()) throw InputError("annihilator: rank mismatch");
  const auto& u = m.universe();
  if (member(g, m, order)) return buchberger(Ideal::ideal(u, {Polynomial::constant(u, 1)}), order);
  std::size_t c = 0;
  while (g[c].is_zero()) ++c;
  const Submodule meet = intersect(m, Submodule(u, m.rank(), {g}), order);
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(exact_divide(h[c], g[c]));
  return buchberger(Ideal::ideal(u, gens), order);
}

Ideal annihilator_quotient(const Submodule& n, const Submodule& m, const MonomialOrder& order) {
  if (n.rank() != m.rank()) throw InputError("annihilator: rank mismatch");
  require_same_universe(n.universe(), m.universe(), "annihilator");
  if (!contains(n, m, order)) throw InputError("annihilator quotient: M is not contained in N");
  const auto& u = n.universe();
  Ideal result = buchberger(Ideal::ideal(u, {Polynomial::constant(u, 1)}), order);
  for (const auto& g : n.generators()) {
    if (member(g, m, order)) continue;
    result = intersect(result, element_annihilator(g, m, order), order);
  }
  return buchberger(result, order);
}

std::vector<std::size_t> maximal_independent_set(const std::vector<Monomial>& leading, std::size_t nvars) {
  // Supports as bitsets; a set S is independent iff no support is inside S.
  std::vector<std::vector<bool>> supports;
  for (const auto& m : leading) {
    std::vector<bool> s(nvars, false);
    for (std::size_t i = 0; i < nvars; ++i) s[i] = m[i] != 0;
    supports.push_back(std::move(s));
  }
  std::vector<bool> chosen(nvars, false);
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  auto independent = [&](const std::vector<bool>& set) {
    for (const auto& s : supports) {
      bool inside = true;
      for (std::size_t i = 0; i < nvars && inside; ++i)
        if (s[i] && !set[i]) inside = false;
      if (inside) return false;
    }
    return true;
  };
  // Depth-first over variables in index order; prune when even taking every
  // remaining variable cannot beat the best set found.
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (current.size() + (nvars - i) <= best.size()) return;
    if (i == nvars) {
      best = current;
      return;
    }
    chosen[i] = true;
    if (independent(chosen)) {
      current.push_back(i);
      search(i + 1);
      current.pop_back();
    }
    chosen[i] = false;
    search(i + 1);
  };
  if (independent(chosen)) search(0);
  return best;
}

int dimension(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.rank() != 1) throw InputError("dimension: expected an ideal");
  auto gb = groebner_basis(ideal, order);
  if (gb->is_unit()) return -1;
  std::vector<Monomial> leading;
  for (const auto& e : gb->elements) leading.push_back(e.lead().mon);
  return static_cast<int>(maximal_independent_set(leading, ideal.universe()->size()).size());
}

bool radical_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.rank() != 1) throw InputError("radical membership: expected an ideal");
  require_same_universe(f.universe(), ideal.universe(), "radical membership");
  if (f.is_zero()) return true;
  const auto big = ideal.universe()->with_auxiliary("t");
  const auto t = Polynomial::variable(big, ideal.universe()->size());
  std::vector<Polynomial> gens;
  for (const auto& p : ideal_generators(ideal)) gens.push_back(embed(p, big));
  gens.push_back(Polynomial::constant(big, 1) - t * embed(f, big));
  return groebner_basis(Ideal::ideal(big, gens), order.without_block())->is_unit();
}

bool vanishes_at_origin(const Submodule& m, const MonomialOrder& order) {
  auto gb = groebner_basis(m, order);
  for (const auto& e : gb->elements)
    for (const auto& t : e.terms)
      if (t.mon.is_one()) return false;
  return true;
}

}  // namespace flatcheck
