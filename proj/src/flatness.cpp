#include "flatcheck/flatness.hpp"

#include <stdexcept>

#include "flatcheck/errors.hpp"
#include "flatcheck/groebner.hpp"
#include "flatcheck/operations.hpp"

namespace flatcheck {

namespace {

bool has_nonzero(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) return true;
  return false;
}

// First basis element of `colon` outside `module` whose class survives
// localization at the origin, i.e. (module : g) lies in the maximal ideal.
std::optional<FreeModuleElement> local_witness(const Submodule& colon, const Submodule& module,
                                               const MonomialOrder& order) {
  const Submodule basis = buchberger(colon, order);
  for (const auto& g : basis.generators()) {
    if (member(g, module, order)) continue;
    if (vanishes_at_origin(element_annihilator(g, module, order), order)) return g;
  }
  return std::nullopt;
}

void certify(const FlatnessVerdict& v, const MonomialOrder& order) {
  if (!v.witness) return;
  if (!witness_check(*v.witness, *v.module, *v.multiplier, order))
    throw std::logic_error("witness failed verification");
}

}  // namespace

std::string_view to_string(FlatStatus status) {
  switch (status) {
    case FlatStatus::Flat: return "Flat";
    case FlatStatus::NotFlat: return "NotFlat";
    case FlatStatus::ZeroDivisorFound: return "ZeroDivisorFound";
    case FlatStatus::Improper: return "Improper";
  }
  return "?";
}

ModulePresentation ModulePresentation::make(Submodule module) {
  const auto u = module.universe();
  return make(std::move(module), Ideal(u, 1));
}

ModulePresentation ModulePresentation::make(Submodule module, Ideal base_ideal) {
  if (base_ideal.rank() != 1) throw InputError("base ideal must be an ideal");
  require_same_universe(module.universe(), base_ideal.universe(), "presentation");
  for (const auto& g : base_ideal.generators())
    for (const auto& [m, c] : g[0].terms())
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] && module.universe()->role(i) != VarRole::Base)
          throw InputError("base ideal involves a non-base variable: " + module.universe()->name(i));
  if (module.universe()->indices(VarRole::Base).empty()) throw InputError("presentation needs a base variable");

  ModulePresentation p;
  p.rank = module.rank();
  if (module.universe()->indices(VarRole::Fiber).empty()) {
    const auto& old = module.universe();
    auto u = old->with_appended({{old->fresh_name("x1"), VarRole::Fiber}});
    module = embed(module, u);
    base_ideal = embed(base_ideal, u);
    const auto x = Polynomial::variable(u, u->size() - 1);
    std::vector<FreeModuleElement> gens = module.generators();
    for (std::size_t j = 0; j < p.rank; ++j) gens.push_back(x * FreeModuleElement::basis_vector(u, p.rank, j));
    module = Submodule(u, p.rank, std::move(gens));
  }
  if (has_nonzero(base_ideal)) module = module + ideal_times_free(base_ideal, p.rank);
  p.universe = module.universe();
  p.module = std::move(module);
  p.base_ideal = std::move(base_ideal);
  return p;
}

bool ModulePresentation::regular_base() const { return !has_nonzero(base_ideal); }

bool witness_check(const FreeModuleElement& g, const Submodule& module, const Polynomial& multiplier,
                   const MonomialOrder& order) {
  return member(multiplier * g, module, order) && !member(g, module, order);
}

FlatnessVerdict flat_test_regular(const ModulePresentation& p, const FlatOptions& options) {
  if (!p.regular_base()) throw InputError("regular test called with a nonzero base ideal");
  const auto& u = p.universe;
  const auto& order = options.order;
  const auto standard = BlowupChart::standard(u);
  const auto chart = BlowupChart::with_exceptional(u, options.exceptional.value_or(standard.n() - 1));
  const auto y = Polynomial::variable(u, chart.exceptional_position());

  FlatnessVerdict v;
  v.chart = "exceptional " + u->name(chart.exceptional_position());
  v.citation = "regular base: flat iff kappa(M) = kappa(M) : " + u->name(chart.exceptional_position()) +
               " after localizing at the origin";
  const Submodule transformed = buchberger(kappa(p.module, chart), order);
  const Submodule colon = colon_element(transformed, y, order);
  v.module = transformed;
  v.multiplier = y;
  if (contains(transformed, colon, order)) {
    v.status = FlatStatus::Flat;
    v.note = "colon equals the transformed module";
    return v;
  }
  if (auto w = local_witness(colon, transformed, order)) {
    v.status = FlatStatus::NotFlat;
    v.witness = std::move(w);
    certify(v, order);
    return v;
  }
  v.status = FlatStatus::Flat;
  v.note = "colon differs from the transformed module only away from the origin";
  return v;
}

FlatnessVerdict flat_test_singular(const ModulePresentation& p, const FlatOptions& options) {
  if (p.regular_base()) throw InputError("singular test called without a base ideal");
  const auto& order = options.order;
  FlatnessVerdict v;
  v.citation = "singular base: flat if the exceptional variable is a nonzerodivisor on F tensor S/I* at the origin";
  const auto choice = options.exceptional ? fixed_chart(p.base_ideal, *options.exceptional) : select_chart(p.base_ideal);
  if (!choice) {
    v.status = FlatStatus::Improper;
    v.note = "no chart found whose strict transform passes through the origin";
    return v;
  }
  const auto& chart = choice->chart;
  v.chart = choice->description;
  const Ideal& strict = choice->transform.ideal;
  v.strict_transform = strict;
  const auto& w = strict.universe();
  const Submodule changed = choice->change.is_identity() ? p.module : apply_change(p.module, choice->change);
  const Submodule n = buchberger(kappa(changed, chart, w) + ideal_times_free(strict, p.rank), order);
  const auto z = Polynomial::variable(w, chart.exceptional_position());
  const Submodule colon = colon_element(n, z, order);
  v.module = n;
  v.multiplier = z;
  if (contains(n, colon, order)) {
    v.status = FlatStatus::Flat;
    v.note = "exceptional variable is a nonzerodivisor";
    return v;
  }
  const Ideal ann = annihilator_quotient(colon, n, order);
  if (!vanishes_at_origin(ann, order)) {
    v.status = FlatStatus::Flat;
    v.note = "zerodivisor discrepancy is supported away from the origin";
    return v;
  }
  v.witness = local_witness(colon, n, order);
  if (!v.witness) throw std::logic_error("annihilator at the origin but no local witness");
  if (options.assume_domain && options.assume_embedding) {
    v.status = FlatStatus::NotFlat;
    v.note = "NotFlat relies on the asserted domain and embedding hypotheses";
  } else {
    v.status = FlatStatus::ZeroDivisorFound;
    v.note = "zerodivisor at the origin; NotFlat needs --assume-domain and --assume-embedding";
  }
  certify(v, order);
  return v;
}

FlatnessVerdict flat_test(const ModulePresentation& p, const FlatOptions& options) {
  return p.regular_base() ? flat_test_regular(p, options) : flat_test_singular(p, options);
}

}  // namespace flatcheck
