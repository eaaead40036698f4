#include "flatcheck/openness.hpp"

#include "flatcheck/errors.hpp"
#include "flatcheck/groebner.hpp"
#include "flatcheck/operations.hpp"

namespace flatcheck {

namespace {

bool only_role(const Polynomial& f, VarRole role) {
  const auto& u = *f.universe();
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] && u.role(i) != role) return false;
  return true;
}

bool has_nonzero(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) return true;
  return false;
}

// Rewrite the map in the coordinates where the target ideal was changed by
// y -> L(y): the new components are L^{-1}(phi).
MapPresentation change_target(const MapPresentation& mp, const CoordinateChange& change) {
  MapPresentation out = mp;
  out.target_ideal = apply_change(mp.target_ideal, change);
  const auto& base = mp.universe->indices(VarRole::Base);
  const std::size_t d = change.direction;
  const Rational cd = change.constants[d];
  const Polynomial last = mp.components[d] * (1 / cd);
  for (std::size_t j = 0; j < base.size(); ++j)
    out.components[j] = j == d ? last : mp.components[j] - change.constants[j] * last;
  return out;
}

}  // namespace

std::string_view to_string(OpenStatus status) {
  switch (status) {
    case OpenStatus::Open: return "Open";
    case OpenStatus::NotOpen: return "NotOpen";
    case OpenStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

void MapPresentation::validate() const {
  const auto base = universe->indices(VarRole::Base);
  if (base.empty()) throw InputError("map needs target variables");
  if (components.size() != base.size())
    throw InputError("map has " + std::to_string(components.size()) + " components for " +
                     std::to_string(base.size()) + " target variables");
  for (const auto& f : components) {
    if (!only_role(f, VarRole::Fiber)) throw InputError("map component uses a non-source variable");
    if (f.constant_term() != 0) throw InputError("map does not send the origin to the origin");
  }
  for (const auto& p : ideal_generators(source_ideal)) {
    if (!only_role(p, VarRole::Fiber)) throw InputError("source ideal uses a non-source variable");
    if (p.constant_term() != 0) throw InputError("source ideal does not vanish at the origin");
  }
  for (const auto& p : ideal_generators(target_ideal)) {
    if (!only_role(p, VarRole::Base)) throw InputError("target ideal uses a non-target variable");
    if (p.constant_term() != 0) throw InputError("target ideal does not vanish at the origin");
  }
}

Ideal pullback_ideal(const MapPresentation& mp, const BlowupChart& chart) {
  const auto w = chart_universe(mp.universe, chart);
  auto move = [&w](const Polynomial& p) { return Polynomial(w, p.terms()); };
  std::vector<Polynomial> gens;
  for (const auto& p : ideal_generators(mp.source_ideal))
    if (!p.is_zero()) gens.push_back(move(p));
  if (has_nonzero(mp.target_ideal)) {
    const auto st = strict_transform(mp.target_ideal, chart, w);
    if (!vanishes_at_origin(st.ideal))
      throw DomainError("strict transform of the target misses the origin in this chart; select another chart");
    for (const auto& p : ideal_generators(st.ideal)) gens.push_back(p);
  }
  const auto ze = Polynomial::variable(w, chart.exceptional_position());
  for (std::size_t j = 0; j < chart.n(); ++j) {
    const auto z = Polynomial::variable(w, chart.base[j]);
    gens.push_back(move(mp.components.at(j)) - (j == chart.exceptional ? z : z * ze));
  }
  return Ideal::ideal(w, gens);
}

VerticalResult vertical_test(const Ideal& pullback, const BlowupChart& chart) {
  const auto z = Polynomial::variable(pullback.universe(), chart.exceptional_position());
  auto sat = saturate_element(pullback, z);
  VerticalResult r;
  r.exponent = sat.exponent;
  for (const auto& g : ideal_generators(sat.module)) {
    if (!radical_member(g, pullback)) {
      r.vertical = true;
      r.witness = g;
      break;
    }
  }
  r.saturation = std::move(sat.module);
  return r;
}

OpennessVerdict openness_verdict(const MapPresentation& mp, const OpenOptions& options) {
  mp.validate();
  OpennessVerdict v;
  v.citation = "open iff the pullback by the blow-up chart has no isolated vertical component "
               "(pure-dimensional source, normal target)";
  MapPresentation prepared = mp;
  BlowupChart chart = BlowupChart::standard(mp.universe);
  v.chart = "default chart, exceptional " + mp.universe->name(chart.exceptional_position());
  if (options.exceptional) {
    chart = BlowupChart::with_exceptional(mp.universe, *options.exceptional);
    v.chart = "exceptional " + mp.universe->name(chart.exceptional_position());
  } else if (has_nonzero(mp.target_ideal)) {
    const auto choice = select_chart(mp.target_ideal);
    if (!choice) throw DomainError("no chart found whose strict transform of the target passes through the origin");
    chart = choice->chart;
    v.chart = choice->description;
    if (!choice->change.is_identity()) prepared = change_target(mp, choice->change);
  }
  v.pullback = pullback_ideal(prepared, chart);
  v.vertical = vertical_test(v.pullback, chart);
  if (mp.pure_dimensional && mp.normal_target) {
    v.status = v.vertical.vertical ? OpenStatus::NotOpen : OpenStatus::Open;
  } else {
    v.status = OpenStatus::Inconclusive;
    v.note = std::string("hypotheses not asserted; raw result: ") +
             (v.vertical.vertical ? "vertical component found" : "no isolated vertical component");
  }
  if (v.vertical.witness) {
    if (!v.note.empty()) v.note += "; ";
    v.note += "component may miss the origin, inspect the witness";
  }
  return v;
}

}  // namespace flatcheck
