#include "flatcheck/groebner.hpp"

#include "flatcheck/context.hpp"
#include "flatcheck/errors.hpp"

namespace flatcheck {

std::vector<FreeModuleElement> GroebnerBasis::to_elements() const {
  std::vector<FreeModuleElement> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(from_terms(e.terms, universe, rank));
  return out;
}

bool GroebnerBasis::is_unit() const {
  std::vector<bool> full(rank, false);
  for (const auto& e : elements)
    if (e.lead().mon.is_one()) full[e.lead().comp] = true;
  for (bool b : full)
    if (!b) return false;
  return true;
}

engine::TermVec to_terms(const FreeModuleElement& v, const MonomialOrder& order) {
  engine::TermVec out;
  for (std::size_t c = 0; c < v.rank(); ++c)
    for (const auto& [m, coef] : v[c].terms()) out.push_back({m, static_cast<std::uint32_t>(c), coef});
  engine::normalize(out, order);
  return out;
}

FreeModuleElement from_terms(const engine::TermVec& terms, const UniversePtr& universe, std::size_t rank) {
  std::vector<Polynomial::TermMap> maps(rank);
  for (const auto& t : terms) maps.at(t.comp).emplace(t.mon, t.coef);
  std::vector<Polynomial> comps;
  comps.reserve(rank);
  for (auto& m : maps) comps.emplace_back(universe, std::move(m));
  return FreeModuleElement(std::move(comps));
}

std::shared_ptr<const GroebnerBasis> groebner_basis(const Submodule& m, const MonomialOrder& order,
                                                    engine::Exec exec) {
  if (auto cached = m.cached_basis(order)) return cached;
  if (!order.block.empty() && order.block.size() != m.universe()->size())
    throw InputError("elimination block does not match universe size");
  std::vector<engine::TermVec> gens;
  gens.reserve(m.generators().size());
  for (const auto& g : m.generators()) gens.push_back(to_terms(g, order));
  auto gb = std::make_shared<GroebnerBasis>();
  gb->order = order;
  gb->universe = m.universe();
  gb->rank = m.rank();
  auto stats = current_stats();
  if (stats) {
    ++stats->groebner_calls;
    stats->largest_input = std::max(stats->largest_input, gens.size());
  }
  auto basis = engine::buchberger(std::move(gens), m.rank(), order, exec, &gb->stats);
  for (auto& t : basis) gb->elements.emplace_back(std::move(t));
  if (stats) {
    stats->pairs_created += gb->stats.pairs_created;
    stats->pairs_reduced += gb->stats.pairs_reduced;
    stats->zero_reductions += gb->stats.zero_reductions;
    stats->max_basis_size = std::max(stats->max_basis_size, gb->stats.max_basis_size);
  }
  return gb;
}

Submodule buchberger(const Submodule& m, const MonomialOrder& order, engine::Exec exec) {
  auto gb = groebner_basis(m, order, exec);
  return Submodule(m.universe(), m.rank(), gb->to_elements()).with_basis(gb);
}

FreeModuleElement normal_form(const FreeModuleElement& f, const Submodule& m, const MonomialOrder& order) {
  if (f.rank() != m.rank()) throw InputError("normal form: rank mismatch");
  require_same_universe(f.universe(), m.universe(), "normal form");
  auto gb = groebner_basis(m, order);
  return from_terms(engine::reduce(to_terms(f, order), gb->elements, order), m.universe(), m.rank());
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  return normal_form(FreeModuleElement(f), ideal, order)[0];
}

bool member(const FreeModuleElement& f, const Submodule& m, const MonomialOrder& order) {
  if (f.rank() != m.rank()) throw InputError("membership: rank mismatch");
  require_same_universe(f.universe(), m.universe(), "membership");
  auto gb = groebner_basis(m, order);
  return engine::reduce(to_terms(f, order), gb->elements, order).empty();
}

bool contains(const Submodule& big, const Submodule& small, const MonomialOrder& order) {
  if (big.rank() != small.rank()) throw InputError("containment: rank mismatch");
  require_same_universe(big.universe(), small.universe(), "containment");
  auto gb = groebner_basis(big, order);
  std::vector<engine::TermVec> batch;
  batch.reserve(small.generators().size());
  for (const auto& g : small.generators()) batch.push_back(to_terms(g, order));
  engine::reduce_batch(batch, gb->elements, order, engine::Exec::Parallel);
  for (const auto& r : batch)
    if (!r.empty()) return false;
  return true;
}

bool submodule_equal(const Submodule& a, const Submodule& b, const MonomialOrder& order) {
  return contains(a, b, order) && contains(b, a, order);
}

}  // namespace flatcheck
