#include "flatcheck/engine.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flatcheck/context.hpp"

namespace flatcheck::engine {

Element::Element(TermVec t) : terms(std::move(t)) {
  assert(!terms.empty());
  mask = terms.back().mon.support_mask();
}

TermVec sub_mul(const TermVec& a, const Rational& c, const Monomial& m, std::span<const Term> b,
                const MonomialOrder& order) {
  TermVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_shifted) {
      shifted = b[j].mon * m;
      have_shifted = true;
    }
    int cmp;
    if (i == a.size())
      cmp = 1;
    else if (j == b.size())
      cmp = -1;
    else
      cmp = order.compare(a[i].mon, a[i].comp, shifted, b[j].comp);
    if (cmp < 0) {
      out.push_back(a[i++]);
    } else if (cmp > 0) {
      out.push_back({std::move(shifted), b[j].comp, -c * b[j].coef});
      ++j;
      have_shifted = false;
    } else {
      Rational coef = a[i].coef - c * b[j].coef;
      if (!is_zero(coef)) out.push_back({a[i].mon, a[i].comp, std::move(coef)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

void normalize(TermVec& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&order](const Term& x, const Term& y) { return order.compare(x.mon, x.comp, y.mon, y.comp) < 0; });
  TermVec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon) {
      out.back().coef += t.coef;
      if (is_zero(out.back().coef)) out.pop_back();
    } else if (!is_zero(t.coef)) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

void make_monic(TermVec& terms) {
  if (terms.empty() || terms.back().coef == 1) return;
  const Rational inv = 1 / terms.back().coef;
  for (auto& t : terms) t.coef *= inv;
}

namespace {

long find_reducer_skip(const Term& t, std::span<const Element> basis, long skip) {
  const std::uint64_t mask = t.mon.support_mask();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (static_cast<long>(k) == skip) continue;
    const Element& g = basis[k];
    const Term& lead = g.lead();
    if (lead.comp != t.comp || (g.mask & ~mask) != 0) continue;
    if (lead.mon.divides(t.mon)) return static_cast<long>(k);
  }
  return -1;
}

TermVec reduce_skip(TermVec f, std::span<const Element> basis, const MonomialOrder& order, long skip) {
  TermVec remainder;  // collected in descending order
  while (!f.empty()) {
    const long r = find_reducer_skip(f.back(), basis, skip);
    if (r < 0) {
      remainder.push_back(std::move(f.back()));
      f.pop_back();
      continue;
    }
    const Element& g = basis[static_cast<std::size_t>(r)];
    Term lead = std::move(f.back());
    f.pop_back();
    const Monomial m = lead.mon / g.lead().mon;
    std::span<const Term> tail(g.terms.data(), g.terms.size() - 1);
    f = sub_mul(f, lead.coef, m, tail, order);
  }
  std::reverse(remainder.begin(), remainder.end());
  return remainder;
}

std::uint64_t element_degree(const TermVec& t) {
  std::uint64_t d = 0;
  for (const auto& term : t) d = std::max(d, term.mon.degree());
  return d;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  std::uint64_t sugar;
};

// Selection key: sugar, then the order on the lcm, then indices.
bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& order) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (int c = order.compare(a.lcm, a.comp, b.lcm, b.comp)) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class Builder {
 public:
  Builder(std::size_t rank, const MonomialOrder& order, Exec exec, BuchbergerStats* stats)
      : rank_(rank), order_(order), exec_(exec), stats_(stats) {}

  // Returns true when the basis became the unit ideal.
  bool insert(TermVec h, std::uint64_t sugar) {
    make_monic(h);
    basis_.emplace_back(std::move(h));
    alive_.push_back(true);
    sugar_.push_back(sugar);
    if (stats_) stats_->max_basis_size = std::max(stats_->max_basis_size, basis_.size());
    if (rank_ == 1 && basis_.back().lead().mon.is_one()) return true;
    update(basis_.size() - 1);
    return false;
  }

  void run(std::vector<TermVec> generators) {
    for (auto& g : generators) {
      check_deadline();
      if (g.empty()) continue;
      const auto sugar = element_degree(g);
      TermVec h = reduce_skip(std::move(g), basis_, order_, -1);
      if (h.empty()) continue;
      if (insert(std::move(h), sugar)) return unit();
    }
    while (!pairs_.empty()) {
      check_deadline();
      if (exec_ == Exec::Serial) {
        auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                     [this](const Pair& a, const Pair& b) { return pair_before(a, b, order_); });
        Pair p = std::move(*best);
        pairs_.erase(best);
        if (stats_) ++stats_->pairs_reduced;
        TermVec h = reduce_skip(s_vector(basis_[p.i], basis_[p.j], order_), basis_, order_, -1);
        if (h.empty()) {
          if (stats_) ++stats_->zero_reductions;
          continue;
        }
        if (insert(std::move(h), p.sugar)) return unit();
      } else {
        if (run_batch()) return unit();
      }
    }
  }

  std::vector<TermVec> finish() {
    std::vector<Element> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (alive_[k]) minimal.push_back(basis_[k]);
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Term lead = minimal[k].terms.back();
      TermVec tail(minimal[k].terms.begin(), minimal[k].terms.end() - 1);
      TermVec reduced = reduce_skip(std::move(tail), minimal, order_, static_cast<long>(k));
      reduced.push_back(std::move(lead));
      minimal[k] = Element(std::move(reduced));
    }
    std::sort(minimal.begin(), minimal.end(), [this](const Element& a, const Element& b) {
      return order_.compare(a.lead().mon, a.lead().comp, b.lead().mon, b.lead().comp) < 0;
    });
    std::vector<TermVec> out;
    out.reserve(minimal.size());
    for (auto& e : minimal) out.push_back(std::move(e.terms));
    return out;
  }

 private:
  void unit() {
    TermVec one = basis_.back().terms;
    basis_.clear();
    alive_.clear();
    pairs_.clear();
    basis_.emplace_back(std::move(one));
    alive_.push_back(true);
  }

  bool run_batch() {
    // All pairs of minimal sugar, in selection order.
    std::sort(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) { return pair_before(a, b, order_); });
    const auto sugar = pairs_.front().sugar;
    auto end = std::find_if(pairs_.begin(), pairs_.end(), [sugar](const Pair& p) { return p.sugar != sugar; });
    std::vector<Pair> batch(std::make_move_iterator(pairs_.begin()), std::make_move_iterator(end));
    pairs_.erase(pairs_.begin(), end);
    if (stats_) stats_->pairs_reduced += batch.size();

    std::vector<TermVec> svecs(batch.size());
    for (std::size_t k = 0; k < batch.size(); ++k) svecs[k] = s_vector(basis_[batch[k].i], basis_[batch[k].j], order_);
    const std::size_t frozen = basis_.size();
    reduce_batch(svecs, basis_, order_, exec_);
    for (std::size_t k = 0; k < batch.size(); ++k) {
      TermVec h = std::move(svecs[k]);
      if (!h.empty() && basis_.size() > frozen) h = reduce_skip(std::move(h), basis_, order_, -1);
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (insert(std::move(h), batch[k].sugar)) return true;
    }
    return false;
  }

  // Gebauer–Möller update for the newly inserted element h.
  void update(std::size_t h) {
    const Term& lead_h = basis_[h].lead();
    const std::uint64_t deg_h = lead_h.mon.degree();

    // Old pairs whose lcm is divisible by LT(h) are redundant (chain criterion).
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != lead_h.comp || !lead_h.mon.divides(p.lcm)) return false;
      const auto li = lcm(basis_[p.i].lead().mon, lead_h.mon);
      const auto lj = lcm(basis_[p.j].lead().mon, lead_h.mon);
      return !(li == p.lcm) && !(lj == p.lcm);
    });

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cand;
    for (std::size_t i = 0; i < h; ++i) {
      if (!alive_[i] || basis_[i].lead().comp != lead_h.comp) continue;
      const auto& mi = basis_[i].lead().mon;
      cand.push_back({i, lcm(mi, lead_h.mon), rank_ == 1 && mi.coprime(lead_h.mon)});
    }
    // M: drop pairs whose lcm is a proper multiple of another new lcm.
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.keep = false;
          break;
        }
      }
    }
    // F: one pair per lcm; drop the whole group if one satisfies the product criterion.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!cand[a].keep) continue;
      bool any_coprime = cand[a].coprime;
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (cand[b].keep && cand[b].lcm == cand[a].lcm) {
          any_coprime = any_coprime || cand[b].coprime;
          cand[b].keep = false;
        }
      }
      if (any_coprime) cand[a].keep = false;
    }
    for (auto& c : cand) {
      if (stats_) ++stats_->pairs_created;
      if (!c.keep) continue;
      const auto& lead_i = basis_[c.i].lead().mon;
      const std::uint64_t ldeg = c.lcm.degree();
      const std::uint64_t sugar =
          std::max(sugar_[c.i] + ldeg - lead_i.degree(), sugar_[h] + ldeg - deg_h);
      pairs_.push_back({c.i, h, std::move(c.lcm), lead_h.comp, sugar});
    }
    for (std::size_t i = 0; i < h; ++i) {
      if (alive_[i] && basis_[i].lead().comp == lead_h.comp && lead_h.mon.divides(basis_[i].lead().mon))
        alive_[i] = false;
    }
  }

  std::size_t rank_;
  const MonomialOrder& order_;
  Exec exec_;
  BuchbergerStats* stats_;
  std::vector<Element> basis_;
  std::vector<bool> alive_;
  std::vector<std::uint64_t> sugar_;
  std::vector<Pair> pairs_;
};

}  // namespace

long find_reducer(const Term& t, std::span<const Element> basis) { return find_reducer_skip(t, basis, -1); }

TermVec reduce(TermVec f, std::span<const Element> basis, const MonomialOrder& order) {
  return reduce_skip(std::move(f), basis, order, -1);
}

void reduce_batch(std::span<TermVec> inputs, std::span<const Element> basis, const MonomialOrder& order,
                  Exec exec) {
  const long n = static_cast<long>(inputs.size());
#ifdef _OPENMP
  if (exec == Exec::Parallel && n > 1 && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < n; ++k) inputs[k] = reduce_skip(std::move(inputs[k]), basis, order, -1);
    return;
  }
#else
  (void)exec;
#endif
  for (long k = 0; k < n; ++k) inputs[k] = reduce_skip(std::move(inputs[k]), basis, order, -1);
}

TermVec s_vector(const Element& a, const Element& b, const MonomialOrder& order) {
  const Monomial l = lcm(a.lead().mon, b.lead().mon);
  const Monomial ma = l / a.lead().mon;
  const Monomial mb = l / b.lead().mon;
  TermVec shifted_a;
  shifted_a.reserve(a.terms.size() - 1);
  for (std::size_t k = 0; k + 1 < a.terms.size(); ++k)
    shifted_a.push_back({a.terms[k].mon * ma, a.terms[k].comp, a.terms[k].coef});
  std::span<const Term> tail_b(b.terms.data(), b.terms.size() - 1);
  return sub_mul(shifted_a, Rational(1), mb, tail_b, order);
}

std::vector<TermVec> buchberger(std::vector<TermVec> generators, std::size_t rank, const MonomialOrder& order,
                                Exec exec, BuchbergerStats* stats) {
  Builder builder(rank, order, exec, stats);
  builder.run(std::move(generators));
  return builder.finish();
}

}  // namespace flatcheck::engine
