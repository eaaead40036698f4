#include "flatcheck/blowup.hpp"

#include <algorithm>
#include <set>

#include "flatcheck/errors.hpp"
#include "flatcheck/operations.hpp"

namespace flatcheck {

namespace {

std::vector<std::size_t> default_base(const UniversePtr& u) {
  auto base = u->indices(VarRole::Base);
  if (base.empty()) base = u->indices(VarRole::Blowup);
  return base;
}

std::vector<std::size_t> base_or_all(const UniversePtr& u) {
  auto base = default_base(u);
  if (base.empty())
    for (std::size_t i = 0; i < u->size(); ++i) base.push_back(i);
  return base;
}

Monomial kappa_monomial(const Monomial& m, const BlowupChart& chart) {
  std::vector<Monomial::Exponent> e = m.exponents();
  const std::size_t ex = chart.exceptional_position();
  for (std::size_t j = 0; j < chart.n(); ++j)
    if (j != chart.exceptional) e[ex] += m[chart.base[j]];
  return Monomial(std::move(e));
}

Rational rational_pow(const Rational& base, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string change_text(const UniversePtr& u, const CoordinateChange& change) {
  std::string s;
  const auto& dir = u->name(change.base[change.direction]);
  for (std::size_t j = 0; j < change.base.size(); ++j) {
    const auto& c = change.constants[j];
    const auto& name = u->name(change.base[j]);
    if (j == change.direction) {
      if (c == 1) continue;
      s += (s.empty() ? "" : ", ") + name + " -> " + c.get_str() + "*" + name;
    } else if (c != 0) {
      const Rational a = abs(c);
      s += (s.empty() ? "" : ", ") + name + " -> " + name + (c > 0 ? " + " : " - ") +
           (a == 1 ? std::string() : a.get_str() + "*") + dir;
    }
  }
  return s.empty() ? "identity" : s;
}

// Rational roots of a univariate polynomial given by coefficients a[0..k].
std::vector<Rational> rational_roots(std::vector<Rational> a) {
  std::vector<Rational> roots;
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.size() <= 1) return roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  a.erase(a.begin(), a.begin() + static_cast<long>(low));
  if (a.size() <= 1) return roots;
  Integer scale = 1;
  for (const auto& c : a) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : a) ints.push_back(Integer(c * scale));
  auto divisors = [](Integer v) {
    std::vector<Integer> out;
    v = abs(v);
    if (v > Integer("1000000000000")) return out;
    for (Integer d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    return out;
  };
  auto evaluate = [&a](const Rational& t) {
    Rational v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * t + *it;
    return v;
  };
  std::set<Rational> seen;
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational t(p * sign, q);
        t.canonicalize();
        if (seen.insert(t).second && evaluate(t) == 0) roots.push_back(t);
      }
  std::sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) {
    if (abs(x) != abs(y)) return abs(x) < abs(y);
    return x > y;
  });
  return roots;
}

// Constant vectors (c_1..c_{n-1}) with in(h)(c, 1) = 0, excluding 0.
std::vector<std::vector<Rational>> tangent_directions(const Polynomial& initial, const std::vector<std::size_t>& base) {
  std::vector<std::vector<Rational>> out;
  const std::size_t n = base.size();
  if (n < 2) return out;
  const std::vector<Rational> grid = {0, 1, -1, 2, -2};
  const std::size_t prefix_len = n - 2;
  std::vector<std::size_t> idx(prefix_len, 0);
  const auto& u = initial.universe();
  while (true) {
    std::map<std::size_t, Polynomial> images;
    std::vector<Rational> prefix;
    for (std::size_t j = 0; j < prefix_len; ++j) {
      prefix.push_back(grid[idx[j]]);
      images.emplace(base[j], Polynomial::constant(u, grid[idx[j]]));
    }
    images.emplace(base[n - 1], Polynomial::constant(u, 1));
    const Polynomial p = substitute(initial, images);
    const std::size_t t = base[n - 2];
    std::vector<Rational> coeffs;
    bool univariate = true;
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() != m[t]) univariate = false;
      if (coeffs.size() <= m[t]) coeffs.resize(m[t] + 1, 0);
      coeffs[m[t]] += c;
    }
    if (univariate) {
      std::vector<Rational> values = p.is_zero() ? grid : rational_roots(coeffs);
      for (const auto& v : values) {
        auto c = prefix;
        c.push_back(v);
        if (std::any_of(c.begin(), c.end(), [](const Rational& r) { return r != 0; })) out.push_back(c);
      }
    }
    std::size_t k = 0;
    while (k < prefix_len && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == prefix_len) break;
  }
  return out;
}

std::optional<ChartChoice> try_chart(const Ideal& ideal, const BlowupChart& chart, const CoordinateChange& change,
                                     std::string description) {
  const Ideal changed = change.is_identity() ? ideal : apply_change(ideal, change);
  auto st = strict_transform(changed, chart);
  if (!vanishes_at_origin(st.ideal)) return std::nullopt;
  return ChartChoice{chart, change, std::move(st), std::move(description)};
}

}  // namespace

BlowupChart BlowupChart::standard(const UniversePtr& universe) {
  auto base = default_base(universe);
  if (base.empty()) throw InputError("blow-up chart needs at least one base variable");
  return {base, base.size() - 1};
}

BlowupChart BlowupChart::with_exceptional(const UniversePtr& universe, std::size_t e) {
  auto chart = standard(universe);
  if (e >= chart.n()) throw InputError("exceptional index out of range");
  chart.exceptional = e;
  return chart;
}

UniversePtr chart_universe(const UniversePtr& universe, const BlowupChart& chart) {
  std::vector<std::pair<std::size_t, VarUniverse::Variable>> changes;
  std::set<std::string> taken;
  for (std::size_t i = 0; i < universe->size(); ++i)
    if (std::find(chart.base.begin(), chart.base.end(), i) == chart.base.end()) taken.insert(universe->name(i));
  for (std::size_t j = 0; j < chart.n(); ++j) {
    const std::string stem = "z" + std::to_string(j + 1);
    std::string name = stem;
    for (int k = 1; taken.count(name); ++k) name = stem + "_" + std::to_string(k);
    taken.insert(name);
    changes.push_back({chart.base[j], {name, VarRole::Blowup}});
  }
  return universe->renamed(changes);
}

Polynomial kappa(const Polynomial& f, const BlowupChart& chart, const UniversePtr& target) {
  const UniversePtr& u = target ? target : f.universe();
  if (u->size() != f.universe()->size()) throw InputError("chart target universe has the wrong size");
  if (chart.exceptional >= chart.n()) throw InputError("exceptional index out of range");
  for (auto b : chart.base)
    if (b >= u->size()) throw InputError("chart base variable out of range");
  Polynomial::TermMap terms;
  for (const auto& [m, c] : f.terms()) terms.emplace(kappa_monomial(m, chart), c);
  return Polynomial(u, std::move(terms));
}

FreeModuleElement kappa(const FreeModuleElement& v, const BlowupChart& chart, const UniversePtr& target) {
  return map_components(v, [&](const Polynomial& p) { return kappa(p, chart, target); });
}

Submodule kappa(const Submodule& m, const BlowupChart& chart, const UniversePtr& target) {
  std::vector<FreeModuleElement> gens;
  for (const auto& g : m.generators()) gens.push_back(kappa(g, chart, target));
  return Submodule(target ? target : m.universe(), m.rank(), std::move(gens));
}

StrictTransform strict_transform(const Ideal& ideal, const BlowupChart& chart, UniversePtr target) {
  if (!target) target = chart_universe(ideal.universe(), chart);
  const Ideal image = kappa(ideal, chart, target);
  auto sat = saturate_element(image, Polynomial::variable(target, chart.exceptional_position()));
  return {std::move(sat.module), sat.exponent};
}

bool chart_proper_at_origin(const Ideal& ideal, const BlowupChart& chart) {
  return vanishes_at_origin(strict_transform(ideal, chart).ideal);
}

CoordinateChange CoordinateChange::identity(const std::vector<std::size_t>& base, std::size_t direction) {
  CoordinateChange c{base, direction, std::vector<Rational>(base.size(), 0)};
  c.constants.at(direction) = 1;
  return c;
}

bool CoordinateChange::is_identity() const {
  for (std::size_t j = 0; j < constants.size(); ++j)
    if (constants[j] != (j == direction ? 1 : 0)) return false;
  return true;
}

Polynomial apply_change(const Polynomial& f, const CoordinateChange& change) {
  const auto& u = f.universe();
  const auto dir = Polynomial::variable(u, change.base.at(change.direction));
  std::map<std::size_t, Polynomial> images;
  for (std::size_t j = 0; j < change.base.size(); ++j) {
    const auto& c = change.constants.at(j);
    if (j == change.direction)
      images.emplace(change.base[j], c * dir);
    else
      images.emplace(change.base[j], Polynomial::variable(u, change.base[j]) + c * dir);
  }
  return substitute(f, images);
}

FreeModuleElement apply_change(const FreeModuleElement& v, const CoordinateChange& change) {
  return map_components(v, [&](const Polynomial& p) { return apply_change(p, change); });
}

Submodule apply_change(const Submodule& m, const CoordinateChange& change) {
  std::vector<FreeModuleElement> gens;
  for (const auto& g : m.generators()) gens.push_back(apply_change(g, change));
  return Submodule(m.universe(), m.rank(), std::move(gens));
}

Rational direction_coefficient(const Polynomial& h, const CoordinateChange& change) {
  std::vector<Rational> point(h.universe()->size(), 0);
  for (std::size_t j = 0; j < change.base.size(); ++j) point[change.base[j]] = change.constants[j];
  Rational total = 0;
  const long d = h.degree();
  for (const auto& [m, c] : h.terms()) {
    if (static_cast<long>(m.degree()) != d) continue;
    Rational v = c;
    for (std::size_t i = 0; i < m.size() && v != 0; ++i)
      if (m[i]) v *= rational_pow(point[i], m[i]);
    total += v;
  }
  return total;
}

CoordinateChange bound_constants(const Polynomial& h, std::vector<std::size_t> base, bool normalize) {
  if (h.is_zero()) throw InputError("coordinate change: zero polynomial");
  if (!h.is_homogeneous()) throw InputError("coordinate change: polynomial is not homogeneous");
  if (base.empty()) base = base_or_all(h.universe());
  const std::size_t n = base.size();
  const auto d = static_cast<unsigned long>(h.degree());
  CoordinateChange change{base, n - 1, std::vector<Rational>(n, 1)};
  const std::size_t count = h.term_count();
  if (count == 1) return change;
  // Lex-largest exponent over the base variables, in declaration order.
  auto key = [&base](const Monomial& m) {
    std::vector<Monomial::Exponent> k;
    for (auto b : base) k.push_back(m[b]);
    return k;
  };
  const auto top = std::max_element(h.terms().begin(), h.terms().end(),
                                    [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
  const Rational top_abs = abs(top->second);
  Rational bound = 0;
  for (const auto& [m, c] : h.terms()) bound = std::max(bound, Rational(abs(c) / top_abs));
  const Rational dm = Rational(static_cast<unsigned long>(count)) * bound;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    unsigned long e = 1;
    for (std::size_t k = 0; k < 2 * (n - 1 - j); ++k) {
      e *= d;
      if (e > 4'000'000UL) throw DomainError("coordinate change: constants exceed the supported size");
    }
    change.constants[j] = rational_pow(dm, e);
  }
  change.constants[n - 1] = dm;
  if (normalize) {
    for (auto& c : change.constants) c /= dm;
  }
  return change;
}

CoordinateChange coord_change_constants(const Polynomial& h, std::vector<std::size_t> base) {
  if (h.is_zero()) throw InputError("coordinate change: zero polynomial");
  if (!h.is_homogeneous()) throw InputError("coordinate change: polynomial is not homogeneous");
  if (base.empty()) base = base_or_all(h.universe());
  const std::size_t n = base.size();
  CoordinateChange change{base, n - 1, std::vector<Rational>(n, 1)};
  if (n == 1) return change;
  // Small positive constants, by increasing maximum, last coordinate fixed at 1.
  for (int limit = 1; limit <= 4; ++limit) {
    std::vector<int> c(n - 1, 1);
    while (true) {
      if (*std::max_element(c.begin(), c.end()) == limit) {
        for (std::size_t j = 0; j + 1 < n; ++j) change.constants[j] = c[j];
        if (direction_coefficient(h, change) != 0) return change;
      }
      std::size_t k = 0;
      while (k < c.size() && ++c[k] > limit) c[k++] = 1;
      if (k == c.size()) break;
    }
  }
  if (h.degree() < 2) throw DomainError("coordinate change: no constants found for a linear form");
  return bound_constants(h, base, true);
}

std::optional<ChartChoice> fixed_chart(const Ideal& ideal, std::size_t exceptional) {
  const auto chart = BlowupChart::with_exceptional(ideal.universe(), exceptional);
  return try_chart(ideal, chart, CoordinateChange::identity(chart.base, chart.exceptional),
                   "exceptional direction " + ideal.universe()->name(chart.exceptional_position()));
}

std::optional<ChartChoice> select_chart(const Ideal& ideal) {
  const auto& u = ideal.universe();
  for (const auto& p : ideal_generators(ideal))
    if (p.constant_term() != 0) throw InputError("base ideal does not vanish at the origin");
  const auto standard = BlowupChart::standard(u);
  const std::size_t n = standard.n();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t e = n - 1 - k;
    auto chart = BlowupChart::with_exceptional(u, e);
    std::string what = (k == 0 ? "default chart, exceptional " : "exceptional direction ") + u->name(chart.base[e]);
    if (auto found = try_chart(ideal, chart, CoordinateChange::identity(chart.base, e), what)) return found;
  }
  // Linear changes sending a zero of an initial form on {y_n = 1} to (0, ..., 0, 1).
  const auto gb = buchberger(ideal);
  std::set<std::vector<Rational>> tried;
  std::size_t used = 0;
  for (const auto& p : ideal_generators(gb)) {
    if (p.is_zero() || used == 5) continue;
    ++used;
    const Polynomial initial = p.homogeneous_part(p.low_degree());
    for (auto& c : tangent_directions(initial, standard.base)) {
      if (!tried.insert(c).second) continue;
      if (tried.size() > 60) return std::nullopt;
      CoordinateChange change{standard.base, n - 1, c};
      change.constants.push_back(1);
      if (auto found = try_chart(ideal, standard, change, "linear change " + change_text(u, change)))
        return found;
    }
  }
  return std::nullopt;
}

}  // namespace flatcheck
