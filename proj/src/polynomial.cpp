#include "flatcheck/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "flatcheck/errors.hpp"

namespace flatcheck {

Polynomial::Polynomial(UniversePtr universe, TermMap terms)
    : universe_(std::move(universe)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != universe_->size()) throw InputError("monomial length differs from universe size");
    it = flatcheck::is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(UniversePtr universe, const Rational& c) {
  Polynomial p(universe);
  if (!flatcheck::is_zero(c)) p.terms_.emplace(Monomial(universe->size()), c);
  return p;
}

Polynomial Polynomial::variable(UniversePtr universe, std::size_t index) {
  if (index >= universe->size()) throw InputError("variable index out of range");
  Polynomial p(universe);
  p.terms_.emplace(Monomial::variable(universe->size(), index), Rational(1));
  return p;
}

Polynomial Polynomial::variable(UniversePtr universe, std::string_view name) {
  const auto i = universe->index_of(name);
  return variable(std::move(universe), i);
}

Polynomial Polynomial::monomial(UniversePtr universe, Monomial m, const Rational& c) {
  Polynomial p(universe);
  if (m.size() != universe->size()) throw InputError("monomial length differs from universe size");
  if (!flatcheck::is_zero(c)) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return 0;
  // The all-zero exponent vector is the smallest key in storage order.
  const auto& [m, c] = *terms_.begin();
  return m.is_one() ? c : Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.degree()));
  return d;
}

long Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  long d = static_cast<long>(terms_.begin()->first.degree());
  for (const auto& [m, c] : terms_) d = std::min<long>(d, static_cast<long>(m.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const { return degree() == low_degree(); }

Polynomial Polynomial::homogeneous_part(long d) const {
  Polynomial p(universe_);
  for (const auto& [m, c] : terms_)
    if (static_cast<long>(m.degree()) == d) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::free_of(std::size_t i) const {
  return std::all_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] == 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!universe_) universe_ = other.universe_;
  require_same_universe(universe_, other.universe_, "polynomial addition");
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (flatcheck::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (flatcheck::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_universe(a.universe_, b.universe_, "polynomial multiplication");
  Polynomial out(a.universe_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(ma * mb, c);
      if (!inserted) {
        it->second += c;
        if (flatcheck::is_zero(it->second)) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(universe_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial out(universe_);
  if (flatcheck::is_zero(c)) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm * m, cc * c);
  return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&order](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != universe_->size()) throw InputError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (Monomial::Exponent k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_universe(a.universe_, b.universe_) && a.terms_ == b.terms_;
}

Polynomial substitute(const Polynomial& f, const std::vector<std::optional<Polynomial>>& images,
                      const UniversePtr& target) {
  const auto& src = *f.universe();
  if (images.size() != src.size()) throw InputError("substitution map has wrong size");
  std::vector<Polynomial> image(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (images[i]) {
      require_same_universe(images[i]->universe(), target, "substitution image");
      image[i] = *images[i];
    } else {
      image[i] = Polynomial::variable(target, target->index_of(src.name(i)));
    }
  }
  // Power cache per variable; exponents in practice are small.
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t i, Monomial::Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * image[i]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
      if (m[i]) term = term * power(i, m[i]);
    out += term;
  }
  return out;
}

Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& images) {
  std::vector<std::optional<Polynomial>> full(f.universe()->size());
  for (const auto& [i, p] : images) full.at(i) = p;
  return substitute(f, full, f.universe());
}

Polynomial embed(const Polynomial& f, const UniversePtr& target) {
  if (same_universe(f.universe(), target)) return Polynomial(target, f.terms());
  const auto& src = *f.universe();
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src.name(i));
  Polynomial::TermMap terms;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) e[map[i]] = m[i];
    terms.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(target, std::move(terms));
}

namespace {

std::string monomial_text(const VarUniverse& u, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += u.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.sorted_terms(MonomialOrder::grevlex())) {
    const bool negative = sgn(c) < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const Rational a = abs(c);
    if (m.is_one()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << '*';
      out << monomial_text(*f.universe(), m);
    }
  }
  return out.str();
}

}  // namespace flatcheck
