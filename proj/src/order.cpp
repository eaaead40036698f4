#include "flatcheck/order.hpp"

#include <algorithm>

namespace flatcheck {

namespace {

// Compare a and b restricted to variables where select(i) holds.
template <class Select>
int compare_kind(OrderKind kind, const Monomial& a, const Monomial& b, Select select) {
  const std::size_t n = a.size();
  if (kind != OrderKind::Lex) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!select(i)) continue;
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind == OrderKind::GRevLex) {
    for (std::size_t i = n; i-- > 0;) {
      if (!select(i) || a[i] == b[i]) continue;
      return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!select(i) || a[i] == b[i]) continue;
    return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int compare_position(std::size_t ca, std::size_t cb) {
  if (ca == cb) return 0;
  return ca < cb ? 1 : -1;
}

}  // namespace

MonomialOrder MonomialOrder::eliminating(std::vector<bool> vars) const {
  MonomialOrder out = *this;
  out.block = std::move(vars);
  return out;
}

MonomialOrder MonomialOrder::without_block() const {
  MonomialOrder out = *this;
  out.block.clear();
  return out;
}

bool MonomialOrder::has_block() const {
  return std::find(block.begin(), block.end(), true) != block.end();
}

int MonomialOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b,
                           std::size_t cb) const {
  if (block.empty()) {
    if (position == Position::PositionOverTerm) {
      if (int c = compare_position(ca, cb)) return c;
      // Fast path: cached total degree.
      if (kind != OrderKind::Lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return compare_kind(kind, a, b, [](std::size_t) { return true; });
    }
    if (int c = compare_kind(kind, a, b, [](std::size_t) { return true; })) return c;
    return compare_position(ca, cb);
  }
  auto in_block = [this](std::size_t i) { return i < block.size() && block[i]; };
  auto outside = [this](std::size_t i) { return i >= block.size() || !block[i]; };
  if (int c = compare_kind(kind, a, b, in_block)) return c;
  if (position == Position::PositionOverTerm) {
    if (int c = compare_position(ca, cb)) return c;
    return compare_kind(kind, a, b, outside);
  }
  if (int c = compare_kind(kind, a, b, outside)) return c;
  return compare_position(ca, cb);
}

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrLex:
      return "grlex";
    case OrderKind::GRevLex:
      return "grevlex";
  }
  return "?";
}

std::optional<OrderKind> parse_order_kind(std::string_view text) {
  if (text == "lex") return OrderKind::Lex;
  if (text == "grlex") return OrderKind::GrLex;
  if (text == "grevlex") return OrderKind::GRevLex;
  return std::nullopt;
}

}  // namespace flatcheck
