#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatcheck/monomial.hpp"

namespace flatcheck {

enum class OrderKind { Lex, GrLex, GRevLex };

/// How module monomials x^a e_i compare across components. In both
/// strategies a lower component index ranks higher.
enum class Position { PositionOverTerm, TermOverPosition };

/// Total order on module monomials (monomial, component).
///
/// With a non-empty elimination block the order first compares the block
/// variables (graded by `kind` inside the block), and only then applies the
/// position strategy and `kind` to the remaining variables. Any monomial
/// involving a block variable therefore outranks every monomial free of the
/// block, in every component.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  Position position = Position::PositionOverTerm;
  std::vector<bool> block;  // empty: no elimination block

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, Position::PositionOverTerm, {}}; }
  static MonomialOrder grlex() { return {OrderKind::GrLex, Position::PositionOverTerm, {}}; }

  /// Same kind/position, eliminating the variables flagged in `vars`.
  MonomialOrder eliminating(std::vector<bool> vars) const;
  /// Same order with the block dropped.
  MonomialOrder without_block() const;

  bool has_block() const;

  /// Three-way comparison: negative if (a, ca) < (b, cb), zero if equal.
  int compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const;
  int compare(const Monomial& a, const Monomial& b) const { return compare(a, 0, b, 0); }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.position == b.position && a.block == b.block;
  }
};

std::string_view to_string(OrderKind kind);
std::optional<OrderKind> parse_order_kind(std::string_view text);

}  // namespace flatcheck
