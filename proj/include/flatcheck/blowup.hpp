#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flatcheck/module.hpp"
#include "flatcheck/polynomial.hpp"
#include "flatcheck/universe.hpp"

namespace flatcheck {

/// One affine chart of the blow-up of the origin in the base space:
/// y_j -> y_j * y_e for j != e, y_e -> y_e.
struct BlowupChart {
  std::vector<std::size_t> base;  // universe positions of y_1..y_n
  std::size_t exceptional = 0;    // index into `base`

  /// Chart with the last declared base variable as exceptional direction.
  static BlowupChart standard(const UniversePtr& universe);
  /// Chart with base variable number `e` (0-based) as exceptional direction.
  static BlowupChart with_exceptional(const UniversePtr& universe, std::size_t e);

  std::size_t n() const { return base.size(); }
  /// Universe position of the exceptional variable.
  std::size_t exceptional_position() const { return base.at(exceptional); }
};

/// Same positions, base variables renamed z1..zn with role Blowup.
UniversePtr chart_universe(const UniversePtr& universe, const BlowupChart& chart);

/// Image under the chart substitution. `target` must have the same size as
/// the source universe; null keeps the source universe.
Polynomial kappa(const Polynomial& f, const BlowupChart& chart, const UniversePtr& target = nullptr);
FreeModuleElement kappa(const FreeModuleElement& v, const BlowupChart& chart, const UniversePtr& target = nullptr);
Submodule kappa(const Submodule& m, const BlowupChart& chart, const UniversePtr& target = nullptr);

struct StrictTransform {
  Ideal ideal;
  int exponent = 0;  // saturation stabilization exponent
};

/// (kappa(I) : z_e^inf) in the target universe (chart universe by default).
StrictTransform strict_transform(const Ideal& ideal, const BlowupChart& chart, UniversePtr target = nullptr);

/// Every reduced-basis generator of the strict transform vanishes at 0.
bool chart_proper_at_origin(const Ideal& ideal, const BlowupChart& chart);

/// Linear change y_j -> y_j + c_j y_d (j != d), y_d -> c_d y_d on the base
/// variables, with d the distinguished direction.
struct CoordinateChange {
  std::vector<std::size_t> base;
  std::size_t direction = 0;  // index into `base`
  std::vector<Rational> constants;

  static CoordinateChange identity(const std::vector<std::size_t>& base, std::size_t direction);
  bool is_identity() const;
};

Polynomial apply_change(const Polynomial& f, const CoordinateChange& change);
FreeModuleElement apply_change(const FreeModuleElement& v, const CoordinateChange& change);
Submodule apply_change(const Submodule& m, const CoordinateChange& change);

/// Coefficient of y_d^deg in the transformed homogeneous polynomial.
Rational direction_coefficient(const Polynomial& h, const CoordinateChange& change);

/// Constants c with c_d = 1 making the y_d^deg coefficient of homogeneous h
/// nonzero. Small constants are tried first; the explicit bound-based
/// formula is the fallback. `base` defaults to the Base-role variables of
/// h's universe (all variables if there are none); direction is the last.
CoordinateChange coord_change_constants(const Polynomial& h, std::vector<std::size_t> base = {});

/// The explicit formula: D = number of terms, a* = lex-largest exponent,
/// M = max |h_a| / |h_a*|, c_j = (DM)^(deg^(2(n-j))). With `normalize`,
/// every constant is divided by c_n so that c_n = 1.
CoordinateChange bound_constants(const Polynomial& h, std::vector<std::size_t> base = {}, bool normalize = true);

struct ChartChoice {
  BlowupChart chart;
  CoordinateChange change;
  StrictTransform transform;  // of the changed ideal, in the chart universe
  std::string description;
};

/// Deterministic search for a chart whose strict transform passes through
/// the origin: the default chart, then every other exceptional direction,
/// then linear changes moving a tangent-cone direction onto y_n. Returns
/// nothing when the list is exhausted. Throws InputError if V(I) misses 0.
std::optional<ChartChoice> select_chart(const Ideal& ideal);

/// Chart choice for a fixed exceptional direction and no change; nothing
/// if that chart is improper.
std::optional<ChartChoice> fixed_chart(const Ideal& ideal, std::size_t exceptional);

}  // namespace flatcheck
