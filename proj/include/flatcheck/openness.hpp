#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatcheck/blowup.hpp"
#include "flatcheck/module.hpp"

namespace flatcheck {

/// Polynomial map phi: V(P) -> V(I), source variables (Fiber role) to base
/// variables (Base role), centered at the origin.
struct MapPresentation {
  UniversePtr universe;                 // source and base variables
  Ideal source_ideal;                   // in source variables
  std::vector<Polynomial> components;   // one per base variable, in source variables
  Ideal target_ideal;                   // in base variables; zero for affine space
  bool pure_dimensional = false;        // asserted by the user
  bool normal_target = false;           // asserted by the user

  /// Checks phi(0) = 0, 0 in V(P), and variable roles.
  void validate() const;
};

enum class OpenStatus { Open, NotOpen, Inconclusive };

std::string_view to_string(OpenStatus status);

struct VerticalResult {
  bool vertical = false;
  std::optional<Polynomial> witness;  // in the saturation, not in the radical of T
  Ideal saturation;
  int exponent = 0;
};

struct OpennessVerdict {
  OpenStatus status = OpenStatus::Inconclusive;
  VerticalResult vertical;
  Ideal pullback;
  std::string chart;
  std::string citation;
  std::string note;
};

struct OpenOptions {
  std::optional<std::size_t> exceptional;  // 0-based base index
};

/// Ideal of the fibre product with the chart in source and z variables:
/// P + I* + (phi_j - z_j z_e, phi_e - z_e). Throws DomainError when the chart
/// is improper for a nonzero target ideal.
Ideal pullback_ideal(const MapPresentation& mp, const BlowupChart& chart);

/// Saturate T by z_e and look for a basis element outside the radical of T.
VerticalResult vertical_test(const Ideal& pullback, const BlowupChart& chart);

OpennessVerdict openness_verdict(const MapPresentation& mp, const OpenOptions& options = {});

}  // namespace flatcheck
