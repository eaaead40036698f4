#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flatcheck/blowup.hpp"
#include "flatcheck/module.hpp"
#include "flatcheck/order.hpp"

namespace flatcheck {

/// F = R[x]^q / M over R = k[y] / I, to be tested at the origin.
struct ModulePresentation {
  UniversePtr universe;  // Base (y) and Fiber (x) variables
  std::size_t rank = 1;
  Submodule module;
  Ideal base_ideal;  // no nonzero generators: regular base

  /// Normalizes on load: adjoins a fiber variable x1 (with x1 * e_j added to
  /// M) when there is none, and adds I * R^q to M.
  static ModulePresentation make(Submodule module, Ideal base_ideal);
  static ModulePresentation make(Submodule module);

  bool regular_base() const;
};

enum class FlatStatus { Flat, NotFlat, ZeroDivisorFound, Improper };

std::string_view to_string(FlatStatus status);

struct FlatOptions {
  MonomialOrder order;
  bool assume_domain = false;
  bool assume_embedding = false;
  std::optional<std::size_t> exceptional;  // 0-based base index; default: search
};

struct FlatnessVerdict {
  FlatStatus status = FlatStatus::Flat;
  std::optional<FreeModuleElement> witness;  // multiplier * witness in module, witness not in module
  std::optional<Polynomial> multiplier;      // the exceptional variable
  std::optional<Submodule> module;           // the transformed module the witness refers to
  std::string citation;
  std::string note;
  std::string chart;                 // chart description
  std::optional<Ideal> strict_transform;
};

/// Regular base: M~ = kappa(M), C = M~ : y_e. Flat when C = M~, or when the
/// discrepancy C / M~ vanishes after localizing at the origin.
FlatnessVerdict flat_test_regular(const ModulePresentation& p, const FlatOptions& options = {});

/// Singular base: N = kappa(M) + I* R^q in the chart, C = N : z_e. Flat if
/// C = N or the discrepancy misses the origin; otherwise ZeroDivisorFound,
/// or NotFlat when both domain and embedding hypotheses are asserted.
FlatnessVerdict flat_test_singular(const ModulePresentation& p, const FlatOptions& options = {});

/// Dispatch on the base ideal.
FlatnessVerdict flat_test(const ModulePresentation& p, const FlatOptions& options = {});

/// multiplier * g in M and g not in M.
bool witness_check(const FreeModuleElement& g, const Submodule& module, const Polynomial& multiplier,
                   const MonomialOrder& order = {});

}  // namespace flatcheck
