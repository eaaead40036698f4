#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flatcheck/flatness.hpp"
#include "flatcheck/module.hpp"
#include "flatcheck/openness.hpp"

namespace flatcheck {

/// Parsed problem file. Blocks: ring clauses (base, fiber, source), ideal
/// (base or source), module, map, flags. See docs/grammar.ebnf.
struct ProblemFile {
  UniversePtr universe;
  std::vector<std::pair<std::string, std::vector<std::string>>> ring;  // clauses as declared
  std::optional<Ideal> base_ideal;
  std::optional<Ideal> source_ideal;
  std::optional<Submodule> module;
  std::optional<std::vector<Polynomial>> map;
  std::set<std::string> flags;

  bool has_flag(std::string_view name) const { return flags.count(std::string(name)) > 0; }

  /// Module block over the (possibly zero) base ideal. Throws InputError if
  /// there is no module block.
  ModulePresentation module_presentation() const;
  /// Map block with source/target ideals and flags.
  MapPresentation map_presentation() const;
};

/// Throws ParseError (with 1-based line and column) on malformed input.
ProblemFile parse_problem(std::string_view text);

/// A single polynomial over a declared universe.
Polynomial parse_polynomial(std::string_view text, const UniversePtr& universe);

/// Canonical text of a parsed problem; parses back to an equal problem.
std::string print_problem(const ProblemFile& problem);

/// Recognized names for the flags block.
const std::set<std::string>& known_flags();

}  // namespace flatcheck
