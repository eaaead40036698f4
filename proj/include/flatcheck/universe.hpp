#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flatcheck {

/// Role of a variable in a flatness or openness problem.
enum class VarRole {
  Base,       // y: coordinates of the base (target) space
  Fiber,      // x: fiber variables of the algebra presenting F
  Blowup,     // z: chart coordinates after blowing up the origin
  Auxiliary,  // t: elimination helpers, never visible in results
};

std::string_view to_string(VarRole role);

/// An ordered set of variable names with roles. Immutable; shared by pointer.
///
/// Base variables keep their declaration order; the last declared base
/// variable is y_n, the default exceptional direction of a blow-up chart.
class VarUniverse {
 public:
  struct Variable {
    std::string name;
    VarRole role;
  };

  explicit VarUniverse(std::vector<Variable> vars);

  static std::shared_ptr<const VarUniverse> make(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::string& name(std::size_t i) const { return vars_[i].name; }
  VarRole role(std::size_t i) const { return vars_[i].role; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws InputError

  /// Universe indices of all variables with the given role, in declaration order.
  std::vector<std::size_t> indices(VarRole role) const;

  /// Copy with one extra auxiliary variable appended; the name avoids clashes.
  std::shared_ptr<const VarUniverse> with_auxiliary(std::string_view stem = "t") const;

  /// Copy with the given variables appended.
  std::shared_ptr<const VarUniverse> with_appended(std::vector<Variable> extra) const;

  /// Copy where selected variables get new names and roles (same positions).
  std::shared_ptr<const VarUniverse> renamed(
      const std::vector<std::pair<std::size_t, Variable>>& changes) const;

  std::string fresh_name(std::string_view stem) const;

  friend bool operator==(const VarUniverse& a, const VarUniverse& b);

 private:
  std::vector<Variable> vars_;
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);
void require_same_universe(const UniversePtr& a, const UniversePtr& b, std::string_view what);

}  // namespace flatcheck
