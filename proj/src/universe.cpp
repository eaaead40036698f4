#include "flatcheck/universe.hpp"

#include <unordered_set>

#include "flatcheck/errors.hpp"

namespace flatcheck {

std::string_view to_string(VarRole role) {
  switch (role) {
    case VarRole::Base:
      return "base";
    case VarRole::Fiber:
      return "fiber";
    case VarRole::Blowup:
      return "blowup";
    case VarRole::Auxiliary:
      return "auxiliary";
  }
  return "?";
}

VarUniverse::VarUniverse(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw InputError("empty variable name");
    if (!seen.insert(v.name).second) throw InputError("duplicate variable name '" + v.name + "'");
  }
}

std::shared_ptr<const VarUniverse> VarUniverse::make(std::vector<Variable> vars) {
  return std::make_shared<const VarUniverse>(std::move(vars));
}

std::optional<std::size_t> VarUniverse::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VarUniverse::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown variable '" + std::string(name) + "'");
}

std::vector<std::size_t> VarUniverse::indices(VarRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].role == role) out.push_back(i);
  return out;
}

std::string VarUniverse::fresh_name(std::string_view stem) const {
  std::string name(stem);
  if (!find(name)) return name;
  for (int k = 1;; ++k) {
    name = std::string(stem) + "_" + std::to_string(k);
    if (!find(name)) return name;
  }
}

std::shared_ptr<const VarUniverse> VarUniverse::with_auxiliary(std::string_view stem) const {
  auto vars = vars_;
  vars.push_back({fresh_name(std::string("_") + std::string(stem)), VarRole::Auxiliary});
  return make(std::move(vars));
}

std::shared_ptr<const VarUniverse> VarUniverse::with_appended(std::vector<Variable> extra) const {
  auto vars = vars_;
  for (auto& v : extra) vars.push_back(std::move(v));
  return make(std::move(vars));
}

std::shared_ptr<const VarUniverse> VarUniverse::renamed(
    const std::vector<std::pair<std::size_t, Variable>>& changes) const {
  auto vars = vars_;
  for (const auto& [i, v] : changes) vars.at(i) = v;
  return make(std::move(vars));
}

bool operator==(const VarUniverse& a, const VarUniverse& b) {
  if (a.vars_.size() != b.vars_.size()) return false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i)
    if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].role != b.vars_[i].role) return false;
  return true;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b, std::string_view what) {
  if (!same_universe(a, b)) throw InputError(std::string(what) + ": universe mismatch");
}

}  // namespace flatcheck
