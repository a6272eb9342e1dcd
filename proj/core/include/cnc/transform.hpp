// The binding transformation: rewrites every SCD's type to its bound
// platform-specific type or a fresh unique copy of its original type,
// producing a platform-specific architecture that is clash-free by
// construction.
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cnc/bind.hpp"
#include "cnc/model.hpp"
#include "cnc/scope.hpp"

namespace cnc {

/// Issues fresh type names `<base>_<k>` from a single monotone counter,
/// probing past names already taken by the scope or earlier issues.
class FreshNameRegistry {
 public:
  explicit FreshNameRegistry(const Scope& scope);

  Identifier issue(const Identifier& base);

  /// Claims an exact name (the root copy keeps the application name).
  /// Returns false if the name is already taken.
  bool reserve(const Identifier& name);

  int counter() const { return counter_; }

 private:
  int counter_ = 1;
  std::set<std::string> issued_;
};

/// Deep copy with a fresh registry name; the copy's SCDs still reference the
/// original type names until the transformation rewrites them.
ComponentType unique_copy(const ComponentType& type, FreshNameRegistry& registry);

struct ProvenanceEntry {
  Identifier fresh;
  Identifier original;
  QualifiedName instance_path;  // empty path for the root copy
};

/// Self-contained platform-specific architecture: fresh copies, the bound
/// platform-specific types, their transitive dependencies, and every
/// referenced enumeration. `impl_imports` records the implementation
/// libraries that contributed bound types.
struct BoundArchitecture {
  Architecture architecture;
  std::vector<Identifier> impl_imports;
  std::vector<ProvenanceEntry> provenance;
};

enum class BindMode { Strict, Permissive };

struct TransformResult {
  std::optional<BoundArchitecture> result;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return result.has_value() && !has_errors(diagnostics); }
};

/// Breadth-first walk from the root: bound SCDs take their binding's target
/// type and full argument list and are not descended into; unbound SCDs take
/// a fresh copy of their original type. In strict mode an unbound abstract
/// SCD is E-UNBOUND-ABSTRACT; in permissive mode it is copied and reported
/// as W-UNBOUND-ABSTRACT.
TransformResult bind_architecture(const Architecture& arch, const Scope& scope,
                                  const std::vector<CompletedBinding>& bindings,
                                  const Identifier& app_name,
                                  BindMode mode = BindMode::Strict);

/// Number of fresh type copies (provenance entries): 1 for the root plus one
/// per unbound SCD visited, never more than 1 + the hierarchy's SCD count.
std::size_t count_new_types(const BoundArchitecture& result);

}  // namespace cnc
