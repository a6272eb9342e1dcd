// Binding validation and clash detection for application configurations.
#pragma once

#include <vector>

#include "cnc/model.hpp"
#include "cnc/scope.hpp"

namespace cnc {

/// A validated binding with the full merged argument list: the bound SCD's
/// architecture arguments for the inherited parameters, then the
/// configuration's added arguments for the target type's own additions.
struct CompletedBinding {
  QualifiedName path;
  Identifier target_type;
  std::vector<ArgumentValue> full_args;
};

/// Two bindings assigning different target types to a same-named SCD of a
/// common parent component type.
struct Clash {
  CompletedBinding first;
  CompletedBinding second;
  Identifier parent_type;
  Identifier scd_name;
};

struct BindingResult {
  std::vector<CompletedBinding> bindings;  // input order, one per clause
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

/// Validates every clause of `cfg` against the architecture: the path names
/// an abstract SCD, is bound at most once, the target inherits from the
/// SCD's type, and the added arguments fit the target's added parameters.
/// Errors: E-BIND-WRONG-ARCH, E-BIND-PATH, E-BIND-NOT-ABSTRACT,
/// E-BIND-TWICE, E-BIND-NOT-SUBTYPE, E-BIND-ARITY, E-BIND-ARG-TYPE.
BindingResult validate_bindings(const Architecture& arch, const Scope& scope,
                                const ApplicationConfig& cfg);

/// All unordered clash pairs, reported once each, ordered by the first
/// binding's input position. For single-segment paths the architecture's
/// root type stands in as the parent.
std::vector<Clash> detect_clashes(const std::vector<CompletedBinding>& bindings,
                                  const Architecture& arch, const Scope& scope);

}  // namespace cnc
