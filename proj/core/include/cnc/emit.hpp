// Serialization of bound architectures: canonical ADL text, the cnc-bound/1
// structured document, and component instance tree expansion.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cnc/model.hpp"
#include "cnc/transform.hpp"

namespace cnc {

/// Canonical .arc text; re-parses and re-checks clean under the
/// platform-specific rule. Deterministic byte output.
std::string emit_adl(const BoundArchitecture& result);

/// The cnc-bound/1 document: types, provenance mapping, bindings, and the
/// instance tree, with fixed key order. See README for the schema.
std::string emit_structured(const BoundArchitecture& result);

enum class InstanceBehavior { None, Model, Impl };

struct InstanceNode {
  QualifiedName path;  // empty for the root
  Identifier type_name;
  std::vector<ArgumentValue> resolved_args;
  std::optional<Identifier> rts;
  InstanceBehavior behavior = InstanceBehavior::None;
  std::string behavior_ref;  // Impl only
  std::vector<InstanceNode> children;
};

struct InstantiateResult {
  std::optional<InstanceNode> root;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return root.has_value() && !has_errors(diagnostics); }
};

/// Expands the fully-configured instance tree from the root. The root type
/// must be parameterless (E-ROOT-PARAMS).
InstantiateResult instantiate(const BoundArchitecture& result);

std::size_t node_count(const InstanceNode& node);

}  // namespace cnc
