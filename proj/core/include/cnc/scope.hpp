// Name resolution: flat symbol table over an architecture and its imported
// libraries, subcomponent path resolution, and the nominal subtype relation.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnc/model.hpp"

namespace cnc {

enum class OriginKind { Arch, ModelLib, ImplLib };

/// A scope entry points at a declaration owned by the architecture or a
/// library; the referenced unit must outlive the scope.
struct ScopeEntry {
  const ComponentType* type = nullptr;  // exactly one of type/enum_decl set
  const EnumDecl* enum_decl = nullptr;
  OriginKind origin = OriginKind::Arch;
  Identifier unit;  // owning architecture or library name
};

class Scope {
 public:
  void insert(const std::string& name, ScopeEntry entry);
  bool contains(const std::string& name) const;
  const ScopeEntry* find(const std::string& name) const;
  const ComponentType* find_type(const Identifier& name) const;
  const EnumDecl* find_enum(const Identifier& name) const;

  /// Declared names in insertion order.
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::map<std::string, ScopeEntry> entries_;
  std::vector<std::string> order_;
};

struct ScopeResult {
  Scope scope;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

/// Assembles a scope from the architecture's own declarations plus the
/// libraries named by its imports. Emits E-IMPORT-MISSING for imports that
/// match no available library and E-NAME-CLASH for duplicate declarations.
ScopeResult build_scope(const Architecture& arch,
                        const std::vector<const Library*>& available);

/// Adds a library's declarations to an existing scope (application
/// configurations pull implementation libraries in this way).
void extend_scope(Scope& scope, const Library& lib,
                  std::vector<Diagnostic>& diagnostics);

struct PathElement {
  const SubcomponentDecl* scd = nullptr;
  const ComponentType* type = nullptr;  // resolved type of the SCD
};

struct PathResult {
  std::vector<PathElement> chain;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !has_errors(diagnostics); }
};

/// Resolves a qualified SCD path from the architecture root: segment i names
/// an SCD inside the composed type of segment i-1. Errors:
/// E-PATH-UNRESOLVED, E-PATH-THROUGH-ATOMIC.
PathResult resolve_path(const Architecture& arch, const Scope& scope,
                        const QualifiedName& path);

/// True iff `super` is reachable from `sub` via zero or more superType edges.
bool is_subtype(const Scope& scope, const Identifier& sub, const Identifier& super);

/// Supertype chain's parameters root-first, then the type's own parameters.
std::vector<ConfigParam> effective_params(const Scope& scope, const Identifier& type);

/// Supertype chain's ports root-first, then the type's own ports.
std::vector<Port> effective_ports(const Scope& scope, const Identifier& type);

}  // namespace cnc
