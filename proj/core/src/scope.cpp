#include "cnc/scope.hpp"

#include <algorithm>
#include <set>

namespace cnc {

void Scope::insert(const std::string& name, ScopeEntry entry) {
  auto [it, inserted] = entries_.emplace(name, entry);
  if (inserted) order_.push_back(name);
}

bool Scope::contains(const std::string& name) const { return entries_.count(name) > 0; }

const ScopeEntry* Scope::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const ComponentType* Scope::find_type(const Identifier& name) const {
  const ScopeEntry* e = find(name.text);
  return e ? e->type : nullptr;
}

const EnumDecl* Scope::find_enum(const Identifier& name) const {
  const ScopeEntry* e = find(name.text);
  return e ? e->enum_decl : nullptr;
}

namespace {

std::string unit_phrase(const ScopeEntry& e) {
  return (e.origin == OriginKind::Arch ? "architecture '" : "library '") + e.unit.text + "'";
}

void insert_checked(Scope& scope, const std::string& name, ScopeEntry entry,
                    const SourceSpan& span, std::vector<Diagnostic>& diags) {
  if (const ScopeEntry* prev = scope.find(name)) {
    diags.push_back(make_error("E-NAME-CLASH", span,
                               "'" + name + "' is already declared by " + unit_phrase(*prev)));
    return;
  }
  scope.insert(name, entry);
}

void add_architecture(Scope& scope, const Architecture& arch, std::vector<Diagnostic>& diags) {
  for (const ComponentType& t : arch.component_types) {
    ScopeEntry e;
    e.type = &t;
    e.origin = OriginKind::Arch;
    e.unit = arch.name;
    insert_checked(scope, t.name.text, e, t.name_span, diags);
  }
  for (const EnumDecl& en : arch.enums) {
    ScopeEntry e;
    e.enum_decl = &en;
    e.origin = OriginKind::Arch;
    e.unit = arch.name;
    insert_checked(scope, en.name.text, e, en.name_span, diags);
  }
}

}  // namespace

void extend_scope(Scope& scope, const Library& lib, std::vector<Diagnostic>& diagnostics) {
  const OriginKind origin =
      lib.kind == LibraryKind::Model ? OriginKind::ModelLib : OriginKind::ImplLib;
  for (const ComponentType& t : lib.component_types) {
    ScopeEntry e;
    e.type = &t;
    e.origin = origin;
    e.unit = lib.name;
    insert_checked(scope, t.name.text, e, t.name_span, diagnostics);
  }
  for (const EnumDecl& en : lib.enums) {
    ScopeEntry e;
    e.enum_decl = &en;
    e.origin = origin;
    e.unit = lib.name;
    insert_checked(scope, en.name.text, e, en.name_span, diagnostics);
  }
}

ScopeResult build_scope(const Architecture& arch, const std::vector<const Library*>& available) {
  ScopeResult result;
  add_architecture(result.scope, arch, result.diagnostics);
  std::set<std::string> pulled;
  for (const ImportDecl& imp : arch.imports) {
    if (!pulled.insert(imp.library.text).second) continue;  // repeated import is a no-op
    const Library* lib = nullptr;
    for (const Library* cand : available) {
      if (cand && cand->name == imp.library) {
        lib = cand;
        break;
      }
    }
    if (!lib) {
      result.diagnostics.push_back(
          make_error("E-IMPORT-MISSING", imp.span,
                     "import names no provided library '" + imp.library.text + "'"));
      continue;
    }
    extend_scope(result.scope, *lib, result.diagnostics);
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

PathResult resolve_path(const Architecture& arch, const Scope& scope, const QualifiedName& path) {
  PathResult result;
  const ComponentType* current = scope.find_type(arch.root_type);
  if (!current) {
    result.diagnostics.push_back(make_error(
        "E-PATH-UNRESOLVED", path.span, "root type '" + arch.root_type.text + "' is not declared"));
    return result;
  }
  for (const Identifier& seg : path.segments) {
    if (current->kind != TypeKind::Composed) {
      result.diagnostics.push_back(make_error(
          "E-PATH-THROUGH-ATOMIC", path.span,
          "path segment '" + seg.text + "' descends into " + to_string(current->kind) +
              " type '" + current->name.text + "'"));
      return result;
    }
    const SubcomponentDecl* scd = nullptr;
    for (const SubcomponentDecl& s : current->subcomponents) {
      if (s.name == seg) {
        scd = &s;
        break;
      }
    }
    if (!scd) {
      result.diagnostics.push_back(
          make_error("E-PATH-UNRESOLVED", path.span,
                     "type '" + current->name.text + "' has no subcomponent '" + seg.text + "'"));
      return result;
    }
    const ComponentType* next = scope.find_type(scd->type_name);
    if (!next) {
      result.diagnostics.push_back(make_error(
          "E-PATH-UNRESOLVED", path.span,
          "subcomponent '" + seg.text + "' has unresolved type '" + scd->type_name.text + "'"));
      return result;
    }
    result.chain.push_back(PathElement{scd, next});
    current = next;
  }
  return result;
}

namespace {

std::vector<const ComponentType*> super_chain(const Scope& scope, const Identifier& type) {
  std::vector<const ComponentType*> chain;
  std::set<std::string> seen;
  const ComponentType* cur = scope.find_type(type);
  while (cur && seen.insert(cur->name.text).second) {
    chain.push_back(cur);
    if (!cur->super_type) break;
    cur = scope.find_type(*cur->super_type);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

bool is_subtype(const Scope& scope, const Identifier& sub, const Identifier& super) {
  std::set<std::string> seen;
  Identifier cur = sub;
  while (true) {
    if (cur == super) return true;
    if (!seen.insert(cur.text).second) return false;
    const ComponentType* t = scope.find_type(cur);
    if (!t || !t->super_type) return false;
    cur = *t->super_type;
  }
}

std::vector<ConfigParam> effective_params(const Scope& scope, const Identifier& type) {
  std::vector<ConfigParam> out;
  for (const ComponentType* t : super_chain(scope, type)) {
    out.insert(out.end(), t->params.begin(), t->params.end());
  }
  return out;
}

std::vector<Port> effective_ports(const Scope& scope, const Identifier& type) {
  std::vector<Port> out;
  for (const ComponentType* t : super_chain(scope, type)) {
    out.insert(out.end(), t->ports.begin(), t->ports.end());
  }
  return out;
}

}  // namespace cnc
