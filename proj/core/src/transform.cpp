#include "cnc/transform.hpp"

#include <deque>
#include <map>
#include <utility>

namespace cnc {

FreshNameRegistry::FreshNameRegistry(const Scope& scope) {
  for (const std::string& name : scope.names()) issued_.insert(name);
}

Identifier FreshNameRegistry::issue(const Identifier& base) {
  std::string candidate;
  do {
    candidate = base.text + "_" + std::to_string(counter_);
    ++counter_;
  } while (issued_.count(candidate) > 0);
  issued_.insert(candidate);
  return Identifier{candidate};
}

bool FreshNameRegistry::reserve(const Identifier& name) {
  return issued_.insert(name.text).second;
}

ComponentType unique_copy(const ComponentType& type, FreshNameRegistry& registry) {
  ComponentType copy = type;
  copy.name = registry.issue(type.name);
  return copy;
}

namespace {

std::string render_path(const std::vector<Identifier>& segments) {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) out += '.';
    out += segments[i].text;
  }
  return out;
}

QualifiedName to_qualified_name(const std::vector<Identifier>& segments) {
  QualifiedName qn;
  qn.segments = segments;
  return qn;
}

}  // namespace

TransformResult bind_architecture(const Architecture& arch, const Scope& scope,
                                  const std::vector<CompletedBinding>& bindings,
                                  const Identifier& app_name, BindMode mode) {
  TransformResult result;
  std::vector<Diagnostic>& diags = result.diagnostics;

  const ComponentType* root = scope.find_type(arch.root_type);
  if (!root) {
    diags.push_back(make_error("E-TYPE-UNRESOLVED", arch.root_span,
                               "root type '" + arch.root_type.text + "' is not declared"));
    return result;
  }

  std::map<std::string, const CompletedBinding*> by_path;
  for (const CompletedBinding& b : bindings) by_path.emplace(b.path.render(), &b);

  FreshNameRegistry registry(scope);
  if (!registry.reserve(app_name)) {
    const ScopeEntry* prev = scope.find(app_name.text);
    SourceSpan span;
    if (prev && prev->type) {
      span = prev->type->name_span;
    } else if (prev && prev->enum_decl) {
      span = prev->enum_decl->name_span;
    }
    diags.push_back(make_error(
        "E-NAME-CLASH", span,
        "application name '" + app_name.text + "' collides with an existing declaration"));
    return result;
  }

  bool abstract_failure = false;
  if (root->kind == TypeKind::Abstract) {
    if (mode == BindMode::Strict) {
      diags.push_back(make_error(
          "E-UNBOUND-ABSTRACT", arch.root_span,
          "root type '" + root->name.text + "' is abstract and cannot be bound"));
      return result;
    }
    diags.push_back(make_warning("W-UNBOUND-ABSTRACT", arch.root_span,
                                 "root type '" + root->name.text + "' is abstract"));
  }

  BoundArchitecture bound;
  std::vector<ComponentType>& out_types = bound.architecture.component_types;

  ComponentType root_copy = *root;
  root_copy.name = app_name;
  out_types.push_back(std::move(root_copy));
  bound.provenance.push_back(ProvenanceEntry{app_name, root->name, QualifiedName{}});

  struct WorkItem {
    std::size_t index;  // into out_types; the vector may grow, so no pointers
    std::vector<Identifier> path;
  };
  std::deque<WorkItem> queue;
  queue.push_back(WorkItem{0, {}});

  while (!queue.empty()) {
    WorkItem item = queue.front();
    queue.pop_front();
    const std::size_t scd_count = out_types[item.index].subcomponents.size();
    for (std::size_t si = 0; si < scd_count; ++si) {
      std::vector<Identifier> path = item.path;
      path.push_back(out_types[item.index].subcomponents[si].name);
      const std::string key = render_path(path);

      if (auto bit = by_path.find(key); bit != by_path.end()) {
        SubcomponentDecl& scd = out_types[item.index].subcomponents[si];
        scd.type_name = bit->second->target_type;
        scd.arguments = bit->second->full_args;
        continue;  // bound types are taken as-is, never descended into
      }

      const Identifier original_name = out_types[item.index].subcomponents[si].type_name;
      const ComponentType* original = scope.find_type(original_name);
      if (!original) {
        diags.push_back(make_error("E-TYPE-UNRESOLVED",
                                   out_types[item.index].subcomponents[si].type_span,
                                   "unknown component type '" + original_name.text + "'"));
        abstract_failure = true;
        continue;
      }
      if (original->kind == TypeKind::Abstract) {
        const SourceSpan& span = out_types[item.index].subcomponents[si].type_span;
        if (mode == BindMode::Strict) {
          diags.push_back(make_error("E-UNBOUND-ABSTRACT", span,
                                     "abstract subcomponent '" + key + "' is not bound"));
          abstract_failure = true;
          continue;
        }
        // Permissive: copy it like any other unbound type so staged
        // configurations still produce a self-contained result.
        diags.push_back(make_warning("W-UNBOUND-ABSTRACT", span,
                                     "abstract subcomponent '" + key + "' is not bound"));
      }

      ComponentType copy = unique_copy(*original, registry);
      const Identifier fresh = copy.name;
      out_types.push_back(std::move(copy));
      bound.provenance.push_back(ProvenanceEntry{fresh, original->name, to_qualified_name(path)});
      out_types[item.index].subcomponents[si].type_name = fresh;
      queue.push_back(WorkItem{out_types.size() - 1, std::move(path)});
    }
  }

  if (abstract_failure) return result;  // strict mode: diagnostics only

  // Close over everything the copies reference so the output stands alone:
  // bound platform-specific types, their supertype chains (kept adjacent),
  // and the transitive dependencies of composed targets.
  std::set<std::string> known;
  for (const ComponentType& t : out_types) known.insert(t.name.text);
  std::deque<Identifier> dep_queue;
  auto enqueue_ref = [&](const Identifier& name) {
    if (known.insert(name.text).second) dep_queue.push_back(name);
  };
  auto scan_refs = [&](const ComponentType& t) {
    for (const SubcomponentDecl& s : t.subcomponents) enqueue_ref(s.type_name);
  };
  for (std::size_t i = 0; i < out_types.size(); ++i) {
    if (out_types[i].super_type) enqueue_ref(*out_types[i].super_type);
    scan_refs(out_types[i]);
  }
  while (!dep_queue.empty()) {
    Identifier name = dep_queue.front();
    dep_queue.pop_front();
    const ComponentType* dep = scope.find_type(name);
    if (!dep) continue;  // already reported during validation
    out_types.push_back(*dep);
    scan_refs(*dep);
    std::set<std::string> guard{dep->name.text};
    const ComponentType* cur = dep;
    while (cur->super_type) {
      const ComponentType* sup = scope.find_type(*cur->super_type);
      if (!sup || !guard.insert(sup->name.text).second) break;
      if (known.insert(sup->name.text).second) {
        out_types.push_back(*sup);
        scan_refs(*sup);
      }
      cur = sup;
    }
  }

  // Every enumeration referenced by a port, parameter, or argument.
  std::set<std::string> enum_seen;
  auto note_enum = [&](const Identifier& name) {
    if (is_builtin_type(name) || !enum_seen.insert(name.text).second) return;
    if (const EnumDecl* e = scope.find_enum(name)) bound.architecture.enums.push_back(*e);
  };
  for (const ComponentType& t : out_types) {
    for (const ConfigParam& p : t.params) note_enum(p.type.name);
    for (const Port& p : t.ports) note_enum(p.type.name);
    for (const SubcomponentDecl& s : t.subcomponents) {
      for (const ArgumentValue& a : s.arguments) {
        if (const EnumLit* e = std::get_if<EnumLit>(&a.value)) note_enum(e->enum_name);
      }
    }
  }

  std::set<std::string> lib_seen;
  auto note_impl_lib = [&](const std::string& declared) {
    const ScopeEntry* e = scope.find(declared);
    if (e && e->origin == OriginKind::ImplLib && lib_seen.insert(e->unit.text).second) {
      bound.impl_imports.push_back(e->unit);
    }
  };
  for (const ComponentType& t : out_types) note_impl_lib(t.name.text);
  for (const EnumDecl& e : bound.architecture.enums) note_impl_lib(e.name.text);

  bound.architecture.name = app_name;
  bound.architecture.name_span = arch.name_span;
  bound.architecture.root_type = app_name;
  bound.architecture.root_span = arch.root_span;
  bound.architecture.file = app_name.text + ".arc";
  result.result = std::move(bound);
  return result;
}

std::size_t count_new_types(const BoundArchitecture& result) { return result.provenance.size(); }

}  // namespace cnc
