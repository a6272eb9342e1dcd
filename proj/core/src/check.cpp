#include "cnc/check.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

#include "internal.hpp"

namespace cnc {

namespace {

class Checker {
 public:
  Checker(const Scope& scope, PlatformRule rule, const char* leak_code)
      : scope_(scope), rule_(rule), leak_code_(leak_code) {}

  std::vector<Diagnostic> take() {
    sort_diagnostics(diags_);
    return std::move(diags_);
  }

  void error(const char* code, const SourceSpan& span, std::string message) {
    diags_.push_back(make_error(code, span, std::move(message)));
  }

  void warning(const char* code, const SourceSpan& span, std::string message) {
    diags_.push_back(make_warning(code, span, std::move(message)));
  }

  void check_enum(const EnumDecl& e) {
    std::set<std::string> seen;
    for (const EnumLiteralDecl& lit : e.literals) {
      if (!seen.insert(lit.name.text).second) {
        error("E-ENUM-DUP", lit.span,
              "enumeration '" + e.name.text + "' declares literal '" + lit.name.text + "' twice");
      }
    }
  }

  void check_type(const ComponentType& t) {
    check_kind(t);
    check_abstract_purity(t);
    check_supertype(t);
    check_params(t);
    check_ports(t);
    check_scds(t);
    check_connectors(t);
    check_instantiation_cycle(t);
    check_rts(t);
    check_platform(t);
  }

  void check_impl_lib_type(const ComponentType& t) {
    if (t.kind == TypeKind::Abstract) {
      error("E-IMPLLIB-ABSTRACT", t.name_span,
            "implementation library declares abstract type '" + t.name.text + "'");
      return;
    }
    if (!extends_abstract(t)) {
      error("E-IMPLLIB-NO-SUPER", t.name_span,
            "type '" + t.name.text + "' does not extend any abstract type");
    }
    if (t.kind == TypeKind::AtomicImpl && !t.rts) {
      error("E-IMPL-NO-RTS", t.name_span,
            "implementation type '" + t.name.text + "' carries no run-time-system tag");
    }
    for (const SubcomponentDecl& s : t.subcomponents) {
      const ComponentType* st = scope_.find_type(s.type_name);
      if (st && st->kind == TypeKind::Abstract) {
        error("E-IMPLLIB-ABSTRACT-SCD", s.type_span,
              "subcomponent '" + s.name.text + "' instantiates abstract type '" + st->name.text +
                  "'");
      }
    }
  }

 private:
  void check_kind(const ComponentType& t) {
    if (t.kind != TypeKind::Undetermined) return;
    const bool has_scds = !t.subcomponents.empty() || !t.connectors.empty();
    std::string why;
    if (has_scds && !t.behaviors.empty()) {
      why = "it mixes subcomponents with a behavior declaration";
    } else if (t.behaviors.size() > 1) {
      why = "it declares more than one behavior";
    } else {
      why = "it has neither a behavior nor subcomponents";
    }
    error("E-KIND-UNDETERMINED", t.name_span,
          "cannot classify component type '" + t.name.text + "': " + why);
  }

  void check_abstract_purity(const ComponentType& t) {
    if (t.kind != TypeKind::Abstract) return;
    if (!t.behaviors.empty()) {
      error("E-ABSTRACT-IMPURE", t.behaviors.front().span,
            "abstract type '" + t.name.text + "' may not declare a behavior");
    }
    if (!t.subcomponents.empty()) {
      error("E-ABSTRACT-IMPURE", t.subcomponents.front().name_span,
            "abstract type '" + t.name.text + "' may not declare subcomponents");
    } else if (!t.connectors.empty()) {
      error("E-ABSTRACT-IMPURE", t.connectors.front().span,
            "abstract type '" + t.name.text + "' may not declare connectors");
    }
    if (t.rts) {
      error("E-ABSTRACT-IMPURE", t.rts_span,
            "abstract type '" + t.name.text + "' may not carry a run-time-system tag");
    }
  }

  void check_supertype(const ComponentType& t) {
    if (!t.super_type) return;
    const ScopeEntry* entry = scope_.find(t.super_type->text);
    if (!entry || !entry->type) {
      error("E-TYPE-UNRESOLVED", t.super_span, "unknown supertype '" + t.super_type->text + "'");
      return;
    }
    std::vector<std::string> chain{t.name.text};
    std::set<std::string> seen{t.name.text};
    const ComponentType* cur = entry->type;
    while (cur) {
      chain.push_back(cur->name.text);
      if (!seen.insert(cur->name.text).second) {
        if (cur->name == t.name) {
          std::string rendered;
          for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) rendered += " -> ";
            rendered += chain[i];
          }
          error("E-EXTENDS-CYCLE", t.super_span, "inheritance cycle: " + rendered);
        }
        return;
      }
      if (!cur->super_type) return;
      cur = scope_.find_type(*cur->super_type);
    }
  }

  void check_params(const ComponentType& t) {
    std::map<std::string, std::string> inherited;
    for_ancestors(t, [&](const ComponentType& a) {
      for (const ConfigParam& p : a.params) inherited.emplace(p.name.text, a.name.text);
    });
    std::set<std::string> own;
    for (const ConfigParam& p : t.params) {
      check_data_type(p.type);
      auto it = inherited.find(p.name.text);
      if (it != inherited.end()) {
        error("E-PARAM-REDEF", p.span,
              "parameter '" + p.name.text + "' of '" + t.name.text +
                  "' is already declared by supertype '" + it->second + "'");
      } else if (!own.insert(p.name.text).second) {
        error("E-PARAM-REDEF", p.span,
              "duplicate parameter '" + p.name.text + "' in '" + t.name.text + "'");
      }
    }
  }

  void check_ports(const ComponentType& t) {
    std::map<std::string, std::string> inherited;
    for_ancestors(t, [&](const ComponentType& a) {
      for (const Port& p : a.ports) inherited.emplace(p.name.text, a.name.text);
    });
    std::set<std::string> own;
    for (const Port& p : t.ports) {
      check_data_type(p.type);
      auto it = inherited.find(p.name.text);
      if (it != inherited.end()) {
        error("E-PORT-REDEF", p.span,
              "port '" + p.name.text + "' of '" + t.name.text +
                  "' is already declared by supertype '" + it->second + "'");
      } else if (!own.insert(p.name.text).second) {
        error("E-PORT-REDEF", p.span,
              "duplicate port '" + p.name.text + "' in '" + t.name.text + "'");
      }
    }
  }

  void check_data_type(const DataTypeRef& ref) {
    if (is_builtin_type(ref.name)) return;
    const ScopeEntry* entry = scope_.find(ref.name.text);
    if (!entry) {
      error("E-TYPE-UNRESOLVED", ref.span, "unknown data type '" + ref.name.text + "'");
    } else if (!entry->enum_decl) {
      error("E-TYPE-UNRESOLVED", ref.span, "'" + ref.name.text + "' does not name a data type");
    }
  }

  void check_scds(const ComponentType& t) {
    std::set<std::string> names;
    for (const SubcomponentDecl& s : t.subcomponents) {
      if (!names.insert(s.name.text).second) {
        error("E-SCD-DUP", s.name_span,
              "composed type '" + t.name.text + "' declares subcomponent '" + s.name.text +
                  "' twice");
      }
      const ScopeEntry* entry = scope_.find(s.type_name.text);
      if (!entry || !entry->type) {
        error("E-TYPE-UNRESOLVED", s.type_span,
              entry ? "'" + s.type_name.text + "' is not a component type"
                    : "unknown component type '" + s.type_name.text + "'");
        continue;
      }
      const ComponentType& st = *entry->type;
      if (rule_ == PlatformRule::Specific && st.kind == TypeKind::Abstract) {
        error("E-NO-BEHAVIOR", s.type_span,
              "instantiated type '" + st.name.text + "' is abstract and provides no behavior");
      }
      check_arguments(s, st);
    }
  }

  void check_arguments(const SubcomponentDecl& s, const ComponentType& st) {
    std::vector<ConfigParam> params = effective_params(scope_, st.name);
    if (params.size() != s.arguments.size()) {
      std::ostringstream msg;
      msg << "type '" << st.name.text << "' expects " << params.size() << " argument"
          << (params.size() == 1 ? "" : "s") << ", got " << s.arguments.size();
      error("E-ARG-ARITY", s.type_span, msg.str());
      return;
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      std::string problem = detail::argument_mismatch(scope_, s.arguments[i], params[i].type);
      if (!problem.empty()) error("E-ARG-TYPE", s.arguments[i].span, problem);
    }
  }

  const Port* resolve_endpoint(const ComponentType& t, const Endpoint& ep) {
    if (!ep.scd) {
      for (const Port& p : ports_of(t.name)) {
        if (p.name == ep.port) return &p;
      }
      error("E-CONN-UNRESOLVED", ep.span,
            "type '" + t.name.text + "' has no port '" + ep.port.text + "'");
      return nullptr;
    }
    const SubcomponentDecl* scd = nullptr;
    for (const SubcomponentDecl& s : t.subcomponents) {
      if (s.name == *ep.scd) {
        scd = &s;
        break;
      }
    }
    if (!scd) {
      error("E-CONN-UNRESOLVED", ep.span,
            "type '" + t.name.text + "' has no subcomponent '" + ep.scd->text + "'");
      return nullptr;
    }
    const ComponentType* st = scope_.find_type(scd->type_name);
    if (!st) return nullptr;  // the SCD itself is already flagged
    for (const Port& p : ports_of(st->name)) {
      if (p.name == ep.port) return &p;
    }
    error("E-CONN-UNRESOLVED", ep.span,
          "type '" + st->name.text + "' has no port '" + ep.port.text + "'");
    return nullptr;
  }

  void check_connectors(const ComponentType& t) {
    for (const Connector& c : t.connectors) {
      const Port* src = resolve_endpoint(t, c.source);
      const Port* dst = resolve_endpoint(t, c.target);
      if (!src || !dst) continue;
      const char* dir_problem = nullptr;
      if (!c.source.scd && src->direction != PortDirection::In) {
        dir_problem = "connector source reads an own outgoing port";
      } else if (c.source.scd && src->direction != PortDirection::Out) {
        dir_problem = "connector source reads a subcomponent incoming port";
      } else if (!c.target.scd && dst->direction != PortDirection::Out) {
        dir_problem = "connector target writes an own incoming port";
      } else if (c.target.scd && dst->direction != PortDirection::In) {
        dir_problem = "connector target writes a subcomponent outgoing port";
      }
      if (dir_problem) {
        error("E-CONN-DIR", c.span,
              std::string(dir_problem) + " ('" + c.source.render() + " -> " + c.target.render() +
                  "')");
        continue;
      }
      if (src->type.name != dst->type.name) {
        error("E-CONN-TYPE", c.span,
              "connected ports disagree on data type: '" + c.source.render() + "' is " +
                  src->type.name.text + ", '" + c.target.render() + "' is " +
                  dst->type.name.text);
      }
    }
    if (t.kind != TypeKind::Composed) return;
    for (const Port& p : t.ports) {
      bool used = false;
      for (const Connector& c : t.connectors) {
        if ((!c.source.scd && c.source.port == p.name) ||
            (!c.target.scd && c.target.port == p.name)) {
          used = true;
          break;
        }
      }
      if (!used) {
        warning("W-PORT-UNUSED", p.span,
                "port '" + p.name.text + "' of composed type '" + t.name.text +
                    "' is not connected");
      }
    }
  }

  void check_instantiation_cycle(const ComponentType& t) {
    if (t.subcomponents.empty()) return;
    std::set<std::string> visited;
    if (reaches(t, t.name, visited)) {
      error("E-SCD-CYCLE", t.name_span,
            "component type '" + t.name.text + "' transitively instantiates itself");
    }
  }

  bool reaches(const ComponentType& from, const Identifier& target,
               std::set<std::string>& visited) {
    for (const SubcomponentDecl& s : from.subcomponents) {
      if (s.type_name == target) return true;
      const ComponentType* st = scope_.find_type(s.type_name);
      if (st && visited.insert(st->name.text).second && reaches(*st, target, visited)) return true;
    }
    return false;
  }

  void check_rts(const ComponentType& t) {
    if (!t.rts || leak_code_) return;  // leak contexts report rts tags themselves
    if (t.kind == TypeKind::AtomicModel) {
      error("E-RTS-MISPLACED", t.rts_span,
            "run-time-system tag on '" + t.name.text + "', whose behavior is a model");
    }
  }

  void check_platform(const ComponentType& t) {
    if (!leak_code_) return;
    const bool model_lib = std::string_view(leak_code_) == "E-MODELLIB-IMPURE";
    const char* where = model_lib ? "model library" : "platform-independent architecture";
    if (t.kind == TypeKind::AtomicImpl) {
      error(leak_code_, t.name_span,
            "type '" + t.name.text + "' carries a platform-specific implementation inside a " +
                where);
      return;
    }
    if (t.rts && t.kind != TypeKind::Abstract) {
      error(leak_code_, t.rts_span, std::string("run-time-system tag inside a ") + where);
    }
  }

  bool extends_abstract(const ComponentType& t) {
    bool found = false;
    for_ancestors(t, [&](const ComponentType& a) {
      if (a.kind == TypeKind::Abstract) found = true;
    });
    return found;
  }

  /// Visits strict ancestors nearest-first, guarding against cycles.
  template <typename Fn>
  void for_ancestors(const ComponentType& t, Fn fn) {
    std::set<std::string> seen{t.name.text};
    const ComponentType* cur = t.super_type ? scope_.find_type(*t.super_type) : nullptr;
    while (cur && seen.insert(cur->name.text).second) {
      fn(*cur);
      cur = cur->super_type ? scope_.find_type(*cur->super_type) : nullptr;
    }
  }

  const std::vector<Port>& ports_of(const Identifier& type) {
    auto it = port_cache_.find(type.text);
    if (it == port_cache_.end()) {
      it = port_cache_.emplace(type.text, effective_ports(scope_, type)).first;
    }
    return it->second;
  }

  const Scope& scope_;
  PlatformRule rule_;
  const char* leak_code_;
  std::map<std::string, std::vector<Port>> port_cache_;
  std::vector<Diagnostic> diags_;
};

bool has_impl_entries_from(const Scope& scope, const Identifier& lib) {
  for (const std::string& name : scope.names()) {
    const ScopeEntry* e = scope.find(name);
    if (e && e->origin == OriginKind::ImplLib && e->unit == lib) return true;
  }
  return false;
}

}  // namespace

std::vector<Diagnostic> check_architecture(const Architecture& arch, const Scope& scope,
                                           PlatformRule rule) {
  const char* leak = rule == PlatformRule::Independent ? "E-PLATFORM-LEAK" : nullptr;
  Checker checker(scope, rule, leak);
  for (const EnumDecl& e : arch.enums) checker.check_enum(e);
  for (const ComponentType& t : arch.component_types) checker.check_type(t);

  if (rule == PlatformRule::Independent) {
    for (const ImportDecl& imp : arch.imports) {
      if (has_impl_entries_from(scope, imp.library)) {
        checker.error("E-PLATFORM-LEAK", imp.span,
                      "architecture imports implementation library '" + imp.library.text + "'");
      }
    }
  }

  if (!arch.root_type.text.empty()) {
    bool own = std::any_of(arch.component_types.begin(), arch.component_types.end(),
                           [&](const ComponentType& t) { return t.name == arch.root_type; });
    if (!own) {
      checker.error("E-TYPE-UNRESOLVED", arch.root_span,
                    "root type '" + arch.root_type.text +
                        "' is not declared by the architecture");
    }
  }
  return checker.take();
}

std::vector<Diagnostic> check_library(const Library& lib, const Scope& scope) {
  const bool model = lib.kind == LibraryKind::Model;
  Checker checker(scope, PlatformRule::Independent, model ? "E-MODELLIB-IMPURE" : nullptr);
  for (const EnumDecl& e : lib.enums) checker.check_enum(e);
  for (const ComponentType& t : lib.component_types) {
    checker.check_type(t);
    if (!model) checker.check_impl_lib_type(t);
  }
  return checker.take();
}

namespace detail {

std::string argument_mismatch(const Scope& scope, const ArgumentValue& arg,
                              const DataTypeRef& param) {
  const std::string& want = param.name.text;
  auto mismatch = [&] {
    return "argument " + to_text(arg) + " is not assignable to parameter type '" + want + "'";
  };
  if (std::holds_alternative<IntLit>(arg.value)) return want == "int" ? "" : mismatch();
  if (std::holds_alternative<BoolLit>(arg.value)) return want == "boolean" ? "" : mismatch();
  if (std::holds_alternative<StringLit>(arg.value)) return want == "string" ? "" : mismatch();
  const EnumLit& e = std::get<EnumLit>(arg.value);
  if (e.enum_name.text != want) return mismatch();
  const EnumDecl* decl = scope.find_enum(e.enum_name);
  if (!decl) return "unknown enumeration '" + e.enum_name.text + "'";
  for (const EnumLiteralDecl& lit : decl->literals) {
    if (lit.name == e.literal) return std::string();
  }
  return "enumeration '" + e.enum_name.text + "' has no literal '" + e.literal.text + "'";
}

}  // namespace detail

}  // namespace cnc
