#include "cnc/emit.hpp"

#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cnc/printer.hpp"
#include "cnc/scope.hpp"

namespace cnc {

std::string emit_adl(const BoundArchitecture& result) {
  return pretty_print(result.architecture);
}

namespace {

using nlohmann::ordered_json;

const char* direction_name(PortDirection d) { return d == PortDirection::In ? "in" : "out"; }

ordered_json type_to_json(const ComponentType& t) {
  ordered_json j;
  j["name"] = t.name.text;
  j["kind"] = to_string(t.kind);
  if (t.super_type) j["extends"] = t.super_type->text;
  if (t.rts) j["rts"] = t.rts->text;
  ordered_json params = ordered_json::array();
  for (const ConfigParam& p : t.params) {
    params.push_back({{"name", p.name.text}, {"type", p.type.name.text}});
  }
  j["params"] = std::move(params);
  ordered_json ports = ordered_json::array();
  for (const Port& p : t.ports) {
    ports.push_back({{"name", p.name.text},
                     {"direction", direction_name(p.direction)},
                     {"type", p.type.name.text}});
  }
  j["ports"] = std::move(ports);
  ordered_json scds = ordered_json::array();
  for (const SubcomponentDecl& s : t.subcomponents) {
    ordered_json args = ordered_json::array();
    for (const ArgumentValue& a : s.arguments) args.push_back(to_text(a));
    scds.push_back({{"name", s.name.text}, {"type", s.type_name.text}, {"arguments", args}});
  }
  j["subcomponents"] = std::move(scds);
  ordered_json conns = ordered_json::array();
  for (const Connector& c : t.connectors) {
    conns.push_back({{"from", c.source.render()}, {"to", c.target.render()}});
  }
  j["connectors"] = std::move(conns);
  if (const Behavior* b = t.behavior()) {
    if (b->kind == BehaviorKind::Model) {
      j["behavior"] = {{"kind", "model"}};
    } else {
      j["behavior"] = {{"kind", "impl"}, {"ref", b->impl_ref}};
    }
  } else {
    j["behavior"] = nullptr;
  }
  return j;
}

ordered_json instance_to_json(const InstanceNode& node) {
  ordered_json j;
  j["path"] = node.path.render();
  j["type"] = node.type_name.text;
  ordered_json args = ordered_json::array();
  for (const ArgumentValue& a : node.resolved_args) args.push_back(to_text(a));
  j["args"] = std::move(args);
  j["rts"] = node.rts ? ordered_json(node.rts->text) : ordered_json(nullptr);
  switch (node.behavior) {
    case InstanceBehavior::None: j["behavior"] = "none"; break;
    case InstanceBehavior::Model: j["behavior"] = "model"; break;
    case InstanceBehavior::Impl:
      j["behavior"] = "impl";
      j["behaviorRef"] = node.behavior_ref;
      break;
  }
  ordered_json children = ordered_json::array();
  for (const InstanceNode& child : node.children) children.push_back(instance_to_json(child));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

std::string emit_structured(const BoundArchitecture& result) {
  ordered_json doc;
  doc["schema"] = "cnc-bound/1";
  doc["name"] = result.architecture.name.text;
  doc["root"] = result.architecture.root_type.text;
  ordered_json libs = ordered_json::array();
  for (const Identifier& lib : result.impl_imports) libs.push_back(lib.text);
  doc["implementationLibraries"] = std::move(libs);
  ordered_json prov = ordered_json::array();
  for (const ProvenanceEntry& p : result.provenance) {
    prov.push_back({{"fresh", p.fresh.text},
                    {"original", p.original.text},
                    {"path", p.instance_path.render()}});
  }
  doc["provenance"] = std::move(prov);
  ordered_json enums = ordered_json::array();
  for (const EnumDecl& e : result.architecture.enums) {
    ordered_json lits = ordered_json::array();
    for (const EnumLiteralDecl& lit : e.literals) lits.push_back(lit.name.text);
    enums.push_back({{"name", e.name.text}, {"literals", lits}});
  }
  doc["enums"] = std::move(enums);
  ordered_json types = ordered_json::array();
  for (const ComponentType& t : result.architecture.component_types) {
    types.push_back(type_to_json(t));
  }
  doc["types"] = std::move(types);
  InstantiateResult tree = instantiate(result);
  doc["instances"] = tree.root ? instance_to_json(*tree.root) : ordered_json(nullptr);
  return doc.dump(2) + "\n";
}

namespace {

struct Expander {
  const Scope& scope;
  std::vector<Diagnostic>& diags;

  InstanceNode expand(const ComponentType& type, std::vector<Identifier> path,
                      std::vector<ArgumentValue> args, std::set<std::string>& on_path) {
    InstanceNode node;
    node.path.segments = path;
    node.type_name = type.name;
    node.resolved_args = std::move(args);
    node.rts = type.rts;
    if (const Behavior* b = type.behavior()) {
      node.behavior =
          b->kind == BehaviorKind::Model ? InstanceBehavior::Model : InstanceBehavior::Impl;
      node.behavior_ref = b->impl_ref;
    }
    if (!on_path.insert(type.name.text).second) {
      diags.push_back(make_error("E-SCD-CYCLE", type.name_span,
                                 "component type '" + type.name.text +
                                     "' recurs along instance path '" + node.path.render() +
                                     "'"));
      return node;
    }
    for (const SubcomponentDecl& s : type.subcomponents) {
      const ComponentType* child = scope.find_type(s.type_name);
      if (!child) {
        diags.push_back(make_error("E-TYPE-UNRESOLVED", s.type_span,
                                   "unknown component type '" + s.type_name.text + "'"));
        continue;
      }
      std::vector<Identifier> child_path = path;
      child_path.push_back(s.name);
      node.children.push_back(expand(*child, std::move(child_path), s.arguments, on_path));
    }
    on_path.erase(type.name.text);
    return node;
  }
};

}  // namespace

InstantiateResult instantiate(const BoundArchitecture& result) {
  InstantiateResult out;
  const Architecture& arch = result.architecture;
  ScopeResult sr = build_scope(arch, {});
  // A valid bound architecture cannot clash with itself, but surface any
  // problems instead of hiding them.
  out.diagnostics = sr.diagnostics;

  const ComponentType* root = sr.scope.find_type(arch.root_type);
  if (!root) {
    out.diagnostics.push_back(make_error("E-TYPE-UNRESOLVED", arch.root_span,
                                         "root type '" + arch.root_type.text +
                                             "' is not declared"));
    return out;
  }
  if (!effective_params(sr.scope, root->name).empty()) {
    out.diagnostics.push_back(make_error(
        "E-ROOT-PARAMS", root->name_span,
        "root type '" + root->name.text + "' declares parameters; nothing supplies arguments"));
    return out;
  }
  Expander expander{sr.scope, out.diagnostics};
  std::set<std::string> on_path;
  out.root = expander.expand(*root, {}, {}, on_path);
  return out;
}

std::size_t node_count(const InstanceNode& node) {
  std::size_t n = 1;
  for (const InstanceNode& child : node.children) n += node_count(child);
  return n;
}

}  // namespace cnc
