#include "cnc/printer.hpp"

#include <sstream>

namespace cnc {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void render_params(std::ostringstream& out, const std::vector<ConfigParam>& params) {
  if (params.empty()) return;
  out << " (";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << ", ";
    out << params[i].type.name.text << ' ' << params[i].name.text;
  }
  out << ')';
}

void render_args(std::ostringstream& out, const std::vector<ArgumentValue>& args) {
  if (args.empty()) return;
  out << " (";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out << ", ";
    out << to_text(args[i]);
  }
  out << ')';
}

void render_port(std::ostringstream& out, const Port& p) {
  out << "port " << (p.direction == PortDirection::In ? "in" : "out") << ' ' << p.type.name.text
      << ' ' << p.name.text << ';';
}

void render_scd(std::ostringstream& out, const SubcomponentDecl& s) {
  out << "component " << s.type_name.text;
  render_args(out, s.arguments);
  out << ' ' << s.name.text << ';';
}

void render_connector(std::ostringstream& out, const Connector& c) {
  out << "connect " << c.source.render() << " -> " << c.target.render() << ';';
}

void render_behavior(std::ostringstream& out, const Behavior& b) {
  if (b.kind == BehaviorKind::Model) {
    out << "behavior model;";
  } else {
    out << "behavior impl " << quoted(b.impl_ref) << ';';
  }
}

void render_type(std::ostringstream& out, const ComponentType& t, const std::string& indent) {
  out << indent;
  if (t.kind == TypeKind::Abstract) out << "abstract ";
  out << "component " << t.name.text;
  render_params(out, t.params);
  if (t.super_type) out << " extends " << t.super_type->text;
  if (t.rts) out << " rts " << quoted(t.rts->text);

  // Bodies holding at most a behavior stay on the header line; everything
  // else gets the one-declaration-per-line layout.
  const bool inline_body = t.ports.empty() && t.subcomponents.empty() && t.connectors.empty() &&
                           t.behaviors.size() <= 1;
  if (inline_body) {
    out << " { ";
    if (!t.behaviors.empty()) {
      render_behavior(out, t.behaviors.front());
      out << ' ';
    }
    out << "}\n";
    return;
  }
  out << " {\n";
  const std::string inner = indent + "  ";
  for (const Port& p : t.ports) {
    out << inner;
    render_port(out, p);
    out << '\n';
  }
  for (const SubcomponentDecl& s : t.subcomponents) {
    out << inner;
    render_scd(out, s);
    out << '\n';
  }
  for (const Connector& c : t.connectors) {
    out << inner;
    render_connector(out, c);
    out << '\n';
  }
  for (const Behavior& b : t.behaviors) {
    out << inner;
    render_behavior(out, b);
    out << '\n';
  }
  out << indent << "}\n";
}

void render_enum(std::ostringstream& out, const EnumDecl& e, const std::string& indent) {
  out << indent << "enum " << e.name.text << " { ";
  for (std::size_t i = 0; i < e.literals.size(); ++i) {
    if (i) out << ", ";
    out << e.literals[i].name.text;
  }
  out << " }\n";
}

}  // namespace

std::string pretty_print(const Architecture& arch) {
  std::ostringstream out;
  out << "architecture " << arch.name.text << " {\n";
  for (const ImportDecl& imp : arch.imports) out << "  import " << imp.library.text << ".*;\n";
  for (const EnumDecl& e : arch.enums) render_enum(out, e, "  ");
  for (const ComponentType& t : arch.component_types) render_type(out, t, "  ");
  out << "  root " << arch.root_type.text << ";\n";
  out << "}\n";
  return out.str();
}

std::string pretty_print(const Library& lib) {
  std::ostringstream out;
  out << "library " << lib.name.text << " : "
      << (lib.kind == LibraryKind::Model ? "model" : "implementation") << " {\n";
  for (const EnumDecl& e : lib.enums) render_enum(out, e, "  ");
  for (const ComponentType& t : lib.component_types) render_type(out, t, "  ");
  out << "}\n";
  return out.str();
}

std::string pretty_print(const ApplicationConfig& cfg) {
  std::ostringstream out;
  for (const ImportDecl& imp : cfg.imports) out << "import " << imp.library.text << ".*;\n";
  if (!cfg.imports.empty()) out << '\n';
  out << "application " << cfg.name.text << " for " << cfg.target_arch.text << " {\n";
  for (const RawBinding& b : cfg.bindings) {
    out << "  bind " << b.path.render() << " to " << b.target_type.text;
    render_args(out, b.added_args);
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cnc
