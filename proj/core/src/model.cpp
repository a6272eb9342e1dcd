#include "cnc/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cnc {

namespace {

bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_ident_cont(char c) { return is_ident_start(c) || c == '_' || (c >= '0' && c <= '9'); }

}  // namespace

bool is_valid_identifier(const std::string& text) {
  if (text.empty() || !is_ident_start(text[0])) return false;
  return std::all_of(text.begin() + 1, text.end(), is_ident_cont);
}

bool operator==(const QualifiedName& a, const QualifiedName& b) {
  if (a.segments.size() != b.segments.size()) return false;
  for (std::size_t i = 0; i < a.segments.size(); ++i) {
    if (a.segments[i] != b.segments[i]) return false;
  }
  return true;
}

std::string QualifiedName::render() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += '.';
    out += segments[i].text;
  }
  return out;
}

std::optional<QualifiedName> parse_qualified_name(const std::string& text) {
  QualifiedName qn;
  std::size_t pos = 0;
  while (true) {
    std::size_t dot = text.find('.', pos);
    std::string seg = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (!is_valid_identifier(seg)) return std::nullopt;
    qn.segments.push_back(Identifier{seg});
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return qn;
}

bool is_builtin_type(const Identifier& name) {
  return name.text == "int" || name.text == "boolean" || name.text == "string";
}

std::string to_text(const ArgumentValue& arg) {
  struct Renderer {
    std::string operator()(const IntLit& v) const { return std::to_string(v.value); }
    std::string operator()(const BoolLit& v) const { return v.value ? "true" : "false"; }
    std::string operator()(const StringLit& v) const {
      std::string out = "\"";
      for (char c : v.value) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return out;
    }
    std::string operator()(const EnumLit& v) const {
      return v.enum_name.text + "." + v.literal.text;
    }
  };
  return std::visit(Renderer{}, arg.value);
}

bool same_value(const ArgumentValue& a, const ArgumentValue& b) {
  if (a.value.index() != b.value.index()) return false;
  struct Eq {
    const ArgumentValue& rhs;
    bool operator()(const IntLit& v) const { return std::get<IntLit>(rhs.value).value == v.value; }
    bool operator()(const BoolLit& v) const {
      return std::get<BoolLit>(rhs.value).value == v.value;
    }
    bool operator()(const StringLit& v) const {
      return std::get<StringLit>(rhs.value).value == v.value;
    }
    bool operator()(const EnumLit& v) const {
      const auto& o = std::get<EnumLit>(rhs.value);
      return o.enum_name == v.enum_name && o.literal == v.literal;
    }
  };
  return std::visit(Eq{b}, a.value);
}

std::string Endpoint::render() const {
  if (scd) return scd->text + "." + port.text;
  return port.text;
}

const char* to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::Abstract: return "abstract";
    case TypeKind::AtomicModel: return "atomicModel";
    case TypeKind::AtomicImpl: return "atomicImpl";
    case TypeKind::Composed: return "composed";
    case TypeKind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

TypeKind derive_kind(bool declared_abstract, const ComponentType& shape) {
  const bool has_scds = !shape.subcomponents.empty() || !shape.connectors.empty();
  const bool has_behavior = !shape.behaviors.empty();
  if (declared_abstract) return TypeKind::Abstract;
  if (has_scds && has_behavior) return TypeKind::Undetermined;
  if (has_scds) return TypeKind::Composed;
  if (!has_behavior || shape.behaviors.size() > 1) return TypeKind::Undetermined;
  return shape.behaviors.front().kind == BehaviorKind::Model ? TypeKind::AtomicModel
                                                             : TypeKind::AtomicImpl;
}

// --- structural equality -----------------------------------------------------
//
// Spans are layout artifacts, so every comparison below skips them.

bool structurally_equal(const EnumDecl& a, const EnumDecl& b) {
  if (a.name != b.name || a.literals.size() != b.literals.size()) return false;
  for (std::size_t i = 0; i < a.literals.size(); ++i) {
    if (a.literals[i].name != b.literals[i].name) return false;
  }
  return true;
}

namespace {

bool equal(const DataTypeRef& a, const DataTypeRef& b) { return a.name == b.name; }

bool equal(const ConfigParam& a, const ConfigParam& b) {
  return a.name == b.name && equal(a.type, b.type);
}

bool equal(const Port& a, const Port& b) {
  return a.name == b.name && a.direction == b.direction && equal(a.type, b.type);
}

bool equal(const SubcomponentDecl& a, const SubcomponentDecl& b) {
  if (a.name != b.name || a.type_name != b.type_name) return false;
  if (a.arguments.size() != b.arguments.size()) return false;
  for (std::size_t i = 0; i < a.arguments.size(); ++i) {
    if (!same_value(a.arguments[i], b.arguments[i])) return false;
  }
  return true;
}

bool equal(const Endpoint& a, const Endpoint& b) {
  if (a.scd.has_value() != b.scd.has_value()) return false;
  if (a.scd && *a.scd != *b.scd) return false;
  return a.port == b.port;
}

bool equal(const Connector& a, const Connector& b) {
  return equal(a.source, b.source) && equal(a.target, b.target);
}

bool equal(const Behavior& a, const Behavior& b) {
  if (a.kind != b.kind) return false;
  return a.impl_ref == b.impl_ref;
}

template <typename T, typename Eq>
bool equal_seq(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const ComponentType& a, const ComponentType& b, bool ignore_name) {
  if (!ignore_name && a.name != b.name) return false;
  if (a.kind != b.kind) return false;
  if (a.super_type.has_value() != b.super_type.has_value()) return false;
  if (a.super_type && *a.super_type != *b.super_type) return false;
  if (a.rts != b.rts) return false;
  auto eq = [](const auto& x, const auto& y) { return equal(x, y); };
  return equal_seq(a.params, b.params, eq) && equal_seq(a.ports, b.ports, eq) &&
         equal_seq(a.subcomponents, b.subcomponents, eq) &&
         equal_seq(a.connectors, b.connectors, eq) && equal_seq(a.behaviors, b.behaviors, eq);
}

namespace {

bool equal_types(const std::vector<ComponentType>& a, const std::vector<ComponentType>& b) {
  return equal_seq(a, b, [](const ComponentType& x, const ComponentType& y) {
    return structurally_equal(x, y, false);
  });
}

bool equal_enums(const std::vector<EnumDecl>& a, const std::vector<EnumDecl>& b) {
  return equal_seq(a, b,
                   [](const EnumDecl& x, const EnumDecl& y) { return structurally_equal(x, y); });
}

bool equal_imports(const std::vector<ImportDecl>& a, const std::vector<ImportDecl>& b) {
  return equal_seq(a, b,
                   [](const ImportDecl& x, const ImportDecl& y) { return x.library == y.library; });
}

}  // namespace

bool structurally_equal(const Library& a, const Library& b) {
  return a.name == b.name && a.kind == b.kind && equal_types(a.component_types, b.component_types) &&
         equal_enums(a.enums, b.enums);
}

bool structurally_equal(const Architecture& a, const Architecture& b) {
  return a.name == b.name && equal_imports(a.imports, b.imports) &&
         equal_types(a.component_types, b.component_types) && equal_enums(a.enums, b.enums) &&
         a.root_type == b.root_type;
}

bool structurally_equal(const ApplicationConfig& a, const ApplicationConfig& b) {
  if (a.name != b.name || a.target_arch != b.target_arch) return false;
  if (!equal_imports(a.imports, b.imports)) return false;
  return equal_seq(a.bindings, b.bindings, [](const RawBinding& x, const RawBinding& y) {
    if (!(x.path == y.path)) return false;
    if (x.target_type != y.target_type) return false;
    if (x.added_args.size() != y.added_args.size()) return false;
    for (std::size_t i = 0; i < x.added_args.size(); ++i) {
      if (!same_value(x.added_args[i], y.added_args[i])) return false;
    }
    return true;
  });
}

}  // namespace cnc
