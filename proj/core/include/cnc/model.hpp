// In-memory representation of architectures, libraries, and application
// configurations. All model values are immutable after construction; the
// pipeline passes them around by const reference and copies freely.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cnc/diagnostics.hpp"

namespace cnc {

/// Nonempty token matching [A-Za-z][A-Za-z0-9_]*. No dots.
struct Identifier {
  std::string text;

  friend bool operator==(const Identifier& a, const Identifier& b) {
    return a.text == b.text;
  }
  friend bool operator!=(const Identifier& a, const Identifier& b) {
    return a.text != b.text;
  }
  friend bool operator<(const Identifier& a, const Identifier& b) {
    return a.text < b.text;
  }
};

bool is_valid_identifier(const std::string& text);

/// Dot-separated identifier path, e.g. `left.motor`.
struct QualifiedName {
  std::vector<Identifier> segments;
  SourceSpan span;

  std::string render() const;
  friend bool operator==(const QualifiedName& a, const QualifiedName& b);
};

/// Inverse of QualifiedName::render. Returns nothing on malformed input.
std::optional<QualifiedName> parse_qualified_name(const std::string& text);

/// Reference to a built-in data type (int, boolean, string) or a declared
/// enumeration.
struct DataTypeRef {
  Identifier name;
  SourceSpan span;
};

bool is_builtin_type(const Identifier& name);

struct EnumLiteralDecl {
  Identifier name;
  SourceSpan span;
};

struct EnumDecl {
  Identifier name;
  SourceSpan name_span;
  std::vector<EnumLiteralDecl> literals;
};

// -- Argument values ---------------------------------------------------------

struct IntLit {
  long long value = 0;
};
struct BoolLit {
  bool value = false;
};
struct StringLit {
  std::string value;
};
struct EnumLit {
  Identifier enum_name;
  Identifier literal;
};

struct ArgumentValue {
  std::variant<IntLit, BoolLit, StringLit, EnumLit> value;
  SourceSpan span;
};

/// Canonical source rendering: 100, true, "text", Port.A.
std::string to_text(const ArgumentValue& arg);

bool same_value(const ArgumentValue& a, const ArgumentValue& b);

// -- Component structure ------------------------------------------------------

struct ConfigParam {
  Identifier name;
  DataTypeRef type;
  SourceSpan span;
};

enum class PortDirection { In, Out };

struct Port {
  Identifier name;
  PortDirection direction = PortDirection::In;
  DataTypeRef type;
  SourceSpan span;
};

/// Named instantiation of a component type inside a composed type.
struct SubcomponentDecl {
  Identifier name;
  SourceSpan name_span;
  Identifier type_name;
  SourceSpan type_span;
  std::vector<ArgumentValue> arguments;
};

/// `port` alone names an own port; with `scd` set it names scd.port.
struct Endpoint {
  std::optional<Identifier> scd;
  Identifier port;
  SourceSpan span;

  std::string render() const;
};

struct Connector {
  Endpoint source;
  Endpoint target;
  SourceSpan span;
};

enum class BehaviorKind { Model, Impl };

struct Behavior {
  BehaviorKind kind = BehaviorKind::Model;
  std::string impl_ref;  // Impl only
  SourceSpan span;
};

enum class TypeKind { Abstract, AtomicModel, AtomicImpl, Composed, Undetermined };

const char* to_string(TypeKind kind);

struct ComponentType {
  Identifier name;
  SourceSpan name_span;
  TypeKind kind = TypeKind::Undetermined;
  std::vector<ConfigParam> params;  // own, not inherited
  std::vector<Port> ports;          // own, not inherited
  std::optional<Identifier> super_type;
  SourceSpan super_span;
  std::vector<SubcomponentDecl> subcomponents;
  std::vector<Connector> connectors;
  std::vector<Behavior> behaviors;  // well-formed types carry at most one
  std::optional<Identifier> rts;
  SourceSpan rts_span;

  const Behavior* behavior() const {
    return behaviors.empty() ? nullptr : &behaviors.front();
  }
};

/// Kind as implied by the parsed body: the abstract keyword wins, then a
/// single behavior member, then subcomponents; contradictory or empty bodies
/// stay Undetermined for the checker to report.
TypeKind derive_kind(bool declared_abstract, const ComponentType& shape);

// -- Compilation units --------------------------------------------------------

struct ImportDecl {
  Identifier library;
  SourceSpan span;
};

enum class LibraryKind { Model, Implementation };

struct Library {
  Identifier name;
  SourceSpan name_span;
  LibraryKind kind = LibraryKind::Model;
  std::vector<ComponentType> component_types;
  std::vector<EnumDecl> enums;
  std::string file;
};

struct Architecture {
  Identifier name;
  SourceSpan name_span;
  std::vector<ImportDecl> imports;
  std::vector<ComponentType> component_types;
  std::vector<EnumDecl> enums;
  Identifier root_type;
  SourceSpan root_span;
  std::string file;
};

// -- Application configurations ----------------------------------------------

/// One `bind path to Type (args);` clause, as parsed.
struct RawBinding {
  QualifiedName path;
  Identifier target_type;
  SourceSpan target_span;
  std::vector<ArgumentValue> added_args;
  SourceSpan span;
};

struct ApplicationConfig {
  Identifier name;
  SourceSpan name_span;
  Identifier target_arch;
  SourceSpan target_arch_span;
  std::vector<ImportDecl> imports;
  std::vector<RawBinding> bindings;
  std::string file;
};

// -- Structural equality -------------------------------------------------------
// Field-by-field, order-preserving, ignoring source spans. Used by round-trip
// and transform tests.

bool structurally_equal(const EnumDecl& a, const EnumDecl& b);
bool structurally_equal(const ComponentType& a, const ComponentType& b,
                        bool ignore_name = false);
bool structurally_equal(const Library& a, const Library& b);
bool structurally_equal(const Architecture& a, const Architecture& b);
bool structurally_equal(const ApplicationConfig& a, const ApplicationConfig& b);

}  // namespace cnc
