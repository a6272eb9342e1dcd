// Textual concrete syntax for .arc, .lib, and .app files.
//
//   archFile   := "architecture" ID "{" importDecl* (typeDecl | enumDecl)* "root" ID ";" "}"
//   libFile    := "library" ID ":" ("model" | "implementation") "{" (typeDecl | enumDecl)* "}"
//   importDecl := "import" ID "." "*" ";"
//   enumDecl   := "enum" ID "{" ID ("," ID)* "}"
//   typeDecl   := ["abstract"] "component" ID ["(" param ("," param)* ")"]
//                 ["extends" ID] ["rts" STRING] "{" member* "}"
//   param      := typeRef ID
//   member     := "port" ("in"|"out") typeRef ID ";"
//               | "component" ID ["(" arg ("," arg)* ")"] ID ";"
//               | "connect" endpoint "->" endpoint ";"
//               | "behavior" ("model" | "impl" STRING) ";"
//   endpoint   := ID | ID "." ID
//   arg        := INT | "true" | "false" | STRING | ID "." ID
//   appFile    := importDecl* "application" ID "for" ID "{" bindClause* "}"
//   bindClause := "bind" qualifiedName "to" ID ["(" arg ("," arg)* ")"] ";"
//
// Comments run from // to end of line. Input is UTF-8; identifiers are ASCII.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnc/model.hpp"

namespace cnc {

template <typename Model>
struct ParseResult {
  std::optional<Model> model;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return model.has_value() && !has_errors(diagnostics); }
};

/// `file` labels the spans of the produced AST and diagnostics.
ParseResult<Architecture> parse_architecture(std::string_view text,
                                             const std::string& file = "<memory>");
ParseResult<Library> parse_library(std::string_view text,
                                   const std::string& file = "<memory>");
ParseResult<ApplicationConfig> parse_appcfg(std::string_view text,
                                            const std::string& file = "<memory>");

}  // namespace cnc
