#include "cnc/parse.hpp"

#include <utility>

#include "lexer.hpp"

namespace cnc {

namespace {

using detail::Token;
using detail::TokKind;

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  return SourceSpan{a.file, a.start_line, a.start_col, b.end_line, b.end_col};
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokKind::EndOfFile: return "end of file";
    case TokKind::StringLiteral: return "string literal";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(std::string_view text, const std::string& file) : file_(file) {
    tokens_ = detail::lex(std::string(text), file, diags_);
  }

  ParseResult<Architecture> architecture() {
    ParseResult<Architecture> result;
    Architecture arch;
    arch.file = file_;
    if (!expect_keyword("architecture")) return fail(result);
    auto name = expect_identifier("architecture name");
    if (!name) return fail(result);
    arch.name = Identifier{name->text};
    arch.name_span = name->span;
    if (!expect(TokKind::LBrace, "'{'")) return fail(result);

    while (at_keyword("import")) {
      if (auto imp = import_decl()) arch.imports.push_back(*imp);
    }

    bool seen_root = false;
    bool reported_after_root = false;
    auto guard_root = [&] {
      if (seen_root && !reported_after_root) {
        error("declarations may not follow the root declaration");
        reported_after_root = true;
      }
    };
    while (!at(TokKind::RBrace) && !at(TokKind::EndOfFile)) {
      if (at_keyword("import")) {
        error("import declarations must precede type declarations");
        recover();
        continue;
      }
      if (at_keyword("root")) {
        Token kw = advance();
        auto rname = expect_identifier("root type name");
        if (!rname) {
          recover();
          continue;
        }
        if (!expect(TokKind::Semicolon, "';'")) recover();
        if (seen_root) {
          error_at(kw.span, "duplicate root declaration");
        } else {
          seen_root = true;
          arch.root_type = Identifier{rname->text};
          arch.root_span = rname->span;
        }
        continue;
      }
      if (at_keyword("abstract") || at_keyword("component")) {
        guard_root();
        if (auto t = type_decl()) arch.component_types.push_back(std::move(*t));
        continue;
      }
      if (at_keyword("enum")) {
        guard_root();
        if (auto e = enum_decl()) arch.enums.push_back(std::move(*e));
        continue;
      }
      error("expected component, enum, or root declaration, found " + describe(cur()));
      recover();
    }
    expect(TokKind::RBrace, "'}'");
    if (!seen_root) {
      error_at(arch.name_span, "architecture '" + arch.name.text + "' has no root declaration");
    }
    expect_eof();
    result.model = std::move(arch);
    result.diagnostics = std::move(diags_);
    return result;
  }

  ParseResult<Library> library() {
    ParseResult<Library> result;
    Library lib;
    lib.file = file_;
    if (!expect_keyword("library")) return fail(result);
    auto name = expect_identifier("library name");
    if (!name) return fail(result);
    lib.name = Identifier{name->text};
    lib.name_span = name->span;
    if (!expect(TokKind::Colon, "':'")) return fail(result);
    if (at_keyword("model")) {
      advance();
      lib.kind = LibraryKind::Model;
    } else if (at_keyword("implementation")) {
      advance();
      lib.kind = LibraryKind::Implementation;
    } else {
      diags_.push_back(
          make_error("E-KIND", cur().span, "library kind must be 'model' or 'implementation'"));
      if (!at(TokKind::LBrace) && !at(TokKind::EndOfFile)) advance();
    }
    if (!expect(TokKind::LBrace, "'{'")) return fail(result);
    while (!at(TokKind::RBrace) && !at(TokKind::EndOfFile)) {
      if (at_keyword("abstract") || at_keyword("component")) {
        if (auto t = type_decl()) lib.component_types.push_back(std::move(*t));
        continue;
      }
      if (at_keyword("enum")) {
        if (auto e = enum_decl()) lib.enums.push_back(std::move(*e));
        continue;
      }
      error("expected component or enum declaration, found " + describe(cur()));
      recover();
    }
    expect(TokKind::RBrace, "'}'");
    expect_eof();
    result.model = std::move(lib);
    result.diagnostics = std::move(diags_);
    return result;
  }

  ParseResult<ApplicationConfig> appcfg() {
    ParseResult<ApplicationConfig> result;
    ApplicationConfig cfg;
    cfg.file = file_;
    while (at_keyword("import")) {
      if (auto imp = import_decl()) cfg.imports.push_back(*imp);
    }
    if (!expect_keyword("application")) return fail(result);
    auto name = expect_identifier("application name");
    if (!name) return fail(result);
    cfg.name = Identifier{name->text};
    cfg.name_span = name->span;
    if (!expect_keyword("for")) return fail(result);
    auto target = expect_identifier("target architecture name");
    if (!target) return fail(result);
    cfg.target_arch = Identifier{target->text};
    cfg.target_arch_span = target->span;
    if (!expect(TokKind::LBrace, "'{'")) return fail(result);
    while (!at(TokKind::RBrace) && !at(TokKind::EndOfFile)) {
      if (at_keyword("bind")) {
        bind_clause(cfg);
        continue;
      }
      error("expected bind clause, found " + describe(cur()));
      recover();
    }
    expect(TokKind::RBrace, "'}'");
    expect_eof();
    result.model = std::move(cfg);
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  bool at(TokKind k) const { return cur().kind == k; }
  bool at_keyword(const char* word) const {
    return cur().kind == TokKind::Keyword && cur().text == word;
  }

  Token advance() {
    Token t = tokens_[pos_];
    if (t.kind != TokKind::EndOfFile) ++pos_;
    return t;
  }

  void error(std::string message) { error_at(cur().span, std::move(message)); }
  void error_at(const SourceSpan& span, std::string message) {
    diags_.push_back(make_error("E-PARSE", span, std::move(message)));
  }

  std::optional<Token> expect(TokKind k, const char* what) {
    if (at(k)) return advance();
    error(std::string("expected ") + what + ", found " + describe(cur()));
    return std::nullopt;
  }

  bool expect_keyword(const char* word) {
    if (at_keyword(word)) {
      advance();
      return true;
    }
    error("expected '" + std::string(word) + "', found " + describe(cur()));
    return false;
  }

  std::optional<Token> expect_identifier(const char* what) {
    if (at(TokKind::Identifier)) return advance();
    error(std::string("expected ") + what + ", found " + describe(cur()));
    return std::nullopt;
  }

  void expect_eof() {
    if (!at(TokKind::EndOfFile)) error("expected end of file, found " + describe(cur()));
  }

  template <typename R>
  R fail(R& result) {
    result.diagnostics = std::move(diags_);
    return std::move(result);
  }

  /// Skips to the next ';' at the current nesting level (consumed) or to an
  /// unmatched '}' (left for the caller).
  void recover() {
    int depth = 0;
    while (!at(TokKind::EndOfFile)) {
      if (at(TokKind::LBrace)) {
        ++depth;
        advance();
        continue;
      }
      if (at(TokKind::RBrace)) {
        if (depth == 0) return;
        --depth;
        advance();
        continue;
      }
      if (at(TokKind::Semicolon) && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  std::optional<ImportDecl> import_decl() {
    Token kw = advance();
    auto name = expect_identifier("library name");
    if (!name) {
      recover();
      return std::nullopt;
    }
    if (!expect(TokKind::Dot, "'.'") || !expect(TokKind::Star, "'*'")) {
      recover();
      return std::nullopt;
    }
    auto semi = expect(TokKind::Semicolon, "';'");
    if (!semi) {
      recover();
      return std::nullopt;
    }
    return ImportDecl{Identifier{name->text}, join(kw.span, semi->span)};
  }

  std::optional<EnumDecl> enum_decl() {
    advance();  // enum
    auto name = expect_identifier("enumeration name");
    if (!name) {
      recover();
      return std::nullopt;
    }
    EnumDecl decl;
    decl.name = Identifier{name->text};
    decl.name_span = name->span;
    if (!expect(TokKind::LBrace, "'{'")) {
      recover();
      return std::nullopt;
    }
    while (true) {
      if (!at(TokKind::Identifier)) {
        error("expected enumeration literal, found " + describe(cur()));
        while (!at(TokKind::RBrace) && !at(TokKind::EndOfFile)) advance();
        break;
      }
      Token lit = advance();
      decl.literals.push_back(EnumLiteralDecl{Identifier{lit.text}, lit.span});
      if (at(TokKind::Comma)) {
        advance();
        continue;
      }
      break;
    }
    expect(TokKind::RBrace, "'}'");
    return decl;
  }

  std::optional<DataTypeRef> type_ref() {
    const Token& t = cur();
    bool builtin = t.kind == TokKind::Keyword &&
                   (t.text == "int" || t.text == "boolean" || t.text == "string");
    if (builtin || t.kind == TokKind::Identifier) {
      Token taken = advance();
      return DataTypeRef{Identifier{taken.text}, taken.span};
    }
    error("expected data type, found " + describe(t));
    return std::nullopt;
  }

  std::optional<ArgumentValue> argument() {
    const Token& t = cur();
    if (t.kind == TokKind::IntLiteral) {
      Token taken = advance();
      return ArgumentValue{IntLit{taken.int_value}, taken.span};
    }
    if (t.kind == TokKind::Keyword && (t.text == "true" || t.text == "false")) {
      Token taken = advance();
      return ArgumentValue{BoolLit{taken.text == "true"}, taken.span};
    }
    if (t.kind == TokKind::StringLiteral) {
      Token taken = advance();
      return ArgumentValue{StringLit{taken.text}, taken.span};
    }
    if (t.kind == TokKind::Identifier) {
      Token first = advance();
      if (!expect(TokKind::Dot, "'.'")) return std::nullopt;
      auto lit = expect_identifier("enumeration literal");
      if (!lit) return std::nullopt;
      return ArgumentValue{EnumLit{Identifier{first.text}, Identifier{lit->text}},
                           join(first.span, lit->span)};
    }
    error("expected argument value, found " + describe(t));
    return std::nullopt;
  }

  /// Parses "(" arg ("," arg)* ")". Returns false when the caller should
  /// resynchronize; an empty list is reported but does not derail the caller.
  bool argument_list(std::vector<ArgumentValue>& out) {
    advance();  // (
    if (at(TokKind::RParen)) {
      error("expected argument value, found ')'");
      advance();
      return true;
    }
    while (true) {
      auto arg = argument();
      if (!arg) return false;
      out.push_back(*arg);
      if (at(TokKind::Comma)) {
        advance();
        continue;
      }
      break;
    }
    return expect(TokKind::RParen, "')'").has_value();
  }

  std::optional<ComponentType> type_decl() {
    bool declared_abstract = false;
    if (at_keyword("abstract")) {
      declared_abstract = true;
      advance();
    }
    if (!expect_keyword("component")) {
      recover();
      return std::nullopt;
    }
    auto name = expect_identifier("component type name");
    if (!name) {
      recover();
      return std::nullopt;
    }
    ComponentType type;
    type.name = Identifier{name->text};
    type.name_span = name->span;

    if (at(TokKind::LParen)) {
      advance();
      if (at(TokKind::RParen)) {
        error("expected parameter declaration, found ')'");
        advance();
      } else {
        while (true) {
          auto ptype = type_ref();
          if (!ptype) break;
          auto pname = expect_identifier("parameter name");
          if (!pname) break;
          type.params.push_back(ConfigParam{Identifier{pname->text}, *ptype,
                                            join(ptype->span, pname->span)});
          if (at(TokKind::Comma)) {
            advance();
            continue;
          }
          break;
        }
        if (!expect(TokKind::RParen, "')'")) {
          while (!at(TokKind::RParen) && !at(TokKind::LBrace) && !at(TokKind::EndOfFile)) advance();
          if (at(TokKind::RParen)) advance();
        }
      }
    }

    if (at_keyword("extends")) {
      advance();
      if (auto super = expect_identifier("supertype name")) {
        type.super_type = Identifier{super->text};
        type.super_span = super->span;
      }
    }

    if (at_keyword("rts")) {
      advance();
      if (auto tag = expect(TokKind::StringLiteral, "run-time-system tag")) {
        if (is_valid_identifier(tag->text)) {
          type.rts = Identifier{tag->text};
          type.rts_span = tag->span;
        } else {
          error_at(tag->span, "run-time-system tag must be an identifier");
        }
      }
    }

    if (!expect(TokKind::LBrace, "'{'")) {
      recover();
      return std::nullopt;
    }
    while (!at(TokKind::RBrace) && !at(TokKind::EndOfFile)) {
      if (at_keyword("port")) {
        port_member(type);
        continue;
      }
      if (at_keyword("component")) {
        scd_member(type);
        continue;
      }
      if (at_keyword("connect")) {
        connector_member(type);
        continue;
      }
      if (at_keyword("behavior")) {
        behavior_member(type);
        continue;
      }
      error("expected port, component, connect, or behavior declaration, found " +
            describe(cur()));
      recover();
    }
    expect(TokKind::RBrace, "'}'");
    type.kind = derive_kind(declared_abstract, type);
    return type;
  }

  void port_member(ComponentType& type) {
    Token kw = advance();
    PortDirection dir = PortDirection::In;
    if (at_keyword("in")) {
      advance();
    } else if (at_keyword("out")) {
      advance();
      dir = PortDirection::Out;
    } else {
      error("expected 'in' or 'out', found " + describe(cur()));
      recover();
      return;
    }
    auto dtype = type_ref();
    if (!dtype) {
      recover();
      return;
    }
    auto name = expect_identifier("port name");
    if (!name) {
      recover();
      return;
    }
    SourceSpan end = name->span;
    if (auto semi = expect(TokKind::Semicolon, "';'")) {
      end = semi->span;
    } else {
      recover();
    }
    type.ports.push_back(Port{Identifier{name->text}, dir, *dtype, join(kw.span, end)});
  }

  void scd_member(ComponentType& type) {
    advance();  // component
    auto tname = expect_identifier("component type name");
    if (!tname) {
      recover();
      return;
    }
    SubcomponentDecl scd;
    scd.type_name = Identifier{tname->text};
    scd.type_span = tname->span;
    if (at(TokKind::LParen) && !argument_list(scd.arguments)) {
      recover();
      return;
    }
    auto iname = expect_identifier("subcomponent name");
    if (!iname) {
      recover();
      return;
    }
    scd.name = Identifier{iname->text};
    scd.name_span = iname->span;
    if (!expect(TokKind::Semicolon, "';'")) recover();
    type.subcomponents.push_back(std::move(scd));
  }

  void connector_member(ComponentType& type) {
    Token kw = advance();
    auto src = endpoint();
    if (!src) {
      recover();
      return;
    }
    if (!expect(TokKind::Arrow, "'->'")) {
      recover();
      return;
    }
    auto dst = endpoint();
    if (!dst) {
      recover();
      return;
    }
    SourceSpan end = dst->span;
    if (auto semi = expect(TokKind::Semicolon, "';'")) {
      end = semi->span;
    } else {
      recover();
    }
    type.connectors.push_back(Connector{*src, *dst, join(kw.span, end)});
  }

  void behavior_member(ComponentType& type) {
    Token kw = advance();
    Behavior b;
    if (at_keyword("model")) {
      Token m = advance();
      b.kind = BehaviorKind::Model;
      b.span = join(kw.span, m.span);
    } else if (at_keyword("impl")) {
      advance();
      auto ref = expect(TokKind::StringLiteral, "implementation reference");
      if (!ref) {
        recover();
        return;
      }
      b.kind = BehaviorKind::Impl;
      b.impl_ref = ref->text;
      b.span = join(kw.span, ref->span);
    } else {
      error("expected 'model' or 'impl', found " + describe(cur()));
      recover();
      return;
    }
    if (!expect(TokKind::Semicolon, "';'")) recover();
    type.behaviors.push_back(std::move(b));
  }

  std::optional<Endpoint> endpoint() {
    auto first = expect_identifier("endpoint");
    if (!first) return std::nullopt;
    Endpoint ep;
    if (at(TokKind::Dot)) {
      advance();
      auto port = expect_identifier("port name");
      if (!port) return std::nullopt;
      ep.scd = Identifier{first->text};
      ep.port = Identifier{port->text};
      ep.span = join(first->span, port->span);
    } else {
      ep.port = Identifier{first->text};
      ep.span = first->span;
    }
    return ep;
  }

  void bind_clause(ApplicationConfig& cfg) {
    Token kw = advance();
    RawBinding b;
    auto first = expect_identifier("instance path");
    if (!first) {
      recover();
      return;
    }
    b.path.segments.push_back(Identifier{first->text});
    SourceSpan path_span = first->span;
    while (at(TokKind::Dot)) {
      advance();
      auto seg = expect_identifier("instance path segment");
      if (!seg) {
        recover();
        return;
      }
      b.path.segments.push_back(Identifier{seg->text});
      path_span = join(path_span, seg->span);
    }
    b.path.span = path_span;
    if (!expect_keyword("to")) {
      recover();
      return;
    }
    auto target = expect_identifier("target type name");
    if (!target) {
      recover();
      return;
    }
    b.target_type = Identifier{target->text};
    b.target_span = target->span;
    SourceSpan end = target->span;
    if (at(TokKind::LParen)) {
      if (!argument_list(b.added_args)) {
        recover();
        return;
      }
      end = tokens_[pos_ - 1].span;
    }
    if (auto semi = expect(TokKind::Semicolon, "';'")) {
      end = semi->span;
    } else {
      recover();
    }
    b.span = join(kw.span, end);
    cfg.bindings.push_back(std::move(b));
  }

  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diags_;
};

}  // namespace

ParseResult<Architecture> parse_architecture(std::string_view text, const std::string& file) {
  return Parser(text, file).architecture();
}

ParseResult<Library> parse_library(std::string_view text, const std::string& file) {
  return Parser(text, file).library();
}

ParseResult<ApplicationConfig> parse_appcfg(std::string_view text, const std::string& file) {
  return Parser(text, file).appcfg();
}

}  // namespace cnc
