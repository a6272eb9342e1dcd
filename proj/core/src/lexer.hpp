#pragma once

// Internal tokenizer shared by the architecture/library/application parsers.
// Not installed; parse.cpp is the only client.

#include <string>
#include <vector>

#include "cnc/diagnostics.hpp"

namespace cnc::detail {

enum class TokKind {
  Identifier,
  Keyword,
  IntLiteral,
  StringLiteral,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Semicolon,
  Colon,
  Comma,
  Dot,
  Star,
  Arrow,
  EndOfFile,
  Invalid,
};

struct Token {
  TokKind kind = TokKind::Invalid;
  std::string text;   // identifier/keyword spelling, decoded string value, or digits
  long long int_value = 0;
  SourceSpan span;
};

/// Keywords are reserved everywhere, including type and port positions.
bool is_keyword(const std::string& text);

/// Tokenizes the whole input. Lexical problems are reported as E-PARSE
/// diagnostics and yield Invalid tokens so the parser can keep going.
/// The result always ends with an EndOfFile token.
std::vector<Token> lex(const std::string& text, const std::string& file,
                       std::vector<Diagnostic>& diags);

}  // namespace cnc::detail
