#include "lexer.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace cnc::detail {

bool is_keyword(const std::string& text) {
  static const std::array<const char*, 26> kw = {
      "architecture", "library", "application",    "import", "component", "abstract",
      "enum",         "port",    "connect",        "behavior", "extends", "root",
      "bind",         "rts",     "model",          "impl",   "implementation", "in",
      "out",          "to",      "for",            "true",   "false",     "int",
      "boolean",      "string",
  };
  for (const char* k : kw) {
    if (text == k) return true;
  }
  return false;
}

namespace {

struct Cursor {
  const std::string& text;
  const std::string& file;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
};

bool is_ident_start(char c) {
  return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_cont(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

SourceSpan span_from(const Cursor& c, const std::string& file, int start_line, int start_col) {
  // end column is inclusive: the column of the last consumed character
  int end_col = c.col > 1 ? c.col - 1 : 1;
  return SourceSpan{file, start_line, start_col, c.line, end_col};
}

}  // namespace

std::vector<Token> lex(const std::string& text, const std::string& file,
                       std::vector<Diagnostic>& diags) {
  std::vector<Token> tokens;
  Cursor cur{text, file};

  auto punct = [&](TokKind kind, int start_line, int start_col, std::string spelling) {
    Token t;
    t.kind = kind;
    t.text = std::move(spelling);
    t.span = span_from(cur, file, start_line, start_col);
    tokens.push_back(std::move(t));
  };

  while (!cur.done()) {
    char c = cur.peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      cur.advance();
      continue;
    }
    if (c == '/' && cur.peek(1) == '/') {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }

    int start_line = cur.line;
    int start_col = cur.col;

    if (is_ident_start(c)) {
      std::string word;
      while (!cur.done() && is_ident_cont(cur.peek())) word += cur.advance();
      Token t;
      t.kind = is_keyword(word) ? TokKind::Keyword : TokKind::Identifier;
      t.text = std::move(word);
      t.span = span_from(cur, file, start_line, start_col);
      tokens.push_back(std::move(t));
      continue;
    }

    if (is_digit(c) || (c == '-' && is_digit(cur.peek(1)))) {
      std::string digits;
      if (c == '-') digits += cur.advance();
      while (!cur.done() && is_digit(cur.peek())) digits += cur.advance();
      Token t;
      t.kind = TokKind::IntLiteral;
      t.text = digits;
      t.span = span_from(cur, file, start_line, start_col);
      try {
        t.int_value = std::stoll(digits);
      } catch (const std::out_of_range&) {
        diags.push_back(make_error("E-PARSE", t.span, "integer literal out of range"));
        t.kind = TokKind::Invalid;
      }
      tokens.push_back(std::move(t));
      continue;
    }

    if (c == '"') {
      cur.advance();
      std::string value;
      bool closed = false;
      while (!cur.done()) {
        char n = cur.peek();
        if (n == '\n') break;  // strings do not span lines
        cur.advance();
        if (n == '"') {
          closed = true;
          break;
        }
        if (n == '\\') {
          char esc = cur.peek();
          if (esc == '"' || esc == '\\') {
            value += cur.advance();
          } else {
            SourceSpan s{file, cur.line, cur.col, cur.line, cur.col};
            diags.push_back(make_error("E-PARSE", s, "unknown escape sequence in string"));
            if (!cur.done()) value += cur.advance();
          }
        } else {
          value += n;
        }
      }
      Token t;
      t.kind = closed ? TokKind::StringLiteral : TokKind::Invalid;
      t.text = std::move(value);
      t.span = span_from(cur, file, start_line, start_col);
      if (!closed) diags.push_back(make_error("E-PARSE", t.span, "unterminated string literal"));
      tokens.push_back(std::move(t));
      continue;
    }

    if (c == '-' && cur.peek(1) == '>') {
      cur.advance();
      cur.advance();
      punct(TokKind::Arrow, start_line, start_col, "->");
      continue;
    }

    switch (c) {
      case '{': cur.advance(); punct(TokKind::LBrace, start_line, start_col, "{"); continue;
      case '}': cur.advance(); punct(TokKind::RBrace, start_line, start_col, "}"); continue;
      case '(': cur.advance(); punct(TokKind::LParen, start_line, start_col, "("); continue;
      case ')': cur.advance(); punct(TokKind::RParen, start_line, start_col, ")"); continue;
      case ';': cur.advance(); punct(TokKind::Semicolon, start_line, start_col, ";"); continue;
      case ':': cur.advance(); punct(TokKind::Colon, start_line, start_col, ":"); continue;
      case ',': cur.advance(); punct(TokKind::Comma, start_line, start_col, ","); continue;
      case '.': cur.advance(); punct(TokKind::Dot, start_line, start_col, "."); continue;
      case '*': cur.advance(); punct(TokKind::Star, start_line, start_col, "*"); continue;
      default: break;
    }

    cur.advance();
    Token t;
    t.kind = TokKind::Invalid;
    t.text = std::string(1, c);
    t.span = span_from(cur, file, start_line, start_col);
    diags.push_back(
        make_error("E-PARSE", t.span, "unexpected character '" + std::string(1, c) + "'"));
    tokens.push_back(std::move(t));
  }

  Token eof;
  eof.kind = TokKind::EndOfFile;
  eof.span = SourceSpan{file, cur.line, cur.col, cur.line, cur.col};
  tokens.push_back(std::move(eof));
  return tokens;
}

}  // namespace cnc::detail
