// Diagnostic records shared by every pipeline stage.
#pragma once

#include <string>
#include <vector>

namespace cnc {

/// 1-based, inclusive source range. `file` is the label the text was parsed
/// under ("<memory>" for in-memory strings).
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;
};

enum class Severity { Error, Warning, Note };

/// Structured error/warning with a stable code (E-.../W-...).
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  SourceSpan span;
  std::string message;
  std::vector<SourceSpan> related;
};

Diagnostic make_error(std::string code, SourceSpan span, std::string message);
Diagnostic make_warning(std::string code, SourceSpan span, std::string message);

bool has_errors(const std::vector<Diagnostic>& diags);

/// Orders by (file, span start, span end, code); checkers sort before returning.
void sort_diagnostics(std::vector<Diagnostic>& diags);

/// `file:line:col: severity[CODE] message`, ANSI-colored when `color` is set.
std::string render_human(const Diagnostic& d, bool color = false);

/// One JSON object per diagnostic: code, severity, file, span, message.
std::string render_machine(const Diagnostic& d);

}  // namespace cnc
