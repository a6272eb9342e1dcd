#include "cnc/diagnostics.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace cnc {

Diagnostic make_error(std::string code, SourceSpan span, std::string message) {
  return Diagnostic{std::move(code), Severity::Error, std::move(span), std::move(message), {}};
}

Diagnostic make_warning(std::string code, SourceSpan span, std::string message) {
  return Diagnostic{std::move(code), Severity::Warning, std::move(span), std::move(message), {}};
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.span.file, a.span.start_line, a.span.start_col, a.span.end_line,
                    a.span.end_col, a.code) <
           std::tie(b.span.file, b.span.start_line, b.span.start_col, b.span.end_line,
                    b.span.end_col, b.code);
  });
}

namespace {

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
  }
  return "error";
}

const char* severity_color(Severity s) {
  switch (s) {
    case Severity::Error: return "\x1b[31m";    // red
    case Severity::Warning: return "\x1b[33m";  // yellow
    case Severity::Note: return "\x1b[36m";     // cyan
  }
  return "";
}

}  // namespace

std::string render_human(const Diagnostic& d, bool color) {
  std::ostringstream out;
  out << d.span.file << ':' << d.span.start_line << ':' << d.span.start_col << ": ";
  if (color) out << severity_color(d.severity);
  out << severity_name(d.severity) << '[' << d.code << ']';
  if (color) out << "\x1b[0m";
  out << ' ' << d.message;
  return out.str();
}

std::string render_machine(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["code"] = d.code;
  j["severity"] = severity_name(d.severity);
  j["file"] = d.span.file;
  j["span"] = {{"startLine", d.span.start_line},
               {"startCol", d.span.start_col},
               {"endLine", d.span.end_line},
               {"endCol", d.span.end_col}};
  j["message"] = d.message;
  return j.dump();
}

}  // namespace cnc
