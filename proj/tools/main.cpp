// cnc — command-line front end: parse, check, bind, instantiate, print.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnc/bind.hpp"
#include "cnc/check.hpp"
#include "cnc/emit.hpp"
#include "cnc/parse.hpp"
#include "cnc/printer.hpp"
#include "cnc/scope.hpp"
#include "cnc/transform.hpp"

namespace fs = std::filesystem;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string app_file;
  std::string out_dir = ".";
  std::string mode = "strict";
  bool fail_on_clash = false;
  bool machine = false;
  bool bound = false;
  bool color = false;
};

struct Inputs {
  std::vector<cnc::Architecture> archs;
  std::vector<cnc::Library> libs;
  std::vector<cnc::ApplicationConfig> apps;
};

void print_diagnostics(std::vector<cnc::Diagnostic> diags, const Options& opt) {
  cnc::sort_diagnostics(diags);
  for (const cnc::Diagnostic& d : diags) {
    std::cerr << (opt.machine ? cnc::render_machine(d) : cnc::render_human(d, opt.color))
              << '\n';
  }
}

// I/O problems are reported through the same diagnostic channel so machine
// consumers never have to parse free-form text, but they exit 2, not 1.
void report_io(const std::string& path, const std::string& what, const Options& opt) {
  cnc::Diagnostic d = cnc::make_error("E-IO", cnc::SourceSpan{path, 1, 1, 1, 1}, what);
  print_diagnostics({d}, opt);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool write_atomic(const fs::path& path, const std::string& content, std::string& error) {
  std::error_code ec;
  if (!path.parent_path().empty()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) {
      error = "cannot create directory '" + path.parent_path().string() + "'";
      return false;
    }
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      error = "cannot open '" + tmp.string() + "' for writing";
      return false;
    }
    out << content;
    out.flush();
    if (!out) {
      error = "write to '" + tmp.string() + "' failed";
      return false;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    error = "cannot rename '" + tmp.string() + "' to '" + path.string() + "'";
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

// Returns 0 on success, 2 on I/O or usage problems; syntax errors land in
// `diags` and the file is skipped.
int parse_one(const std::string& path, Inputs& in, std::vector<cnc::Diagnostic>& diags,
              const Options& opt) {
  std::optional<std::string> text = read_file(path);
  if (!text) {
    report_io(path, "cannot read file", opt);
    return 2;
  }
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".arc") {
    cnc::ParseResult<cnc::Architecture> r = cnc::parse_architecture(*text, path);
    diags.insert(diags.end(), r.diagnostics.begin(), r.diagnostics.end());
    if (r.ok()) in.archs.push_back(std::move(*r.model));
  } else if (ext == ".lib") {
    cnc::ParseResult<cnc::Library> r = cnc::parse_library(*text, path);
    diags.insert(diags.end(), r.diagnostics.begin(), r.diagnostics.end());
    if (r.ok()) in.libs.push_back(std::move(*r.model));
  } else if (ext == ".app") {
    cnc::ParseResult<cnc::ApplicationConfig> r = cnc::parse_appcfg(*text, path);
    diags.insert(diags.end(), r.diagnostics.begin(), r.diagnostics.end());
    if (r.ok()) in.apps.push_back(std::move(*r.model));
  } else {
    std::cerr << "cnc: unrecognized input '" << path
              << "' (expected a .arc, .lib, or .app file)\n";
    return 2;
  }
  return 0;
}

const cnc::Library* find_library(const std::vector<cnc::Library>& libs,
                                 const cnc::Identifier& name) {
  for (const cnc::Library& lib : libs) {
    if (lib.name == name) return &lib;
  }
  return nullptr;
}

std::vector<const cnc::Library*> library_pointers(const Inputs& in) {
  std::vector<const cnc::Library*> out;
  for (const cnc::Library& lib : in.libs) out.push_back(&lib);
  return out;
}

// Libraries carry no import clauses; they are validated against every
// library supplied on the command line.
void check_libraries(const Inputs& in, std::vector<cnc::Diagnostic>& diags) {
  cnc::Scope lib_scope;
  for (const cnc::Library& lib : in.libs) cnc::extend_scope(lib_scope, lib, diags);
  for (const cnc::Library& lib : in.libs) {
    std::vector<cnc::Diagnostic> d = cnc::check_library(lib, lib_scope);
    diags.insert(diags.end(), d.begin(), d.end());
  }
}

// The architecture's scope plus the configuration's own imports (these bring
// in the implementation libraries). Repeated imports are no-ops.
cnc::ScopeResult build_app_scope(const cnc::Architecture& arch,
                                 const cnc::ApplicationConfig& app,
                                 const std::vector<const cnc::Library*>& libs) {
  cnc::ScopeResult sr = cnc::build_scope(arch, libs);
  sr.diagnostics.clear();  // the architecture pass already reported these
  std::set<std::string> pulled;
  for (const cnc::ImportDecl& imp : arch.imports) pulled.insert(imp.library.text);
  for (const cnc::ImportDecl& imp : app.imports) {
    if (!pulled.insert(imp.library.text).second) continue;
    const cnc::Library* lib = nullptr;
    for (const cnc::Library* cand : libs) {
      if (cand->name == imp.library) lib = cand;
    }
    if (!lib) {
      sr.diagnostics.push_back(
          cnc::make_error("E-IMPORT-MISSING", imp.span,
                          "import names no provided library '" + imp.library.text + "'"));
      continue;
    }
    cnc::extend_scope(sr.scope, *lib, sr.diagnostics);
  }
  return sr;
}

const cnc::Architecture* pick_target(const Inputs& in, const cnc::ApplicationConfig& app) {
  for (const cnc::Architecture& arch : in.archs) {
    if (arch.name == app.target_arch) return &arch;
  }
  // Let validate_bindings report E-BIND-WRONG-ARCH against the one
  // architecture we do have.
  return in.archs.empty() ? nullptr : &in.archs.front();
}

cnc::Diagnostic clash_note(const cnc::Clash& c) {
  cnc::Diagnostic d;
  d.code = "CLASH";
  d.severity = cnc::Severity::Note;
  d.span = c.second.path.span;
  d.related.push_back(c.first.path.span);
  d.message = "subcomponent '" + c.scd_name.text + "' of component type '" +
              c.parent_type.text + "' is bound to '" + c.first.target_type.text + "' (at '" +
              c.first.path.render() + "') and to '" + c.second.target_type.text + "' (at '" +
              c.second.path.render() + "')";
  return d;
}

int run_check(const Options& opt) {
  Inputs in;
  std::vector<cnc::Diagnostic> diags;
  for (const std::string& path : opt.inputs) {
    if (int rc = parse_one(path, in, diags, opt)) return rc;
  }

  check_libraries(in, diags);

  const std::vector<const cnc::Library*> libs = library_pointers(in);
  const cnc::PlatformRule rule =
      opt.bound ? cnc::PlatformRule::Specific : cnc::PlatformRule::Independent;
  std::vector<cnc::ScopeResult> scopes;
  for (const cnc::Architecture& arch : in.archs) {
    scopes.push_back(cnc::build_scope(arch, libs));
    cnc::ScopeResult& sr = scopes.back();
    diags.insert(diags.end(), sr.diagnostics.begin(), sr.diagnostics.end());
    std::vector<cnc::Diagnostic> d = cnc::check_architecture(arch, sr.scope, rule);
    diags.insert(diags.end(), d.begin(), d.end());
  }

  // Configurations are validated when their target architecture is present;
  // otherwise the syntax check above is all that can be done.
  for (const cnc::ApplicationConfig& app : in.apps) {
    const cnc::Architecture* target = pick_target(in, app);
    if (!target) continue;
    cnc::ScopeResult sr = build_app_scope(*target, app, libs);
    diags.insert(diags.end(), sr.diagnostics.begin(), sr.diagnostics.end());
    cnc::BindingResult br = cnc::validate_bindings(*target, sr.scope, app);
    diags.insert(diags.end(), br.diagnostics.begin(), br.diagnostics.end());
  }

  print_diagnostics(diags, opt);
  return cnc::has_errors(diags) ? 1 : 0;
}

// Shared front half of `bind` and `instantiate`: everything up to and
// including the transformation.
struct BindOutcome {
  int exit_code = 0;  // meaningful when !result
  std::optional<cnc::BoundArchitecture> result;
  std::vector<cnc::Diagnostic> diags;
  bool clashes_found = false;
};

BindOutcome run_transform(const Options& opt) {
  BindOutcome out;
  Inputs in;
  for (const std::string& path : opt.inputs) {
    if (int rc = parse_one(path, in, out.diags, opt)) {
      out.exit_code = rc;
      return out;
    }
  }
  std::optional<std::string> app_text = read_file(opt.app_file);
  if (!app_text) {
    report_io(opt.app_file, "cannot read file", opt);
    out.exit_code = 2;
    return out;
  }
  cnc::ParseResult<cnc::ApplicationConfig> app_parse =
      cnc::parse_appcfg(*app_text, opt.app_file);
  out.diags.insert(out.diags.end(), app_parse.diagnostics.begin(),
                   app_parse.diagnostics.end());
  if (in.archs.empty()) {
    std::cerr << "cnc: no architecture (.arc) input given\n";
    out.exit_code = 2;
    return out;
  }
  if (!app_parse.ok()) {
    out.exit_code = 1;
    return out;
  }
  const cnc::ApplicationConfig& app = *app_parse.model;

  check_libraries(in, out.diags);
  const std::vector<const cnc::Library*> libs = library_pointers(in);
  const cnc::Architecture* target = pick_target(in, app);
  cnc::ScopeResult arch_scope = cnc::build_scope(*target, libs);
  out.diags.insert(out.diags.end(), arch_scope.diagnostics.begin(),
                   arch_scope.diagnostics.end());
  std::vector<cnc::Diagnostic> d =
      cnc::check_architecture(*target, arch_scope.scope, cnc::PlatformRule::Independent);
  out.diags.insert(out.diags.end(), d.begin(), d.end());
  if (cnc::has_errors(out.diags)) {
    out.exit_code = 1;
    return out;
  }

  cnc::ScopeResult app_scope = build_app_scope(*target, app, libs);
  out.diags.insert(out.diags.end(), app_scope.diagnostics.begin(),
                   app_scope.diagnostics.end());
  cnc::BindingResult br = cnc::validate_bindings(*target, app_scope.scope, app);
  out.diags.insert(out.diags.end(), br.diagnostics.begin(), br.diagnostics.end());
  if (cnc::has_errors(out.diags)) {
    out.exit_code = 1;
    return out;
  }

  std::vector<cnc::Clash> clashes = cnc::detect_clashes(br.bindings, *target, app_scope.scope);
  out.clashes_found = !clashes.empty();
  for (const cnc::Clash& c : clashes) out.diags.push_back(clash_note(c));

  const cnc::BindMode mode =
      opt.mode == "permissive" ? cnc::BindMode::Permissive : cnc::BindMode::Strict;
  cnc::TransformResult tr =
      cnc::bind_architecture(*target, app_scope.scope, br.bindings, app.name, mode);
  out.diags.insert(out.diags.end(), tr.diagnostics.begin(), tr.diagnostics.end());
  if (!tr.ok()) {
    out.exit_code = 1;
    return out;
  }
  out.result = std::move(tr.result);
  return out;
}

int finish(BindOutcome& out, const Options& opt) {
  print_diagnostics(out.diags, opt);
  if (!out.result) return out.exit_code;
  if (cnc::has_errors(out.diags)) return 1;
  if (opt.fail_on_clash && out.clashes_found) return 1;
  return 0;
}

int run_bind(const Options& opt) {
  BindOutcome out = run_transform(opt);
  if (!out.result) return finish(out, opt);

  const std::string app_name = out.result->architecture.name.text;
  const fs::path arc_path = fs::path(opt.out_dir) / (app_name + ".arc");
  const fs::path doc_path = fs::path(opt.out_dir) / (app_name + ".bound.json");
  std::string error;
  if (!write_atomic(arc_path, cnc::emit_adl(*out.result), error)) {
    print_diagnostics(out.diags, opt);
    report_io(arc_path.string(), error, opt);
    return 2;
  }
  if (!write_atomic(doc_path, cnc::emit_structured(*out.result), error)) {
    print_diagnostics(out.diags, opt);
    report_io(doc_path.string(), error, opt);
    return 2;
  }
  return finish(out, opt);
}

void print_instance(const cnc::InstanceNode& node, std::ostream& os) {
  os << (node.path.segments.empty() ? "<root>" : node.path.render()) << " : "
     << node.type_name.text;
  if (!node.resolved_args.empty()) {
    os << " (";
    for (std::size_t i = 0; i < node.resolved_args.size(); ++i) {
      if (i) os << ", ";
      os << cnc::to_text(node.resolved_args[i]);
    }
    os << ')';
  }
  os << '\n';
  for (const cnc::InstanceNode& child : node.children) print_instance(child, os);
}

int run_instantiate(const Options& opt) {
  BindOutcome out = run_transform(opt);
  if (!out.result) return finish(out, opt);

  cnc::InstantiateResult tree = cnc::instantiate(*out.result);
  out.diags.insert(out.diags.end(), tree.diagnostics.begin(), tree.diagnostics.end());
  if (!tree.ok()) {
    out.exit_code = 1;
    out.result.reset();
    return finish(out, opt);
  }
  print_instance(*tree.root, std::cout);
  return finish(out, opt);
}

int run_print(const Options& opt) {
  Inputs in;
  std::vector<cnc::Diagnostic> diags;
  std::string rendered;
  for (const std::string& path : opt.inputs) {
    Inputs one;
    if (int rc = parse_one(path, one, diags, opt)) return rc;
    for (const cnc::Architecture& a : one.archs) rendered += cnc::pretty_print(a);
    for (const cnc::Library& l : one.libs) rendered += cnc::pretty_print(l);
    for (const cnc::ApplicationConfig& c : one.apps) rendered += cnc::pretty_print(c);
  }
  std::cout << rendered;
  print_diagnostics(diags, opt);
  return cnc::has_errors(diags) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  const char* color_env = std::getenv("CNC_COLOR");
  opt.color = color_env && *color_env && std::string(color_env) != "0";

  CLI::App cli{"component & connector architecture toolchain"};
  cli.require_subcommand(1);

  CLI::App* check = cli.add_subcommand("check", "parse and validate model files");
  CLI::App* bind = cli.add_subcommand("bind", "apply an application configuration");
  CLI::App* inst =
      cli.add_subcommand("instantiate", "expand and print the bound instance tree");
  CLI::App* print = cli.add_subcommand("print", "pretty-print model files canonically");

  for (CLI::App* sub : {check, bind, inst, print}) {
    sub->add_option("inputs", opt.inputs, ".arc, .lib, and .app files")
        ->required()
        ->expected(-1);
    sub->add_flag("--machine", opt.machine, "one JSON object per diagnostic line");
  }
  check->add_flag("--bound", opt.bound,
                  "apply the platform-specific rule (for re-checking bound outputs)");
  for (CLI::App* sub : {bind, inst}) {
    sub->add_option("--app", opt.app_file, "application configuration to apply")->required();
    sub->add_option("--mode", opt.mode, "strict (default) or permissive")
        ->check(CLI::IsMember({"strict", "permissive"}));
    sub->add_flag("--fail-on-clash", opt.fail_on_clash,
                  "exit nonzero when binding clashes are detected");
  }
  bind->add_option("--out", opt.out_dir, "output directory (default: current)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;  // normalize CLI11's usage-error codes
  }

  if (check->parsed()) return run_check(opt);
  if (bind->parsed()) return run_bind(opt);
  if (inst->parsed()) return run_instantiate(opt);
  return run_print(opt);
}
