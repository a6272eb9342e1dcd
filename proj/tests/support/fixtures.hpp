// Helpers shared by the unit, CLI, and acceptance suites: fixture loading,
// parsing that fails loudly, and the scope assembly the tool performs before
// validating an application configuration.
#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnc/check.hpp"
#include "cnc/model.hpp"
#include "cnc/parse.hpp"
#include "cnc/scope.hpp"

namespace cnctest {

inline std::string fixture_path(const std::string& name) {
  return std::string(CNC_FIXTURE_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(CNC_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string render_all(const std::vector<cnc::Diagnostic>& diags) {
  std::string out;
  for (const cnc::Diagnostic& d : diags) out += render_human(d) + "\n";
  return out;
}

// The load_* helpers throw instead of asserting so they work in doctest
// cases and in the plain acceptance main alike.
inline cnc::Architecture load_arch(const std::string& name) {
  const std::string path = fixture_path(name);
  auto result = cnc::parse_architecture(read_file(path), path);
  if (!result.ok()) {
    throw std::runtime_error("fixture " + name + " failed to parse:\n" +
                             render_all(result.diagnostics));
  }
  return *result.model;
}

inline cnc::Library load_lib(const std::string& name) {
  const std::string path = fixture_path(name);
  auto result = cnc::parse_library(read_file(path), path);
  if (!result.ok()) {
    throw std::runtime_error("fixture " + name + " failed to parse:\n" +
                             render_all(result.diagnostics));
  }
  return *result.model;
}

inline cnc::ApplicationConfig load_app(const std::string& name) {
  const std::string path = fixture_path(name);
  auto result = cnc::parse_appcfg(read_file(path), path);
  if (!result.ok()) {
    throw std::runtime_error("fixture " + name + " failed to parse:\n" +
                             render_all(result.diagnostics));
  }
  return *result.model;
}

inline std::vector<const cnc::Library*> pointers(const std::vector<cnc::Library>& libs) {
  std::vector<const cnc::Library*> out;
  for (const cnc::Library& lib : libs) out.push_back(&lib);
  return out;
}

/// Architecture scope extended by the application's extra imports — the same
/// assembly `cnc bind` performs. Throws if any step reports an error.
inline cnc::Scope app_scope(const cnc::Architecture& arch,
                            const std::vector<cnc::Library>& libs,
                            const cnc::ApplicationConfig& app) {
  cnc::ScopeResult sr = cnc::build_scope(arch, pointers(libs));
  if (!sr.ok()) throw std::runtime_error("architecture scope:\n" + render_all(sr.diagnostics));

  std::set<std::string> pulled;
  for (const cnc::ImportDecl& imp : arch.imports) pulled.insert(imp.library.text);

  std::vector<cnc::Diagnostic> diags;
  for (const cnc::ImportDecl& imp : app.imports) {
    if (!pulled.insert(imp.library.text).second) continue;
    bool found = false;
    for (const cnc::Library& lib : libs) {
      if (lib.name == imp.library) {
        cnc::extend_scope(sr.scope, lib, diags);
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("app import not in fixture set: " + imp.library.text);
  }
  if (cnc::has_errors(diags)) throw std::runtime_error("app scope:\n" + render_all(diags));
  return sr.scope;
}

/// One fixture scenario: the architecture, its libraries, and an application
/// configuration binding it.
struct BindGroup {
  std::string arch_file;
  std::vector<std::string> lib_files;
  std::string app_file;
};

/// Every application scenario in the fixture corpus. Kept in one place so the
/// postcondition suites iterate the same set the CLI tests exercise.
inline std::vector<BindGroup> all_bind_groups() {
  return {
      {"explorer.arc", {"senseact.lib", "nxtlejos.lib"}, "nxtexplorer.app"},
      {"explorer.arc", {"senseact.lib", "nxtlejos.lib", "rosmotors.lib"}, "clash.app"},
      {"mini.arc", {}, "mini.app"},
      {"factory.arc", {"machmodels.lib", "machimpl.lib"}, "factory.app"},
      {"hybrid.arc",
       {"senseact.lib", "machmodels.lib", "nxtlejos.lib", "machimpl.lib"},
       "hybrid.app"},
      {"tracking.arc", {"estmodels.lib", "filters.lib"}, "tracking.app"},
      {"relay.arc", {}, "relay.app"},
      {"modes.arc", {"colors.lib", "colorimpl.lib"}, "modes.app"},
      {"cal.arc", {"calmodels.lib", "calimpl.lib"}, "cal.app"},
      {"farm.arc", {}, "farm.app"},
      {"trio.arc", {"probemodels.lib", "probeimpl.lib"}, "trio.app"},
  };
}

struct LoadedGroup {
  cnc::Architecture arch;
  std::vector<cnc::Library> libs;
  cnc::ApplicationConfig app;
  cnc::Scope scope;  // architecture + application imports
};

inline LoadedGroup load_group(const BindGroup& group) {
  LoadedGroup loaded;
  loaded.arch = load_arch(group.arch_file);
  for (const std::string& lib : group.lib_files) loaded.libs.push_back(load_lib(lib));
  loaded.app = load_app(group.app_file);
  loaded.scope = app_scope(loaded.arch, loaded.libs, loaded.app);
  return loaded;
}

}  // namespace cnctest
