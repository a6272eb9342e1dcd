#include "cnc/bind.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "internal.hpp"

namespace cnc {

BindingResult validate_bindings(const Architecture& arch, const Scope& scope,
                                const ApplicationConfig& cfg) {
  BindingResult result;
  if (cfg.target_arch != arch.name) {
    result.diagnostics.push_back(
        make_error("E-BIND-WRONG-ARCH", cfg.target_arch_span,
                   "application '" + cfg.name.text + "' targets '" + cfg.target_arch.text +
                       "', not architecture '" + arch.name.text + "'"));
    return result;
  }

  std::set<std::string> bound_paths;
  for (const RawBinding& raw : cfg.bindings) {
    PathResult pr = resolve_path(arch, scope, raw.path);
    if (!pr.ok() || pr.chain.empty()) {
      std::string why = pr.diagnostics.empty() ? "path does not resolve"
                                               : pr.diagnostics.front().message;
      result.diagnostics.push_back(
          make_error("E-BIND-PATH", raw.path.span,
                     "binding path '" + raw.path.render() + "' does not resolve: " + why));
      continue;
    }
    const PathElement& leaf = pr.chain.back();
    if (leaf.type->kind != TypeKind::Abstract) {
      result.diagnostics.push_back(make_error(
          "E-BIND-NOT-ABSTRACT", raw.path.span,
          "subcomponent '" + raw.path.render() + "' has " + to_string(leaf.type->kind) +
              " type '" + leaf.type->name.text + "'; only abstract subcomponents can be bound"));
      continue;
    }
    if (!bound_paths.insert(raw.path.render()).second) {
      result.diagnostics.push_back(
          make_error("E-BIND-TWICE", raw.path.span,
                     "path '" + raw.path.render() + "' is bound more than once"));
      continue;
    }
    const ComponentType* target = scope.find_type(raw.target_type);
    if (!target) {
      result.diagnostics.push_back(
          make_error("E-TYPE-UNRESOLVED", raw.target_span,
                     "unknown component type '" + raw.target_type.text + "'"));
      continue;
    }
    if (!is_subtype(scope, target->name, leaf.type->name)) {
      result.diagnostics.push_back(make_error(
          "E-BIND-NOT-SUBTYPE", raw.target_span,
          "'" + target->name.text + "' does not extend '" + leaf.type->name.text + "'"));
      continue;
    }
    std::vector<ConfigParam> target_params = effective_params(scope, target->name);
    std::vector<ConfigParam> base_params = effective_params(scope, leaf.type->name);
    const std::size_t added = target_params.size() - base_params.size();
    if (raw.added_args.size() != added) {
      std::ostringstream msg;
      msg << "'" << target->name.text << "' adds " << added << " parameter"
          << (added == 1 ? "" : "s") << " beyond '" << leaf.type->name.text << "', but "
          << raw.added_args.size() << " argument" << (raw.added_args.size() == 1 ? " was" : "s were")
          << " supplied; arguments of the architecture may not be redefined";
      result.diagnostics.push_back(make_error("E-BIND-ARITY", raw.target_span, msg.str()));
      continue;
    }
    bool args_ok = true;
    for (std::size_t i = 0; i < added; ++i) {
      std::string problem =
          detail::argument_mismatch(scope, raw.added_args[i], target_params[base_params.size() + i].type);
      if (!problem.empty()) {
        result.diagnostics.push_back(
            make_error("E-BIND-ARG-TYPE", raw.added_args[i].span, problem));
        args_ok = false;
      }
    }
    if (!args_ok) continue;

    CompletedBinding completed;
    completed.path = raw.path;
    completed.target_type = target->name;
    completed.full_args = leaf.scd->arguments;
    completed.full_args.insert(completed.full_args.end(), raw.added_args.begin(),
                               raw.added_args.end());
    result.bindings.push_back(std::move(completed));
  }
  return result;
}

std::vector<Clash> detect_clashes(const std::vector<CompletedBinding>& bindings,
                                  const Architecture& arch, const Scope& scope) {
  // (parent component type, scd name) per binding; unresolvable paths are
  // skipped — validate_bindings has already reported them.
  std::vector<std::optional<std::pair<Identifier, Identifier>>> keys;
  keys.reserve(bindings.size());
  for (const CompletedBinding& b : bindings) {
    PathResult pr = resolve_path(arch, scope, b.path);
    if (!pr.ok() || pr.chain.empty()) {
      keys.push_back(std::nullopt);
      continue;
    }
    Identifier parent =
        pr.chain.size() >= 2 ? pr.chain[pr.chain.size() - 2].type->name : arch.root_type;
    keys.push_back(std::make_pair(parent, b.path.segments.back()));
  }

  std::vector<Clash> out;
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    if (!keys[i]) continue;
    for (std::size_t j = i + 1; j < bindings.size(); ++j) {
      if (!keys[j]) continue;
      if (keys[i]->first == keys[j]->first && keys[i]->second == keys[j]->second &&
          bindings[i].target_type != bindings[j].target_type) {
        out.push_back(Clash{bindings[i], bindings[j], keys[i]->first, keys[i]->second});
      }
    }
  }
  return out;
}

}  // namespace cnc
