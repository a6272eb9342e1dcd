// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Each criterion re-derives its expectations from scratch
// (hand-enumerated oracles, brute-force walks, golden files) instead of
// trusting the code under test.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cnc/bind.hpp"
#include "cnc/check.hpp"
#include "cnc/emit.hpp"
#include "cnc/model.hpp"
#include "cnc/parse.hpp"
#include "cnc/printer.hpp"
#include "cnc/scope.hpp"
#include "cnc/transform.hpp"
#include "support/fixtures.hpp"

using namespace cnc;
using cnctest::BindGroup;
using cnctest::LoadedGroup;

namespace {

// -- Reporting -----------------------------------------------------------------

std::vector<std::string> g_notes;

void note(const std::string& message) { g_notes.push_back(message); }

#define EXPECT(cond, msg)                          \
  do {                                             \
    if (!(cond)) note(std::string("    ") + (msg)); \
  } while (0)

int run_criterion(int number, const char* label, const std::function<void()>& body) {
  g_notes.clear();
  try {
    body();
  } catch (const std::exception& e) {
    note(std::string("    unexpected exception: ") + e.what());
  }
  const bool ok = g_notes.empty();
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, label);
  for (const std::string& line : g_notes) std::printf("%s\n", line.c_str());
  return ok ? 0 : 1;
}

// -- Shared plumbing -------------------------------------------------------------

struct BoundScenario {
  LoadedGroup g;
  BindingResult bindings;
  TransformResult transform;
};

BoundScenario bind_scenario(const BindGroup& group, BindMode mode = BindMode::Strict) {
  BoundScenario s{cnctest::load_group(group), {}, {}};
  s.bindings = validate_bindings(s.g.arch, s.g.scope, s.g.app);
  if (!s.bindings.ok()) {
    throw std::runtime_error(group.app_file + " bindings invalid:\n" +
                             cnctest::render_all(s.bindings.diagnostics));
  }
  s.transform = bind_architecture(s.g.arch, s.g.scope, s.bindings.bindings, s.g.app.name, mode);
  return s;
}

const BindGroup kExplorer{"explorer.arc", {"senseact.lib", "nxtlejos.lib"}, "nxtexplorer.app"};
const BindGroup kClash{
    "explorer.arc", {"senseact.lib", "nxtlejos.lib", "rosmotors.lib"}, "clash.app"};

const ComponentType* find_type(const Architecture& arch, const std::string& name) {
  for (const ComponentType& t : arch.component_types) {
    if (t.name.text == name) return &t;
  }
  return nullptr;
}

const SubcomponentDecl* find_scd(const ComponentType& t, const std::string& name) {
  for (const SubcomponentDecl& s : t.subcomponents) {
    if (s.name.text == name) return &s;
  }
  return nullptr;
}

std::string args_text(const std::vector<ArgumentValue>& args) {
  std::string out = "[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += to_text(args[i]);
  }
  return out + "]";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// -- Criterion bodies ------------------------------------------------------------

// 1: the Explorer configuration binds end to end, every subcomponent lands on
// its platform-specific type with the merged arguments, the two motors sit
// under distinct fresh copies of ValidatedMotor, and the emitted text matches
// the golden file byte for byte in under a second.
void criterion_explorer_end_to_end() {
  const auto start = std::chrono::steady_clock::now();

  BoundScenario s = bind_scenario(kExplorer);
  EXPECT(s.transform.ok(), "transform failed:\n" + cnctest::render_all(s.transform.diagnostics));
  if (!s.transform.ok()) return;
  const Architecture& out = s.transform.result->architecture;

  const ComponentType* root = find_type(out, "NXTEplorerApp");
  EXPECT(root != nullptr, "no root copy named NXTEplorerApp");
  if (!root) return;

  const struct {
    const char* scd;
    const char* type;
    const char* args;
  } expected[] = {
      {"col", "NXTColor", "[Port.A]"},
      {"dist", "NXTUltraSonic", "[Port.B]"},
      {"ui", "NXTHRI", "[]"},
  };
  for (const auto& row : expected) {
    const SubcomponentDecl* scd = find_scd(*root, row.scd);
    EXPECT(scd != nullptr, std::string("root copy lost subcomponent ") + row.scd);
    if (!scd) continue;
    EXPECT(scd->type_name.text == row.type,
           std::string(row.scd) + " bound to " + scd->type_name.text + ", expected " + row.type);
    EXPECT(args_text(scd->arguments) == row.args,
           std::string(row.scd) + " arguments " + args_text(scd->arguments) + ", expected " +
               row.args);
  }

  // left and right: distinct fresh ValidatedMotor copies, each preserving the
  // original ports/connectors and carrying the motor binding with the
  // architecture argument 100 ahead of the added port assignment.
  const SubcomponentDecl* left = find_scd(*root, "left");
  const SubcomponentDecl* right = find_scd(*root, "right");
  EXPECT(left && right, "root copy lost left/right");
  if (!left || !right) return;
  EXPECT(left->type_name.text != right->type_name.text,
         "left and right share one copy: " + left->type_name.text);

  const ComponentType& original_vm = *find_type(s.g.arch, "ValidatedMotor");
  const char* motor_args[] = {"[100, Port.C]", "[100, Port.D]"};
  const SubcomponentDecl* sides[] = {left, right};
  for (int i = 0; i < 2; ++i) {
    const ComponentType* copy = find_type(out, sides[i]->type_name.text);
    EXPECT(copy != nullptr, "missing copy " + sides[i]->type_name.text);
    if (!copy) continue;
    ComponentType expectation = original_vm;  // only the scd types and
    expectation.name = copy->name;            // arguments may change
    if (SubcomponentDecl* val = const_cast<SubcomponentDecl*>(find_scd(expectation, "val"))) {
      const SubcomponentDecl* copy_val = find_scd(*copy, "val");
      EXPECT(copy_val && copy_val->type_name.text.rfind("Validator_", 0) == 0,
             "val not rewritten to a fresh Validator copy");
      if (copy_val) val->type_name = copy_val->type_name;
    }
    if (SubcomponentDecl* motor = const_cast<SubcomponentDecl*>(find_scd(expectation, "motor"))) {
      motor->type_name = Identifier{"NXTMotor"};
      const SubcomponentDecl* copy_motor = find_scd(*copy, "motor");
      EXPECT(copy_motor && args_text(copy_motor->arguments) == motor_args[i],
             std::string(i == 0 ? "left" : "right") + ".motor arguments wrong");
      if (copy_motor) motor->arguments = copy_motor->arguments;
    }
    EXPECT(structurally_equal(expectation, *copy),
           "copy " + copy->name.text + " deviates from the original beyond the rewrites");
  }

  const std::string text = emit_adl(*s.transform.result);
  EXPECT(text == cnctest::read_file(cnctest::golden_path("NXTEplorerApp.arc")),
         "emitted .arc differs from the golden file");

  const double elapsed = seconds_since(start);
  EXPECT(elapsed < 1.0, "took " + std::to_string(elapsed) + "s, limit 1s");
}

// 2: the conflicting motor bindings are detected as exactly one clash keyed
// on (ValidatedMotor, motor), and the transform still produces a valid
// architecture carrying both platform types under distinct copies.
void criterion_clash_resolution() {
  BoundScenario s = bind_scenario(kClash);

  std::vector<Clash> clashes = detect_clashes(s.bindings.bindings, s.g.arch, s.g.scope);
  EXPECT(clashes.size() == 1,
         "expected exactly one clash, got " + std::to_string(clashes.size()));
  if (clashes.size() == 1) {
    EXPECT(clashes[0].parent_type.text == "ValidatedMotor",
           "clash parent is " + clashes[0].parent_type.text);
    EXPECT(clashes[0].scd_name.text == "motor", "clash scd is " + clashes[0].scd_name.text);
    EXPECT(clashes[0].first.target_type.text == "NXTMotor" &&
               clashes[0].second.target_type.text == "ROSMotor",
           "clash pair is " + clashes[0].first.target_type.text + "/" +
               clashes[0].second.target_type.text);
  }

  EXPECT(s.transform.ok(),
         "transform failed:\n" + cnctest::render_all(s.transform.diagnostics));
  if (!s.transform.ok()) return;
  const Architecture& out = s.transform.result->architecture;

  const ComponentType* root = find_type(out, "ClashApp");
  EXPECT(root != nullptr, "no root copy named ClashApp");
  if (!root) return;
  const SubcomponentDecl* left = find_scd(*root, "left");
  const SubcomponentDecl* right = find_scd(*root, "right");
  EXPECT(left && right && left->type_name.text != right->type_name.text,
         "left/right do not use distinct copies");
  if (!left || !right) return;
  const ComponentType* left_copy = find_type(out, left->type_name.text);
  const ComponentType* right_copy = find_type(out, right->type_name.text);
  EXPECT(left_copy && find_scd(*left_copy, "motor") &&
             find_scd(*left_copy, "motor")->type_name.text == "NXTMotor",
         "left copy does not carry NXTMotor");
  EXPECT(right_copy && find_scd(*right_copy, "motor") &&
             find_scd(*right_copy, "motor")->type_name.text == "ROSMotor",
         "right copy does not carry ROSMotor");
  EXPECT(find_type(out, "NXTMotor") && find_type(out, "ROSMotor"),
         "output does not declare both platform types");

  ScopeResult sr = build_scope(out, {});
  std::vector<Diagnostic> diags = check_architecture(out, sr.scope, PlatformRule::Specific);
  EXPECT(!has_errors(sr.diagnostics) && !has_errors(diags),
         "clash output does not re-check clean:\n" + cnctest::render_all(diags));
}

// 3: every strict transform output in the corpus satisfies the bound-rule
// checker with zero errors and contains no abstract subcomponent anywhere.
void criterion_validity_postcondition() {
  for (const BindGroup& group : cnctest::all_bind_groups()) {
    BoundScenario s = bind_scenario(group);
    EXPECT(s.transform.ok(), group.app_file + ": transform failed:\n" +
                                 cnctest::render_all(s.transform.diagnostics));
    if (!s.transform.ok()) continue;
    const Architecture& out = s.transform.result->architecture;

    ScopeResult sr = build_scope(out, {});
    EXPECT(sr.ok(), group.app_file + ": output scope has errors");
    std::vector<Diagnostic> diags = check_architecture(out, sr.scope, PlatformRule::Specific);
    EXPECT(!has_errors(diags), group.app_file + ": bound check errors:\n" +
                                   cnctest::render_all(diags));

    for (const ComponentType& t : out.component_types) {
      for (const SubcomponentDecl& scd : t.subcomponents) {
        const ComponentType* st = sr.scope.find_type(scd.type_name);
        EXPECT(st != nullptr, group.app_file + ": dangling scd type " + scd.type_name.text);
        if (st) {
          EXPECT(st->kind != TypeKind::Abstract,
                 group.app_file + ": abstract scd survives: " + t.name.text + "." +
                     scd.name.text + " : " + st->name.text);
        }
      }
    }
  }
}

// 4: the number of fresh copies equals 1 + the unbound subcomponent instances
// a brute-force recursive walk of the *source* hierarchy visits, and never
// exceeds 1 + all instances visited. The walk shares no code with the
// transform's queue-driven rewrite.
void criterion_copy_count_bound() {
  struct Walk {
    const Scope& scope;
    const std::set<std::string>& bound_paths;
    std::size_t visited = 0;
    std::size_t unbound = 0;

    void descend(const ComponentType& type, const std::string& prefix) {
      for (const SubcomponentDecl& scd : type.subcomponents) {
        ++visited;
        const std::string path = prefix.empty() ? scd.name.text : prefix + "." + scd.name.text;
        if (bound_paths.count(path)) continue;  // bound: taken as-is, no copy
        ++unbound;
        if (const ComponentType* st = scope.find_type(scd.type_name)) descend(*st, path);
      }
    }
  };

  for (const BindGroup& group : cnctest::all_bind_groups()) {
    BoundScenario s = bind_scenario(group);
    EXPECT(s.transform.ok(), group.app_file + ": transform failed");
    if (!s.transform.ok()) continue;

    std::set<std::string> bound_paths;
    for (const CompletedBinding& b : s.bindings.bindings) bound_paths.insert(b.path.render());

    Walk walk{s.g.scope, bound_paths};
    walk.descend(*s.g.scope.find_type(s.g.arch.root_type), "");

    const std::size_t copies = count_new_types(*s.transform.result);
    EXPECT(copies == 1 + walk.unbound,
           group.app_file + ": count_new_types " + std::to_string(copies) + " != 1 + " +
               std::to_string(walk.unbound) + " unbound instances");
    EXPECT(copies <= 1 + walk.visited,
           group.app_file + ": count_new_types " + std::to_string(copies) + " exceeds 1 + " +
               std::to_string(walk.visited) + " visited instances");
  }

  // Spot-check the oracle itself against hand counts.
  BoundScenario explorer = bind_scenario(kExplorer);
  EXPECT(count_new_types(*explorer.transform.result) == 6,
         "Explorer copy count is not the hand-derived 6");
}

// 5: all 120 orders of the five Explorer bindings produce the same
// architecture up to fresh-name renaming, matched through the provenance
// instance paths, in under five seconds total.
void criterion_binding_order_invariance() {
  const auto start = std::chrono::steady_clock::now();

  BoundScenario reference = bind_scenario(kExplorer);
  EXPECT(reference.transform.ok(), "reference transform failed");
  if (!reference.transform.ok()) return;
  const BoundArchitecture& ref = *reference.transform.result;

  std::map<std::string, std::string> ref_by_path;  // instance path -> fresh name
  std::map<std::string, std::string> ref_originals;
  for (const ProvenanceEntry& p : ref.provenance) {
    ref_by_path[p.instance_path.render()] = p.fresh.text;
    ref_originals[p.instance_path.render()] = p.original.text;
  }

  std::vector<std::size_t> order(reference.bindings.bindings.size());
  std::iota(order.begin(), order.end(), 0);
  int permutations = 0;
  int mismatches = 0;
  do {
    std::vector<CompletedBinding> shuffled;
    for (std::size_t i : order) shuffled.push_back(reference.bindings.bindings[i]);
    TransformResult tr = bind_architecture(reference.g.arch, reference.g.scope, shuffled,
                                           reference.g.app.name, BindMode::Strict);
    ++permutations;
    if (!tr.ok()) {
      ++mismatches;
      continue;
    }

    // Map this permutation's fresh names onto the reference through the
    // binding-order-independent instance paths, then compare structurally.
    std::map<std::string, std::string> rename;
    bool mapped = tr.result->provenance.size() == ref.provenance.size();
    for (const ProvenanceEntry& p : tr.result->provenance) {
      const std::string path = p.instance_path.render();
      auto it = ref_by_path.find(path);
      if (it == ref_by_path.end() || ref_originals[path] != p.original.text) {
        mapped = false;
        break;
      }
      rename[p.fresh.text] = it->second;
    }
    if (!mapped) {
      ++mismatches;
      continue;
    }

    Architecture renamed = tr.result->architecture;
    auto apply = [&rename](Identifier& id) {
      auto it = rename.find(id.text);
      if (it != rename.end()) id.text = it->second;
    };
    apply(renamed.name);
    apply(renamed.root_type);
    for (ComponentType& t : renamed.component_types) {
      apply(t.name);
      if (t.super_type) apply(*t.super_type);
      for (SubcomponentDecl& scd : t.subcomponents) apply(scd.type_name);
    }
    // Copy creation order may differ between permutations; compare as sets
    // keyed by the (now canonical) type name.
    bool equal = renamed.name == ref.architecture.name &&
                 renamed.root_type == ref.architecture.root_type &&
                 renamed.component_types.size() == ref.architecture.component_types.size();
    for (const ComponentType& t : renamed.component_types) {
      const ComponentType* ref_type = find_type(ref.architecture, t.name.text);
      if (!ref_type || !structurally_equal(t, *ref_type)) {
        equal = false;
        break;
      }
    }
    if (!equal) ++mismatches;
  } while (std::next_permutation(order.begin(), order.end()));

  EXPECT(permutations == 120, "expected 120 permutations, ran " + std::to_string(permutations));
  EXPECT(mismatches == 0,
         std::to_string(mismatches) + " of " + std::to_string(permutations) +
             " permutations deviated from the reference");

  const double elapsed = seconds_since(start);
  EXPECT(elapsed < 5.0, "took " + std::to_string(elapsed) + "s, limit 5s");
}

// 6: parse(pretty_print(m)) is structurally equal to m for every checked
// model, and every bound output re-parses, re-checks clean, and emits the
// same bytes a second time.
void criterion_round_trip() {
  for (const BindGroup& group : cnctest::all_bind_groups()) {
    Architecture arch = cnctest::load_arch(group.arch_file);
    auto arch_back = parse_architecture(pretty_print(arch), "<reprint>");
    EXPECT(arch_back.ok() && structurally_equal(arch, *arch_back.model),
           group.arch_file + " does not round-trip");

    for (const std::string& lib_file : group.lib_files) {
      Library lib = cnctest::load_lib(lib_file);
      auto lib_back = parse_library(pretty_print(lib), "<reprint>");
      EXPECT(lib_back.ok() && structurally_equal(lib, *lib_back.model),
             lib_file + " does not round-trip");
    }

    ApplicationConfig app = cnctest::load_app(group.app_file);
    auto app_back = parse_appcfg(pretty_print(app), "<reprint>");
    EXPECT(app_back.ok() && structurally_equal(app, *app_back.model),
           group.app_file + " does not round-trip");

    BoundScenario s = bind_scenario(group);
    EXPECT(s.transform.ok(), group.app_file + ": transform failed");
    if (!s.transform.ok()) continue;

    const std::string text = emit_adl(*s.transform.result);
    EXPECT(emit_adl(*s.transform.result) == text, group.app_file + ": emit is not stable");
    auto bound_back = parse_architecture(text, "<emitted>");
    EXPECT(bound_back.ok(), group.app_file + ": emitted text does not re-parse");
    if (!bound_back.ok()) continue;
    EXPECT(pretty_print(*bound_back.model) == text,
           group.app_file + ": second emit is not byte-identical");
    ScopeResult sr = build_scope(*bound_back.model, {});
    std::vector<Diagnostic> diags =
        check_architecture(*bound_back.model, sr.scope, PlatformRule::Specific);
    EXPECT(!has_errors(sr.diagnostics) && !has_errors(diags),
           group.app_file + ": emitted text does not re-check clean");
  }
}

// 7: each rejection rule has a dedicated fixture producing exactly its error
// code at the expected source position.
void criterion_negative_diagnostics() {
  struct NegCase {
    const char* label;
    const char* code;
    const char* file;  // where the span must point
    int line;
    int col;
    std::function<std::vector<Diagnostic>()> run;
  };

  auto validate_neg_app = [](const std::string& app_file) {
    return [app_file]() {
      LoadedGroup g = cnctest::load_group(
          {"explorer.arc", {"senseact.lib", "nxtlejos.lib"}, "neg/" + app_file});
      return validate_bindings(g.arch, g.scope, g.app).diagnostics;
    };
  };
  auto check_neg_arch = [](const std::string& arch_file) {
    return [arch_file]() {
      Architecture arch = cnctest::load_arch("neg/" + arch_file);
      ScopeResult sr = build_scope(arch, {});
      return check_architecture(arch, sr.scope);
    };
  };
  auto check_neg_lib = [](const std::string& lib_file) {
    return [lib_file]() {
      Library lib = cnctest::load_lib("neg/" + lib_file);
      Scope scope;
      std::vector<Diagnostic> diags;
      extend_scope(scope, lib, diags);
      return check_library(lib, scope);
    };
  };

  const std::string fx = std::string(CNC_FIXTURE_DIR) + "/";
  const NegCase cases[] = {
      {"E-BIND-NOT-ABSTRACT", "E-BIND-NOT-ABSTRACT", "neg/bind_not_abstract.app", 3, 8,
       validate_neg_app("bind_not_abstract.app")},
      {"E-BIND-TWICE", "E-BIND-TWICE", "neg/bind_twice.app", 4, 8,
       validate_neg_app("bind_twice.app")},
      {"E-BIND-NOT-SUBTYPE", "E-BIND-NOT-SUBTYPE", "neg/bind_not_subtype.app", 3, 15,
       validate_neg_app("bind_not_subtype.app")},
      {"E-BIND-ARITY", "E-BIND-ARITY", "neg/bind_arity.app", 3, 22,
       validate_neg_app("bind_arity.app")},
      {"E-BIND-ARG-TYPE", "E-BIND-ARG-TYPE", "neg/bind_arg_type.app", 3, 25,
       validate_neg_app("bind_arg_type.app")},
      {"E-UNBOUND-ABSTRACT", "E-UNBOUND-ABSTRACT", "explorer.arc", 32, 15,
       []() {
         LoadedGroup g = cnctest::load_group(
             {"explorer.arc", {"senseact.lib", "nxtlejos.lib"}, "neg/unbound_abstract.app"});
         BindingResult br = validate_bindings(g.arch, g.scope, g.app);
         if (!br.ok()) return br.diagnostics;
         return bind_architecture(g.arch, g.scope, br.bindings, g.app.name, BindMode::Strict)
             .diagnostics;
       }},
      {"E-SCD-DUP", "E-SCD-DUP", "neg/scd_dup.arc", 8, 19, check_neg_arch("scd_dup.arc")},
      {"E-ABSTRACT-IMPURE", "E-ABSTRACT-IMPURE", "neg/abstract_impure.arc", 3, 5,
       check_neg_arch("abstract_impure.arc")},
      {"E-MODELLIB-IMPURE", "E-MODELLIB-IMPURE", "neg/modellib_impure.lib", 2, 13,
       check_neg_lib("modellib_impure.lib")},
      {"E-IMPLLIB-ABSTRACT", "E-IMPLLIB-ABSTRACT", "neg/impllib_abstract.lib", 2, 22,
       check_neg_lib("impllib_abstract.lib")},
  };

  for (const NegCase& c : cases) {
    std::vector<Diagnostic> diags;
    try {
      diags = c.run();
    } catch (const std::exception& e) {
      EXPECT(false, std::string(c.label) + ": " + e.what());
      continue;
    }
    EXPECT(diags.size() == 1, std::string(c.label) + ": expected exactly one diagnostic, got " +
                                  std::to_string(diags.size()) + "\n" +
                                  cnctest::render_all(diags));
    if (diags.size() != 1) continue;
    const Diagnostic& d = diags[0];
    EXPECT(d.code == c.code, std::string(c.label) + ": code " + d.code);
    EXPECT(d.span.file == fx + c.file,
           std::string(c.label) + ": span file " + d.span.file);
    EXPECT(d.span.start_line == c.line && d.span.start_col == c.col,
           std::string(c.label) + ": span " + std::to_string(d.span.start_line) + ":" +
               std::to_string(d.span.start_col) + ", expected " + std::to_string(c.line) + ":" +
               std::to_string(c.col));
  }
}

// 8: the instance tree of the bound Explorer matches the hand-enumerated
// 11-node hierarchy, including the merged arguments on the motor instances.
void criterion_instance_tree() {
  BoundScenario s = bind_scenario(kExplorer);
  EXPECT(s.transform.ok(), "transform failed");
  if (!s.transform.ok()) return;

  InstantiateResult ir = instantiate(*s.transform.result);
  EXPECT(ir.ok(), "instantiate failed:\n" + cnctest::render_all(ir.diagnostics));
  if (!ir.ok()) return;

  EXPECT(node_count(*ir.root) == 11,
         "node count " + std::to_string(node_count(*ir.root)) + ", expected 11");

  // Hand-enumerated pre-order flattening of the bound Explorer hierarchy.
  const struct {
    const char* path;
    const char* type;
    const char* args;
  } oracle[] = {
      {"", "NXTEplorerApp", "[]"},
      {"col", "NXTColor", "[Port.A]"},
      {"dist", "NXTUltraSonic", "[Port.B]"},
      {"ui", "NXTHRI", "[]"},
      {"ctrl", "Controller_1", "[]"},
      {"left", "ValidatedMotor_2", "[]"},
      {"left.val", "Validator_4", "[]"},
      {"left.motor", "NXTMotor", "[100, Port.C]"},
      {"right", "ValidatedMotor_3", "[]"},
      {"right.val", "Validator_5", "[]"},
      {"right.motor", "NXTMotor", "[100, Port.D]"},
  };

  std::vector<const InstanceNode*> flat;
  std::function<void(const InstanceNode&)> walk = [&](const InstanceNode& node) {
    flat.push_back(&node);
    for (const InstanceNode& child : node.children) walk(child);
  };
  walk(*ir.root);

  EXPECT(flat.size() == 11, "flattened to " + std::to_string(flat.size()) + " nodes");
  const std::size_t n = std::min<std::size_t>(flat.size(), 11);
  for (std::size_t i = 0; i < n; ++i) {
    const InstanceNode& node = *flat[i];
    EXPECT(node.path.render() == oracle[i].path,
           "node " + std::to_string(i) + " path " + node.path.render() + ", expected " +
               oracle[i].path);
    EXPECT(node.type_name.text == oracle[i].type,
           std::string(oracle[i].path) + " typed " + node.type_name.text + ", expected " +
               oracle[i].type);
    EXPECT(args_text(node.resolved_args) == oracle[i].args,
           std::string(oracle[i].path) + " args " + args_text(node.resolved_args) +
               ", expected " + oracle[i].args);
  }
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "Explorer binds end to end and matches the golden output",
                            criterion_explorer_end_to_end);
  failures += run_criterion(2, "conflicting motor bindings: one clash, both platforms kept",
                            criterion_clash_resolution);
  failures += run_criterion(3, "every strict output re-checks clean with no abstract scds",
                            criterion_validity_postcondition);
  failures += run_criterion(4, "copy count is 1 + unbound instances, bounded by the walk",
                            criterion_copy_count_bound);
  failures += run_criterion(5, "all 120 binding orders agree up to fresh-name renaming",
                            criterion_binding_order_invariance);
  failures += run_criterion(6, "models round-trip; bound outputs re-parse and re-emit stably",
                            criterion_round_trip);
  failures += run_criterion(7, "each rejection rule fires exactly once at the expected span",
                            criterion_negative_diagnostics);
  failures += run_criterion(8, "the bound Explorer expands to the 11-node instance oracle",
                            criterion_instance_tree);

  if (failures == 0) {
    std::printf("all 8 criteria passed\n");
  } else {
    std::printf("%d of 8 criteria failed\n", failures);
  }
  return failures;
}
