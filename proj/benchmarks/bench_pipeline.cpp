// Micro-benchmarks for the pipeline stages on the Explorer corpus: lexing +
// parsing, validity checking, the binding transformation, and emission.
#include <benchmark/benchmark.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "cnc/bind.hpp"
#include "cnc/check.hpp"
#include "cnc/emit.hpp"
#include "cnc/parse.hpp"
#include "cnc/printer.hpp"
#include "cnc/scope.hpp"
#include "cnc/transform.hpp"
#include "support/fixtures.hpp"

using namespace cnc;

namespace {

const std::string& arch_text() {
  static const std::string text = cnctest::read_file(cnctest::fixture_path("explorer.arc"));
  return text;
}

/// One fully loaded Explorer world, shared by the non-parsing benchmarks.
struct World {
  Architecture arch = cnctest::load_arch("explorer.arc");
  std::vector<Library> libs = {cnctest::load_lib("senseact.lib"),
                               cnctest::load_lib("nxtlejos.lib")};
  ApplicationConfig app = cnctest::load_app("nxtexplorer.app");
  Scope scope;
  std::vector<CompletedBinding> bindings;

  World() {
    scope = cnctest::app_scope(arch, libs, app);
    BindingResult br = validate_bindings(arch, scope, app);
    if (!br.ok()) throw std::runtime_error("benchmark fixture does not bind");
    bindings = br.bindings;
  }
};

const World& world() {
  static const World w;
  return w;
}

void BM_ParseArchitecture(benchmark::State& state) {
  for (auto _ : state) {
    auto result = parse_architecture(arch_text(), "explorer.arc");
    benchmark::DoNotOptimize(result);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * arch_text().size()));
}
BENCHMARK(BM_ParseArchitecture);

void BM_CheckArchitecture(benchmark::State& state) {
  const World& w = world();
  for (auto _ : state) {
    auto diags = check_architecture(w.arch, w.scope);
    benchmark::DoNotOptimize(diags);
  }
}
BENCHMARK(BM_CheckArchitecture);

void BM_ValidateBindings(benchmark::State& state) {
  const World& w = world();
  for (auto _ : state) {
    auto result = validate_bindings(w.arch, w.scope, w.app);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ValidateBindings);

void BM_BindArchitecture(benchmark::State& state) {
  const World& w = world();
  for (auto _ : state) {
    auto result = bind_architecture(w.arch, w.scope, w.bindings, w.app.name);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_BindArchitecture);

void BM_EmitAdl(benchmark::State& state) {
  const World& w = world();
  const TransformResult bound =
      bind_architecture(w.arch, w.scope, w.bindings, w.app.name);
  for (auto _ : state) {
    std::string text = emit_adl(*bound.result);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_EmitAdl);

void BM_EmitStructured(benchmark::State& state) {
  const World& w = world();
  const TransformResult bound =
      bind_architecture(w.arch, w.scope, w.bindings, w.app.name);
  for (auto _ : state) {
    std::string text = emit_structured(*bound.result);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_EmitStructured);

void BM_PrettyPrint(benchmark::State& state) {
  const World& w = world();
  for (auto _ : state) {
    std::string text = pretty_print(w.arch);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_PrettyPrint);

}  // namespace

BENCHMARK_MAIN();
